"""Serialization of constructed modules: JSON records and flat CSV triples.

Indices in files are 1-based; signs are +1/-1 integers.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from .lie import StructTensor, structure_constants
from .signed import CheckReport, SignedPerm, verify_clifford
from .ungraded import UngradedRep

FORMAT_VERSION = 1


class RecordError(ValueError):
    pass


@dataclass
class ExportRecord:
    k: int
    variant: str
    m: int
    n: int
    generators: list[dict]
    triples: list[list[int]]
    provenance: str
    format: int = FORMAT_VERSION

    @classmethod
    def from_rep(cls, rep: UngradedRep) -> ExportRecord:
        tensor = structure_constants(rep)
        gens = [{"targets": [q + 1 for q in g.targets], "signs": list(g.signs)} for g in rep.gens]
        triples = [[a + 1, p + 1, q + 1, s] for a, p, q, s in tensor.triples()]
        return cls(rep.k, rep.variant.value, rep.k, rep.n, gens, triples, rep.provenance)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict, validate: bool = True) -> ExportRecord:
        try:
            if data.get("format") != FORMAT_VERSION:
                raise RecordError(f"unsupported format {data.get('format')!r}")
            rec = cls(int(data["k"]), str(data["variant"]), int(data["m"]), int(data["n"]),
                      [{"targets": [int(x) for x in g["targets"]], "signs": [int(x) for x in g["signs"]]}
                       for g in data["generators"]],
                      [[int(x) for x in t] for t in data["triples"]],
                      str(data.get("provenance", "")))
        except (KeyError, TypeError) as exc:
            raise RecordError(f"malformed record: {exc!r}") from exc
        if validate:
            for report in rec.validate():
                if not report:
                    raise RecordError(str(report))
        return rec

    @classmethod
    def from_json(cls, text: str, validate: bool = True) -> ExportRecord:
        return cls.from_dict(json.loads(text), validate)

    def tensor(self) -> StructTensor:
        """Tensor rebuilt from the triples; raises on any invariant violation."""
        return StructTensor.from_triples(self.m, self.n, ((a - 1, p - 1, q - 1, s) for a, p, q, s in self.triples))

    def generator_perms(self) -> list[SignedPerm]:
        return [SignedPerm([q - 1 for q in g["targets"]], g["signs"]) for g in self.generators]

    def validate(self) -> list[CheckReport]:
        """Triples form a valid tensor, generators satisfy Clifford relations, and both agree."""
        out = []
        try:
            tensor = self.tensor()
            out.append(CheckReport.passed("record.triples"))
        except ValueError as exc:
            return [CheckReport.failed("record.triples", (), str(exc))]
        try:
            gens = self.generator_perms()
        except ValueError as exc:
            return out + [CheckReport.failed("record.generators", (), str(exc))]
        out.append(verify_clifford(gens, self.m))
        for a, g in enumerate(gens):
            if g.targets != tensor.targets[a] or g.signs != tensor.signs[a]:
                p = next(p for p in range(self.n)
                         if (g.targets[p], g.signs[p]) != (tensor.targets[a][p], tensor.signs[a][p]))
                out.append(CheckReport.failed("record.consistency", (a + 1, p + 1),
                                              "generator action disagrees with structure constants"))
                break
        else:
            out.append(CheckReport.passed("record.consistency"))
        return out


def triples_csv(record: ExportRecord) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "p", "q", "sign"])
    writer.writerows(record.triples)
    return buf.getvalue()


def read_triples_csv(text: str) -> list[tuple[int, int, int, int]]:
    reader = csv.DictReader(io.StringIO(text))
    return [(int(r["a"]), int(r["p"]), int(r["q"]), int(r["sign"])) for r in reader]


def growth_csv(counts) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["R", "g"])
    writer.writerows(enumerate(counts))
    return buf.getvalue()
