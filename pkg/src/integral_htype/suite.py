"""The invariant suite run by ``integral-htype verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .export import ExportRecord
from .induction import build_graded
from .lattice import LatticeElement, commutator_basis, group_commutator, group_mul, lattice_mul
from .lie import bracket, check_plus_minus_iso, structure_constants, verify_htype
from .signed import CheckReport, SignedPerm, sp_compose, sp_transpose
from .ungraded import Variant, expected_dims, extract_irreducible, omega_action

DEFAULT_SAMPLES = 200


@dataclass
class SuiteEntry:
    k: int
    variant: str
    module: str
    report: CheckReport

    @property
    def ok(self) -> bool:
        return self.report.ok

    def to_dict(self) -> dict:
        return {"k": self.k, "variant": self.variant, "module": self.module,
                "check": self.report.check, "ok": self.report.ok,
                "witness": list(self.report.witness) if self.report.witness else None,
                "message": self.report.message}

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAIL"
        text = f"k={self.k:<3} {self.variant:<8} {self.module}.{self.report.check}: {status}"
        if not self.ok:
            text += f" at {self.report.witness}: {self.report.message}"
        return text


def variants_for(k: int) -> list[Variant]:
    return [Variant.PLUS, Variant.MINUS] if k % 4 == 3 else [Variant.DEFAULT]


def _verdict(name: str, ok: bool, witness=(), message: str = "") -> CheckReport:
    return CheckReport.passed(name) if ok else CheckReport.failed(name, witness, message)


def _graded_checks(k: int) -> list[tuple[str, CheckReport]]:
    W = build_graded(k, cap=max(k, 24))
    b = expected_dims(k)[1]
    return [("module_induction", W.check()),
            ("module_induction", _verdict("graded_dim", W.n == b, (W.n,), f"expected b_{k} = {b}"))]


def _omega_checks(k: int, plus, minus) -> list[tuple[str, CheckReport]]:
    out = []
    n = plus.n
    ident = SignedPerm.identity(n)
    for rep, expect in ((plus, ident), (minus, -ident)):
        w = omega_action(rep)
        tag = rep.variant.value
        out.append(_verdict(f"omega_square[{tag}]", sp_compose(w, w) == ident, (), "omega^2 != I"))
        out.append(_verdict(f"omega_symmetric[{tag}]", sp_transpose(w) == w, (), "omega^T != omega"))
        bad = [a for a, g in enumerate(rep.gens) if sp_compose(w, g) != sp_compose(g, w)]
        out.append(_verdict(f"omega_central[{tag}]", not bad, tuple(bad[:1]), "omega does not commute"))
        out.append(_verdict(f"omega_scalar[{tag}]", w == expect, (), f"omega is not {'+' if expect == ident else '-'}I"))
    bad = [a for a, (g, h) in enumerate(zip(plus.gens, minus.gens)) if h != -g]
    out.append(_verdict("minus_is_negated_plus", not bad, tuple(bad[:1]), "V_- action is not -V_+ action"))
    out.append(_verdict("plus_minus_iso", check_plus_minus_iso(k), (), "structure constants differ"))
    return [("ungraded_extract", r) for r in out]


def _lattice_checks(tensor, rng: random.Random, samples: int) -> list[tuple[str, CheckReport]]:
    m, n = tensor.m, tensor.n
    out = []
    closure_bad = comm_bad = None
    for i in range(samples):
        x = LatticeElement([rng.randint(-6, 6) for _ in range(m)], [rng.randint(-4, 4) for _ in range(n)])
        y = LatticeElement([rng.randint(-6, 6) for _ in range(m)], [rng.randint(-4, 4) for _ in range(n)])
        X, Y = x.to_group(), y.to_group()
        XY = group_mul(X, Y, tensor)
        if closure_bad is None and not (XY.in_lattice() and (-X).in_lattice()
                                        and LatticeElement.from_group(XY) == lattice_mul(x, y, tensor)):
            closure_bad = i
        C = group_commutator(X, Y, tensor)
        if comm_bad is None and (any(C.v) or list(C.u) != bracket(x.v, y.v, tensor)):
            comm_bad = i
    out.append(_verdict("closure", closure_bad is None, (closure_bad,), "product left the lattice"))
    out.append(_verdict("commutator_is_bracket", comm_bad is None, (comm_bad,), "group commutator != bracket"))
    try:
        commutator_basis(tensor)
        out.append(CheckReport.passed("commutator_basis"))
    except LookupError as exc:
        out.append(CheckReport.failed("commutator_basis", (), str(exc)))
    return [("lattice_growth", r) for r in out]


def run_suite(k: int, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> list[SuiteEntry]:
    """Every invariant check for one k, across its admissible variants."""
    entries = [SuiteEntry(k, "graded", mod, r) for mod, r in _graded_checks(k)]
    reps = {}
    a = expected_dims(k)[0]
    for variant in variants_for(k):
        rep = extract_irreducible(k, variant, cap=max(k, 24))
        reps[variant] = rep
        tag = rep.variant.value
        tensor = structure_constants(rep)
        record = ExportRecord.from_rep(rep)
        roundtrip = ExportRecord.from_json(record.to_json())
        checks = [
            ("htype_lie", verify_htype(rep)),
            ("htype_lie", tensor.check()),
            ("ungraded_extract", _verdict("ungraded_dim", rep.n == a, (rep.n,), f"expected a_{k} = {a}")),
            ("cli_export", _verdict("roundtrip", roundtrip == record, (), "record changed on round trip")),
            ("cli_export", _verdict("tensor_roundtrip", roundtrip.tensor() == tensor, (), "tensor changed")),
        ]
        checks += _lattice_checks(tensor, random.Random(seed * 1000 + k), samples)
        entries += [SuiteEntry(k, tag, mod, r) for mod, r in checks]
    if k % 4 == 3:
        entries += [SuiteEntry(k, "both", mod, r)
                    for mod, r in _omega_checks(k, reps[Variant.PLUS], reps[Variant.MINUS])]
    return entries


def verify_record(record: ExportRecord) -> list[SuiteEntry]:
    """Checks on a loaded record (e.g. a file a user may have edited)."""
    entries = [SuiteEntry(record.k, record.variant, "cli_export", r) for r in record.validate()]
    if all(e.ok for e in entries):
        tensor = record.tensor()
        entries += [SuiteEntry(record.k, record.variant, mod, r)
                    for mod, r in _lattice_checks(tensor, random.Random(record.k), DEFAULT_SAMPLES)]
    return entries
