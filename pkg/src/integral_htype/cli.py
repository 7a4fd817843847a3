"""Command-line interface: construct, verify, dims, growth, reduce.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .export import ExportRecord, RecordError, growth_csv, triples_csv
from .growth import DEFAULT_ELEMENT_CAP, ball_count
from .induction import DEFAULT_K_CAP, CapExceeded, build_graded
from .lattice import GroupElement, reduce_to_fundamental
from .lie import structure_constants
from .suite import run_suite, verify_record
from .ungraded import expected_dims, extract_irreducible

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# Rows as printed in the source table (k, a_k, b_k); the label 5 appears twice.
PUBLISHED_TABLE = [(1, 2, 2), (2, 2, 4), (3, 4, 8), (5, 8, 16), (5, 8, 16), (7, 8, 16), (8, 16, 16)]

log = logging.getLogger("integral_htype")


class UsageError(Exception):
    pass


def parse_k_range(text: str) -> list[int]:
    """'5', '1..8' or '1,3,7'."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            ks = list(range(lo, hi + 1))
        else:
            ks = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse k range {text!r}") from None
    if not ks or min(ks) < 1:
        raise UsageError(f"k must be a positive integer, got {text!r}")
    return ks


def _parse_k(text: str) -> int:
    ks = parse_k_range(text)
    if len(ks) != 1:
        raise UsageError(f"expected a single k, got {text!r}")
    return ks[0]


def _rep(k: int, variant, cap: int):
    try:
        return extract_irreducible(k, variant, cap=cap)
    except CapExceeded:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, output: str | None):
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def cmd_construct(args) -> int:
    k = _parse_k(args.k)
    if k > args.cap:
        raise CapExceeded(f"k = {k} exceeds the cap of {args.cap}")
    record = ExportRecord.from_rep(_rep(k, args.variant, args.cap))
    text = record.to_json() + "\n" if args.format == "json" else triples_csv(record)
    _write(text, args.output)
    log.info("C_%d module of dimension %d, %d structure constants", k, record.n, len(record.triples))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.input:
        try:
            record = ExportRecord.from_json(Path(args.input).read_text(), validate=False)
        except (OSError, json.JSONDecodeError, RecordError) as exc:
            print(f"cannot read {args.input}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        entries = verify_record(record)
    else:
        ks = parse_k_range(args.k)
        if max(ks) > args.cap:
            raise CapExceeded(f"k = {max(ks)} exceeds the cap of {args.cap}")
        entries = [e for k in ks for e in run_suite(k, samples=args.samples, seed=args.seed)]
    failed = [e for e in entries if not e.ok]
    if args.json:
        print(json.dumps({"ok": not failed, "checks": [e.to_dict() for e in entries]}, indent=1))
    else:
        for e in entries:
            if args.verbose or not e.ok:
                print(e)
        print(f"{len(entries) - len(failed)}/{len(entries)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def dims_rows(max_k: int) -> list[dict]:
    published = {}
    for k, a, b in PUBLISHED_TABLE:
        published.setdefault(k, []).append((a, b))
    rows = []
    for k in range(1, max_k + 1):
        a = extract_irreducible(k, cap=max(max_k, DEFAULT_K_CAP)).n
        b = build_graded(k, cap=max(max_k, DEFAULT_K_CAP)).n
        notes = []
        if (a, b) != expected_dims(k):
            notes.append(f"MISMATCH with classification {expected_dims(k)}")
        if k in published:
            pa, pb = published[k][0]
            if (pa, pb) != (a, b):
                notes.append(f"table lists a={pa} b={pb}")
            if len(published[k]) > 1:
                notes.append(f"table repeats row label {k}")
        elif k <= 8:
            notes.append("row missing from table (label 5 printed twice)")
        if k > 8:
            pa, pb = rows[k - 9]["a"], rows[k - 9]["b"]
            if (a, b) != (16 * pa, 16 * pb):
                notes.append("periodicity violated")
        rows.append({"k": k, "a": a, "b": b, "note": "; ".join(notes)})
    return rows


def cmd_dims(args) -> int:
    max_k = max(parse_k_range(args.k))
    if max_k > args.cap:
        raise CapExceeded(f"k = {max_k} exceeds the cap of {args.cap}")
    rows = dims_rows(max_k)
    lines = ["k,a_k,b_k,note"] + [f"{r['k']},{r['a']},{r['b']},{r['note']}" for r in rows]
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_FAIL if any("MISMATCH" in r["note"] or "periodicity" in r["note"] for r in rows) else EXIT_OK


def cmd_growth(args) -> int:
    k = _parse_k(args.k)
    if args.radius < 0:
        raise UsageError("radius must be non-negative")
    tensor = structure_constants(_rep(k, args.variant, DEFAULT_K_CAP))
    result = ball_count(tensor, args.radius, args.gen_set, max_elements=args.cap, track_index=True)
    _write(growth_csv(result.counts), args.output)
    print(f"degree d = {result.degree} (dim V = {tensor.n}, dim U = {tensor.m})", file=sys.stderr)
    last = len(result.counts) - 1
    if last >= 2:
        lo = max(1, last // 2)
        print(f"log-log slope over R in [{lo}, {last}]: {result.slope(lo, last):.4f}", file=sys.stderr)
    print(f"index of generated subgroup (observed): {result.index_estimate}", file=sys.stderr)
    if not result.complete:
        print(f"partial: element cap {args.cap} reached at radius {last + 1}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _parse_coords(text: str | None, size: int, what: str) -> tuple[Fraction, ...]:
    if not text:
        return (Fraction(0),) * size
    try:
        coords = tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {what} coordinates {text!r}") from None
    if len(coords) != size:
        raise UsageError(f"{what} needs {size} coordinates, got {len(coords)}")
    return coords


def cmd_reduce(args) -> int:
    k = _parse_k(args.k)
    tensor = structure_constants(_rep(k, args.variant, DEFAULT_K_CAP))
    try:
        X = GroupElement(_parse_coords(args.u, tensor.m, "u"), _parse_coords(args.v, tensor.n, "v"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lat, r = reduce_to_fundamental(X, tensor)
    out = {"lattice": {"u2": list(lat.u2), "v": list(lat.v)},
           "reduced": {"u": [str(x) for x in r.u], "v": [str(x) for x in r.v]}}
    print(json.dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="integral-htype", description=__doc__.splitlines()[0])
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit an integral module and its structure constants")
    p.add_argument("--k", required=True)
    p.add_argument("--variant", choices=["plus", "minus"])
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--cap", type=int, default=DEFAULT_K_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--k", default="1..8")
    p.add_argument("--input", help="verify a JSON record instead of constructing")
    p.add_argument("--cap", type=int, default=DEFAULT_K_CAP)
    p.add_argument("--samples", type=int, default=200, help="random lattice pairs per module")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dims", help="constructed dimension table")
    p.add_argument("--k", default="16", help="largest k (or a range ending there)")
    p.add_argument("--cap", type=int, default=DEFAULT_K_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("growth", help="ball sizes in the Cayley graph of the lattice")
    p.add_argument("--k", required=True)
    p.add_argument("--variant", choices=["plus", "minus"])
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--gen-set", choices=["exact", "paper"], default="exact")
    p.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP, help="maximum ball size")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("reduce", help="move a point of N into the fundamental domain")
    p.add_argument("--k", required=True)
    p.add_argument("--variant", choices=["plus", "minus"])
    p.add_argument("--u", help="comma-separated dyadic coordinates on U")
    p.add_argument("--v", help="comma-separated dyadic coordinates on V")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
