"""Structure constants of the H-type algebra N = U + V built from an integral module.

With orthonormal bases e_1..e_m of U and v_1..v_n of V the bracket is
[v_p, v_q] = sum_a A^a_{pq} e_a with A^a_{pq} = (J_{e_a} v_p, v_q).
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .signed import CheckReport, SignedPerm, verify_clifford
from .ungraded import UngradedRep, Variant, extract_irreducible


class StructTensor:
    """Sparse A^a_{pq} in {0, +1, -1}, stored as one signed permutation per a.

    Row (a, p) has its single nonzero entry at ``q = targets[a][p]``.
    Indices are 0-based.
    """

    def __init__(self, m: int, n: int, targets: Sequence[Sequence[int]], signs: Sequence[Sequence[int]]):
        self.m = m
        self.n = n
        self.targets = tuple(tuple(int(q) for q in row) for row in targets)
        self.signs = tuple(tuple(int(s) for s in row) for row in signs)
        if len(self.targets) != m or len(self.signs) != m:
            raise ValueError(f"expected {m} generator rows")
        for a in range(m):
            if len(self.targets[a]) != n or len(self.signs[a]) != n:
                raise ValueError(f"row {a} has the wrong length for n = {n}")

    @classmethod
    def from_triples(cls, m: int, n: int, triples: Iterable[tuple[int, int, int, int]]) -> StructTensor:
        """Rebuild from (a, p, q, sign) triples, enforcing every tensor invariant."""
        targets = [[-1] * n for _ in range(m)]
        signs = [[0] * n for _ in range(m)]
        for a, p, q, s in triples:
            if not (0 <= a < m and 0 <= p < n and 0 <= q < n):
                raise ValueError(f"triple {(a, p, q, s)} out of range")
            if s not in (1, -1):
                raise ValueError(f"triple {(a, p, q, s)}: value must be +1 or -1")
            if targets[a][p] != -1:
                raise ValueError(f"two nonzero entries in row (a={a}, p={p})")
            targets[a][p] = q
            signs[a][p] = s
        for a in range(m):
            for p in range(n):
                if targets[a][p] == -1:
                    raise ValueError(f"no nonzero entry in row (a={a}, p={p})")
        tensor = cls(m, n, targets, signs)
        report = tensor.check()
        if not report:
            raise ValueError(str(report))
        return tensor

    def entry(self, a: int, p: int, q: int) -> int:
        return self.signs[a][p] if self.targets[a][p] == q else 0

    @cached_property
    def entries(self) -> dict[tuple[int, int, int], int]:
        return {(a, p, q): s for a, p, q, s in self.triples()}

    def triples(self) -> Iterator[tuple[int, int, int, int]]:
        for a in range(self.m):
            for p, (q, s) in enumerate(zip(self.targets[a], self.signs[a])):
                yield a, p, q, s

    def generators(self) -> list[SignedPerm]:
        return [SignedPerm(t, s, check=False) for t, s in zip(self.targets, self.signs)]

    def check(self) -> CheckReport:
        """Antisymmetry, zero diagonal, values in {+1, -1}, one nonzero per (a, p)."""
        name = "struct_tensor"
        for a in range(self.m):
            t, s = self.targets[a], self.signs[a]
            if sorted(t) != list(range(self.n)):
                return CheckReport.failed(name, (a,), f"generator {a} is not a permutation of the basis")
            for p in range(self.n):
                q = t[p]
                if s[p] not in (1, -1):
                    return CheckReport.failed(name, (a, p, q), "value outside {+1, -1}")
                if q == p:
                    return CheckReport.failed(name, (a, p, q), "nonzero diagonal entry")
                if t[q] != p or s[q] != -s[p]:
                    return CheckReport.failed(name, (a, p, q), "A^a_pq != -A^a_qp")
        return CheckReport.passed(name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructTensor):
            return NotImplemented
        return (self.m, self.n, self.targets, self.signs) == (other.m, other.n, other.targets, other.signs)

    def __neg__(self) -> StructTensor:
        return StructTensor(self.m, self.n, self.targets, [[-x for x in row] for row in self.signs])

    def __repr__(self) -> str:
        return f"StructTensor(m={self.m}, n={self.n})"


def structure_constants(rep: UngradedRep) -> StructTensor:
    report = rep.check()
    if not report:
        raise ValueError(f"module fails the Clifford relations: {report}")
    return StructTensor(rep.k, rep.n, [g.targets for g in rep.gens], [g.signs for g in rep.gens])


def bracket(v: Sequence, w: Sequence, A: StructTensor) -> list:
    """[v, w] in U: component a is sum_p A^a_{p, q(p)} v_p w_{q(p)}.

    Works for any exact number type (int, Fraction).
    """
    if len(v) != A.n or len(w) != A.n:
        raise ValueError(f"vectors of length {len(v)}, {len(w)} for n = {A.n}")
    out = []
    for t, s in zip(A.targets, A.signs):
        total = 0
        for p, vp in enumerate(v):
            if vp:
                wq = w[t[p]]
                if wq:
                    total += vp * wq if s[p] > 0 else -(vp * wq)
        out.append(total)
    return out


def verify_htype(rep: UngradedRep | StructTensor) -> CheckReport:
    """Clifford relations and skewness of the generator actions.

    By polarization this certifies |J_z v| = |z||v|, J_z^2 = -|z|^2 and
    skew-adjointness of J_z for every real z.
    """
    if isinstance(rep, StructTensor):
        tensor_report = rep.check()
        if not tensor_report:
            return tensor_report
        return verify_clifford(rep.generators(), rep.m)
    return rep.check()


def check_plus_minus_iso(k: int) -> bool:
    """True iff V_- against the basis -e_1..-e_k has the same constants as V_+."""
    if k % 4 != 3:
        raise ValueError(f"plus/minus modules exist only for k = 3 mod 4, got {k}")
    plus = structure_constants(extract_irreducible(k, Variant.PLUS))
    minus = structure_constants(extract_irreducible(k, Variant.MINUS))
    # (J_{-e_a} v'_p, v'_q) = -A_-^a_{pq}
    return -minus == plus
