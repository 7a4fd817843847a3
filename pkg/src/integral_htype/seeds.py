"""Explicit integral modules for k = 1..8 from complex, quaternion and octonion multiplication."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .induction import GradedRep, even_doubles, induce_graded
from .signed import SignedPerm, verify_clifford

# Graded dimensions b_k for the seeds.
SEED_DIMS = {1: 2, 2: 4, 3: 8, 4: 8, 5: 16, 6: 16, 7: 16, 8: 16}


def _conj(x: list[int]) -> list[int]:
    return [x[0]] + [-c for c in x[1:]]


def cayley_dickson_mul(x: Sequence[int], y: Sequence[int]) -> list[int]:
    """Product in the 2^r-dimensional Cayley-Dickson algebra.

    (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)), recursively from R.
    """
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    a, b, c, d = list(x[:h]), list(x[h:]), list(y[:h]), list(y[h:])
    ac = cayley_dickson_mul(a, c)
    db = cayley_dickson_mul(_conj(d), b)
    da = cayley_dickson_mul(d, a)
    bc = cayley_dickson_mul(b, _conj(c))
    return [u - v for u, v in zip(ac, db)] + [u + v for u, v in zip(da, bc)]


@dataclass(frozen=True)
class AlgebraTable:
    """Multiplication table of unit basis elements: ``mul[a][b] = (index, sign)``.

    Index 0 is the identity.
    """

    names: tuple[str, ...]
    mul: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def n(self) -> int:
        return len(self.names)

    def product(self, a: int, b: int) -> tuple[int, int]:
        return self.mul[a][b]

    def left(self, a: int) -> SignedPerm:
        """Left multiplication by basis element ``a``."""
        row = self.mul[a]
        return SignedPerm([q for q, _ in row], [s for _, s in row])


def _table_from_cd(labels: Sequence[int], names: Sequence[str]) -> AlgebraTable:
    # labels[l] is the Cayley-Dickson coordinate of the l-th named unit
    n = len(labels)
    back = {c: l for l, c in enumerate(labels)}
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            x = [0] * n
            y = [0] * n
            x[labels[a]] = 1
            y[labels[b]] = 1
            z = cayley_dickson_mul(x, y)
            (c,) = [i for i, v in enumerate(z) if v]
            row.append((back[c], z[c]))
        rows.append(tuple(row))
    return AlgebraTable(tuple(names), tuple(rows))


@lru_cache(maxsize=None)
def quaternion_table() -> AlgebraTable:
    """Quaternions on (1, i, j, k) with ij = k, jk = i, ki = j."""
    return _table_from_cd([0, 1, 2, 3], ["1", "i", "j", "k"])


@lru_cache(maxsize=None)
def octonion_table() -> AlgebraTable:
    """Octonions on (1, i_1, ..., i_7) with O = H + H l.

    i_1..i_4 are l, il, jl, kl and i_5..i_7 are i, j, k, so that products of
    two of i_1..i_4 lie in span{1, i_5, i_6, i_7}.
    """
    table = _table_from_cd([0, 4, 5, 6, 7, 1, 2, 3], ["1"] + [f"i{a}" for a in range(1, 8)])
    for a in range(1, 8):
        if table.product(a, a) != (0, -1):
            raise RuntimeError(f"octonion table: i_{a}^2 != -1")
    report = verify_clifford([table.left(a) for a in range(1, 8)], 7)
    if not report:
        raise RuntimeError(f"octonion table: left multiplications fail Clifford relations: {report}")
    for a in range(1, 5):
        for b in range(1, 5):
            if table.product(a, b)[0] not in (0, 5, 6, 7):
                raise RuntimeError(f"octonion table: i_{a} i_{b} not in span(1, i_5, i_6, i_7)")
    return table


def quaternion_c3() -> list[SignedPerm]:
    """Ungraded C_3-module H: e_1, e_2, e_3 act as left multiplication by i, j, k."""
    t = quaternion_table()
    return [t.left(a) for a in (1, 2, 3)]


def octonion_ck(k: int) -> list[SignedPerm]:
    """Ungraded C_k-module O for k <= 7: e_a acts as left multiplication by i_a."""
    if not 1 <= k <= 7:
        raise ValueError(f"octonions carry C_k for k <= 7, got {k}")
    t = octonion_table()
    return [t.left(a) for a in range(1, k + 1)]


def phi_even_twist(gens: Sequence[SignedPerm], k: int) -> list[SignedPerm]:
    """Actions of e_j e_k (j < k) making a C_{k-1}-module into a C_k^0-module.

    Through phi(x) = x_0 + e_k x_1 we have phi^{-1}(e_k e_j) = e_j, hence
    e_j e_k = -e_k e_j acts as minus the C_{k-1} action of e_j.
    """
    if len(gens) != k - 1:
        raise ValueError(f"need a C_{k - 1}-module, got {len(gens)} generator actions")
    report = verify_clifford(gens, k - 1)
    if not report:
        raise ValueError(f"input is not an integral C_{k - 1}-module: {report}")
    return [-g for g in gens]


@lru_cache(maxsize=None)
def seed_graded(k: int) -> GradedRep:
    if not 1 <= k <= 8:
        raise ValueError(f"seed modules exist for k = 1..8, got {k}")
    if k == 1:
        # C with degree-0 part R and degree-1 part iR; e_1 is multiplication by i
        return GradedRep(1, (0, 1), (SignedPerm([1, 0], [1, -1]),), "seed(1): C")
    if k == 2:
        t = quaternion_table()
        return GradedRep(2, (0, 1, 1, 0), (t.left(1), t.left(2)), "seed(2): H, even part span{1,k}")
    if k == 4:
        t = octonion_table()
        gens = tuple(t.left(a) for a in range(1, 5))
        return GradedRep(4, (0, 1, 1, 1, 1, 0, 0, 0), gens, "seed(4): O, even part span{1,i5,i6,i7}")
    if k == 3:
        return induce_graded(even_doubles(quaternion_c3()), 3, provenance="seed(3): C_3 (x)_{C_3^0} H")
    if k in (5, 6, 7):
        return induce_graded(even_doubles(octonion_ck(k)), k, provenance=f"seed({k}): C_{k} (x)_{{C_{k}^0}} O")
    return induce_graded(phi_even_twist(octonion_ck(7), 8), 8, provenance="seed(8): C_8 (x)_{C_8^0} O via phi")
