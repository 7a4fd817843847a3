"""The two-step nilpotent group N = U + V with X.Y = X + Y + [X, Y]/2 and its lattice.

The lattice is L = (1/2) U_Z + V_Z.  Exact points of N use :class:`fractions.Fraction`
coordinates restricted to dyadic rationals; lattice points are stored as
integers ``(u2, v)`` with ``u2 = 2u``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .lie import StructTensor, bracket

HALF = Fraction(1, 2)


def _dyadic(x) -> Fraction:
    f = x if type(x) is Fraction else Fraction(x)
    d = f.denominator
    if d & (d - 1):
        raise ValueError(f"{f} is not a dyadic rational")
    return f


@dataclass(frozen=True)
class GroupElement:
    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(_dyadic(x) for x in self.u))
        object.__setattr__(self, "v", tuple(_dyadic(x) for x in self.v))

    @classmethod
    def zero(cls, m: int, n: int) -> GroupElement:
        return cls((0,) * m, (0,) * n)

    def __neg__(self) -> GroupElement:
        return GroupElement(tuple(-x for x in self.u), tuple(-x for x in self.v))

    def in_lattice(self) -> bool:
        return all((2 * x).denominator == 1 for x in self.u) and all(x.denominator == 1 for x in self.v)


@dataclass(frozen=True)
class LatticeElement:
    u2: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u2", tuple(int(x) for x in self.u2))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))

    def to_group(self) -> GroupElement:
        return GroupElement(tuple(Fraction(x, 2) for x in self.u2), self.v)

    @classmethod
    def from_group(cls, X: GroupElement) -> LatticeElement:
        if not X.in_lattice():
            raise ValueError(f"{X} is not a lattice point")
        return cls(tuple(int(2 * x) for x in X.u), tuple(int(x) for x in X.v))

    def __neg__(self) -> LatticeElement:
        return LatticeElement(tuple(-x for x in self.u2), tuple(-x for x in self.v))


def _check_dims(X, A: StructTensor):
    if len(X.u) != A.m or len(X.v) != A.n:
        raise ValueError(f"element of shape ({len(X.u)}, {len(X.v)}) for m = {A.m}, n = {A.n}")


def _dyadic_bracket(v: Sequence[Fraction], w: Sequence[Fraction], A: StructTensor) -> list[Fraction]:
    # clear the power-of-two denominators and bracket in integers
    dv = max(x.denominator for x in v)
    dw = max(x.denominator for x in w)
    vi = [x.numerator * (dv // x.denominator) for x in v]
    wi = [x.numerator * (dw // x.denominator) for x in w]
    return [Fraction(c, dv * dw) for c in bracket(vi, wi, A)]


def group_mul(X: GroupElement, Y: GroupElement, A: StructTensor) -> GroupElement:
    _check_dims(X, A)
    _check_dims(Y, A)
    br = _dyadic_bracket(X.v, Y.v, A)
    u = tuple(a + b + HALF * c for a, b, c in zip(X.u, Y.u, br))
    v = tuple(a + b for a, b in zip(X.v, Y.v))
    return GroupElement(u, v)


def group_inverse(X: GroupElement) -> GroupElement:
    return -X


def group_commutator(X: GroupElement, Y: GroupElement, A: StructTensor) -> GroupElement:
    """X Y X^-1 Y^-1."""
    xy = group_mul(X, Y, A)
    return group_mul(group_mul(xy, -X, A), -Y, A)


def lattice_mul(x: LatticeElement, y: LatticeElement, A: StructTensor) -> LatticeElement:
    if len(x.u2) != A.m or len(x.v) != A.n or len(y.u2) != A.m or len(y.v) != A.n:
        raise ValueError(f"lattice elements do not match m = {A.m}, n = {A.n}")
    br = bracket(x.v, y.v, A)
    return LatticeElement(tuple(a + b + c for a, b, c in zip(x.u2, y.u2, br)),
                          tuple(a + b for a, b in zip(x.v, y.v)))


def basis_vector(n: int, p: int, scale=1) -> tuple:
    out = [0] * n
    out[p] = scale
    return tuple(out)


def commutator_basis(A: StructTensor) -> dict[int, tuple[int, int, int]]:
    """For each a, a pair (p, q) and sign s with [v_p, v_q] = s e_a exactly.

    Raises ``LookupError`` naming every a without a witness.
    """
    found = {}
    for a in range(A.m):
        for p in range(A.n):
            q = A.targets[a][p]
            br = bracket(basis_vector(A.n, p), basis_vector(A.n, q), A)
            support = [b for b, x in enumerate(br) if x]
            if support == [a] and abs(br[a]) == 1:
                found[a] = (p, q, br[a])
                break
    missing = [a for a in range(A.m) if a not in found]
    if missing:
        raise LookupError(f"no commutator witness for generators {missing}")
    return found


def reduce_to_fundamental(X: GroupElement, A: StructTensor) -> tuple[LatticeElement, GroupElement]:
    """Find l in L with r = X.l having v-coordinates in [0, 1] and u-coordinates in [0, 1/2]."""
    _check_dims(X, A)
    w = tuple(-math.floor(x) for x in X.v)
    shifted = [a + HALF * c for a, c in zip(X.u, _dyadic_bracket(X.v, [Fraction(x) for x in w], A))]
    u2 = tuple(-math.floor(2 * x) for x in shifted)
    l = LatticeElement(u2, w)
    return l, group_mul(X, l.to_group(), A)


def growth_degree(m: int, n: int) -> int:
    """Polynomial growth degree dim V + 2 dim U of the lattice."""
    return n + 2 * m


def bracket_batch(V: np.ndarray, W: np.ndarray, A: StructTensor) -> np.ndarray:
    """Row-wise [V_i, W_i] for integer arrays of shape (N, n); returns (N, m)."""
    out = np.empty((V.shape[0], A.m), dtype=np.int64)
    for a in range(A.m):
        t = np.asarray(A.targets[a])
        s = np.asarray(A.signs[a], dtype=np.int64)
        out[:, a] = (V * W[:, t] * s).sum(axis=1)
    return out


def group_mul_batch(Xu: np.ndarray, Xv: np.ndarray, Yu: np.ndarray, Yv: np.ndarray,
                    scale: int, A: StructTensor) -> tuple[np.ndarray, np.ndarray, int]:
    """Group law on dyadic numerators over a common denominator 2**scale.

    Returns numerators over 2**(2*scale + 1).
    """
    lift = 1 << (scale + 1)
    u = lift * (Xu + Yu) + bracket_batch(Xv, Yv, A)
    v = lift * (Xv + Yv)
    return u, v, 2 * scale + 1
