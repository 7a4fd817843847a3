"""Blade arithmetic in the Clifford algebra C_k (e_i^2 = -1, e_i e_j = -e_j e_i).

A blade is a signed product of distinct generators.  Generator ``e_i``
(1-based) is bit ``i - 1`` of the mask; the product is always stored with
generators in ascending index order.
"""

from __future__ import annotations

from dataclasses import dataclass


def _reorder_swaps(a: int, b: int) -> int:
    """Number of transpositions needed to sort the concatenation ``a b``."""
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return swaps


@dataclass(frozen=True)
class Blade:
    k: int
    mask: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.mask < 0 or self.mask >> self.k:
            raise ValueError(f"mask {self.mask:#b} is not a subset of 1..{self.k}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def identity(cls, k: int) -> Blade:
        return cls(k, 0, 1)

    @classmethod
    def generator(cls, k: int, i: int) -> Blade:
        """The generator e_i, 1 <= i <= k."""
        if not 1 <= i <= k:
            raise ValueError(f"generator index {i} outside 1..{k}")
        return cls(k, 1 << (i - 1), 1)

    @classmethod
    def from_indices(cls, k: int, indices, sign: int = 1) -> Blade:
        """Product e_{i1} e_{i2} ... in the order given (repeats allowed)."""
        out = cls(k, 0, sign)
        for i in indices:
            out = blade_mul(out, cls.generator(k, i))
        return out

    def indices(self) -> tuple[int, ...]:
        """1-based generator indices in ascending order."""
        return tuple(i + 1 for i in range(self.k) if self.mask >> i & 1)

    def __neg__(self) -> Blade:
        return Blade(self.k, self.mask, -self.sign)

    def __mul__(self, other: Blade) -> Blade:
        return blade_mul(self, other)

    def __str__(self) -> str:
        body = "".join(f"e{i}" for i in self.indices()) or "1"
        return ("-" if self.sign < 0 else "") + body


def blade_mul(a: Blade, b: Blade) -> Blade:
    """Clifford product of two blades."""
    if a.k != b.k:
        raise ValueError(f"blades over different algebras: C_{a.k} vs C_{b.k}")
    flips = _reorder_swaps(a.mask, b.mask) + (a.mask & b.mask).bit_count()
    sign = a.sign * b.sign * (-1 if flips & 1 else 1)
    return Blade(a.k, a.mask ^ b.mask, sign)


def blade_parity(a: Blade) -> int:
    return a.mask.bit_count() & 1


def volume_element(k: int) -> Blade:
    """omega = e_1 e_2 ... e_k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return Blade(k, (1 << k) - 1, 1)
