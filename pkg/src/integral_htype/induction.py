"""Graded integral Clifford modules: induction from C_k^0 and graded tensor products."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .signed import SignedPerm, sp_compose, verify_clifford, verify_even_integral

DEFAULT_K_CAP = 24


class ConstructionError(RuntimeError):
    """A constructed module failed its own post-construction check."""


class CapExceeded(ValueError):
    """Requested size is above the configured resource cap."""


@dataclass(frozen=True, eq=False)
class GradedRep:
    """A Z_2-graded integral module over C_k.

    ``gens[a]`` is the action of e_{a+1} on the orthonormal basis; ``parity[p]``
    is the degree of basis vector ``p``.
    """

    k: int
    parity: tuple[int, ...]
    gens: tuple[SignedPerm, ...]
    provenance: str = ""

    def __post_init__(self):
        n = len(self.parity)
        if len(self.gens) != self.k:
            raise ValueError(f"{len(self.gens)} generator actions for C_{self.k}")
        if 2 * self.parity.count(0) != n:
            raise ValueError("graded basis is not split evenly between degrees 0 and 1")
        for a, g in enumerate(self.gens):
            if g.n != n:
                raise ValueError(f"generator {a} acts on {g.n} points, expected {n}")
            for p, q in enumerate(g.targets):
                if self.parity[q] == self.parity[p]:
                    raise ValueError(f"generator {a} does not flip parity at basis {p}")

    @property
    def n(self) -> int:
        return len(self.parity)

    def even_basis(self) -> list[int]:
        return [p for p, d in enumerate(self.parity) if d == 0]

    def check(self):
        return verify_clifford(self.gens, self.k)


def _require(report, what: str):
    if not report:
        raise ConstructionError(f"{what}: {report}")


def even_doubles(gens: Sequence[SignedPerm]) -> list[SignedPerm]:
    """Actions of e_i e_k (i < k) on an ungraded C_k-module, i.e. g_i o g_k."""
    last = gens[-1]
    return [sp_compose(g, last) for g in gens[:-1]]


def induce_graded(doubles: Sequence[SignedPerm], k: int, m: int | None = None,
                  provenance: str = "") -> GradedRep:
    """Build C_k (x) V over C_k^0 from the actions T_i of e_i e_k on V.

    Basis: x_p = 1 (x) v_p (degree 0) followed by y_p = e_k (x) v_p (degree 1).
    e_k sends x_p to y_p and y_p to -x_p; e_i (i < k) sends x_p to T_i(v_p)
    read in the y block and y_p to T_i(v_p) read in the x block.
    """
    if len(doubles) != k - 1:
        raise ValueError(f"need {k - 1} double products for C_{k}, got {len(doubles)}")
    report = verify_even_integral(doubles)
    if not report:
        raise ValueError(f"input is not an integral C_{k}^0-module: {report}")
    if doubles:
        m = doubles[0].n
    elif m is None:
        raise ValueError("module size m is required when k = 1")
    gens = []
    for t in doubles:
        targets = [m + q for q in t.targets] + list(t.targets)
        gens.append(SignedPerm(targets, t.signs + t.signs, check=False))
    gens.append(SignedPerm([m + p for p in range(m)] + list(range(m)), [1] * m + [-1] * m, check=False))
    rep = GradedRep(k, (0,) * m + (1,) * m, tuple(gens), provenance or f"induce(C_{k}, m={m})")
    _require(rep.check(), f"induced module over C_{k}")
    return rep


def graded_tensor(A: GradedRep, B: GradedRep, check: bool = True) -> GradedRep:
    """Graded tensor product over C_{k+l}, basis x (x) y in row-major order.

    e_a (x) 1 acts on the left factor; 1 (x) f_b picks up (-1)^{deg x}.
    """
    nb = B.n
    parity = tuple((px + py) & 1 for px in A.parity for py in B.parity)
    gens = []
    for g in A.gens:
        targets, signs = [], []
        for x in range(A.n):
            tx, sx = g.targets[x], g.signs[x]
            targets.extend(tx * nb + y for y in range(nb))
            signs.extend([sx] * nb)
        gens.append(SignedPerm(targets, signs, check=False))
    for f in B.gens:
        targets, signs = [], []
        for x in range(A.n):
            koszul = -1 if A.parity[x] else 1
            targets.extend(x * nb + t for t in f.targets)
            signs.extend(koszul * s for s in f.signs)
        gens.append(SignedPerm(targets, signs, check=False))
    rep = GradedRep(A.k + B.k, parity, tuple(gens), f"({A.provenance}) (x) ({B.provenance})")
    if check:
        _require(rep.check(), f"graded tensor over C_{rep.k}")
    return rep


def build_graded(k: int, cap: int = DEFAULT_K_CAP) -> GradedRep:
    """Irreducible graded integral module over C_k, via W_{k+8} = W_k (x) W_8."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > cap:
        raise CapExceeded(f"k = {k} exceeds the configured cap of {cap}")
    return _build_graded(k)


@lru_cache(maxsize=None)
def _build_graded(k: int) -> GradedRep:
    from .seeds import seed_graded

    if k <= 8:
        return seed_graded(k)
    return graded_tensor(_build_graded(k - 8), seed_graded(8))
