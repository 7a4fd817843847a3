"""Ungraded irreducible integral modules for every k, dispatched on k mod 8."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .clifford import volume_element
from .induction import DEFAULT_K_CAP, CapExceeded, ConstructionError, GradedRep, build_graded
from .signed import SignedPerm, blade_action, sp_compose, verify_clifford


class Variant(str, enum.Enum):
    DEFAULT = "default"
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True, eq=False)
class UngradedRep:
    k: int
    gens: tuple[SignedPerm, ...]
    variant: Variant = Variant.DEFAULT
    provenance: str = ""

    def __post_init__(self):
        if len(self.gens) != self.k:
            raise ValueError(f"{len(self.gens)} generator actions for C_{self.k}")
        if len({g.n for g in self.gens}) > 1:
            raise ValueError("generator actions of different sizes")

    @property
    def n(self) -> int:
        return self.gens[0].n

    def check(self):
        return verify_clifford(self.gens, self.k)


def omega_action(rep: GradedRep | UngradedRep) -> SignedPerm:
    """Action of omega = e_1 ... e_k; only defined here for k = 3 mod 4."""
    if rep.k % 4 != 3:
        raise ValueError(f"omega splitting needs k = 3 mod 4, got k = {rep.k}")
    return blade_action(volume_element(rep.k), rep.gens)


def split_by_omega(W: GradedRep) -> tuple[UngradedRep, UngradedRep]:
    """Split W into the +1 and -1 eigenmodules of omega.

    Both are indexed by the degree-0 basis w_1..w_m.  On V_+ the generator
    e_i sends v_p to eps v_q where (omega e_i) w_p = eps w_q; V_- uses the
    negated actions.
    """
    omega = omega_action(W)
    even = W.even_basis()
    position = {p: i for i, p in enumerate(even)}
    plus = []
    for a, g in enumerate(W.gens):
        og = sp_compose(omega, g)
        targets, signs = [], []
        for p in even:
            q, s = og(p)
            if q not in position:
                raise ConstructionError(f"omega e_{a + 1} does not preserve the even part at basis {p}")
            targets.append(position[q])
            signs.append(s)
        plus.append(SignedPerm(targets, signs))
    minus = [-g for g in plus]
    prov = f"omega-split of [{W.provenance}]"
    vp = UngradedRep(W.k, tuple(plus), Variant.PLUS, prov + " (+1)")
    vm = UngradedRep(W.k, tuple(minus), Variant.MINUS, prov + " (-1)")
    for v in (vp, vm):
        report = v.check()
        if not report:
            raise ConstructionError(f"{v.variant.value} module over C_{W.k}: {report}")
    return vp, vm


def _resolve_variant(k: int, variant) -> Variant:
    variant = Variant(variant) if variant is not None else Variant.DEFAULT
    if k % 4 == 3:
        return Variant.PLUS if variant is Variant.DEFAULT else variant
    if variant is not Variant.DEFAULT:
        raise ValueError(f"variant {variant.value!r} only applies when k = 3 mod 4 (k = {k})")
    return variant


def extract_irreducible(k: int, variant: Variant | str | None = None,
                        cap: int = DEFAULT_K_CAP) -> UngradedRep:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > cap:
        raise CapExceeded(f"k = {k} exceeds the configured cap of {cap}")
    return _extract(k, _resolve_variant(k, variant))


@lru_cache(maxsize=None)
def _extract(k: int, variant: Variant) -> UngradedRep:
    r = k % 8
    if r in (1, 2, 4, 0):
        W = build_graded(k, cap=k)
        return UngradedRep(k, W.gens, variant, f"forget grading of [{W.provenance}]")
    if r in (3, 7):
        plus, minus = split_by_omega(build_graded(k, cap=k))
        return plus if variant is Variant.PLUS else minus
    # restrict the + module over C_{k'}, k' = 8l + 7, to the first k generators
    big = _extract(k + 7 - r, Variant.PLUS)
    return UngradedRep(k, big.gens[:k], variant, f"first {k} generators of [{big.provenance}]")


_A_BASE = (2, 4, 4, 8, 8, 8, 8, 16)
_B_BASE = (2, 4, 8, 8, 16, 16, 16, 16)


def expected_dims(k: int) -> tuple[int, int]:
    """Classification values (a_k, b_k), extended by a_{k+8} = 16 a_k, b_{k+8} = 16 b_k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    period, r = divmod(k - 1, 8)
    return _A_BASE[r] * 16 ** period, _B_BASE[r] * 16 ** period
