"""Signed permutations of a module basis and exact checks of Clifford relations.

A :class:`SignedPerm` ``g`` sends basis vector ``p`` to ``signs[p] * basis[targets[p]]``.
Indices are 0-based here; export code converts to 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .clifford import Blade


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an exact verification.

    ``witness`` holds the first violating tuple (generator indices and a basis
    index, all 0-based) when the check fails.
    """

    ok: bool
    check: str
    witness: tuple | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, check: str) -> CheckReport:
        return cls(True, check)

    @classmethod
    def failed(cls, check: str, witness: tuple, message: str) -> CheckReport:
        return cls(False, check, witness, message)

    def __str__(self) -> str:
        if self.ok:
            return f"{self.check}: ok"
        return f"{self.check}: FAILED at {self.witness}: {self.message}"


class SignedPerm:
    __slots__ = ("targets", "signs")

    def __init__(self, targets: Sequence[int], signs: Sequence[int], *, check: bool = True):
        self.targets = tuple(int(t) for t in targets)
        self.signs = tuple(int(s) for s in signs)
        if check:
            problem = self._problem()
            if problem:
                raise ValueError(problem)

    def _problem(self) -> str:
        n = len(self.targets)
        if len(self.signs) != n:
            return f"{n} targets but {len(self.signs)} signs"
        if any(s not in (1, -1) for s in self.signs):
            return "signs must be +1 or -1"
        if sorted(self.targets) != list(range(n)):
            return "targets do not form a permutation"
        return ""

    def is_bijective(self) -> bool:
        return not self._problem()

    @property
    def n(self) -> int:
        return len(self.targets)

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(range(n), [1] * n, check=False)

    def __call__(self, p: int) -> tuple[int, int]:
        return self.targets[p], self.signs[p]

    def __neg__(self) -> SignedPerm:
        return SignedPerm(self.targets, [-s for s in self.signs], check=False)

    def __matmul__(self, other: SignedPerm) -> SignedPerm:
        return sp_compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPerm):
            return NotImplemented
        return self.targets == other.targets and self.signs == other.signs

    def __hash__(self) -> int:
        return hash((self.targets, self.signs))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{'-' if s < 0 else '+'}{t}" for t, s in zip(self.targets, self.signs))
        return f"SignedPerm([{pairs}])"

    def to_matrix(self) -> np.ndarray:
        """Dense integer matrix M with M[targets[p], p] = signs[p]."""
        m = np.zeros((self.n, self.n), dtype=np.int64)
        m[list(self.targets), list(range(self.n))] = self.signs
        return m


def sp_compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """The map ``a o b`` (apply ``b`` first)."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    at, as_ = a.targets, a.signs
    targets = [at[t] for t in b.targets]
    signs = [as_[t] * s for t, s in zip(b.targets, b.signs)]
    return SignedPerm(targets, signs, check=False)


def sp_transpose(a: SignedPerm) -> SignedPerm:
    targets = [0] * a.n
    signs = [0] * a.n
    for p, (q, s) in enumerate(zip(a.targets, a.signs)):
        targets[q] = p
        signs[q] = s
    return SignedPerm(targets, signs, check=False)


def blade_action(blade: Blade, gens: Sequence[SignedPerm]) -> SignedPerm:
    """Action of a blade e_{i1}...e_{ir} as g_{i1} o ... o g_{ir}, times its sign."""
    if blade.k != len(gens):
        raise ValueError(f"blade over C_{blade.k} but {len(gens)} generator actions")
    if not gens:
        raise ValueError("empty generator family")
    out = SignedPerm.identity(gens[0].n)
    for i in reversed(blade.indices()):
        out = sp_compose(gens[i - 1], out)
    return -out if blade.sign < 0 else out


def _skew_violation(g: SignedPerm) -> int | None:
    # g^T = -g  <=>  g(p) = s q implies g(q) = -s p
    for p, (q, s) in enumerate(zip(g.targets, g.signs)):
        if g.targets[q] != p or g.signs[q] != -s:
            return p
    return None


def verify_clifford(gens: Sequence[SignedPerm], k: int) -> CheckReport:
    """Exact check of g_a g_b + g_b g_a = -2 delta_ab I and g_a^T = -g_a.

    Together these are the polarized forms of |J_z v| = |z||v| and
    J_z^2 = -|z|^2 on integer combinations z of the generators.
    """
    name = "clifford"
    if len(gens) != k:
        return CheckReport.failed(name, (), f"expected {k} generators, got {len(gens)}")
    if k == 0:
        return CheckReport.passed(name)
    n = gens[0].n
    for a, g in enumerate(gens):
        if g.n != n:
            return CheckReport.failed(name, (a,), f"generator {a} acts on {g.n} points, expected {n}")
        if not g.is_bijective():
            return CheckReport.failed(name, (a,), f"generator {a} is not a signed permutation")
    for a, g in enumerate(gens):
        p = _skew_violation(g)
        if p is not None:
            return CheckReport.failed(name, (a, a, p), f"generator {a} is not skew-adjoint at basis {p}")
    for a in range(k):
        ga = gens[a]
        for b in range(a, k):
            gb = gens[b]
            ab = sp_compose(ga, gb)
            if a == b:
                for p in range(n):
                    if ab.targets[p] != p or ab.signs[p] != -1:
                        return CheckReport.failed(name, (a, a, p), f"g_{a}^2 != -I at basis {p}")
                continue
            ba = sp_compose(gb, ga)
            for p in range(n):
                if ab.targets[p] != ba.targets[p] or ab.signs[p] != -ba.signs[p]:
                    return CheckReport.failed(name, (a, b, p), f"g_{a}, g_{b} do not anticommute at basis {p}")
    return CheckReport.passed(name)


def verify_even_integral(doubles: Sequence[SignedPerm]) -> CheckReport:
    """Check that the actions T_i of e_i e_k (i < k) define an integral C_k^0-module.

    Polarizing (z e_k w, z e_k w) = |z|^2 |w|^2 over all z in R^k, with the
    e_k-component acting as e_k e_k = -1, gives T_i^T T_j + T_j^T T_i = 2 delta_ij I
    and T_i^T = -T_i.  Each T_i must also be a signed permutation.
    """
    name = "even_integral"
    if not doubles:
        return CheckReport.passed(name)
    n = doubles[0].n
    for i, t in enumerate(doubles):
        if t.n != n or not t.is_bijective():
            return CheckReport.failed(name, (i,), f"T_{i} is not a signed permutation of {n} points")
        p = _skew_violation(t)
        if p is not None:
            return CheckReport.failed(name, (i, i, p), f"T_{i} is not skew-adjoint at basis {p}")
    transposes = [sp_transpose(t) for t in doubles]
    for i in range(len(doubles)):
        for j in range(i + 1, len(doubles)):
            x = sp_compose(transposes[i], doubles[j])
            y = sp_compose(transposes[j], doubles[i])
            for p in range(n):
                if x.targets[p] != y.targets[p] or x.signs[p] != -y.signs[p]:
                    return CheckReport.failed(name, (i, j, p), f"T_{i}^T T_{j} + T_{j}^T T_{i} != 0 at basis {p}")
    return CheckReport.passed(name)
