"""Word-metric balls in the lattice L = (1/2) U_Z + V_Z by breadth-first search.

Elements are integer rows (u2, v) with u2 = 2u.  Since the generating set is
symmetric, the neighbours of sphere r lie in spheres r - 1, r and r + 1, so
only the last two spheres are kept for deduplication.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .lattice import growth_degree
from .lie import StructTensor

log = logging.getLogger(__name__)

DEFAULT_ELEMENT_CAP = 20_000_000


def generating_set(A: StructTensor, mode: str = "exact") -> np.ndarray:
    """Rows (u2, v) of the generators.

    ``exact``: +-v_p and +-e_a/2, which generate L.
    ``paper``: +-v_p and +-e_a, a subgroup of index 2^m.
    """
    if mode not in ("exact", "paper"):
        raise ValueError(f"unknown generating set {mode!r}")
    step = 1 if mode == "exact" else 2
    rows = []
    for a in range(A.m):
        for sign in (1, -1):
            r = np.zeros(A.m + A.n, dtype=np.int64)
            r[a] = sign * step
            rows.append(r)
    for p in range(A.n):
        for sign in (1, -1):
            r = np.zeros(A.m + A.n, dtype=np.int64)
            r[A.m + p] = sign
            rows.append(r)
    return np.array(rows)


@dataclass
class GrowthResult:
    counts: list[int]
    complete: bool
    degree: int
    gen_set: str
    generators: int
    index_estimate: int | None = None
    sphere_sizes: list[int] = field(default_factory=list)

    def slope(self, r_lo: int, r_hi: int) -> float:
        return log_log_slope(self.counts, r_lo, r_hi)


def log_log_slope(counts, r_lo: int, r_hi: int) -> float:
    """Least-squares slope of log g(R) against log R over r_lo <= R <= r_hi."""
    if r_lo < 1 or r_hi >= len(counts) or r_hi <= r_lo:
        raise ValueError(f"radius window [{r_lo}, {r_hi}] not covered by {len(counts)} counts")
    R = np.arange(r_lo, r_hi + 1)
    g = np.asarray(counts[r_lo:r_hi + 1], dtype=float)
    slope, _ = np.polyfit(np.log(R), np.log(g), 1)
    return float(slope)


class _Encoder:
    """Injective map from bounded integer rows to int64 keys (mixed radix)."""

    def __init__(self, bounds: np.ndarray):
        self.offsets = bounds.astype(np.int64)
        radices = 2 * bounds + 1
        total = 1
        weights = []
        for r in radices[::-1]:
            weights.append(total)
            total *= int(r)
        self.weights = np.array(weights[::-1], dtype=np.int64)
        self.fits = total < 2 ** 62

    def __call__(self, rows: np.ndarray) -> np.ndarray:
        if self.fits:
            return (rows + self.offsets) @ self.weights
        # fall back to byte keys; slower but unbounded
        rows = np.ascontiguousarray(rows)
        return rows.view(np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))).ravel()


def _neighbours(frontier: np.ndarray, gens: np.ndarray, A: StructTensor) -> np.ndarray:
    """All products x.s for x in the frontier and s in the generating set."""
    m = A.m
    V = frontier[:, m:]
    blocks = []
    for s in gens:
        nb = frontier + s
        nz = np.flatnonzero(s[m:])
        if nz.size:
            q = nz[0]
            sigma = s[m + q]
            # [x.v, sigma v_q]_a = sigma A^a_{t_a(q), q} x_{t_a(q)} = -sigma s_a(q) x_{t_a(q)}
            for a in range(m):
                nb[:, a] -= sigma * A.signs[a][q] * V[:, A.targets[a][q]]
        blocks.append(nb)
    return np.concatenate(blocks)


def ball_count(A: StructTensor, radius: int, gen_set: str = "exact",
               max_elements: int = DEFAULT_ELEMENT_CAP, track_index: bool = False) -> GrowthResult:
    """Cumulative ball sizes g(0..radius) of the Cayley graph of L from the identity.

    Stops early, with ``complete = False``, once the ball would exceed
    ``max_elements``.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    gens = generating_set(A, gen_set)
    step = int(np.abs(gens[:, :A.m]).max()) if A.m else 0
    bounds = np.array([radius * radius + step * radius] * A.m + [radius] * A.n, dtype=np.int64)
    encode = _Encoder(np.maximum(bounds, 1))

    current = np.zeros((1, A.m + A.n), dtype=np.int64)
    current_keys = encode(current)
    previous_keys = current_keys[:0]
    counts = [1]
    spheres = [1]
    parity_classes = {(0,) * A.m} if track_index else None
    complete = True
    for r in range(1, radius + 1):
        cand = _neighbours(current, gens, A)
        keys = encode(cand)
        keys, first = np.unique(keys, return_index=True)
        seen = np.concatenate([previous_keys, current_keys])
        fresh = ~np.isin(keys, seen)
        nxt = cand[first[fresh]]
        if counts[-1] + len(nxt) > max_elements:
            log.warning("element cap %d reached at radius %d", max_elements, r)
            complete = False
            break
        if track_index:
            zero_v = nxt[~nxt[:, A.m:].any(axis=1)]
            parity_classes.update(map(tuple, (zero_v[:, :A.m] % 2).tolist()))
        previous_keys, current_keys, current = current_keys, keys[fresh], nxt
        counts.append(counts[-1] + len(nxt))
        spheres.append(len(nxt))
        log.debug("radius %d: sphere %d, ball %d", r, len(nxt), counts[-1])

    index = None
    if track_index:
        index = 2 ** A.m // len(parity_classes)
    return GrowthResult(counts, complete, growth_degree(A.m, A.n), gen_set, len(gens), index, spheres)
