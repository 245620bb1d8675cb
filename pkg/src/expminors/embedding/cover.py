"""Small connected sets hitting many large vertex sets (randomised)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import InputError, RandomnessFailure
from ..generators import rng_for
from ..graph import Graph, as_mask, bfs, is_connected


@dataclass(frozen=True)
class CoverConnector:
    T: frozenset
    P: frozenset
    size_bound: float
    p: float
    attempts: int

    @property
    def within_bound(self) -> bool:
        return len(self.T) <= self.size_bound


def cover_size_bound(n: int, s: int, q: int, alpha: float, t: float) -> float:
    """``(25/alpha^2) (n/s) ln(qs/n) (ln n / ln t)``."""
    return 25 / alpha ** 2 * (n / s) * math.log(q * s / n) * math.log(n) / math.log(t)


def efficient_cover(g: Graph, sets, alpha: float, t: float, seed: int, *, retries: int = 64,
                    s_min: int = 1, sample_constant: float = 4.0,
                    check_preconditions: bool = True) -> CoverConnector:
    """Connected ``T`` meeting every set in ``sets``.

    Samples ``P`` with per-vertex probability
    ``p = sample_constant * ln(qs/n) / (alpha s)`` (``s`` the smallest set size)
    until ``|P| <= 2np`` and the shortest paths from the sets to ``P`` add at
    most ``2n/s`` further vertices; ``T`` is ``P`` plus those paths plus a BFS
    tree from ``min(P)`` to the rest of ``P``.  Each retry draws from its own
    sub-stream of ``seed``.
    """
    n = g.n
    masks = [as_mask(g, U) for U in sets]
    q = len(masks)
    if q == 0:
        raise InputError("need at least one set")
    s = min(int(m.sum()) for m in masks)
    if s == 0:
        raise InputError("sets must be non-empty")
    if check_preconditions:
        if t < 2:
            raise InputError("need t >= 2")
        if not 1 <= q < n:
            raise InputError("need 1 <= q < n")
        if s < s_min:
            raise InputError(f"smallest set has {s} < s_min = {s_min} vertices")
        if s > n / math.log(n):
            raise InputError("need s <= n / ln n")
        if q * s < 2 * n:
            raise InputError("need q*s >= 2n")
        if not is_connected(g):
            raise InputError("host must be connected")
    p = min(1.0, sample_constant * math.log(q * s / n) / (alpha * s)) if q * s > n else 1.0
    bound = cover_size_bound(n, s, q, alpha, t) if q * s > n and t > 1 else math.inf
    union = np.zeros(n, dtype=bool)
    for m in masks:
        union |= m
    for attempt in range(retries):
        if p >= 1:
            P = np.ones(n, dtype=bool)
        else:
            P = rng_for(seed, 3, attempt).random(n) < p
        if not P.any() or P.sum() > 2 * n * p:
            continue
        dist, parent = bfs(g, P)
        Tp = P.copy()
        ok = True
        for m in masks:
            hit = np.flatnonzero(m & (dist >= 0))
            if hit.size == 0:
                ok = False
                break
            u = int(hit[np.argmin(dist[hit])])
            while not Tp[u]:
                Tp[u] = True
                u = int(parent[u])
        if not ok or (Tp & ~P).sum() > 2 * n / s:
            continue
        root = np.zeros(n, dtype=bool)
        root[int(np.flatnonzero(P)[0])] = True
        rdist, rparent = bfs(g, root)
        if np.any(rdist[P] < 0):
            continue
        tree = root.copy()
        for w in np.flatnonzero(P).tolist():
            u = w
            while not tree[u]:
                tree[u] = True
                u = int(rparent[u])
        T = Tp | tree
        return CoverConnector(frozenset(np.flatnonzero(T).tolist()), frozenset(np.flatnonzero(P).tolist()),
                              bound, p, attempt + 1)
    raise RandomnessFailure(f"no admissible sample in {retries} attempts (p = {p:.4g})")
