"""The ``(D, {W_h}, U)`` partition shared by both embedding engines."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..errors import InvariantViolation
from ..graph import Graph, is_connected, neighborhood_mask


@dataclass
class PartitionState:
    """Mutable engine state over the robust subgraph ``gamma``.

    ``D`` and ``U`` are boolean masks over ``gamma``'s vertices; ``placed`` maps
    a pattern vertex to the integer array of its branch set.
    """

    gamma: Graph
    n: int                 # host size, used in the logarithmic bounds
    alpha: float
    beta: float
    d: float
    D: np.ndarray = None
    U: np.ndarray = None
    placed: dict = field(default_factory=dict)
    repairs: list = field(default_factory=list)

    def __post_init__(self):
        N = self.gamma.n
        if self.D is None:
            self.D = np.zeros(N, dtype=bool)
        if self.U is None:
            self.U = np.ones(N, dtype=bool)

    @property
    def N(self) -> int:
        return self.gamma.n

    @property
    def d_cap(self) -> float:
        """Largest permitted ``|D|``: ``alpha*N/(32d)``."""
        return self.alpha * self.N / (32 * self.d)

    def free_neighbors(self, members: np.ndarray) -> np.ndarray:
        m = np.zeros(self.N, dtype=bool)
        m[members] = True
        return np.flatnonzero(neighborhood_mask(self.gamma, m, within=self.U))

    def absorb(self, members, reason: str) -> None:
        """Move ``members`` into ``D`` (out of ``U``)."""
        members = np.asarray(members, dtype=np.int64)
        self.D[members] = True
        self.U[members] = False
        self.repairs.append((reason, int(members.size)))

    def d_within_cap(self) -> bool:
        return int(self.D.sum()) <= self.d_cap

    def summary(self) -> dict:
        return {"N": self.N, "D": int(self.D.sum()), "U": int(self.U.sum()),
                "placed": len(self.placed), "repairs": list(self.repairs),
                "d_cap": self.d_cap}


def p1_bound(n: int, beta: float, d: float) -> float:
    """Branch-set size limit ``24 ln n / (beta ln d)``."""
    return 24 * math.log(n) / (beta * math.log(d)) if d > 1 else math.inf


def audit_partition(state: PartitionState, pattern: Graph | None = None, *,
                    exact_size: int | None = None) -> None:
    """Raise :class:`InvariantViolation` unless properties P1-P3 hold.

    With ``pattern`` the realised edges are those of the pattern restricted to
    placed vertices; without it every pair of placed sets must touch (the
    complete-minor engine).  ``exact_size`` replaces the P1 upper bound by an
    exact size requirement.
    """
    g = state.gamma
    cover = state.D.astype(np.int64) + state.U.astype(np.int64)
    owner = np.full(g.n, -1, dtype=np.int64)
    for h, W in state.placed.items():
        cover[W] += 1
        owner[W] = h
    if np.any(cover != 1):
        raise InvariantViolation("D, W_h and U do not partition the vertex set",
                                 {"bad": np.flatnonzero(cover != 1)[:10].tolist()})
    bound = p1_bound(state.n, state.beta, state.d)
    for h, W in state.placed.items():
        if exact_size is not None and W.size != exact_size:
            raise InvariantViolation("P1: branch set has wrong size", {"h": h, "size": int(W.size)})
        if exact_size is None and W.size > bound:
            raise InvariantViolation("P1: branch set too large", {"h": h, "size": int(W.size), "bound": bound})
        if not is_connected(g, W):
            raise InvariantViolation("P1: branch set disconnected", {"h": h})
    keys = sorted(state.placed)
    if pattern is not None:
        pairs = [(a, b) for a, b in pattern.edges() if a in state.placed and b in state.placed]
    else:
        pairs = [(a, b) for i, a in enumerate(keys) for b in keys[i + 1:]]
    for a, b in pairs:
        nb = g.indices[np.concatenate([np.arange(g.indptr[v], g.indptr[v + 1]) for v in state.placed[a]])]
        if not np.any(owner[nb] == b):
            raise InvariantViolation("P2: pattern edge not realised", {"edge": [a, b]})
    size_d = int(state.D.sum())
    if size_d > state.d_cap:
        raise InvariantViolation("P3: |D| above alpha*N/(32d)", {"D": size_d, "cap": state.d_cap})
    if size_d:
        boundary = int(neighborhood_mask(g, state.D, within=state.U).sum())
        if not boundary < state.d * size_d / 2:
            raise InvariantViolation("P3: D has too many free neighbours", {"D": size_d, "N(D)&U": boundary})
