"""Embedding arbitrary small graphs as minors of an expander."""
from __future__ import annotations

import math
from collections import deque

import numpy as np

from ..errors import EmbeddingFailed, InputError, InvariantViolation, NotConnectedError, PatternTooLarge
from ..expansion import default_finder, robust_partition, violates
from ..generators import degree3_reduce
from ..graph import Graph, component_labels, induced_subgraph, shortest_path
from .model import MinorModel, contract_model, verify_minor
from .state import PartitionState, p1_bound


def universality_capacity(n: int, alpha: float, t: float) -> int:
    """Largest ``m`` with ``3m * 24 ln n / ln(t/4) < alpha^2 n / 512`` (0 if none)."""
    d = t / 4
    if d <= 1 or n < 2:
        return 0
    x = (alpha ** 2 * n / 512) * math.log(d) / (72 * math.log(n))
    return max(0, math.ceil(x) - 1)


def empirical_capacity(n: int, t: float, xi: float) -> int:
    """``floor(xi * n ln t / ln n)``: the capacity law with an explicit constant."""
    return math.floor(xi * n * math.log(t) / math.log(n))


def bfs_order(h: Graph) -> list[int]:
    """Vertices of ``h`` in BFS order, components taken by smallest root."""
    seen = [False] * h.n
    order = []
    for root in range(h.n):
        if seen[root]:
            continue
        seen[root] = True
        todo = deque([root])
        while todo:
            u = todo.popleft()
            order.append(u)
            for w in h.adj(u):
                if not seen[w]:
                    seen[w] = True
                    todo.append(w)
    return order


def embed_universal(g: Graph, alpha: float, t: float, h: Graph, *, max_size: int | None = None,
                    finder=None, robust=None, check_hypothesis: bool = False,
                    audit=None) -> MinorModel:
    """Find ``h`` as a minor of the ``(alpha, t)``-expander ``g``.

    ``h`` is first split into a max-degree-3 graph ``h'``; the host is reduced
    to its robust subgraph ``gamma``; then the vertices of ``h'`` are placed
    greedily in BFS order.  A vertex with placed neighbours ``h_1..h_j`` gets
    the union of shortest paths in ``gamma[U]`` joining the smallest free
    neighbours of ``W_{h_1}..W_{h_j}``.

    Whenever a placement is blocked the offending set moves into ``D``: a
    branch set with fewer than ``d|W|/2`` free neighbours (and its pattern
    vertex is re-queued), a component of ``gamma[U]`` cut off from the path's
    other end, or a poorly expanding set of ``gamma[U]`` found by ``finder``
    when a path exceeds the branch-set bound.  ``D`` may hold at most
    ``alpha*N/(32d)`` vertices; beyond that :class:`EmbeddingFailed` is raised.

    ``max_size`` defaults to :func:`universality_capacity`; patterns with more
    vertices or edges raise :class:`PatternTooLarge`.  ``audit`` is called with
    the :class:`PartitionState` after every step.
    """
    if h.n == 0:
        return MinorModel(g, h, {})
    m = universality_capacity(g.n, alpha, t) if max_size is None else int(max_size)
    if h.n > 1 and (h.n > m or h.edge_count > m):
        raise PatternTooLarge(f"pattern has {h.n} vertices / {h.edge_count} edges; capacity m = {m}")
    d = t / 4
    if d <= 1:
        raise InputError("t must exceed 4 (the engine works with d = t/4)")
    finder = finder or default_finder()
    if robust is None:
        robust = robust_partition(g, alpha, t, finder, check_hypothesis=check_hypothesis)
    gamma, ids = robust.subgraph(g)
    hp, prov = degree3_reduce(h)
    state = PartitionState(gamma, g.n, alpha, robust.beta, d)
    bound = p1_bound(g.n, robust.beta, d)
    order = bfs_order(hp)
    rank = {v: i for i, v in enumerate(order)}
    placed = state.placed

    def fail(msg):
        raise EmbeddingFailed(msg, state.summary())

    def absorb(members, reason):
        state.absorb(members, reason)
        if not state.d_within_cap():
            fail(f"|D| exceeded alpha*N/(32d) after {reason}")

    steps = 0
    while len(placed) < hp.n:
        steps += 1
        x = next(v for v in order if v not in placed)
        anchors = sorted((w for w in hp.adj(x) if w in placed), key=rank.__getitem__)
        if not state.U.any():
            fail("free set U exhausted")
        if not anchors:
            v = int(np.flatnonzero(state.U)[0])
            W = np.array([v])
        else:
            ends = []
            starved = None
            for a in anchors:
                free = state.free_neighbors(placed[a])
                if free.size < d * placed[a].size / 2:
                    starved = a
                    break
                ends.append(int(free[0]))
            if starved is not None:
                absorb(placed.pop(starved), "branch set starved of free neighbours")
                _audit(audit, state, hp)
                continue
            W = _connect(gamma, state, ends)
            if isinstance(W, tuple):
                cut_off = W[1]
                absorb(cut_off, "gamma[U] disconnected")
                _audit(audit, state, hp)
                continue
            if W.size > bound:
                sub, sub_ids = induced_subgraph(gamma, state.U)
                X = finder(sub, robust.beta / 2, d / 2)
                if not X or not violates(sub, X, robust.beta / 2, d / 2):
                    fail(f"path of {W.size} vertices exceeds bound {bound:.1f} and no expansion violation found")
                absorb(sub_ids[sorted(X)], "gamma[U] expansion violation")
                _audit(audit, state, hp)
                continue
        state.U[W] = False
        placed[x] = W
        _audit(audit, state, hp)

    reduced = MinorModel(g, hp, {x: ids[W].tolist() for x, W in placed.items()})
    model = contract_model(reduced, h, prov)
    verdict = verify_minor(model)
    if not verdict:
        raise InvariantViolation("constructed model failed verification", {"verdict": verdict.describe()})
    model.info.update({
        "engine": "universal", "robust_size": gamma.n, "beta": robust.beta, "d": d,
        "p1_bound": bound, "capacity": m, "reduced_n": hp.n,
        "max_reduced_branch": max((W.size for W in placed.values()), default=0),
        "steps": steps, **{k: v for k, v in state.summary().items() if k in ("D", "repairs")},
    })
    return model


def _audit(audit, state, pattern):
    if audit is not None:
        audit(state, pattern)


def _connect(gamma, state, ends):
    """Union of shortest paths in ``gamma[U]`` through ``ends`` in sequence.

    Returns an index array, or ``("cut", members)`` naming the component of
    ``gamma[U]`` to discard when two ends are not connected.
    """
    parts = [np.array([ends[0]])]
    for a, b in zip(ends, ends[1:]):
        try:
            parts.append(np.asarray(shortest_path(gamma, [a], [b], allowed=state.U)))
        except NotConnectedError:
            labels = component_labels(gamma, state.U)
            la, lb = labels[a], labels[b]
            sa, sb = int(np.sum(labels == la)), int(np.sum(labels == lb))
            drop = la if (sa, a) < (sb, b) else lb
            return ("cut", np.flatnonzero(labels == drop))
    return np.unique(np.concatenate(parts))
