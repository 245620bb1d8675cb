"""Large complete minors from repeated cover-connector calls."""
from __future__ import annotations

import math
import warnings

import numpy as np

from ..errors import EmbeddingFailed, InputError, InvariantViolation, RandomnessFailure
from ..expansion import default_finder, robust_partition
from ..graph import Graph, bfs, component_labels, induced_subgraph
from .cover import efficient_cover
from .model import MinorModel, verify_minor
from .state import PartitionState


def complete_branch_size(N: int, d: float, K: float) -> int:
    """Branch-set size ``ceil(sqrt(2 K N ln N / d))``."""
    return max(1, math.ceil(math.sqrt(2 * K * N * math.log(N) / d)))


def complete_target(N: int, alpha: float, ell: int, denominator: float = 64) -> int:
    """Number of branch sets the construction aims for: ``floor(alpha N / (64 ell))``."""
    return math.floor(alpha * N / (denominator * ell))


def complete_pattern(k: int) -> Graph:
    return Graph.complete(k)


def embed_complete(g: Graph, alpha: float, t: float, *, seed: int = 0, K: float | None = None,
                   sample_constant: float = 4.0, target="guaranteed", target_denominator: float = 64, finder=None, robust=None,
                   check_hypothesis: bool = False, cover_retries: int = 64, trim: bool = True, audit=None):
    """Build a ``K_k`` minor of the ``(alpha, t)``-expander ``g``.

    Works inside the robust subgraph ``gamma`` (``N`` vertices, parameters
    ``beta`` and ``d = t/4``).  Every branch set has exactly
    ``ell = ceil(sqrt(2 K N ln N / d))`` vertices, ``K`` defaulting to
    ``25/alpha^2``.  Given ``W_1..W_k`` the next one is a cover connector, run
    in ``gamma[U]`` with parameters ``(beta/2, d/2)``, of the free
    neighbourhoods ``N(W_i) & U`` (each needs ``s = ceil(d*ell/2)`` vertices),
    padded with copies of the ``s`` smallest free vertices, then grown by BFS to
    ``ell`` vertices.

    ``target`` is ``"guaranteed"`` (``floor(alpha N/(64 ell))``, the 64 being
    ``target_denominator``), an integer, or
    ``None`` to continue until the construction runs out of room.  With a
    finite target any shortfall raises :class:`EmbeddingFailed`; with ``None``
    the engine stops at the first blocked step and returns what it has.

    With ``trim`` the connector is first thinned: tree leaves whose removal
    leaves every set hit are dropped, repeatedly.

    Returns ``(k, model)``.
    """
    if t < 16:
        # the connector runs at expansion d/2 = t/8 and needs that to be at least 2
        raise InputError("t must be at least 16 (the connector works at t/8 >= 2)")
    if t > math.sqrt(g.n):
        warnings.warn("t exceeds sqrt(n); the size guarantee is only stated for t <= sqrt(n)", stacklevel=2)
    finder = finder or default_finder()
    if robust is None:
        robust = robust_partition(g, alpha, t, finder, check_hypothesis=check_hypothesis)
    gamma, ids = robust.subgraph(g)
    N = gamma.n
    d = t / 4
    K = 25 / alpha ** 2 if K is None else K
    ell = complete_branch_size(N, d, K)
    s = math.ceil(d * ell / 2)
    if target == "guaranteed":
        goal = complete_target(N, alpha, ell, target_denominator)
    elif target is None:
        goal = None
    else:
        goal = int(target)
    state = PartitionState(gamma, g.n, alpha, robust.beta, d)
    branch = []
    stop = None

    def blocked(reason):
        nonlocal stop
        if goal is not None:
            raise EmbeddingFailed(reason, {**state.summary(), "k": len(branch), "target": goal, "ell": ell})
        stop = reason

    def sync():
        state.placed = dict(enumerate(branch))
        if audit is not None:
            audit(state, None)

    while stop is None and (goal is None or len(branch) < goal):
        free_sets = []
        starved = None
        for i, W in enumerate(branch):
            free = state.free_neighbors(W)
            if free.size < s:
                starved = i
                break
            free_sets.append(free)
        if starved is not None:
            if state.D.sum() + branch[starved].size > state.d_cap:
                blocked("starved branch set would overflow D")
                break
            state.absorb(branch.pop(starved), "branch set starved of free neighbours")
            sync()
            continue
        labels = component_labels(gamma, state.U)
        if labels.max() > 0:
            sizes = np.bincount(labels[labels >= 0])
            keep = int(np.argmax(sizes))
            extra = (labels >= 0) & (labels != keep)
            if state.D.sum() + extra.sum() > state.d_cap:
                blocked("gamma[U] disconnected beyond the D budget")
                break
            state.absorb(np.flatnonzero(extra), "gamma[U] disconnected")
            sync()
            continue
        size_u = int(state.U.sum())
        if size_u < max(ell, 2):
            blocked("free set smaller than one branch set")
            break
        if s > size_u / math.log(size_u):
            blocked("cover precondition s <= |U|/ln|U| fails")
            break
        sub, sub_ids = induced_subgraph(gamma, state.U)
        local = np.full(N, -1, dtype=np.int64)
        local[sub_ids] = np.arange(sub.n)
        want = max(goal or 0, len(branch) + 1, math.ceil(2 * size_u / s) + 1)
        if want >= size_u:
            blocked("too many sets for the cover")
            break
        pad = np.arange(s)
        sets = [local[f] for f in free_sets] + [pad] * (want - len(free_sets))
        try:
            cover = efficient_cover(sub, sets, robust.beta / 2, d / 2, seed=_substream(seed, len(branch), len(state.repairs)),
                                    retries=cover_retries, sample_constant=sample_constant)
        except (RandomnessFailure, InputError) as exc:
            blocked(f"cover failed: {exc}")
            break
        T = np.zeros(sub.n, dtype=bool)
        T[sorted(cover.T)] = True
        if trim:
            T = _trim(sub, T, sets)
        if T.sum() > ell:
            blocked(f"cover of {int(T.sum())} vertices exceeds branch size {ell}")
            break
        T = _grow_to(sub, T, ell)
        W = sub_ids[np.flatnonzero(T)]
        state.U[W] = False
        branch.append(W)
        sync()

    k = len(branch)
    model = MinorModel(g, complete_pattern(k), {i: ids[W].tolist() for i, W in enumerate(branch)})
    verdict = verify_minor(model)
    if not verdict:
        raise InvariantViolation("constructed model failed verification", {"verdict": verdict.describe()})
    model.info.update({"engine": "complete", "k": k, "ell": ell, "s": s, "K": K, "target": goal,
                       "robust_size": N, "beta": robust.beta, "d": d, "stop": stop,
                       "D": int(state.D.sum()), "repairs": list(state.repairs)})
    return k, model


def _substream(seed, k, repairs):
    return (int(seed) * 1_000_003 + k * 1009 + repairs) % (2 ** 63)


def _trim(g: Graph, T: np.ndarray, sets) -> np.ndarray:
    """Drop leaves of a BFS tree of ``g[T]`` while every set in ``sets`` stays hit."""
    members = np.flatnonzero(T)
    root = int(members[0])
    _, parent = bfs(g, [root], allowed=T)
    hits = np.zeros((len(sets), g.n), dtype=bool)
    for i, S in enumerate(sets):
        hits[i, S] = True
    count = hits[:, T].sum(axis=1)
    kids = np.bincount(parent[members[members != root]], minlength=g.n)
    T = T.copy()
    todo = sorted((int(v) for v in members if v != root and kids[v] == 0), reverse=True)
    while todo:
        v = todo.pop()
        mine = hits[:, v]
        if np.any(count[mine] < 2):
            continue
        count[mine] -= 1
        T[v] = False
        p = int(parent[v])
        kids[p] -= 1
        if kids[p] == 0 and p != root:
            todo.append(p)
            todo.sort(reverse=True)
    return T


def _grow_to(g: Graph, T: np.ndarray, size: int) -> np.ndarray:
    """Extend the connected set ``T`` by BFS layers (ascending ids) to ``size`` vertices."""
    T = T.copy()
    need = size - int(T.sum())
    if need <= 0:
        return T
    dist, _ = bfs(g, T)
    extra = np.flatnonzero(dist > 0)
    order = extra[np.lexsort((extra, dist[extra]))]
    T[order[:need]] = True
    return T
