"""Counting argument against universality, and an exact minor oracle for tiny graphs.

The bounds are evaluated in log-space from their closed forms, so nothing
overflows and only the sign of the separation matters.  ``is_minor_exact``
is an exponential search meant for hosts of at most 16 vertices.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import InputError, TooLargeError
from .graph import Graph

MAX_PATTERN = 8
MAX_HOST = 16


def universality_threshold(n: int, d: float) -> int:
    """``floor(6 n ln(d+2) / ln n)`` rounded down to an even number."""
    if n < 3:
        raise InputError("need n >= 3")
    if not d > 0:
        raise InputError("need d > 0")
    m = math.floor(6 * n * math.log(d + 2) / math.log(n))
    return m - m % 2


def trivial_regime(n: int, d: float) -> bool:
    """True when ``d + 2 > n**(1/6)``: then ``m > n`` and the statement is void."""
    return (d + 2) ** 6 > n


@dataclass(frozen=True)
class CountingReport:
    n: int
    d: float
    m: int
    log_minor_upper: float
    log_graph_lower: float
    separation: float
    trivial: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def log_minor_upper(n: int, d: float, m: int) -> float:
    """Log of the bound on minors with ``m/2`` vertices and ``m`` edges.

    ``(d+2)^n`` spanning forests, ``(2en/m)^(m/2)`` choices of the vertices
    kept as branch-set roots and ``(2(d+2)n/m)^m`` choices of edges.
    """
    return (n * math.log(d + 2) + (m / 2) * math.log(2 * math.e * n / m)
            + m * math.log(2 * (d + 2) * n / m))


def log_graph_lower(m: int) -> float:
    """Log of ``(m/256)^(m/2)``, a lower bound on graphs with ``m/2`` vertices and ``m`` edges."""
    return (m / 2) * math.log(m / 256)


def count_bounds(n: int, d: float, m: int) -> CountingReport:
    if m < 2 or m % 2:
        raise InputError("m must be even and at least 2")
    if n < 2:
        raise InputError("need n >= 2")
    up = log_minor_upper(n, d, m)
    low = log_graph_lower(m)
    return CountingReport(n=int(n), d=d, m=int(m), log_minor_upper=up, log_graph_lower=low,
                          separation=low - up, trivial=m > n)


def separation_crossover(d: float, lo: float = 1e3, hi: float = 1e30) -> float:
    """Smallest ``n`` (to about 0.1%) with positive separation, by bisection in ``log n``.

    Uses ``m = universality_threshold(n, d)``; returns ``inf`` if none below ``hi``.
    """
    def sep(n):
        n = int(n)
        return count_bounds(n, d, universality_threshold(n, d)).separation

    if sep(hi) <= 0:
        return math.inf
    a, b = math.log(lo), math.log(hi)
    while b - a > 1e-3:
        mid = (a + b) / 2
        if sep(math.exp(mid)) > 0:
            b = mid
        else:
            a = mid
    return math.exp(b)


# -- exact minor containment ----------------------------------------------------------------

def _check_caps(g: Graph, h: Graph, max_host: int, max_pattern: int) -> None:
    if h.n > max_pattern:
        raise TooLargeError(f"pattern has {h.n} > {max_pattern} vertices")
    if g.n > max_host:
        raise TooLargeError(f"host has {g.n} > {max_host} vertices")


def _subset_tables(g: Graph):
    """Connectivity flag, external neighbourhood, size and non-cut vertices of every subset of ``g``."""
    n = g.n
    size = 1 << n
    nbr = np.zeros(n, dtype=np.int64)
    for u, v in g.edges():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    masks = np.arange(size, dtype=np.int64)
    closed = np.zeros(size, dtype=np.int64)
    for v in range(n):
        has = (masks >> v) & 1 == 1
        closed[has] |= nbr[v]
    ext = closed & ~masks
    pop = np.bitwise_count(masks.astype(np.uint64)).astype(np.int64)
    conn = np.zeros(size, dtype=bool)
    for v in range(n):
        conn[1 << v] = True
    for k in range(2, n + 1):
        layer = masks[pop == k]
        ok = np.zeros(layer.size, dtype=bool)
        for v in range(n):
            bit = 1 << v
            has = (layer & bit) != 0
            prev = layer[has] ^ bit
            ok[has] |= conn[prev] & ((nbr[v] & prev) != 0)
        conn[layer] = ok
    noncut = np.zeros(size, dtype=np.int64)
    for v in range(n):
        bit = 1 << v
        has = (masks & bit) != 0
        noncut[has] |= np.where(conn[masks[has] ^ bit], bit, 0)
    return conn, ext, pop, nbr, noncut


def _pattern_order(h: Graph) -> list[int]:
    """Highest degree first, then greedily the vertex with most already-ordered neighbours."""
    left = set(range(h.n))
    order = []
    while left:
        done = set(order)
        best = max(left, key=lambda v: (sum(w in done for w in h.adj(v)), h.degree(v), -v))
        order.append(best)
        left.remove(best)
    return order


def _twin_pred(h: Graph) -> dict:
    """For interchangeable pattern vertices, map each to the previous member of its class."""
    pred = {}
    seen = {}
    for v in range(h.n):
        key = (frozenset(h.adj(v)) | {v}, frozenset(h.adj(v)))
        for form in key:
            group = seen.setdefault(form, [])
            if group and v not in pred:
                pred[v] = group[-1]
            group.append(v)
    return pred


def find_minor_model(g: Graph, h: Graph, *, max_host: int = MAX_HOST, max_pattern: int = MAX_PATTERN):
    """Branch sets ``{h: frozenset}`` realising ``h`` as a minor of ``g``, or ``None``.

    Backtracks over connected vertex subsets of ``g``.  A branch set is kept
    only if it avoids the used vertices, touches the branch sets of all placed
    neighbours, and every placed set still has at least as many free
    neighbours as it has unplaced pattern neighbours.  Interchangeable pattern
    vertices (twins) get branch sets with increasing minimum vertex.  Only
    vertex-minimal models are searched: every non-cut vertex of a branch set
    must have a neighbour that is free or in the set of a pattern neighbour.
    """
    _check_caps(g, h, max_host, max_pattern)
    if h.n == 0:
        return {}
    if h.n > g.n or h.edge_count > g.edge_count:
        return None
    conn, ext, pop, nbr, noncut = _subset_tables(g)
    ext = ext.astype(np.uint64)
    cand = np.flatnonzero(conn)
    cand = cand[np.argsort(pop[cand], kind="stable")]
    cand_ext = ext[cand]
    cand_pop = pop[cand]
    cand_leaf = np.where(cand_pop > 1, noncut[cand], 0).astype(np.uint64)
    cand_low = np.array([int(c & -c).bit_length() - 1 for c in cand.tolist()], dtype=np.int64)
    cand = cand.astype(np.uint64)
    order = _pattern_order(h)
    pos = {v: i for i, v in enumerate(order)}
    adj = [set(h.adj(v)) for v in range(h.n)]
    pred = _twin_pred(h)
    full = (1 << g.n) - 1
    chosen = {}
    # later[v][i]: pattern neighbours of v that come after position i
    later = [[sum(1 for w in adj[v] if pos[w] > i) for i in range(h.n)] for v in range(h.n)]

    def count(x):
        return np.bitwise_count(x)

    def extend(i, used, idx):
        if i == len(order):
            return True
        v = order[i]
        free = np.uint64(full & ~used)
        rest = len(order) - i - 1
        c, ce = cand[idx], cand_ext[idx]
        ok = cand_pop[idx] <= g.n - used.bit_count() - rest
        if rest:
            ok &= count(free & ~c) >= rest
        need = later[v][i]
        if need:
            ok &= count(ce & free & ~c) >= need
        useful = int(free) if need else 0
        for w in adj[v]:
            if w in chosen:
                ok &= (ce & np.uint64(chosen[w])) != 0
                useful |= chosen[w]
        for w, W in chosen.items():
            need_w = later[w][i]
            if need_w:
                ok &= count(ext[W] & free & ~c) >= need_w
        if v in pred and pred[v] in chosen:
            W = chosen[pred[v]]
            ok &= cand_low[idx] > (int(W & -W).bit_length() - 1)
        # a non-cut vertex touching nothing useful could be dropped from the set
        dead = np.uint64(sum(1 << b for b in range(g.n) if not int(nbr[b]) & useful))
        if dead:
            ok &= (cand_leaf[idx] & dead) == 0
        for j in idx[ok].tolist():
            W = int(cand[j])
            chosen[v] = W
            nxt = idx[(c & np.uint64(W)) == 0]
            if extend(i + 1, used | W, nxt):
                return True
            del chosen[v]
        return False

    if not extend(0, 0, np.arange(cand.size)):
        return None
    return {v: frozenset(b for b in range(g.n) if W >> b & 1) for v, W in chosen.items()}


def is_minor_exact(g: Graph, h: Graph, *, max_host: int = MAX_HOST, max_pattern: int = MAX_PATTERN) -> bool:
    """Exact test whether ``h`` is a minor of ``g`` (tiny graphs only)."""
    return find_minor_model(g, h, max_host=max_host, max_pattern=max_pattern) is not None


# -- graphs up to isomorphism -----------------------------------------------------------------

def _pair_index(k: int) -> np.ndarray:
    idx = np.full((k, k), -1, dtype=np.int64)
    for i, (a, b) in enumerate(itertools.combinations(range(k), 2)):
        idx[a, b] = idx[b, a] = i
    return idx


class _Canon:
    """Canonical form: the smallest adjacency bit string over all vertex relabellings."""

    def __init__(self, k: int):
        self.k = k
        self.pairs = list(itertools.combinations(range(k), 2))
        P = len(self.pairs)
        idx = _pair_index(k)
        perms = np.array(list(itertools.permutations(range(k))), dtype=np.int64).reshape(-1, k)
        a = np.array([p[0] for p in self.pairs], dtype=np.int64)
        b = np.array([p[1] for p in self.pairs], dtype=np.int64)
        # image position of every pair under every permutation
        self.image = idx[perms[:, a], perms[:, b]] if P else np.zeros((len(perms), 0), dtype=np.int64)
        self.weight = (np.uint64(1) << (np.uint64(P - 1) - np.arange(P, dtype=np.uint64))) if P else None

    def code(self, chosen) -> int:
        if not self.pairs:
            return 0
        cols = self.image[:, list(chosen)]
        return int(self.weight[cols].sum(axis=1).min())

    def graph(self, code: int) -> Graph:
        P = len(self.pairs)
        return Graph(self.k, [self.pairs[i] for i in range(P) if code >> (P - 1 - i) & 1])


def iter_graph_classes(k: int, e: int, *, max_labelled: int = 5_000_000):
    """Yield one graph per isomorphism class with ``k`` vertices and ``e`` edges.

    Edge sets are scanned in lexicographic order; each class is yielded (as its
    canonical representative) when first met.
    """
    if k > MAX_PATTERN:
        raise TooLargeError(f"{k} > {MAX_PATTERN} vertices")
    P = k * (k - 1) // 2
    if not 0 <= e <= P:
        return
    if math.comb(P, e) > max_labelled:
        raise TooLargeError(f"{math.comb(P, e)} labelled graphs exceed the enumeration budget")
    canon = _Canon(k)
    seen = set()
    for chosen in itertools.combinations(range(P), e):
        c = canon.code(chosen)
        if c not in seen:
            seen.add(c)
            yield canon.graph(c)


def graph_classes(k: int, e: int) -> list[Graph]:
    return list(iter_graph_classes(k, e))


def find_non_minor(g: Graph, k_vertices: int, k_edges: int, *, max_host: int = MAX_HOST) -> Graph | None:
    """First graph (in enumeration order) with the given size that is not a minor of ``g``."""
    if g.n > max_host:
        raise TooLargeError(f"host has {g.n} > {max_host} vertices")
    for h in iter_graph_classes(k_vertices, k_edges):
        if not is_minor_exact(g, h, max_host=max_host):
            return h
    return None
