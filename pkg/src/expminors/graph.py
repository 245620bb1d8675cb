"""Immutable simple graphs and the BFS primitives built on them.

Vertices are the integers ``0..n-1``.  Adjacency is stored in CSR form
(``indptr``/``indices`` numpy arrays, neighbour lists sorted ascending), which
keeps the breadth-first searches vectorised.  Vertex sets cross the public API
as ``frozenset`` objects; internally they are turned into boolean masks.

Every BFS here is level-synchronous and scans each frontier in ascending id
order, so the parent recorded for a vertex is its smallest-id neighbour on the
previous level.  Paths, trees and distances are therefore reproducible.
"""
from __future__ import annotations

import io
import os
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, NotConnectedError

VertexSet = frozenset


class _Infinity:
    """Distance between vertex sets that are not connected.

    Compares greater than every integer but refuses arithmetic, so an
    unreachable distance cannot leak silently into a sum.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("expminors.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "indptr", "indices", "edge_count", "_lists")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), *, dedupe: bool = False):
        n = int(n)
        if n < 0:
            raise InputError("vertex count must be non-negative")
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InputError("edges must be pairs")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise InputError("edge endpoint out of range")
        if np.any(arr[:, 0] == arr[:, 1]):
            if not dedupe:
                bad = arr[arr[:, 0] == arr[:, 1]][0]
                raise InputError(f"self-loop at vertex {int(bad[0])}")
            arr = arr[arr[:, 0] != arr[:, 1]]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = lo * max(n, 1) + hi
        uniq = np.unique(keys)
        if uniq.size != keys.size and not dedupe:
            raise InputError("parallel edge in input")
        lo, hi = np.divmod(uniq, max(n, 1))
        self.n = n
        self.edge_count = int(uniq.size)
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        indices = dst.astype(np.int64)
        indptr.flags.writeable = False
        indices.flags.writeable = False
        self.indptr = indptr
        self.indices = indices
        self._lists = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.shape[0] != a.shape[1] or not np.array_equal(a, a.T):
            raise InputError("adjacency matrix must be square and symmetric")
        if np.any(np.diag(a)):
            raise InputError("adjacency matrix has self-loops")
        i, j = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], np.column_stack([i, j]))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        i, j = np.triu_indices(n, 1)
        return cls(n, np.column_stack([i, j]))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def grid(cls, rows: int, cols: int) -> "Graph":
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
        return cls(rows * cols, edges)

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls(10, outer + spokes + inner)

    # -- queries --------------------------------------------------------------

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def adj(self, v: int) -> tuple:
        """Sorted neighbour tuple of ``v``."""
        if self._lists is None:
            ip, ix = self.indptr, self.indices.tolist()
            self._lists = tuple(tuple(ix[ip[u]:ip[u + 1]]) for u in range(self.n))
        return self._lists[v]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        k = np.searchsorted(nb, v)
        return bool(k < nb.size and nb[k] == v)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in ascending order."""
        src = np.repeat(np.arange(self.n), self.degrees())
        keep = src < self.indices
        return list(zip(src[keep].tolist(), self.indices[keep].tolist()))

    def edge_array(self) -> np.ndarray:
        src = np.repeat(np.arange(self.n), self.degrees())
        keep = src < self.indices
        return np.column_stack([src[keep], self.indices[keep]])

    def adjacency_matrix(self, dtype=float):
        a = np.zeros((self.n, self.n), dtype=dtype)
        src = np.repeat(np.arange(self.n), self.degrees())
        a[src, self.indices] = 1
        return a

    def sparse_adjacency(self):
        from scipy.sparse import csr_matrix

        data = np.ones(self.indices.size)
        return csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self):
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- vertex set helpers --------------------------------------------------------

def as_mask(g: Graph, vertices) -> np.ndarray:
    """Boolean membership mask for ``vertices``; range-checked."""
    if isinstance(vertices, np.ndarray) and vertices.dtype == bool:
        if vertices.shape != (g.n,):
            raise InputError("mask has wrong length")
        return vertices
    idx = np.fromiter(vertices, dtype=np.int64) if not isinstance(vertices, np.ndarray) else vertices.astype(np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= g.n):
        raise InputError("vertex id out of range")
    mask = np.zeros(g.n, dtype=bool)
    mask[idx] = True
    return mask


def as_set(mask_or_ids) -> frozenset:
    a = np.asarray(mask_or_ids)
    if a.dtype == bool:
        a = np.flatnonzero(a)
    return frozenset(a.tolist())


def _gather(g: Graph, frontier: np.ndarray):
    """Concatenated neighbour lists of ``frontier`` and the owner of each entry."""
    starts = g.indptr[frontier]
    counts = g.indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    owners = np.repeat(frontier, counts)
    offs = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts) + np.repeat(starts, counts)
    return g.indices[offs], owners


def neighborhood_mask(g: Graph, mask: np.ndarray, within: np.ndarray | None = None) -> np.ndarray:
    """External neighbourhood of ``mask`` as a mask, optionally intersected with ``within``."""
    nbr, _ = _gather(g, np.flatnonzero(mask))
    out = np.zeros(g.n, dtype=bool)
    out[nbr] = True
    out &= ~mask
    if within is not None:
        out &= within
    return out


def bfs(g: Graph, sources: np.ndarray, allowed: np.ndarray | None = None,
        targets: np.ndarray | None = None, max_depth: int | None = None):
    """Multi-source BFS.

    Returns ``(dist, parent)`` arrays; unreached vertices have ``dist == -1``.
    With ``targets`` the search stops after the first level containing a target.
    ``allowed`` restricts the search to an induced subgraph (sources are kept
    even if not allowed).  ``sources`` is a boolean mask or a collection of ids.
    """
    n = g.n
    if not (isinstance(sources, np.ndarray) and sources.dtype == bool and sources.shape == (n,)):
        sources = as_mask(g, sources)
    dist = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    frontier = np.flatnonzero(sources)
    dist[frontier] = 0
    depth = 0
    while frontier.size:
        if targets is not None and targets[frontier].any():
            break
        if max_depth is not None and depth >= max_depth:
            break
        nbr, own = _gather(g, frontier)
        fresh = dist[nbr] < 0
        if allowed is not None:
            fresh &= allowed[nbr]
        nbr, own = nbr[fresh], own[fresh]
        if nbr.size == 0:
            break
        frontier, first = np.unique(nbr, return_index=True)
        depth += 1
        dist[frontier] = depth
        parent[frontier] = own[first]
    return dist, parent


# -- public operations -----------------------------------------------------------

def external_neighborhood(g: Graph, X) -> frozenset:
    return as_set(neighborhood_mask(g, as_mask(g, X)))


def ball(g: Graph, U, z: int) -> frozenset:
    """All vertices within distance ``z`` of the non-empty set ``U``."""
    mask = as_mask(g, U)
    if not mask.any():
        raise InputError("ball needs a non-empty centre set")
    if z < 0:
        raise InputError("radius must be non-negative")
    dist, _ = bfs(g, mask, max_depth=int(z))
    return as_set(dist >= 0)


def distance(g: Graph, X, Y):
    """``min dist(x, y)`` over ``x in X, y in Y``; ``INFINITY`` if unreachable."""
    xm, ym = as_mask(g, X), as_mask(g, Y)
    if not xm.any() or not ym.any():
        raise InputError("distance needs non-empty sets")
    dist, _ = bfs(g, xm, targets=ym)
    d = dist[ym]
    d = d[d >= 0]
    return int(d.min()) if d.size else INFINITY


def _trace(parent: np.ndarray, end: int) -> list[int]:
    path = [end]
    while parent[path[-1]] >= 0:
        path.append(int(parent[path[-1]]))
    path.reverse()
    return path


def shortest_path(g: Graph, source, target, allowed: np.ndarray | None = None) -> list[int]:
    """A shortest path from ``source`` to ``target`` (both vertex sets).

    Ties: the reached target with the smallest id wins, and each vertex's
    parent is its smallest-id neighbour one level closer to ``source``.
    ``allowed`` optionally confines the path's interior and endpoints.
    """
    sm, tm = as_mask(g, source), as_mask(g, target)
    if allowed is not None:
        sm = sm & allowed
        tm = tm & allowed
    if not sm.any() or not tm.any():
        raise InputError("shortest_path needs non-empty sets")
    dist, parent = bfs(g, sm, allowed=allowed, targets=tm)
    hit = np.flatnonzero(tm & (dist >= 0))
    if hit.size == 0:
        raise NotConnectedError("no path between the given sets")
    best = hit[dist[hit] == dist[hit].min()][0]
    return _trace(parent, int(best))


def induced_subgraph(g: Graph, X):
    """``(G[X], ids)`` where new vertex ``i`` is old vertex ``ids[i]``."""
    mask = as_mask(g, X)
    ids = np.flatnonzero(mask)
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[ids] = np.arange(ids.size)
    e = g.edge_array()
    keep = mask[e[:, 0]] & mask[e[:, 1]] if e.size else np.zeros(0, dtype=bool)
    sub = Graph(ids.size, remap[e[keep]] if e.size else [])
    ids.flags.writeable = False
    return sub, ids


def component_labels(g: Graph, allowed: np.ndarray | None = None) -> np.ndarray:
    """Component index per vertex (``-1`` outside ``allowed``), numbered by smallest member."""
    from scipy.sparse.csgraph import connected_components as _cc

    if allowed is None:
        _, labels = _cc(g.sparse_adjacency(), directed=False)
    else:
        sub, ids = induced_subgraph(g, allowed)
        labels = np.full(g.n, -1, dtype=np.int64)
        if ids.size:
            _, sl = _cc(sub.sparse_adjacency(), directed=False)
            labels[ids] = sl
    # renumber by first appearance so labels follow smallest member id
    out = np.full(labels.shape, -1, dtype=np.int64)
    valid = labels >= 0
    _, first, inv = np.unique(labels[valid], return_index=True, return_inverse=True)
    order = np.argsort(np.argsort(first))
    out[valid] = order[inv]
    return out


def connected_components(g: Graph) -> list[frozenset]:
    labels = component_labels(g)
    if g.n == 0:
        return []
    return [as_set(labels == c) for c in range(int(labels.max()) + 1)]


def is_connected(g: Graph, X=None) -> bool:
    mask = np.ones(g.n, dtype=bool) if X is None else as_mask(g, X)
    members = np.flatnonzero(mask)
    if members.size <= 1:
        return True
    start = np.zeros(g.n, dtype=bool)
    start[members[0]] = True
    dist, _ = bfs(g, start, allowed=mask)
    return bool(np.all(dist[members] >= 0))


def spanning_tree(g: Graph) -> list[tuple[int, int]]:
    """BFS tree rooted at 0, edges as sorted pairs in discovery order."""
    if g.n == 0:
        return []
    start = np.zeros(g.n, dtype=bool)
    start[0] = True
    dist, parent = bfs(g, start)
    if np.any(dist < 0):
        raise NotConnectedError("graph is disconnected")
    order = np.lexsort((np.arange(g.n), dist))[1:]
    return [(min(int(parent[v]), int(v)), max(int(parent[v]), int(v))) for v in order]


def eccentricities(g: Graph) -> np.ndarray:
    """Eccentricity of every vertex; ``-1`` entries when disconnected."""
    ecc = np.empty(g.n, dtype=np.int64)
    src = np.zeros(g.n, dtype=bool)
    for v in range(g.n):
        src[v] = True
        dist, _ = bfs(g, src)
        src[v] = False
        ecc[v] = -1 if np.any(dist < 0) else int(dist.max())
    return ecc


def diameter(g: Graph):
    if g.n == 0:
        return 0
    ecc = eccentricities(g)
    return INFINITY if np.any(ecc < 0) else int(ecc.max())


# -- edge-list text format -------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; loops/duplicates are errors."""
    tokens = text.split()
    if len(tokens) < 2:
        raise InputError("edge list needs a header line 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputError(f"non-integer token in edge list: {exc}") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 2 * m:
        raise InputError(f"header announces {m} edges, found {len(body) / 2:g}")
    return Graph(n, np.asarray(body, dtype=np.int64).reshape(m, 2))


def format_edge_list(g: Graph) -> str:
    buf = io.StringIO()
    buf.write(f"{g.n} {g.edge_count}\n")
    for u, v in g.edges():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))
