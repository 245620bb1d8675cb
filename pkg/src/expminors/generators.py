"""Random expander families and the max-degree-3 reduction gadget.

All randomness comes from numpy's ``PCG64`` bit generator seeded with the
caller's integer seed, so every generator is a pure function of its
parameters and seed.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import GenerationError, InputError
from .graph import Graph

FAMILIES = ("random-regular", "d-out", "gnp", "explicit")
EXPLICIT_NAMES = ("complete", "cycle", "path", "petersen", "grid")


def rng_for(seed, *stream) -> np.random.Generator:
    """PCG64 generator for ``seed``, optionally split into a named sub-stream."""
    if seed is None:
        raise InputError("an explicit seed is required")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed) & (2**64 - 1), *stream])))


def gen_random_regular(n: int, d: int, seed: int, *, attempts: int = 100) -> Graph:
    """Random simple ``d``-regular graph from the configuration model.

    Stubs are shuffled and paired; pairs forming loops or repeated edges are
    rejected and only their stubs are reshuffled.  An attempt that gets stuck
    is abandoned and restarted, at most ``attempts`` times.
    """
    n, d = int(n), int(d)
    if (n * d) % 2:
        raise InputError("n*d must be even")
    if not 0 <= d < n:
        raise InputError("need 0 <= d < n")
    rng = rng_for(seed, 0)
    for _ in range(attempts):
        edges = _try_regular(n, d, rng)
        if edges is not None:
            return Graph(n, edges)
    raise GenerationError(f"no simple {d}-regular graph on {n} vertices after {attempts} attempts")


def _try_regular(n, d, rng, max_rounds=200):
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    have = np.empty(0, dtype=np.int64)
    for _ in range(max_rounds):
        if stubs.size == 0:
            lo, hi = np.divmod(have, n)
            return np.column_stack([lo, hi])
        rng.shuffle(stubs)
        a, b = stubs[0::2], stubs[1::2]
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        keys = lo * n + hi
        ok = (lo != hi) & ~np.isin(keys, have)
        _, first = np.unique(keys, return_index=True)
        once = np.zeros(keys.size, dtype=bool)
        once[first] = True
        ok &= once
        if not ok.any():
            # every remaining pairing is already present or a loop: stuck
            left = np.unique(stubs)
            if left.size < 2 or all(np.isin(x * n + left[left > x], have).all() for x in left):
                return None
            continue
        have = np.sort(np.concatenate([have, keys[ok]]))
        stubs = np.concatenate([a[~ok], b[~ok]])
    return None


def gen_d_out(n: int, d: int, seed: int) -> Graph:
    """Each vertex picks ``d`` distinct other vertices; the union is symmetrised."""
    n, d = int(n), int(d)
    if not 1 <= d < n:
        raise InputError("need 1 <= d < n")
    rng = rng_for(seed, 1)
    rows = np.empty((n, d), dtype=np.int64)
    dense = d > (n - 1) // 2
    for v in range(n):
        if dense:
            pick = rng.permutation(n - 1)[:d]
        else:
            chosen: list[int] = []
            seen = set()
            while len(chosen) < d:
                for x in rng.integers(0, n - 1, size=d - len(chosen)).tolist():
                    if x not in seen:
                        seen.add(x)
                        chosen.append(x)
            pick = np.asarray(chosen[:d])
        rows[v] = pick + (pick >= v)
    src = np.repeat(np.arange(n), d)
    return Graph(n, np.column_stack([src, rows.ravel()]), dedupe=True)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Binomial random graph: every pair independently with probability ``p``."""
    n = int(n)
    if not 0.0 <= p <= 1.0:
        raise InputError("p must lie in [0, 1]")
    rng = rng_for(seed, 2)
    parts = []
    for i in range(n - 1):
        hits = np.flatnonzero(rng.random(n - i - 1) < p)
        if hits.size:
            parts.append(np.column_stack([np.full(hits.size, i), hits + i + 1]))
    edges = np.concatenate(parts) if parts else np.empty((0, 2), dtype=np.int64)
    return Graph(n, edges)


def gen_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform random graph with exactly ``m`` edges."""
    n, m = int(n), int(m)
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise InputError(f"need 0 <= m <= {total}")
    rng = rng_for(seed, 4)
    picks = np.sort(rng.choice(total, size=m, replace=False))
    # invert the row-major index of the pair (i, j), i < j
    rows = np.repeat(np.arange(n), np.arange(n - 1, -1, -1))
    starts = np.concatenate([[0], np.cumsum(np.arange(n - 1, 0, -1))])
    i = rows[picks]
    j = picks - starts[i] + i + 1
    return Graph(n, np.column_stack([i, j]))


def gen_random_tree(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex ``i`` attaches to a uniform earlier vertex."""
    n = int(n)
    if n < 1:
        raise InputError("need n >= 1")
    rng = rng_for(seed, 5)
    if n == 1:
        return Graph(1)
    kids = np.arange(1, n)
    parents = (rng.random(n - 1) * kids).astype(np.int64)
    return Graph(n, np.column_stack([parents, kids]))


def degree3_reduce(h: Graph):
    """Split every vertex of ``h`` into a path of degree-ports.

    Vertex ``v`` of degree ``k`` becomes ports ``(v, 1..k)`` joined in a path;
    port ``(v, i)`` is linked to port ``(w, j)`` when ``w`` is ``v``'s ``i``-th
    smallest neighbour and ``v`` is ``w``'s ``j``-th.  An isolated vertex keeps a
    single copy.  Returns ``(h_prime, provenance)`` where ``provenance[x]`` is
    the ``h`` vertex that port ``x`` came from.  Ports are numbered by ``v``
    then ``i``.
    """
    deg = h.degrees()
    sizes = np.maximum(deg, 1)
    base = np.zeros(h.n + 1, dtype=np.int64)
    np.cumsum(sizes, out=base[1:])
    provenance = np.repeat(np.arange(h.n), sizes)
    edges = []
    for v in range(h.n):
        for i in range(int(sizes[v]) - 1):
            edges.append((base[v] + i, base[v] + i + 1))
    for v, w in h.edges():
        i = int(np.searchsorted(h.neighbors(v), w))
        j = int(np.searchsorted(h.neighbors(w), v))
        edges.append((base[v] + i, base[w] + j))
    provenance.flags.writeable = False
    return Graph(int(base[-1]), edges), provenance


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    seed: int = 0
    d: int | None = None
    p: float | None = None
    name: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        if self.family != "explicit" and self.n < 3:
            raise InputError("n must be at least 3")
        if self.family == "random-regular":
            if self.d is None or (self.n * self.d) % 2 or not 0 <= self.d < self.n:
                raise InputError("random-regular needs n*d even and d < n")
        elif self.family == "d-out":
            if self.d is None or not 1 <= self.d < self.n:
                raise InputError("d-out needs 1 <= d < n")
        elif self.family == "gnp":
            if self.p is None or not 0 <= self.p <= 1:
                raise InputError("gnp needs 0 <= p <= 1")
        elif self.name not in EXPLICIT_NAMES:
            raise InputError(f"explicit family needs name in {EXPLICIT_NAMES}")

    def to_json(self) -> str:
        out = {k: v for k, v in asdict(self).items() if v is not None and v != {}}
        return json.dumps(out, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        raw = json.loads(text)
        known = {"family", "n", "seed", "d", "p", "name"}
        extra = {k: v for k, v in raw.items() if k not in known}
        return cls(**{k: v for k, v in raw.items() if k in known}, extra=extra)


def generate(spec: GenSpec) -> Graph:
    if spec.family == "random-regular":
        return gen_random_regular(spec.n, spec.d, spec.seed)
    if spec.family == "d-out":
        return gen_d_out(spec.n, spec.d, spec.seed)
    if spec.family == "gnp":
        return gen_gnp(spec.n, spec.p, spec.seed)
    if spec.name == "complete":
        return Graph.complete(spec.n)
    if spec.name == "cycle":
        return Graph.cycle(spec.n)
    if spec.name == "path":
        return Graph.path(spec.n)
    if spec.name == "petersen":
        return Graph.petersen()
    rows = int(spec.extra.get("rows", math.isqrt(spec.n)))
    return Graph.grid(rows, spec.n // rows)
