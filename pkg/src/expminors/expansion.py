"""Vertex-expansion certification, spectral estimates and the two pruning lemmas.

Size thresholds such as ``alpha*n/t`` are compared as exact fractions (the
float arguments are read through their decimal ``repr``), so ``alpha=0.3`` means
exactly 3/10.  Logarithms are natural throughout.
"""
from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .errors import HypothesisViolated, InputError, InvariantViolation, TooLargeError
from .graph import (Graph, _gather, as_mask, as_set, component_labels,
                    induced_subgraph, neighborhood_mask)

DEFAULT_BUDGET = int(float(os.environ.get("EXPMINORS_BUDGET", 1e8)))

CERTIFIED = "certified-exact"
REFUTED = "refuted"
HEURISTIC = "passed-heuristic"


def q(x) -> Fraction:
    """Exact rational reading of a number (floats via their shortest repr)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(repr(float(x)))


def size_cap(n: int, alpha, t) -> int:
    """Largest set size covered by the expansion condition: floor(alpha*n/t)."""
    return math.floor(q(alpha) * n / q(t))


@dataclass(frozen=True)
class ExpansionParams:
    alpha: float
    t: float

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise InputError("alpha must lie in (0, 1)")
        if self.t < 1:
            raise InputError("t must be at least 1")

    def cap(self, n: int) -> int:
        return size_cap(n, self.alpha, self.t)


@dataclass(frozen=True)
class ExpansionCertificate:
    verdict: str
    alpha: float
    t: float
    checked_size_cap: int
    witness: Optional[frozenset] = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": sorted(self.witness) if self.witness is not None else None,
            "alpha": float(self.alpha),
            "t": float(self.t),
            "cap": int(self.checked_size_cap),
            "certificate": self.verdict == CERTIFIED,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def violates(g: Graph, S, alpha, t) -> bool:
    """True iff ``S`` is a witness against ``(alpha, t)``-expansion of ``g``."""
    mask = as_mask(g, S)
    k = int(mask.sum())
    if k == 0 or k > size_cap(g.n, alpha, t):
        return False
    return int(neighborhood_mask(g, mask).sum()) < q(t) * k


# -- exhaustive certification ----------------------------------------------------------

def _bitsets(g: Graph):
    words = max(1, (g.n + 63) // 64)
    nbr = np.zeros((g.n, words), dtype=np.uint64)
    own = np.zeros((g.n, words), dtype=np.uint64)
    v = np.arange(g.n)
    own[v, v // 64] = np.left_shift(np.uint64(1), (v % 64).astype(np.uint64))
    src = np.repeat(v, g.degrees())
    dst = g.indices
    np.bitwise_or.at(nbr, (src, dst // 64), np.left_shift(np.uint64(1), (dst % 64).astype(np.uint64)))
    return nbr, own


def subsets_up_to(n: int, cap: int) -> int:
    return sum(math.comb(n, k) for k in range(1, cap + 1))


def _scan_size(g, nbr, own, k, t_num, t_den, chunk=1 << 16):
    """First (lex) violating ``k``-subset, or None."""
    combos = itertools.combinations(range(g.n), k)
    while True:
        flat = np.fromiter(itertools.chain.from_iterable(itertools.islice(combos, chunk)), dtype=np.int64)
        if flat.size == 0:
            return None
        idx = flat.reshape(-1, k)
        union = np.bitwise_or.reduce(nbr[idx], axis=1)
        inside = np.bitwise_or.reduce(own[idx], axis=1)
        size = np.bitwise_count(union & ~inside).sum(axis=1).astype(np.int64)
        bad = np.flatnonzero(size * t_den < t_num * k)
        if bad.size:
            return frozenset(idx[bad[0]].tolist())


def certify_expansion_exact(g: Graph, params: ExpansionParams, budget: int | None = None) -> ExpansionCertificate:
    """Check every set of size ``1..floor(alpha*n/t)``.

    The witness of a refutation is the first violating set in (size, then
    lexicographic) order.  Raises :class:`TooLargeError` when the number of
    subsets exceeds ``budget``.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    cap = params.cap(g.n)
    total = subsets_up_to(g.n, cap)
    if total > budget:
        raise TooLargeError(f"{total} subsets to check exceeds budget {budget}")
    tq = q(params.t)
    nbr, own = _bitsets(g)
    for k in range(1, cap + 1):
        w = _scan_size(g, nbr, own, k, tq.numerator, tq.denominator)
        if w is not None:
            return ExpansionCertificate(REFUTED, params.alpha, params.t, cap, w)
    return ExpansionCertificate(CERTIFIED, params.alpha, params.t, cap)


def exact_violation(g: Graph, alpha, t, budget: int | None = None):
    """Exhaustive violation finder (first violating set or None)."""
    budget = DEFAULT_BUDGET if budget is None else budget
    cap = size_cap(g.n, alpha, t)
    if subsets_up_to(g.n, cap) > budget:
        raise TooLargeError("exhaustive search exceeds budget")
    tq = q(t)
    nbr, own = _bitsets(g)
    for k in range(1, cap + 1):
        w = _scan_size(g, nbr, own, k, tq.numerator, tq.denominator)
        if w is not None:
            return w
    return None


# -- heuristic search ---------------------------------------------------------------------

def find_violation_heuristic(g: Graph, params, effort: int = 20, exhaustive_budget: int = 200_000):
    """Search for a set that violates expansion; ``None`` proves nothing.

    Stages: exhaustive enumeration for the sizes that fit ``exhaustive_budget``;
    greedy growth from the ``effort`` lowest-degree vertices, each step adding
    the boundary vertex that adds fewest new neighbours; then swap refinement
    of the tightest set seen.  Any returned set has been re-verified.
    """
    alpha, t = (params.alpha, params.t) if isinstance(params, ExpansionParams) else params
    return _heuristic(g, alpha, t, effort, exhaustive_budget)


def _heuristic(g, alpha, t, effort=20, exhaustive_budget=200_000):
    n = g.n
    cap = size_cap(n, alpha, t)
    if cap < 1 or n == 0:
        return None
    tq = q(t)
    deg = g.degrees()
    # stage 1: exhaustive on small sizes
    low = np.flatnonzero(deg * tq.denominator < tq.numerator)
    if low.size:
        return frozenset([int(low[0])])
    kmax = 1
    while kmax < cap and subsets_up_to(n, kmax + 1) <= exhaustive_budget:
        kmax += 1
    if kmax >= 2:
        nbr, own = _bitsets(g)
        for k in range(2, kmax + 1):
            w = _scan_size(g, nbr, own, k, tq.numerator, tq.denominator)
            if w is not None:
                return w
    if kmax >= cap:
        return None
    # stage 2: greedy growth
    seeds = np.lexsort((np.arange(n), deg))[:max(1, effort)]
    best = None
    for s in seeds.tolist():
        found, tight = _grow(g, int(s), cap, tq)
        if found is not None:
            return found
        if tight is not None and (best is None or tight[0] < best[0]):
            best = tight
    # stage 3: swap refinement of the tightest set
    if best is not None:
        found = _refine(g, best[1], tq, effort)
        if found is not None:
            return found
    return None


def _grow(g, seed, cap, tq):
    n = g.n
    S = np.zeros(n, dtype=bool)
    S[seed] = True
    N = np.zeros(n, dtype=bool)
    N[g.neighbors(seed)] = True
    size, bsize = 1, int(N.sum())
    tight = (Fraction(bsize, 1) - tq, S.copy())
    while size < cap:
        cand = np.flatnonzero(N)
        if cand.size == 0:
            return None, tight
        nb, own = _gather(g, cand)
        fresh = ~(S[nb] | N[nb])
        gain = np.bincount(np.searchsorted(cand, own[fresh]), minlength=cand.size)
        pick = int(cand[int(np.argmin(gain))])
        S[pick] = True
        N[pick] = False
        newn = g.neighbors(pick)
        N[newn[~S[newn]]] = True
        size += 1
        bsize = int(N.sum())
        if bsize * tq.denominator < tq.numerator * size:
            return as_set(S), tight
        slack = Fraction(bsize, size) - tq
        if slack < tight[0]:
            tight = (slack, S.copy())
    return None, tight


def _refine(g, S, tq, rounds, trials_per_round=64):
    """Swap one member for one boundary vertex while that shrinks the boundary."""
    S = S.copy()
    size = int(S.sum())
    N = neighborhood_mask(g, S)
    for _ in range(max(1, rounds)):
        cur = int(N.sum())
        members, bound = np.flatnonzero(S), np.flatnonzero(N)
        improved = False
        for u, w in itertools.islice(itertools.product(members[::-1].tolist(), bound.tolist()), trials_per_round):
            S[u], S[w] = False, True
            N2 = neighborhood_mask(g, S)
            if int(N2.sum()) < cur:
                N, improved = N2, True
                break
            S[u], S[w] = True, False
        if int(N.sum()) * tq.denominator < tq.numerator * size:
            return as_set(S)
        if not improved:
            break
    return None


def heuristic_finder(effort: int = 20, exhaustive_budget: int = 200_000):
    def finder(g, alpha, t):
        return _heuristic(g, alpha, t, effort, exhaustive_budget)
    return finder


def default_finder(budget: int | None = None, effort: int = 20):
    """Exact search when it fits ``budget``, greedy heuristic otherwise."""
    budget = DEFAULT_BUDGET if budget is None else budget

    def finder(g, alpha, t):
        if subsets_up_to(g.n, size_cap(g.n, alpha, t)) <= budget:
            return exact_violation(g, alpha, t, budget)
        return _heuristic(g, alpha, t, effort)
    finder.exact_budget = budget
    return finder


def certify_expansion(g: Graph, params: ExpansionParams, budget: int | None = None, effort: int = 20) -> ExpansionCertificate:
    """Exact certificate when affordable, else a labelled heuristic verdict."""
    budget = DEFAULT_BUDGET if budget is None else budget
    cap = params.cap(g.n)
    if subsets_up_to(g.n, cap) <= budget:
        return certify_expansion_exact(g, params, budget)
    w = find_violation_heuristic(g, params, effort)
    if w is not None:
        return ExpansionCertificate(REFUTED, params.alpha, params.t, cap, w)
    return ExpansionCertificate(HEURISTIC, params.alpha, params.t, cap)


# -- spectral tools ------------------------------------------------------------------------

def spectral_lambda(g: Graph, tol: float = 1e-6, max_iter: int = 10_000, seed: int = 0):
    """Power-iteration estimate of ``max(|lambda_2|, |lambda_n|)``.

    Iterates the squared adjacency operator on the complement of the all-ones
    vector; stops once the residual of the Rayleigh quotient is below ``tol``
    (relative) or after ``max_iter`` steps.  Returns ``(is_regular, estimate)``;
    for irregular graphs the deflated estimate is still returned but flagged.
    """
    deg = g.degrees()
    regular = bool(g.n > 0 and np.all(deg == deg[0]))
    if g.n <= 1:
        return regular, 0.0
    A = g.sparse_adjacency()
    rng = np.random.Generator(np.random.PCG64(seed))
    x = rng.standard_normal(g.n)
    x -= x.mean()
    nrm = np.linalg.norm(x)
    if nrm == 0:
        return regular, 0.0
    x /= nrm
    mu = 0.0
    for _ in range(max_iter):
        y = A @ (A @ x)
        y -= y.mean()
        mu = float(x @ y)
        res = np.linalg.norm(y - mu * x)
        ny = np.linalg.norm(y)
        if ny == 0:
            return regular, 0.0
        if res <= tol * max(abs(mu), 1e-300):
            break
        x = y / ny
    return regular, math.sqrt(max(mu, 0.0))


def ndl_expansion_params(n: int, d: float, lam: float) -> ExpansionParams:
    """Expansion implied for an ``(n, d, lambda)``-graph with ``lambda < d/4``."""
    if not lam < d / 4:
        raise HypothesisViolated(f"requires lambda < d/4, got lambda = {lam:g}, d = {d:g}")
    if lam <= 0:
        raise InputError("lambda must be positive")
    return ExpansionParams(0.25, d * d / (16.0 * lam * lam))


def mixing_bound(n: int, d: float, lam: float, size_x: int, size_y: int) -> float:
    """Upper bound ``(d/n)|X||Y| + lambda*sqrt(|X||Y|)`` on ``e(X, Y)``."""
    if not (0 <= size_x <= n and 0 <= size_y <= n):
        raise InputError("set sizes must lie in [0, n]")
    return d / n * size_x * size_y + lam * math.sqrt(size_x * size_y)


def edges_between(g: Graph, X, Y) -> int:
    """Ordered pairs ``(x, y)`` in ``X x Y`` that are edges."""
    xm, ym = as_mask(g, X), as_mask(g, Y)
    nb, _ = _gather(g, np.flatnonzero(xm))
    return int(ym[nb].sum())


# -- pruning lemmas ----------------------------------------------------------------------------

Finder = Callable[[Graph, float, float], Optional[frozenset]]


@dataclass(frozen=True)
class PruneResult:
    kept: frozenset
    removed: frozenset
    certificate: ExpansionCertificate


def prune_one2all(g: Graph, alpha, t, violation_finder: Finder | None = None,
                  budget: int | None = None) -> PruneResult:
    """Strip poorly expanding sets until what is left expands at (alpha/4, t/2).

    Each round asks ``violation_finder`` for a set ``S`` in the current
    ``G[X]`` of size at most ``alpha|X|/(2t)`` with fewer than ``t|S|/2``
    neighbours in ``X`` and moves it to the removed pile ``R``.  If ``R`` ever
    exceeds ``alpha*n/(2t)`` the caller's hypothesis (sets of size between
    ``alpha*n/(2t)`` and ``alpha*n/t`` expand by ``t``) is false, and
    :class:`HypothesisViolated` is raised with ``R`` as witness.
    """
    if not 0 < alpha < 1 or t < 1:
        raise InputError("need 0 < alpha < 1 and t >= 1")
    finder = violation_finder or default_finder(budget)
    n = g.n
    limit = q(alpha) * n / (2 * q(t))
    keep = np.ones(n, dtype=bool)
    removed = np.zeros(n, dtype=bool)
    a4, t2 = q(alpha) / 4, q(t) / 2
    while True:
        if int(removed.sum()) > limit:
            raise HypothesisViolated(
                f"removed {int(removed.sum())} > alpha*n/(2t) = {float(limit):.3f} vertices", as_set(removed))
        sub, ids = induced_subgraph(g, keep)
        S = finder(sub, a4, t2) if sub.n else None
        if not S:
            break
        if not violates(sub, S, a4, t2):
            raise InvariantViolation("violation finder returned a non-violating set", {"set": sorted(S)})
        hit = ids[sorted(S)]
        keep[hit] = False
        removed[hit] = True
    sub, _ = induced_subgraph(g, keep)
    cert = certify_expansion(sub, ExpansionParams(float(a4), max(float(t2), 1.0)), budget) \
        if t2 >= 1 else ExpansionCertificate(HEURISTIC, float(a4), float(t2), size_cap(sub.n, a4, t2))
    if cert.verdict == REFUTED:
        raise InvariantViolation("pruned graph still refuted", {"witness": sorted(cert.witness)})
    return PruneResult(as_set(keep), as_set(removed), cert)


@dataclass(frozen=True)
class RobustSubgraph:
    X: frozenset
    alpha: float
    t: float
    n: int
    beta: float
    t_eff: float
    edge_across_R_cap: float
    edge_across_AB_floor: float
    D: frozenset = frozenset()
    pruned: frozenset = frozenset()
    cuts: tuple = ()
    certificate: Optional[ExpansionCertificate] = None

    def subgraph(self, g: Graph):
        return induced_subgraph(g, self.X)

    @classmethod
    def build(cls, X, alpha, t, n, **extra):
        size = len(X)
        beta = float(q(alpha) * n / (8 * size))
        return cls(frozenset(X), alpha, t, n, beta, t / 4, alpha * size / 16, beta * size / 4, **extra)


def robust_partition(g: Graph, alpha, t, violation_finder: Finder | None = None, *,
                     check_hypothesis: bool = True, budget: int | None = None) -> RobustSubgraph:
    """Pass to a large induced subgraph that expands and has no sparse vertex cut.

    Stage 1 repeatedly looks for ``X' = R + A + B`` with ``|R| <= alpha|X'|/8``,
    ``|A|, |B| >= alpha*n/64`` and no ``A``-``B`` edge, absorbs ``R`` into the
    discarded set and recurses into the smaller side.  Stage 2 runs
    :func:`prune_one2all` on ``G[X']`` with ``(gamma/2, t/2)``,
    ``gamma = alpha*n/|X'|``.

    ``check_hypothesis=False`` skips the ``t > 2**10/alpha`` precondition so the
    procedure can be run (and its guarantees audited) at small scale.
    """
    if not 0 < alpha < 1:
        raise InputError("alpha must lie in (0, 1)")
    if check_hypothesis and not q(t) > Fraction(2 ** 10) / q(alpha):
        raise InputError(f"robust_partition needs t > 2^10/alpha = {2 ** 10 / alpha:g}")
    n = g.n
    aq = q(alpha)
    cur = np.ones(n, dtype=bool)
    dead = np.zeros(n, dtype=bool)
    cuts = []
    while True:
        size = int(cur.sum())
        cut = find_sparse_cut(g, cur, aq * size / 8, aq * n / 64)
        if cut is None:
            break
        R, A, B = cut
        dead |= R
        cuts.append((int(R.sum()), int(A.sum()), int(B.sum())))
        cur = A if A.sum() <= B.sum() else B
    size = int(cur.sum())
    gamma = aq * n / size
    diag = {"X_prime": size, "cuts": cuts, "gamma": float(gamma)}
    if not gamma / 2 < 1:
        raise InvariantViolation("stage 1 left a part too small for gamma/2 < 1", diag)
    sub, ids = induced_subgraph(g, cur)
    try:
        res = prune_one2all(sub, float(gamma / 2), float(q(t) / 2), violation_finder, budget)
    except HypothesisViolated as exc:
        diag["pruned"] = len(exc.witness)
        raise InvariantViolation("one2all pruning contradicted its hypothesis inside robust_partition", diag) from exc
    X = frozenset(ids[sorted(res.kept)].tolist())
    if not len(X) >= aq * n / 8:
        diag["X"] = len(X)
        raise InvariantViolation("robust subgraph smaller than alpha*n/8", diag)
    pruned = frozenset(ids[sorted(res.removed)].tolist())
    return RobustSubgraph.build(X, alpha, t, n, D=as_set(dead), pruned=pruned,
                                cuts=tuple(cuts), certificate=res.certificate)


# -- sparse vertex cuts -----------------------------------------------------------------------

def find_sparse_cut(g: Graph, part: np.ndarray, r_max, side_min):
    """Partition ``part`` into ``R, A, B`` (masks over ``g``) with no ``A``-``B`` edge.

    Requires ``|R| <= r_max`` and ``|A|, |B| >= side_min``; returns the most
    balanced such cut found, or ``None``.  Exhaustive up to 20 vertices, else
    component grouping followed by a spectral sweep with boundary clean-up.
    """
    size = int(part.sum())
    if size < 2 * side_min or size < 2:
        return None
    sub, ids = induced_subgraph(g, part)
    if sub.n <= 20:
        found = _exhaustive_cut(sub, r_max, side_min)
    else:
        found = _component_cut(sub, side_min)
        if found is None:
            found = _sweep_cut(sub, r_max, side_min)
    if found is None:
        return None
    out = []
    for m in found:
        full = np.zeros(g.n, dtype=bool)
        full[ids[m]] = True
        out.append(full)
    return tuple(out)


def _balance_key(R, A, B):
    return (min(A.sum(), B.sum()), -R.sum())


def _component_cut(sub, side_min):
    labels = component_labels(sub)
    k = int(labels.max()) + 1 if sub.n else 0
    if k < 2:
        return None
    sizes = np.bincount(labels)
    A = np.zeros(sub.n, dtype=bool)
    wa = wb = 0
    for c in np.argsort(-sizes, kind="stable"):
        if wa <= wb:
            A |= labels == c
            wa += sizes[c]
        else:
            wb += sizes[c]
    B = ~A
    if A.sum() >= side_min and B.sum() >= side_min:
        return np.zeros(sub.n, dtype=bool), A, B
    return None


def _exhaustive_cut(sub, r_max, side_min):
    n = sub.n
    best = None
    rmax = math.floor(r_max)
    for r in range(0, min(rmax, n) + 1):
        for Rt in itertools.combinations(range(n), r):
            R = np.zeros(n, dtype=bool)
            R[list(Rt)] = True
            labels = component_labels(sub, ~R)
            k = int(labels.max()) + 1 if (~R).any() else 0
            if k < 2 or k > 16:
                continue
            sizes = np.bincount(labels[labels >= 0], minlength=k)
            for bits in range(1, 2 ** (k - 1)):
                inA = np.array([(bits >> c) & 1 for c in range(k)], dtype=bool)
                a = int(sizes[inA].sum())
                b = int(sizes.sum()) - a
                if a >= side_min and b >= side_min:
                    A = (labels >= 0) & inA[np.maximum(labels, 0)]
                    B = (labels >= 0) & ~A
                    cand = (R, A, B)
                    if best is None or _balance_key(*cand) > _balance_key(*best):
                        best = cand
    return best


def _fiedler(sub):
    n = sub.n
    deg = sub.degrees().astype(float)
    dinv = np.where(deg > 0, 1 / np.sqrt(np.maximum(deg, 1)), 0.0)
    if n <= 400:
        M = sub.adjacency_matrix() * dinv[:, None] * dinv[None, :]
        _, vecs = np.linalg.eigh(M)
        vec = vecs[:, -2]
    else:
        from scipy.sparse import diags
        from scipy.sparse.linalg import eigsh

        A = diags(dinv) @ sub.sparse_adjacency() @ diags(dinv)
        v0 = np.cos(np.arange(n) * 0.61803398875) + 1.5
        vals, vecs = eigsh(A, k=2, which="LA", v0=v0, tol=1e-8)
        vec = vecs[:, int(np.argmin(vals))]
    vec = vec * dinv
    nz = np.flatnonzero(np.abs(vec) > 1e-12)
    if nz.size and vec[nz[0]] < 0:
        vec = -vec
    return vec


def _sweep_cut(sub, r_max, side_min):
    n = sub.n
    vec = np.round(_fiedler(sub), 12)
    best = None
    for order in (np.lexsort((np.arange(n), vec)), np.lexsort((np.arange(n), -vec))):
        cand = _sweep_order(sub, order, r_max, side_min)
        if cand is not None and (best is None or _balance_key(*cand) > _balance_key(*best)):
            best = cand
    return best


def _sweep_order(sub, order, r_max, side_min):
    """Scan prefixes ``A`` of ``order`` with ``R = N(A)``; keep the best valid cut."""
    n = sub.n
    ip, ix = sub.indptr, sub.indices
    inA = np.zeros(n, dtype=bool)
    cnt = np.zeros(n, dtype=np.int64)
    bsize = 0
    best = None
    best_near = None
    lo = math.ceil(side_min)
    for k, u in enumerate(order.tolist(), start=1):
        if cnt[u] > 0:
            bsize -= 1
        inA[u] = True
        for w in ix[ip[u]:ip[u + 1]].tolist():
            if not inA[w]:
                cnt[w] += 1
                if cnt[w] == 1:
                    bsize += 1
        rest = n - k - bsize
        if k < lo or rest < lo:
            continue
        key = (min(k, rest), -bsize)
        if bsize <= r_max:
            if best is None or key > best[0]:
                best = (key, k)
        elif best_near is None or bsize - r_max < best_near[0]:
            best_near = (bsize - r_max, k)
    picks = [b for b in (best, best_near) if b is not None]
    result = None
    for _, k in picks:
        A = np.zeros(n, dtype=bool)
        A[order[:k]] = True
        R = neighborhood_mask(sub, A)
        R, A, B = _clean_boundary(sub, R, A, ~(A | R))
        if R.sum() <= r_max and A.sum() >= side_min and B.sum() >= side_min:
            cand = (R, A, B)
            if result is None or _balance_key(*cand) > _balance_key(*result):
                result = cand
    return result


def _clean_boundary(sub, R, A, B):
    """Move separator vertices that touch only one side into that side."""
    R, A, B = R.copy(), A.copy(), B.copy()
    changed = True
    while changed:
        changed = False
        for r in np.flatnonzero(R).tolist():
            nb = sub.neighbors(r)
            if not B[nb].any():
                R[r], A[r] = False, True
                changed = True
            elif not A[nb].any():
                R[r], B[r] = False, True
                changed = True
    return R, A, B
