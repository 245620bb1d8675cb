import json

import numpy as np
import pytest

from expminors.errors import HypothesisViolated, InputError, TooLargeError
from expminors.expansion import (CERTIFIED, HEURISTIC, REFUTED, ExpansionCertificate, ExpansionParams,
                                 certify_expansion, certify_expansion_exact, edges_between, exact_violation,
                                 find_violation_heuristic, mixing_bound, ndl_expansion_params, prune_one2all,
                                 robust_partition, size_cap, spectral_lambda, violates)
from expminors.generators import gen_d_out, gen_gnp, gen_random_regular
from expminors.graph import Graph, external_neighborhood, induced_subgraph

import oracles


def two_cliques(k):
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    edges += [(a + k, b + k) for a, b in edges] + [(0, k)]
    return Graph(2 * k, edges)


def with_pendant(g, anchor=0):
    return Graph(g.n + 1, g.edges() + [(anchor, g.n)])


def test_params_validation():
    with pytest.raises(InputError):
        ExpansionParams(0, 2)
    with pytest.raises(InputError):
        ExpansionParams(1, 2)
    with pytest.raises(InputError):
        ExpansionParams(0.5, 0.5)
    assert ExpansionParams(0.3, 3).cap(10) == 1  # exactly 3/10 * 10 / 3


def test_size_cap_is_exact_rational():
    assert size_cap(100, 0.3, 3) == 10
    assert size_cap(7, 0.5, 2) == 1


def test_certify_examples():
    cert = certify_expansion_exact(Graph.complete(6), ExpansionParams(0.5, 2))
    assert cert.verdict == CERTIFIED and cert.checked_size_cap == 1
    cert = certify_expansion_exact(Graph.cycle(8), ExpansionParams(0.5, 2))
    assert cert.verdict == REFUTED and cert.witness == {0, 1} and cert.checked_size_cap == 2
    cert = certify_expansion_exact(Graph.petersen(), ExpansionParams(0.25, 2))
    assert cert.verdict == CERTIFIED and cert.checked_size_cap == 1


def test_certificate_json_shape():
    cert = certify_expansion_exact(Graph.cycle(8), ExpansionParams(0.5, 2))
    raw = json.loads(cert.to_json())
    assert raw["verdict"] == "refuted" and raw["witness"] == [0, 1]
    assert raw["alpha"] == 0.5 and raw["t"] == 2.0 and raw["cap"] == 2


def test_certify_budget():
    g = gen_random_regular(200, 8, 0)
    with pytest.raises(TooLargeError):
        certify_expansion_exact(g, ExpansionParams(0.5, 2), budget=1000)
    cert = certify_expansion(g, ExpansionParams(0.5, 2), budget=1000, effort=3)
    assert cert.verdict in (HEURISTIC, REFUTED)
    assert not ExpansionCertificate(HEURISTIC, 0.5, 2, 50).certified


def test_witnesses_re_verify():
    for seed in range(30):
        g = gen_gnp(11, 0.3, seed)
        cert = certify_expansion_exact(g, ExpansionParams(0.5, 2))
        if cert.verdict == REFUTED:
            W = cert.witness
            assert len(W) <= cert.checked_size_cap
            assert len(external_neighborhood(g, W)) < 2 * len(W)


def test_exact_matches_naive_on_random_graphs():
    rng = np.random.default_rng(7)
    for i in range(20):
        n = int(rng.integers(4, 11))
        g = gen_gnp(n, float(rng.uniform(0.2, 0.8)), i)
        for alpha in (0.25, 0.5):
            for t in (1, 2, 4):
                cert = certify_expansion_exact(g, ExpansionParams(alpha, t))
                ok, w = oracles.naive_certify(n, g.edges(), alpha, t)
                assert cert.certified == ok
                assert cert.witness == w


def test_heuristic_two_cliques():
    g = two_cliques(10)
    S = find_violation_heuristic(g, ExpansionParams(0.5, 3))
    assert S is not None and violates(g, S, 0.5, 3)


def test_heuristic_complete_graph_finds_nothing():
    assert find_violation_heuristic(Graph.complete(12), ExpansionParams(0.5, 2)) is None


def test_heuristic_cycle_finds_arc():
    S = find_violation_heuristic(Graph.cycle(20), ExpansionParams(0.5, 2))
    assert S is not None and len(S) >= 2 and violates(Graph.cycle(20), S, 0.5, 2)


def test_heuristic_finds_planted_sparse_set():
    # a 30-vertex blob attached to a 16-regular graph through two vertices
    base = gen_random_regular(400, 16, 3)
    blob = gen_random_regular(30, 4, 4)
    edges = base.edges() + [(a + 400, b + 400) for a, b in blob.edges()] + [(0, 400), (1, 401)]
    g = Graph(430, edges)
    S = find_violation_heuristic(g, ExpansionParams(0.5, 4), effort=40)
    assert S is not None and violates(g, S, 0.5, 4)


def test_spectral_examples():
    reg, lam = spectral_lambda(Graph.complete(4))
    assert reg and lam == pytest.approx(1.0, abs=1e-6)
    reg, lam = spectral_lambda(Graph.petersen())
    assert reg and lam == pytest.approx(oracles.dense_lambda(10, Graph.petersen().edges()), abs=1e-6)
    assert lam == pytest.approx(2.0, abs=1e-6)
    # C8 is bipartite: its spectrum contains -2, so max(|l2|, |ln|) is 2
    reg, lam = spectral_lambda(Graph.cycle(8))
    assert reg and lam == pytest.approx(2.0, abs=1e-6)


def test_spectral_flags_irregular():
    reg, lam = spectral_lambda(Graph.path(5))
    assert not reg and lam > 0


def test_ndl_params():
    p = ndl_expansion_params(100, 8, 1)
    assert (p.alpha, p.t) == (0.25, 4.0)
    # d^2 / (16 lambda^2) = 1600 / 400
    assert ndl_expansion_params(100, 40, 5).t == pytest.approx(4.0)
    with pytest.raises(HypothesisViolated):
        ndl_expansion_params(100, 8, 2)


def test_mixing_bound_examples():
    assert mixing_bound(10, 3, 2, 0, 7) == 0
    assert mixing_bound(10, 3, 2, 5, 5) == pytest.approx(17.5)


def test_mixing_lemma_on_petersen():
    g = Graph.petersen()
    lam = oracles.dense_lambda(10, g.edges())
    rng = np.random.default_rng(1)
    for _ in range(100):
        X = np.flatnonzero(rng.random(10) < 0.5)
        Y = np.flatnonzero(rng.random(10) < 0.5)
        e = edges_between(g, X, Y)
        assert e == oracles.naive_edges_between(g.edges(), X, Y)
        assert e <= mixing_bound(10, 3, lam, len(X), len(Y)) + 1e-9


def test_prune_complete_graph_is_noop():
    res = prune_one2all(Graph.complete(20), 0.5, 4)
    assert res.kept == frozenset(range(20)) and res.removed == frozenset()
    assert res.certificate.verdict == CERTIFIED


def test_prune_pendant():
    g = with_pendant(gen_random_regular(60, 8, 2))
    res = prune_one2all(g, 0.5, 4)
    assert res.removed == {60}
    assert res.certificate.verdict == CERTIFIED


def test_prune_gnp_low_degree():
    # with t = 24 vertices of degree < 12 violate; some seeds have a few of them
    hits = 0
    for seed in range(40):
        g = gen_gnp(500, 0.05, seed)
        if not (g.degrees() < 12).any():
            continue
        try:
            res = prune_one2all(g, 0.25, 24)
        except HypothesisViolated as exc:
            # too many weak sets: the hypothesis genuinely fails for this seed
            assert len(exc.witness) > 0.25 * 500 / 48
            continue
        assert set(np.flatnonzero(g.degrees() < 12).tolist()) <= res.removed
        assert len(res.removed) <= np.ceil(0.25 * 500 / 24)
        sub, _ = induced_subgraph(g, res.kept)
        assert certify_expansion_exact(sub, ExpansionParams(0.0625, 12)).certified
        hits += 1
    assert hits >= 2


def test_prune_raises_when_hypothesis_fails():
    g = Graph.cycle(40)
    with pytest.raises(HypothesisViolated) as info:
        prune_one2all(g, 0.5, 8, exact_violation)
    assert len(info.value.witness) > 0.5 * 40 / 16


def test_robust_partition_complete_graph():
    rp = robust_partition(Graph.complete(200), 0.5, 4096)
    assert rp.X == frozenset(range(200))
    assert rp.beta == pytest.approx(1 / 16)
    assert rp.cuts == ()


def test_robust_partition_hypothesis_check():
    with pytest.raises(InputError):
        robust_partition(Graph.complete(20), 0.5, 2048)


def test_robust_partition_strips_the_junction():
    a = gen_random_regular(512, 16, 1)
    b = gen_random_regular(512, 16, 2)
    shift = 508  # the two halves share vertices 508..511
    edges = set(a.edges()) | {tuple(sorted((u + shift, v + shift))) for u, v in b.edges()}
    g = Graph(1020, sorted(edges))
    rp = robust_partition(g, 0.5, 4, check_hypothesis=False)
    assert rp.cuts and rp.cuts[0][0] <= 0.5 * 1020 / 8
    left, right = set(range(508)), set(range(512, 1020))
    assert rp.X <= left or rp.X <= right
    assert len(rp.X) >= 0.5 * 1020 / 8 and rp.beta <= 1


def test_robust_partition_edge_across_property():
    rng = np.random.default_rng(3)
    for seed in range(20):
        g = gen_d_out(1024, 32, seed)
        rp = robust_partition(g, 0.5, 8, check_hypothesis=False)
        X = np.array(sorted(rp.X))
        assert len(X) >= 0.5 * 1024 / 8 and rp.beta <= 1
        sub, _ = induced_subgraph(g, X)
        r_cap = int(rp.edge_across_R_cap)
        side = int(np.ceil(rp.edge_across_AB_floor))
        for _ in range(50):
            perm = rng.permutation(sub.n)
            r = int(rng.integers(0, r_cap + 1))
            a = int(rng.integers(side, sub.n - r - side + 1))
            A, B = perm[r:r + a], perm[r + a:]
            assert edges_between(sub, A, B) > 0
