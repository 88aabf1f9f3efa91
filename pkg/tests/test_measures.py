"""Composed measures: every fast path against its compose oracle."""

import math

import numpy as np
import pytest

from gtcentrality import measures, value_functions as vf
from gtcentrality.errors import ConvergenceError, GraphError, NumericalError, SizeLimitError
from gtcentrality.fixtures import chain5, sample9, simple5, spider9, star, tailed_triangle5
from gtcentrality.games import Game
from gtcentrality.graph import Graph, nodes_mask, popcount
from gtcentrality.solutions import (
    banzhaf,
    nowak_radzik,
    owen_value,
    point_beta,
    shapley_beta,
    shapley_exact,
)

from conftest import random_connected_graph, random_graph

SQ = lambda m: float(popcount(m)) ** 2


def oracle(psi, g):
    return measures.compose(psi, shapley_exact, g).values


def random_suite(seed, directed=False, weighted=False, trials=10, nmax=8):
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        yield random_graph(rng, int(rng.integers(2, nmax)), 0.45,
                           directed=directed, weighted=weighted)


def test_centrality_result_container():
    res = measures.sv_degree_fast(simple5())
    assert len(res) == 5
    assert res[1] == pytest.approx(res.by_label()["b"])
    assert list(res) == list(np.asarray(res))
    assert res.method == "closed-form"


def test_compose_is_generic():
    g = simple5()
    got = measures.compose(vf.group_degree, banzhaf, g)
    want = banzhaf(vf.group_degree(g)).values
    assert np.allclose(got.values, want, atol=1e-12)
    assert got.labels == list("abcde")


def test_sv_degree_fast_matches_oracle():
    for g in random_suite(41):
        assert np.allclose(
            measures.sv_degree_fast(g).values, oracle(vf.fringe_game, g), atol=1e-9
        )
    for g in random_suite(42, directed=True):
        assert np.allclose(
            measures.sv_degree_fast(g).values, oracle(vf.fringe_game, g), atol=1e-9
        )


def test_sv_degree_fast_star_split():
    # hub earns 1/(1+1) per leaf giving, leaves give half of themselves
    g = star(4)
    got = measures.sv_degree_fast(g).values
    # hub: own 1/5 + 4 * 1/2 ... oracle settles it
    assert np.allclose(got, oracle(vf.fringe_game, g), atol=1e-12)


def test_sv_g2_fast_matches_oracle_various_k():
    rng = np.random.default_rng(43)
    for _ in range(12):
        g = random_graph(rng, int(rng.integers(2, 8)), 0.5)
        k = int(rng.integers(1, 4))
        got = measures.sv_g2_fast(g, k).values
        want = oracle(lambda h: vf.threshold_game(h, k), g)
        assert np.allclose(got, want, atol=1e-9), (g.edges(), k)
    with pytest.raises(GraphError):
        measures.sv_g2_fast(chain5(), 2)
    with pytest.raises(ValueError):
        measures.sv_g2_fast(simple5(), 0)


def test_sv_closeness_fast_cutoff_and_decay():
    rng = np.random.default_rng(44)
    for trial in range(10):
        g = random_graph(rng, int(rng.integers(2, 8)), 0.5,
                         weighted=bool(trial % 2))
        cut = float(rng.uniform(0.5, 3.0))
        got = measures.sv_closeness_fast(g, d_cutoff=cut).values
        want = oracle(lambda h: vf.cutoff_game(h, cut), g)
        assert np.allclose(got, want, atol=1e-9)
        got = measures.sv_closeness_fast(g, f=vf.harmonic_decay).values
        want = oracle(lambda h: vf.decay_game(h, vf.harmonic_decay), g)
        assert np.allclose(got, want, atol=1e-9)


def test_sv_closeness_fast_handles_distance_ties():
    # equidistant clusters stress the tie-group bookkeeping
    g = star(6)
    got = measures.sv_closeness_fast(g, f=vf.harmonic_decay).values
    want = oracle(lambda h: vf.decay_game(h, vf.harmonic_decay), g)
    assert np.allclose(got, want, atol=1e-12)


def test_sv_closeness_fast_validates_inputs():
    g = simple5()
    with pytest.raises(ValueError):
        measures.sv_closeness_fast(g)                      # neither f nor cutoff
    with pytest.raises(ValueError):
        measures.sv_closeness_fast(g, f=vf.harmonic_decay, d_cutoff=1.0)
    with pytest.raises(ValueError):
        measures.sv_closeness_fast(g, f=lambda d: 1.0)     # f(inf) != 0
    with pytest.raises(ValueError):
        measures.sv_closeness_fast(g, f=lambda d: -1.0 if math.isfinite(d) else 0.0)


def test_sv_influence_mc_within_stderr_and_deterministic():
    g = Graph(6, [(0, 1, 2.0), (1, 2, 1.0), (2, 3, 2.0), (3, 4, 1.0), (0, 5, 3.0)])
    cutoff = 2.0
    exact = oracle(lambda h: vf.influence_game(h, cutoff), g)
    est = measures.sv_g5_mc(g, cutoff, samples=20000, seed=5)
    assert est.method == "mc"
    assert np.all(np.abs(est.values - exact) <= 4.0 * est.stderr + 1e-12)
    again = measures.sv_g5_mc(g, cutoff, samples=20000, seed=5)
    assert np.array_equal(est.values, again.values)


def test_sv_betweenness_oracle_and_closed_form_flag():
    g = simple5()
    exact = measures.sv_betweenness(g)
    want = oracle(vf.group_betweenness, g)
    assert np.allclose(exact.values, want, atol=1e-12)
    closed = measures.sv_betweenness(g, method="closed_form")
    assert closed.method == "closed-form"
    assert closed.meta.get("experimental") is True
    assert not np.allclose(closed.values, exact.values, atol=1e-3)


def test_beta_measure_matches_oracle_and_rejects_undirected():
    for g in random_suite(45, directed=True):
        got = measures.beta_measure(g).values
        want = oracle(vf.score_game, g)
        assert np.allclose(got, want, atol=1e-9)
    with pytest.raises(GraphError):
        measures.beta_measure(simple5())


def test_beta_measure_closed_form_shares():
    g = chain5()
    got = measures.beta_measure(g).values
    # each node hands 1/indeg to each dominator
    assert np.allclose(got, [1.0, 0.5, 1.0, 0.0, 0.5], atol=1e-12)


def test_myerson_dfs_matches_restricted_shapley():
    rng = np.random.default_rng(46)
    for _ in range(8):
        g = random_graph(rng, int(rng.integers(2, 8)), 0.4)
        table = rng.normal(size=1 << g.n)
        table[0] = 0.0
        game = Game(g.n, lambda m, t=table: float(t[m]))
        stats = {}
        got = measures.myerson_dfs(g, game, stats=stats).values
        want = shapley_exact(vf.myerson_restriction(game, g)).values
        assert np.allclose(got, want, atol=1e-9)
        assert stats["subsets"] == stats["evaluations"]
        assert stats["subsets"] == sum(
            1 for m in range(1, 1 << g.n) if g.is_connected(m)
        )


def test_myerson_component_efficiency_and_fairness():
    rng = np.random.default_rng(47)
    g = random_connected_graph(rng, 6, extra=2)
    game = Game(6, SQ)
    mv = measures.myerson_dfs(g, game).values
    assert abs(mv.sum() - game(game.grand)) < 1e-9
    # fairness: deleting an edge moves both endpoints by the same amount
    u, v = g.edges()[0]
    g2 = Graph(6, [e for e in g.edges() if e != (u, v)])
    mv2 = measures.myerson_dfs(g2, game).values
    assert abs((mv[u] - mv2[u]) - (mv[v] - mv2[v])) < 1e-9


def test_myerson_budget_guard():
    g = random_connected_graph(np.random.default_rng(48), 7, extra=3)
    with pytest.raises(SizeLimitError):
        measures.myerson_dfs(g, SQ, budget=5)


def test_gomez_centrality_is_myerson_minus_shapley():
    g = tailed_triangle5()
    game = Game(5, SQ)
    got = measures.gomez_centrality(g, game).values
    want = measures.myerson_dfs(g, game).values - shapley_exact(game).values
    assert np.allclose(got, want, atol=1e-12)
    assert abs(got.sum()) < 1e-9   # both parts are efficient


def test_accessibility_exact_vs_ordered_oracle():
    g = chain5()
    game = Game(5, SQ)
    got = measures.accessibility(g, game).values
    want = nowak_radzik(vf.ag_digraph_restriction(game, g)).values
    assert np.allclose(got, want, atol=1e-9)


def test_accessibility_semivalue_uniform_recovers_exact():
    g = chain5()
    game = Game(5, SQ)
    exact = measures.accessibility(g, game).values
    semi = measures.accessibility(g, game, mode="semivalue", beta=shapley_beta(5)).values
    assert np.allclose(semi, exact, atol=1e-9)
    skew = measures.accessibility(g, game, mode="semivalue", beta=point_beta(5, 1)).values
    assert not np.allclose(skew, exact, atol=1e-6)


def test_accessibility_mc_within_stderr():
    g = chain5()
    game = Game(5, SQ)
    exact = measures.accessibility(g, game).values
    est = measures.accessibility(g, game, mode="mc", samples=20000, seed=11)
    assert np.all(np.abs(est.values - exact) <= 4.0 * est.stderr + 1e-12)
    again = measures.accessibility(g, game, mode="mc", samples=20000, seed=11)
    assert np.array_equal(est.values, again.values)


def test_accessibility_requires_directed_and_small_n():
    with pytest.raises(GraphError):
        measures.accessibility(simple5(), SQ)
    big = Graph(11, [(i, i + 1) for i in range(10)], directed=True)
    with pytest.raises(SizeLimitError):
        measures.accessibility(big, lambda m: float(popcount(m)))


def test_pozo_centrality_frozen_chain5():
    g = chain5()
    p0 = measures.pozo_centrality(g, SQ, alpha=0.0).values
    p1 = measures.pozo_centrality(g, SQ, alpha=1.0).values
    assert np.allclose(p0, np.array([1, 2, 3, 2, 1]) - 5.0, atol=1e-12)
    assert np.allclose(p1, np.array([1.5, 2, 2.5, 1.5, 1.5]) - 5.0, atol=1e-12)


def test_cohesion_centrality_base_and_blend():
    g = tailed_triangle5()
    res = measures.cohesion_centrality(g)   # alpha=0: payoff-only weights
    assert res.meta["base"] == "degree"
    pay = np.asarray(res.meta["edge_payoffs"])
    assert abs(pay.sum() - 20.0) < 1e-9
    # degree base: node score = sum of blended weights of incident edges
    w = np.asarray(res.meta["blended_weights"])
    want = np.zeros(5)
    for i, (u, v) in enumerate(g.edges()):
        want[u] += w[i]
        want[v] += w[i]
    assert np.allclose(res.values, want, atol=1e-12)
    # alpha=1 ignores payoffs entirely: blended weights equal normalised raw weights
    res1 = measures.cohesion_centrality(g, alpha=1.0)
    w1 = np.asarray(res1.meta["blended_weights"])
    assert np.allclose(w1, np.full(g.m, 1.0 / g.m), atol=1e-12)


def test_cohesion_banzhaf_and_mc_routes():
    g = tailed_triangle5()
    sh = measures.cohesion_centrality(g, index="shapley")
    bz = measures.cohesion_centrality(g, index="banzhaf")
    assert not np.allclose(sh.values, bz.values, atol=1e-9)
    mc = measures.cohesion_centrality(g, samples=20000, seed=3)
    pay_mc = np.asarray(mc.meta["edge_payoffs"])
    pay_ex = np.asarray(sh.meta["edge_payoffs"])
    assert np.max(np.abs(pay_mc - pay_ex)) < 0.3
    again = measures.cohesion_centrality(g, samples=20000, seed=3)
    assert np.array_equal(mc.values, again.values)


def test_cohesion_closeness_base_requires_positive_weights():
    g = tailed_triangle5()
    res = measures.cohesion_centrality(g, base="closeness", alpha=0.5)
    assert np.all(res.values > 0)
    res_b = measures.cohesion_centrality(g, base="betweenness", alpha=0.5)
    assert res_b.values.shape == (5,)


def test_grofman_owen_counts_and_normalisation():
    g = tailed_triangle5()
    res = measures.grofman_owen(g)
    assert np.allclose(res.values, [0, 0.5, 0.5, 0, 0], atol=1e-12)
    assert res.meta["total_swings"] == 24
    norm = measures.grofman_owen(g, normalized=True)
    assert np.allclose(norm.values, np.asarray(res.meta["swings"]) / 16.0, atol=1e-12)
    withend = measures.grofman_owen(g, count_endpoint_swings=True)
    assert withend.meta["total_swings"] > 24


def test_grofman_owen_star_center_takes_all():
    g = star(4)
    res = measures.grofman_owen(g)
    assert np.allclose(res.values, [1, 0, 0, 0, 0], atol=1e-12)


def test_kt_allocation_undirected_equals_myerson():
    rng = np.random.default_rng(49)
    g = random_connected_graph(rng, 5, extra=2)
    table = rng.normal(size=32)
    table[0] = 0.0
    game = Game(5, lambda m: float(table[m]))
    kt = measures.kt_allocation(g, game).values
    mv = measures.myerson_dfs(g, game).values
    assert np.allclose(kt, mv, atol=1e-9)


def test_attachment_routes_agree_and_detect_cut_nodes():
    for g in (simple5(), tailed_triangle5(), spider9()):
        a = measures.attachment_centrality(g).values
        b = measures.attachment_centrality(g, method="direct").values
        assert np.allclose(a, b, atol=1e-9)
    g = spider9()
    vals = measures.attachment_centrality(g).values
    assert vals[0] == max(vals)          # hub holds the legs together
    assert np.allclose(vals.sum(), 2.0 * (9 - 1), atol=1e-9)


def test_connectivity_centrality_concepts():
    g = tailed_triangle5()
    sh = measures.connectivity_centrality(g).values
    assert abs(sh.sum() - 1.0) < 1e-9    # f == 1 and the graph is connected
    semi = measures.connectivity_centrality(g, concept="semivalue", beta=shapley_beta(5)).values
    assert np.allclose(semi, sh, atol=1e-9)
    est = measures.connectivity_centrality(g, concept="mc", samples=20000, seed=9)
    assert np.all(np.abs(est.values - sh) <= 4.0 * est.stderr + 1e-12)
    custom = measures.connectivity_centrality(g, f=SQ).values
    assert abs(custom.sum() - 25.0) < 1e-9


def test_vl_control_fixture_and_star():
    res = measures.vl_control(tailed_triangle5())
    assert np.allclose(res.values, [0, 0.5, 0.5, 0, 0], atol=1e-6)
    assert res.meta["kkt_residual"] <= 1e-8
    assert res.meta["proper_residual"] <= 1e-6
    hub = measures.vl_control(star(4))
    assert np.allclose(hub.values, [1, 0, 0, 0, 0], atol=1e-6)


def test_vl_control_beats_simplex_grid():
    # coarse grid certificate: no grid point scores a higher product
    g = simple5()
    res = measures.vl_control(g)
    m_rows = np.eye(5)
    for u, v in g.edges():
        m_rows[u, v] = m_rows[v, u] = 1.0

    def objective(x):
        y = m_rows @ x
        return -np.inf if np.any(y <= 0) else float(np.sum(np.log(y)))

    # slack covers the 1e-8 KKT stopping tolerance of the solver
    best = objective(res.values)
    step = 0.1
    k = int(round(1.0 / step))
    from itertools import combinations_with_replacement

    for c in combinations_with_replacement(range(5), k):
        x = np.bincount(np.asarray(c), minlength=5) * step
        assert objective(x) <= best + 1e-6


def test_vl_control_iteration_cap_raises():
    with pytest.raises(ConvergenceError):
        measures.vl_control(tailed_triangle5(), tolerance=1e-13, max_iters=3)


def test_owen_degree_exact_and_mc():
    g = sample9()
    comms = [nodes_mask([0, 1, 2]), nodes_mask([3, 4, 8]), nodes_mask([5, 6, 7])]
    got = measures.owen_degree(g, comms).values
    want = owen_value(vf.group_degree(g), comms).values
    assert np.allclose(got, want, atol=1e-12)
    est = measures.owen_degree(g, comms, mode="mc", samples=20000, seed=13)
    assert np.all(np.abs(est.values - want) <= 4.0 * est.stderr + 1e-12)
    again = measures.owen_degree(g, comms, mode="mc", samples=20000, seed=13)
    assert np.array_equal(est.values, again.values)
