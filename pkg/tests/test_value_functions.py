"""Group value functions and restricted games, pinned values plus identities."""

import math

import numpy as np
import pytest

from gtcentrality import value_functions as vf
from gtcentrality.classic import betweenness_centrality
from gtcentrality.errors import GraphError, NumericalError
from gtcentrality.fixtures import chain5, delivery9, simple5, tailed_triangle5
from gtcentrality.games import Game, game_from_table
from gtcentrality.graph import Graph, nodes_mask, popcount
from gtcentrality.solutions import shapley_exact

from conftest import random_connected_graph, random_graph

SQ = lambda m: float(popcount(m)) ** 2


def mask(*idx):
    return nodes_mask(idx)


def test_group_betweenness_simple5_table_entries():
    g = simple5()
    gb = vf.group_betweenness(g)
    assert gb(mask(0, 1)) == 4.0
    assert gb(mask(1, 3)) == 6.0
    assert gb(mask(1)) == 6.0
    assert gb(g.grand if hasattr(g, "grand") else 31) == 0.0


def test_group_betweenness_singletons_equal_classic():
    rng = np.random.default_rng(31)
    for _ in range(8):
        g = random_graph(rng, int(rng.integers(3, 8)), 0.45,
                         weighted=bool(rng.integers(0, 2)))
        gb = vf.group_betweenness(g)
        bc = betweenness_centrality(g)
        assert all(abs(gb(1 << v) - bc[v]) < 1e-9 for v in range(g.n))


def test_group_betweenness_matches_geodesic_enumeration():
    # nu(S) = sum over ordered pairs outside S of the fraction of geodesics
    # hitting S anywhere strictly inside
    rng = np.random.default_rng(32)
    for _ in range(6):
        g = random_connected_graph(rng, int(rng.integers(3, 7)), extra=2)
        gb = vf.group_betweenness(g)
        dm = g.distance_matrix()
        paths = {}
        for s in range(g.n):
            for t in range(g.n):
                if s == t:
                    continue
                out = []

                def extend(path):
                    v = path[-1]
                    if v == t:
                        out.append(list(path))
                        return
                    for w in g.neighbors(v):
                        if dm[s, w] == dm[s, v] + 1 and dm[w, t] == dm[s, t] - dm[s, w]:
                            extend(path + [w])

                extend([s])
                paths[(s, t)] = out
        for m in range(1, 1 << g.n):
            want = 0.0
            for (s, t), plist in paths.items():
                if m & (1 << s) or m & (1 << t):
                    continue
                hit = sum(1 for p in plist if any(m & (1 << v) for v in p[1:-1]))
                want += hit / len(plist)
            assert abs(gb(m) - want) < 1e-9
        assert gb((1 << g.n) - 1) == 0.0


def test_group_stress_delivery9_inclusive_values():
    g = delivery9()
    gs = vf.group_stress(g, include_endpoints=True)
    singles = [gs(1 << v) for v in range(9)]
    assert singles == [51.0, 51.0, 43.0, 25.0, 25.0, 25.0, 25.0, 25.0, 25.0]
    assert gs(mask(0, 1)) == 70.0
    assert gs(mask(0, 2)) == 88.0
    assert gs(mask(1, 2)) == 88.0
    # interior-only variant has nothing left for the grand coalition
    assert vf.group_stress(g)((1 << 9) - 1) == 0.0


def test_group_degree_and_closeness_simple5():
    g = simple5()
    gd = vf.group_degree(g)
    assert gd(mask(1)) == 3.0
    assert gd(mask(1, 3)) == 3.0
    assert gd(31) == 0.0
    gc = vf.group_closeness(g)
    assert gc(mask(1)) == 5.0
    assert gc(31) == 0.0
    with pytest.raises(NumericalError):
        vf.group_closeness(Graph(3, [(0, 1)]))(mask(0))


def test_decay_game_extends_general_closeness_by_members():
    g = simple5()
    f = lambda d: math.exp(-d) if math.isfinite(d) else 0.0
    gcf = vf.group_closeness_general(g, f)
    dec = vf.decay_game(g, f)
    # member-inclusive form adds f(0)=1 per member
    assert all(abs(dec(m) - (gcf(m) + popcount(m))) < 1e-12 for m in range(1, 32))


def test_fringe_cutoff_threshold_degeneracies():
    g = simple5()
    fr = vf.fringe_game(g)
    cut1 = vf.cutoff_game(g, 1.0)
    th1 = vf.threshold_game(g, 1)
    assert all(fr(m) == cut1(m) == th1(m) for m in range(1, 32))
    assert fr(mask(4)) == 2.0
    th2 = vf.threshold_game(g, 2)
    inf2 = vf.influence_game(g, 2.0)
    assert all(th2(m) == inf2(m) for m in range(1, 32))
    assert th2(mask(0, 3)) == 3.0


def test_influence_game_weight_forms_agree():
    g = simple5()
    a = vf.influence_game(g, 1.0)
    b = vf.influence_game(g, [1.0] * 5)
    c = vf.influence_game(g, lambda v: 1.0)
    assert all(a(m) == b(m) == c(m) for m in range(1, 32))


def test_harmonic_decay_shape():
    assert vf.harmonic_decay(0.0) == 1.0
    assert vf.harmonic_decay(1.0) == 0.5
    assert vf.harmonic_decay(math.inf) == 0.0


def test_score_game_chain5():
    g = chain5()
    sc = vf.score_game(g)
    assert sc(mask(0)) == 1.0
    assert sc(mask(2)) == 1.0
    assert sc(mask(1, 4)) == 1.0   # both arcs point at the same node
    assert sc(mask(3)) == 0.0      # sink dominates nobody
    with pytest.raises(GraphError):
        vf.score_game(simple5())


def test_lt_diffusion_cascade():
    p3 = Graph(3, [(0, 1), (1, 2)], directed=True)
    lt = vf.lt_diffusion_game(p3, 1.0)
    assert lt(mask(0)) == 3.0
    assert lt(mask(2)) == 1.0
    blocked = vf.lt_diffusion_game(p3, [1.0, math.inf, 1.0])
    assert blocked(mask(0)) == 1.0


def test_covering_game_counts_dominated_nodes():
    g = simple5()
    cov = vf.covering_game(g)
    assert cov(31) == 5.0
    assert cov(mask(1, 2)) == 1.0
    assert cov(mask(0)) == 0.0


def test_myerson_restriction_splits_into_components():
    g = simple5()
    sq = Game(5, SQ)
    my = vf.myerson_restriction(sq, g)
    assert my(mask(2, 4)) == 2.0
    assert my(mask(0, 1, 2)) == 9.0
    assert my(31) == 25.0
    # identity on connected coalitions, random games
    rng = np.random.default_rng(33)
    table = rng.normal(size=32)
    table[0] = 0.0
    base = game_from_table(table)
    res = vf.myerson_restriction(base, g)
    for m in range(1, 32):
        if g.is_connected(m):
            assert res(m) == base(m)
        else:
            assert abs(res(m) - sum(base(c) for c in g.components(m))) < 1e-12


def test_connectivity_and_attachment_games():
    g = simple5()
    cn = vf.connectivity_game(g)
    assert cn(mask(0, 1)) == 1.0 and cn(mask(2, 4)) == 0.0
    at = vf.attachment_game(g)
    assert at(mask(0, 1, 3)) == 4.0   # 2(|C| - #components) = 2(3-1)
    assert at(mask(2, 4)) == 0.0


def test_weak_connectivity_chain5():
    g = chain5()
    assert vf.weakly_connected(g, mask(0, 1))
    assert not vf.weakly_connected(g, mask(0, 2))
    assert not vf.weakly_connected(g, mask(3, 4))
    assert vf.weakly_connected(g, mask(2, 3, 4))
    assert vf.weakly_connected(g, 31)
    assert vf.weakly_connected(g, mask(1))   # singletons vacuously coordinate


def test_kt_restriction_chain5_frozen_values():
    g = chain5()
    kt = vf.kt_restriction(Game(5, SQ), g)
    assert kt(mask(0, 2)) == 2.0
    assert kt(mask(0, 1)) == 4.0
    sv = shapley_exact(kt).values
    assert np.allclose(sv, [11 / 3, 6, 23 / 3, 23 / 6, 23 / 6], atol=1e-12)
    assert abs(sv.sum() - 25.0) < 1e-12


def test_kt_equals_myerson_on_undirected_graphs():
    rng = np.random.default_rng(34)
    for _ in range(6):
        g = random_connected_graph(rng, int(rng.integers(2, 6)), extra=2)
        table = rng.normal(size=1 << g.n)
        table[0] = 0.0
        base = game_from_table(table)
        m1 = vf.myerson_restriction(base, g).table()
        m2 = vf.kt_restriction(base, g).table()
        assert np.allclose(m1, m2, atol=1e-12)


def test_ag_restriction_orders_matter():
    g = chain5()
    ag = vf.ag_digraph_restriction(Game(5, SQ), g)
    assert ag.value((0, 1, 2, 4)) == 10.0
    assert ag.value((0, 1, 2, 3)) == 16.0
    assert ag.value((4, 2, 3)) == 9.0
    assert ag.value((1, 0)) == 2.0   # the 1->2 arc is one way


def test_pozo_restriction_path_dividends():
    g = chain5()
    pz = vf.pozo_digraph_restriction(Game(5, SQ), g)
    expected = {(v,): 1.0 for v in range(5)}
    for arc in [(0, 1), (1, 2), (2, 3), (4, 2)]:
        expected[arc] = 2.0
    assert pz.dividends() == expected


def test_link_game_and_cohesion_link_game():
    g = simple5()
    sq = Game(5, SQ)
    lg = vf.link_game(sq, g)
    assert lg(0) == 0.0
    assert lg((1 << 5) - 1) == 20.0
    assert abs(shapley_exact(lg).values.sum() - 20.0) < 1e-12
    assert vf.link_value(sq, g, 31) == 25.0

    tt = tailed_triangle5()
    cl = vf.cohesion_link_game(tt)
    assert cl((1 << tt.m) - 1) == 20.0
    sv = shapley_exact(cl).values
    assert np.allclose(sv, [5.1, 3.6, 3.1, 3.1, 5.1], atol=1e-12)
    cg = vf.cohesion_game(tt)
    assert cg(31) == 20.0
    assert np.allclose(shapley_exact(cg).values, vf.reach_counts(tt), atol=1e-12)


def test_weighted_voting_builder_validates_quota():
    with pytest.raises(ValueError):
        vf.weighted_voting([1, 2, 3], 7)
    wv = vf.weighted_voting([1, 2, 3], 4)
    assert wv(mask(1, 2)) == 1.0
    assert wv(mask(0)) == 0.0
