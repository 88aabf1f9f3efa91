"""Game wrapper, dividend transform, structural predicates, size guards."""

import numpy as np
import pytest

from gtcentrality.errors import SizeLimitError
from gtcentrality.games import (
    EXACT_LIMIT,
    Game,
    additive_game,
    check_exact_limit,
    check_ordered_limit,
    dividend_transform,
    from_dividends,
    game_from_table,
    is_monotone,
    is_superadditive,
    unanimity_game,
)
from gtcentrality.graph import mask_nodes, popcount

from conftest import random_game


def test_empty_coalition_must_vanish():
    Game(3, lambda m: float(popcount(m)))
    with pytest.raises(ValueError):
        Game(3, lambda m: 1.0)


def test_table_and_memoisation_agree():
    calls = []

    def fn(mask):
        calls.append(mask)
        return float(popcount(mask)) ** 2

    g = Game(4, fn)
    assert g(0b0110) == 4.0
    assert g(0b0110) == 4.0
    assert calls.count(0b0110) == 1
    t = g.table()
    assert t[0b1111] == 16.0 and t[0] == 0.0
    # table takes over lookups afterwards
    assert g(0b0001) == 1.0


def test_dividend_transform_inverts():
    rng = np.random.default_rng(2)
    for n in (1, 3, 5):
        table = rng.normal(size=1 << n)
        table[0] = 0.0
        div = dividend_transform(table)
        back = from_dividends(div)
        assert np.allclose(back, table, atol=1e-12)


def test_dividends_definition_brute_force():
    rng = np.random.default_rng(5)
    n = 4
    table = rng.normal(size=1 << n)
    table[0] = 0.0
    div = dividend_transform(table)
    for s in range(1 << n):
        # d[S] = sum over subsets T of S of (-1)^{|S|-|T|} v(T)
        acc = 0.0
        t = s
        while True:
            acc += (-1.0) ** (popcount(s) - popcount(t)) * table[t]
            if t == 0:
                break
            t = (t - 1) & s
        assert abs(div[s] - acc) < 1e-10


def test_unanimity_game_dividends_are_a_basis_vector():
    u = unanimity_game(4, 0b0101)
    assert u(0b0101) == 1.0 and u(0b1111) == 1.0
    assert u(0b0100) == 0.0 and u(0b1010) == 0.0
    div = u.dividends()
    assert div[0b0101] == pytest.approx(1.0)
    div[0b0101] = 0.0
    assert np.allclose(div, 0.0)


def test_game_decomposes_into_unanimity_basis():
    rng = np.random.default_rng(9)
    game = random_game(rng, 4)
    div = game.dividends()
    recon = np.zeros(1 << 4)
    for s in range(1, 1 << 4):
        if div[s] == 0.0:
            continue
        u = unanimity_game(4, s)
        recon += div[s] * u.table()
    assert np.allclose(recon, game.table(), atol=1e-10)


def test_additive_game():
    g = additive_game([1.0, 2.0, 4.0])
    assert g(0b111) == 7.0 and g(0b101) == 5.0
    div = g.dividends()
    assert np.allclose(div[[0b001, 0b010, 0b100]], [1.0, 2.0, 4.0])
    assert abs(div[0b011]) < 1e-12 and abs(div[0b111]) < 1e-12


def test_monotone_and_superadditive_predicates():
    count = Game(3, lambda m: float(popcount(m)))
    assert is_monotone(count.table())
    assert is_superadditive(count.table())
    dip = game_from_table(np.array([0.0, 1.0, 1.0, 0.5]))
    assert not is_monotone(dip.table())
    assert not is_superadditive(dip.table())
    # sqrt game: monotone but subadditive across singletons
    root = Game(3, lambda m: float(popcount(m)) ** 0.5)
    assert is_monotone(root.table())
    assert not is_superadditive(root.table())


def test_size_guards():
    check_exact_limit(EXACT_LIMIT)
    with pytest.raises(SizeLimitError):
        check_exact_limit(EXACT_LIMIT + 1)
    check_exact_limit(30, limit=32)
    with pytest.raises(SizeLimitError):
        check_ordered_limit(11)
    check_ordered_limit(11, limit=12)
    big = Game(40, lambda m: float(popcount(m)))
    with pytest.raises(SizeLimitError):
        big.table()


def test_game_from_table_round_trip():
    rng = np.random.default_rng(13)
    table = rng.normal(size=8)
    table[0] = 0.0
    g = game_from_table(table)
    assert g.n == 3
    assert all(g(m) == table[m] for m in range(8))
