"""Shared random-instance builders for the seeded property tests."""

from __future__ import annotations

import numpy as np

from gtcentrality.games import Game, game_from_table
from gtcentrality.graph import Graph


def random_graph(rng, n: int, p: float = 0.4, directed: bool = False,
                 weighted: bool = False) -> Graph:
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v or (not directed and u > v):
                continue
            if rng.random() < p:
                if weighted:
                    edges.append((u, v, float(rng.uniform(0.5, 3.0))))
                else:
                    edges.append((u, v))
    return Graph(n, edges, directed=directed)


def random_connected_graph(rng, n: int, extra: int = 2, weighted: bool = False) -> Graph:
    # random spanning tree plus a few chords
    edges = set()
    order = rng.permutation(n)
    for i in range(1, n):
        u, v = int(order[rng.integers(0, i)]), int(order[i])
        edges.add((min(u, v), max(u, v)))
    tries = 0
    while len(edges) < min(n * (n - 1) // 2, n - 1 + extra) and tries < 50:
        u, v = int(rng.integers(0, n)), int(rng.integers(0, n))
        if u != v:
            edges.add((min(u, v), max(u, v)))
        tries += 1
    if weighted:
        return Graph(n, [(u, v, float(rng.uniform(0.5, 3.0))) for u, v in sorted(edges)])
    return Graph(n, sorted(edges))


def random_game(rng, n: int, scale: float = 2.0) -> Game:
    table = rng.normal(0.0, scale, size=1 << n)
    table[0] = 0.0
    return game_from_table(table)


def random_monotone_game(rng, n: int) -> Game:
    # non-negative dividends give a monotone (indeed convex) game
    from gtcentrality.games import from_dividends

    div = rng.uniform(0.0, 1.0, size=1 << n)
    div[0] = 0.0
    return game_from_table(from_dividends(div))
