"""Small named graphs used across the test suite and the demos.

Each constructor returns a fresh Graph; values derived from these fixtures
are pinned in the tests, so the edge lists here are frozen.
"""

from __future__ import annotations

from .graph import Graph


def simple5() -> Graph:
    """Triangle a-b-d with pendant c on b and pendant e on d.  Nodes a..e."""
    return Graph(
        5,
        [(0, 1), (1, 2), (1, 3), (0, 3), (3, 4)],
        labels=list("abcde"),
    )


def delivery9() -> Graph:
    """Weighted parcel network: hubs a, b and a bypass hub c between two fans.

    Three left spokes l1..l3 and three right spokes r1..r3; the a-b corridor
    (length 6 end to end) ties with the c bypass for every left-right pair.
    """
    labels = ["a", "b", "c", "l1", "l2", "l3", "r1", "r2", "r3"]
    edges = [
        (0, 1, 2.0),
        (0, 3, 2.0),
        (0, 4, 2.0),
        (0, 5, 2.0),
        (1, 6, 2.0),
        (1, 7, 2.0),
        (1, 8, 2.0),
        (2, 3, 3.0),
        (2, 4, 3.0),
        (2, 5, 3.0),
        (2, 6, 3.0),
        (2, 7, 3.0),
        (2, 8, 3.0),
    ]
    return Graph(9, edges, labels=labels)


def chain5() -> Graph:
    """Directed chain 1->2->3->4 with a side feed 5->3."""
    return Graph(
        5,
        [(0, 1), (1, 2), (2, 3), (4, 2)],
        directed=True,
        labels=["1", "2", "3", "4", "5"],
    )


def tailed_triangle5() -> Graph:
    """Two tails hanging off a triangle edge: 1-2, 2-3, 2-4, 3-4, 3-5."""
    return Graph(
        5,
        [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)],
        labels=["1", "2", "3", "4", "5"],
    )


def spider9() -> Graph:
    """Hub with four 2-edge legs: v1 at the centre, leaves at distance 2."""
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)]
    return Graph(9, edges, labels=[f"v{i+1}" for i in range(9)])


def star(leaves: int, mode: str = "undirected") -> Graph:
    """Star on ``leaves``+1 nodes; node 0 is the centre.

    mode "out" points centre -> leaves, "in" the reverse.
    """
    if mode == "undirected":
        return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    if mode == "out":
        return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], directed=True)
    if mode == "in":
        return Graph(leaves + 1, [(i, 0) for i in range(1, leaves + 1)], directed=True)
    raise ValueError(f"unknown star mode {mode!r}")


def sample9() -> Graph:
    """9-node tree-with-one-cycle used for the classic-centrality checks.

    Degree sequence (1,1,4,2,3,2,2,2,1) for v1..v9; v3 and v5 are the two
    local hubs, v5-v6-v8-v7 closes the single cycle.
    """
    edges = [
        (0, 2),
        (1, 2),
        (2, 3),
        (2, 8),
        (3, 4),
        (4, 5),
        (4, 6),
        (5, 7),
        (6, 7),
    ]
    return Graph(9, edges, labels=[f"v{i+1}" for i in range(9)])


FIXTURES = {
    "simple5": simple5,
    "delivery9": delivery9,
    "chain5": chain5,
    "tailed_triangle5": tailed_triangle5,
    "spider9": spider9,
    "sample9": sample9,
}


__all__ = ["FIXTURES", "chain5", "delivery9", "sample9", "simple5", "spider9", "star", "tailed_triangle5"]
