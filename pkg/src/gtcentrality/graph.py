"""Graph container and the combinatorial primitives everything else builds on.

Nodes are integers ``0..n-1``; an optional label list maps them back to
external names.  Coalitions of nodes are plain Python ints used as bitsets,
which caps the coalition-game machinery at 64 nodes (large graphs are only
touched by the vectorised fast paths, which never materialise coalitions).
"""

from __future__ import annotations

import heapq
import itertools
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphError, SizeLimitError

INF = math.inf

# Absolute tolerance when comparing weighted path lengths for equality.
# Weighted geodesic counting treats lengths within TIE_TOL as ties.
TIE_TOL = 1e-9

MASK_NODE_LIMIT = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_nodes(mask: int) -> Iterator[int]:
    """Yield the node ids set in a coalition bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def nodes_mask(nodes: Iterable[int]) -> int:
    out = 0
    for v in nodes:
        out |= 1 << v
    return out


class Graph:
    """A simple finite graph, directed or undirected, with positive weights.

    Undirected edges are stored in both directions; ``edges()`` reports each
    one once.  Parallel edges and self-loops are rejected.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple],
        directed: bool = False,
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise GraphError("node count must be non-negative")
        if labels is not None and len(labels) != n:
            raise GraphError("label list does not match node count")
        self.n = n
        self.directed = directed
        self.labels = list(labels) if labels is not None else [str(v) for v in range(n)]
        self._adj: list[list[int]] = [[] for _ in range(n)]
        self._radj: list[list[int]] = [[] for _ in range(n)]
        self._w: dict[tuple[int, int], float] = {}
        self._edge_list: list[tuple[int, int]] = []
        for e in edges:
            if len(e) == 2:
                u, v = e
                w = 1.0
            else:
                u, v, w = e
            self._add_edge(int(u), int(v), float(w))
        self._dist_cache: dict[int, np.ndarray] = {}
        self._paths_cache = None
        self._nbr_masks: list[int] | None = None

    def _add_edge(self, u: int, v: int, w: float) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) references unknown node")
        if u == v:
            raise GraphError(f"self-loop at node {self.labels[u]}")
        if w <= 0:
            raise GraphError(f"edge ({self.labels[u]},{self.labels[v]}) has non-positive weight")
        if (u, v) in self._w:
            raise GraphError(f"duplicate edge ({self.labels[u]},{self.labels[v]})")
        self._w[(u, v)] = w
        self._adj[u].append(v)
        self._radj[v].append(u)
        self._edge_list.append((u, v))
        if not self.directed:
            if (v, u) in self._w:
                raise GraphError(f"duplicate edge ({self.labels[u]},{self.labels[v]})")
            self._w[(v, u)] = w
            self._adj[v].append(u)
            self._radj[u].append(v)

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edge_list)

    def edges(self) -> list[tuple[int, int]]:
        """Each stored edge once, in insertion order."""
        return list(self._edge_list)

    def neighbors(self, v: int) -> list[int]:
        """Out-neighbours of v (all neighbours when undirected)."""
        self._check_node(v)
        return list(self._adj[v])

    def in_neighbors(self, v: int) -> list[int]:
        self._check_node(v)
        return list(self._radj[v])

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self._adj], dtype=np.int64)

    def weight(self, u: int, v: int) -> float:
        try:
            return self._w[(u, v)]
        except KeyError:
            raise GraphError(f"no edge ({self.labels[u]},{self.labels[v]})") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._w

    @property
    def unit_weights(self) -> bool:
        return all(w == 1.0 for w in self._w.values())

    def _check_node(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"unknown node id {v}")

    def _check_mask_support(self) -> None:
        if self.n > MASK_NODE_LIMIT:
            raise SizeLimitError(
                f"coalition bitsets support at most {MASK_NODE_LIMIT} nodes, graph has {self.n}"
            )

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"unknown node label {label!r}") from None

    # -- neighbourhood masks ----------------------------------------------

    def neighbor_masks(self) -> list[int]:
        """Per-node out-neighbour bitmasks (cached)."""
        self._check_mask_support()
        if self._nbr_masks is None:
            self._nbr_masks = [nodes_mask(a) for a in self._adj]
        return self._nbr_masks

    def neighbor_set(self, coalition: int) -> int:
        """E(C): nodes outside C adjacent to (reachable in one hop from) C."""
        masks = self.neighbor_masks()
        out = 0
        for v in mask_nodes(coalition):
            out |= masks[v]
        return out & ~coalition

    # -- connectivity ------------------------------------------------------

    def components(self, coalition: int | None = None) -> list[int]:
        """Connected components of the subgraph induced by ``coalition``.

        Edge direction is ignored here; for directed graphs these are the
        weak components.  Returns a list of node bitmasks.
        """
        self._check_mask_support()
        full = (1 << self.n) - 1 if coalition is None else coalition
        seen = 0
        comps = []
        for v in mask_nodes(full):
            bit = 1 << v
            if seen & bit:
                continue
            comp = bit
            stack = [v]
            seen |= bit
            while stack:
                u = stack.pop()
                for w in itertools.chain(self._adj[u], self._radj[u]):
                    wb = 1 << w
                    if full & wb and not seen & wb:
                        seen |= wb
                        comp |= wb
                        stack.append(w)
            comps.append(comp)
        return comps

    def is_connected(self, coalition: int | None = None) -> bool:
        full = (1 << self.n) - 1 if coalition is None else coalition
        if full == 0:
            return True
        return len(self.components(full)) == 1

    def reachability(self) -> list[int]:
        """Bitmask of nodes reachable from each node by a path of >= 1 edge.

        A node reaches itself only when it lies on a directed cycle.
        """
        self._check_mask_support()
        out = []
        for s in range(self.n):
            seen = 0
            stack = list(self._adj[s])
            while stack:
                u = stack.pop()
                bit = 1 << u
                if seen & bit:
                    continue
                seen |= bit
                stack.extend(self._adj[u])
            out.append(seen)
        return out

    # -- shortest paths ----------------------------------------------------

    def shortest_distances(self, s: int) -> np.ndarray:
        """Single-source distances (Dijkstra; BFS on unit weights), +inf if unreachable."""
        self._check_node(s)
        if s in self._dist_cache:
            return self._dist_cache[s]
        dist = np.full(self.n, INF)
        dist[s] = 0.0
        if self.unit_weights:
            frontier = [s]
            d = 0
            while frontier:
                d += 1
                nxt = []
                for u in frontier:
                    for v in self._adj[u]:
                        if dist[v] == INF:
                            dist[v] = d
                            nxt.append(v)
                frontier = nxt
        else:
            pq = [(0.0, s)]
            done = [False] * self.n
            while pq:
                d, u = heapq.heappop(pq)
                if done[u]:
                    continue
                done[u] = True
                for v in self._adj[u]:
                    nd = d + self._w[(u, v)]
                    if nd < dist[v] - TIE_TOL:
                        dist[v] = nd
                        heapq.heappush(pq, (nd, v))
        self._dist_cache[s] = dist
        return dist

    def distance_matrix(self) -> np.ndarray:
        return np.vstack([self.shortest_distances(s) for s in range(self.n)])

    def shortest_path_dag(self, s: int):
        """Geodesic counts and predecessor structure from source ``s``.

        Returns (dist, sigma, preds, order): ``sigma[t]`` is the exact number
        of shortest s->t paths (Python ints, so counts cannot overflow),
        ``preds[t]`` the predecessors of t on geodesics, ``order`` the nodes
        sorted by distance (finite only).
        """
        dist = self.shortest_distances(s)
        sigma = [0] * self.n
        sigma[s] = 1
        preds: list[list[int]] = [[] for _ in range(self.n)]
        order = sorted((v for v in range(self.n) if dist[v] < INF), key=lambda v: dist[v])
        for v in order:
            for u in self._radj[v]:
                if dist[u] < INF and abs(dist[u] + self._w[(u, v)] - dist[v]) <= TIE_TOL:
                    preds[v].append(u)
                    sigma[v] += sigma[u]
        # the source has no predecessors; sigma[s] stays 1 (the empty path)
        sigma[s] = 1
        return dist, sigma, preds, order

    # -- enumeration -------------------------------------------------------

    def enumerate_connected_subsets(
        self, order: str = "degree_desc", budget: int | None = None
    ) -> Iterator[tuple[int, int]]:
        """Yield every connected node subset exactly once as (subset, neighbours).

        ``neighbours`` is E(S), the nodes outside S with an edge into S
        (direction ignored).  The include/forbid recursion roots each subset
        at its first node in ``order`` ("degree_desc" or "index"); a budget
        caps the number of subsets yielded before SizeLimitError.
        """
        self._check_mask_support()
        if order == "degree_desc":
            ranked = sorted(range(self.n), key=lambda v: (-len(self._adj[v]), v))
        elif order == "index":
            ranked = list(range(self.n))
        else:
            raise ValueError(f"unknown enumeration order {order!r}")
        und: list[int] = [0] * self.n
        for v in range(self.n):
            und[v] = nodes_mask(itertools.chain(self._adj[v], self._radj[v]))
        count = 0
        for i, root in enumerate(ranked):
            forbidden_base = nodes_mask(ranked[:i])
            stack = [(1 << root, und[root] & ~forbidden_base & ~(1 << root), forbidden_base)]
            while stack:
                subset, frontier, forbidden = stack.pop()
                count += 1
                if budget is not None and count > budget:
                    raise SizeLimitError(
                        f"connected-subset enumeration exceeded budget of {budget}"
                    )
                yield subset, self._subset_neighbors(subset, und)
                # expand by each frontier node in turn; forbid it for later branches
                forb = forbidden
                for v in mask_nodes(frontier):
                    bit = 1 << v
                    new_subset = subset | bit
                    new_frontier = (frontier | und[v]) & ~new_subset & ~forb
                    stack.append((new_subset, new_frontier, forb))
                    forb |= bit

    def _subset_neighbors(self, subset: int, und: list[int]) -> int:
        out = 0
        for v in mask_nodes(subset):
            out |= und[v]
        return out & ~subset

    def enumerate_simple_paths(
        self, min_edges: int = 1, budget: int | None = None
    ) -> Iterator[tuple[int, ...]]:
        """Yield every loop-free directed path with at least ``min_edges`` edges.

        On undirected graphs each edge acts as two arcs, so a path and its
        reverse are distinct.  Paths are tuples of node ids.
        """
        count = 0
        path = []

        def walk(v):
            nonlocal count
            path.append(v)
            if len(path) - 1 >= min_edges:
                count += 1
                if budget is not None and count > budget:
                    raise SizeLimitError(f"path enumeration exceeded budget of {budget}")
                yield tuple(path)
            for u in self._adj[v]:
                if u not in path:
                    yield from walk(u)
            path.pop()

        for s in range(self.n):
            yield from walk(s)

    # -- misc ---------------------------------------------------------------

    def subgraph_components_count(self, coalition: int) -> int:
        return len(self.components(coalition))

    def with_weights(self, weights: dict[tuple[int, int], float]) -> "Graph":
        """Copy of this graph with each stored edge reweighted."""
        new_edges = [(u, v, weights[(u, v)]) for (u, v) in self._edge_list]
        return Graph(self.n, new_edges, directed=self.directed, labels=self.labels)

    def __repr__(self) -> str:
        kind = "digraph" if self.directed else "graph"
        return f"<{kind} n={self.n} m={self.m}>"


def geodesic_tables(g: Graph):
    """All-pairs geodesic data: list over sources of (dist, sigma, preds, order)."""
    return [g.shortest_path_dag(s) for s in range(g.n)]
