"""Builders that turn a graph into a cooperative game.

Every group centrality and restricted game lives here: a builder takes a
Graph (plus parameters), precomputes what it needs eagerly, and returns a
Game whose characteristic function evaluates coalitions (bitmasks).  The
ordered-coalition restrictions return OrderedGames instead.
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np

from .errors import GraphError, NumericalError
from .games import Game, check_exact_limit, check_ordered_limit
from .graph import INF, Graph, geodesic_tables, mask_nodes, nodes_mask, popcount
from .solutions import OrderedGame, weighted_voting_game


# ---------------------------------------------------------------------------
# group centralities


def group_degree(g: Graph) -> Game:
    """v(S) = number of nodes outside S with an edge from S."""
    nbr = g.neighbor_masks()

    def fn(mask: int) -> float:
        out = 0
        for v in mask_nodes(mask):
            out |= nbr[v]
        return float(popcount(out & ~mask))

    return Game(g.n, fn, name="group_degree")


def _stress_tables(g: Graph):
    tables = geodesic_tables(g)
    return tables


def _paths_hitting(g: Graph, tables, s: int, mask: int) -> list:
    """Per-target counts of s->t geodesics that avoid the coalition entirely."""
    dist, sigma, preds, order = tables[s]
    avoid = [0] * g.n
    avoid[s] = 0 if (mask >> s) & 1 else 1
    for v in order:
        if v == s:
            continue
        if (mask >> v) & 1:
            avoid[v] = 0
        else:
            avoid[v] = sum(avoid[u] for u in preds[v])
    return avoid


def group_betweenness(g: Graph, include_endpoints: bool = False) -> Game:
    """v(S) = sum over node pairs of the fraction of geodesics S intersects.

    Ordered (s, t) pairs with s != t; by default only pairs with both
    endpoints outside S count (a coalition containing every node scores 0).
    """
    tables = _stress_tables(g)
    n = g.n

    def fn(mask: int) -> float:
        total = 0.0
        for s in range(n):
            if not include_endpoints and (mask >> s) & 1:
                continue
            dist, sigma, _, _ = tables[s]
            avoid = _paths_hitting(g, tables, s, mask)
            for t in range(n):
                if t == s or dist[t] == INF:
                    continue
                if not include_endpoints and (mask >> t) & 1:
                    continue
                total += (sigma[t] - avoid[t]) / sigma[t]
        return total

    return Game(n, fn, name="group_betweenness")


def group_stress(g: Graph, include_endpoints: bool = False) -> Game:
    """Raw geodesic counts instead of fractions.

    The endpoint-inclusive variant counts ordered pairs over all of V,
    including s = t (a node's trivial path counts when it is in S), which
    models interception at the endpoints themselves.
    """
    tables = _stress_tables(g)
    n = g.n

    def fn(mask: int) -> float:
        total = 0
        for s in range(n):
            if not include_endpoints and (mask >> s) & 1:
                continue
            dist, sigma, _, _ = tables[s]
            avoid = _paths_hitting(g, tables, s, mask)
            for t in range(n):
                if t == s:
                    if include_endpoints and (mask >> s) & 1:
                        total += 1
                    continue
                if dist[t] == INF:
                    continue
                if not include_endpoints and (mask >> t) & 1:
                    continue
                total += sigma[t] - avoid[t]
        return float(total)

    return Game(n, fn, name="group_stress")


def group_closeness(g: Graph) -> Game:
    """v(S) = sum of distances from S to every node outside S.

    Lower is more central; errors when some node is unreachable from S.
    """
    dm = g.distance_matrix()
    n = g.n

    def fn(mask: int) -> float:
        if mask == 0:
            return 0.0
        rows = list(mask_nodes(mask))
        best = dm[rows].min(axis=0)
        total = 0.0
        for v in range(n):
            if (mask >> v) & 1:
                continue
            if best[v] == INF:
                raise NumericalError(
                    f"node {g.labels[v]} unreachable from the coalition; "
                    "plain group closeness is undefined (use a decay variant)"
                )
            total += best[v]
        return total

    return Game(n, fn, name="group_closeness")


def _check_decay(f: Callable[[float], float], dm: np.ndarray) -> None:
    if abs(f(INF)) > 1e-12:
        raise ValueError("decay function must vanish at infinite distance")
    finite = np.unique(dm[np.isfinite(dm)])
    vals = [f(float(d)) for d in finite]
    if any(v < -1e-12 for v in vals):
        raise ValueError("decay function must be non-negative")
    if any(a < b - 1e-12 for a, b in zip(vals, vals[1:])):
        raise ValueError("decay function must be non-increasing in distance")


def group_closeness_general(g: Graph, f: Callable[[float], float]) -> Game:
    """v(S) = sum over v outside S of f(dist(S, v)); f must decay to 0 at inf."""
    dm = g.distance_matrix()
    _check_decay(f, dm)
    n = g.n

    def fn(mask: int) -> float:
        if mask == 0:
            return 0.0
        rows = list(mask_nodes(mask))
        best = dm[rows].min(axis=0)
        return float(sum(f(best[v]) for v in range(n) if not (mask >> v) & 1))

    return Game(n, fn, name="group_closeness_general")


# ---------------------------------------------------------------------------
# fringe influence games
#
# All five count affected nodes with coalition members always included, so
# the documented reductions hold pointwise on every coalition:
# fringe = cutoff(d=1) on unit weights, threshold(k) = influence(W == k) on
# unit weights, cutoff = decay with an indicator function.


def fringe_game(g: Graph) -> Game:
    """v(S) = |S together with every node one hop from S|."""
    nbr = g.neighbor_masks()

    def fn(mask: int) -> float:
        out = mask
        for v in mask_nodes(mask):
            out |= nbr[v]
        return float(popcount(out))

    return Game(g.n, fn, name="fringe")


def threshold_game(g: Graph, k: int) -> Game:
    """v(S) counts members plus nodes with at least k in-neighbours in S."""
    if k < 1:
        raise ValueError("threshold k must be at least 1")
    rnbr = [nodes_mask(g.in_neighbors(v)) for v in range(g.n)]
    n = g.n

    def fn(mask: int) -> float:
        count = popcount(mask)
        for v in range(n):
            if not (mask >> v) & 1 and popcount(rnbr[v] & mask) >= k:
                count += 1
        return float(count)

    return Game(n, fn, name=f"threshold({k})")


def harmonic_decay(dist: float) -> float:
    """1/(1+d): a positive non-increasing decay with a finite value at 0.

    The right drop-in for decay_game and sv_closeness_fast; the classic
    harmonic kernel 1/d is unusable there because member distance is 0.
    """
    return 0.0 if math.isinf(dist) else 1.0 / (1.0 + dist)


def cutoff_game(g: Graph, d_cutoff: float) -> Game:
    """v(S) counts nodes within distance d_cutoff of S (members at distance 0)."""
    if d_cutoff < 0:
        raise ValueError("cutoff distance must be non-negative")
    dm = g.distance_matrix()
    n = g.n

    def fn(mask: int) -> float:
        if mask == 0:
            return 0.0
        rows = list(mask_nodes(mask))
        best = dm[rows].min(axis=0)
        return float(int((best <= d_cutoff).sum()))

    return Game(n, fn, name=f"cutoff({d_cutoff})")


def decay_game(g: Graph, f: Callable[[float], float]) -> Game:
    """v(S) = sum over ALL nodes of f(dist(S, v)); members contribute f(0).

    The member-inclusive sibling of group_closeness_general: the two differ
    by exactly |S| * f(0), so rankings under any semivalue coincide.
    """
    dm = g.distance_matrix()
    _check_decay(f, dm)
    if not math.isfinite(f(0.0)):
        raise ValueError("decay function must be finite at distance 0")
    n = g.n

    def fn(mask: int) -> float:
        if mask == 0:
            return 0.0
        rows = list(mask_nodes(mask))
        best = dm[rows].min(axis=0)
        return float(sum(f(float(d)) for d in best))

    return Game(n, fn, name="decay")


def influence_game(g: Graph, w_cutoff) -> Game:
    """v(S) counts members plus nodes whose in-edge weight from S meets their cutoff.

    w_cutoff may be one number for every node, a per-node array, or a callable.
    """
    n = g.n
    if callable(w_cutoff):
        cut = [float(w_cutoff(v)) for v in range(n)]
    elif np.ndim(w_cutoff) == 0:
        cut = [float(w_cutoff)] * n
    else:
        cut = [float(w_cutoff[v]) for v in range(n)]
    if any(c <= 0 for c in cut):
        raise ValueError("influence cutoffs must be positive")
    in_edges = [[(u, g.weight(u, v)) for u in g.in_neighbors(v)] for v in range(n)]

    def fn(mask: int) -> float:
        count = popcount(mask)
        for v in range(n):
            if (mask >> v) & 1:
                continue
            w = sum(wt for u, wt in in_edges[v] if (mask >> u) & 1)
            if w >= cut[v] - 1e-12:
                count += 1
        return float(count)

    return Game(n, fn, name="influence")


# ---------------------------------------------------------------------------
# digraph score and diffusion games


def score_game(g: Graph) -> Game:
    """v(C) = number of distinct nodes dominated (pointed to) by C."""
    if not g.directed:
        raise GraphError("the score game needs a digraph")
    nbr = g.neighbor_masks()

    def fn(mask: int) -> float:
        out = 0
        for v in mask_nodes(mask):
            out |= nbr[v]
        return float(popcount(out))

    return Game(g.n, fn, name="score")


def lt_diffusion_game(g: Graph, thresholds, weights=None) -> Game:
    """v(S) = nodes active at the fixed point of threshold activation from S.

    A node activates once the total weight on edges from active in-neighbours
    reaches its threshold; thresholds must be positive (inf = never activates).
    """
    n = g.n
    theta = [float(thresholds)] * n if np.isscalar(thresholds) else [float(t) for t in thresholds]
    if len(theta) != n:
        raise ValueError(f"need {n} thresholds")
    if any(t <= 0 for t in theta):
        raise ValueError("thresholds must be positive")
    in_edges = []
    for v in range(n):
        if weights is None:
            in_edges.append([(u, g.weight(u, v)) for u in g.in_neighbors(v)])
        else:
            in_edges.append([(u, float(weights[(u, v)])) for u in g.in_neighbors(v)])

    def fn(mask: int) -> float:
        active = mask
        changed = True
        while changed:
            changed = False
            for v in range(n):
                if (active >> v) & 1:
                    continue
                w = sum(wt for u, wt in in_edges[v] if (active >> u) & 1)
                if w >= theta[v] - 1e-12:
                    active |= 1 << v
                    changed = True
        return float(popcount(active))

    return Game(n, fn, name="lt_diffusion")


def weighted_voting(weights: Sequence[float], quota: float) -> Game:
    """Weighted majority game; quota must be attainable by the grand coalition."""
    total = float(np.sum(np.asarray(weights, dtype=np.float64)))
    if not 0 < quota <= total:
        raise ValueError("quota must satisfy 0 < quota <= total weight")
    return weighted_voting_game(weights, quota)


def covering_game(g: Graph) -> Game:
    """v(S) counts members whose whole neighbourhood lies inside S."""
    nbr = g.neighbor_masks()
    n = g.n

    def fn(mask: int) -> float:
        return float(sum(1 for v in mask_nodes(mask) if nbr[v] & ~mask == 0))

    return Game(n, fn, name="covering")


# ---------------------------------------------------------------------------
# restricted games


def _as_fn(game) -> Callable[[int], float]:
    return game if callable(game) else game.__call__


def myerson_restriction(game, g: Graph) -> Game:
    """Graph-restricted game: disconnected coalitions split into components."""
    base = _as_fn(game)

    def fn(mask: int) -> float:
        comps = g.components(mask)
        if len(comps) == 1:
            return float(base(mask))
        return float(sum(base(k) for k in comps))

    return Game(g.n, fn, name="myerson_restriction")


def connectivity_game(g: Graph, f: Callable[[int], float] | None = None) -> Game:
    """f(S) on connected coalitions, 0 elsewhere (f defaults to 1)."""
    val = f if f is not None else (lambda mask: 1.0)

    def fn(mask: int) -> float:
        if mask == 0:
            return 0.0
        return float(val(mask)) if g.is_connected(mask) else 0.0

    return Game(g.n, fn, name="connectivity")


def attachment_game(g: Graph) -> Game:
    """v(C) = 2 * (|C| - number of components of C); always an even integer."""

    def fn(mask: int) -> float:
        return 2.0 * (popcount(mask) - len(g.components(mask)))

    return Game(g.n, fn, name="attachment")


# -- directed restriction with informational coordinators -------------------


def _within_reach(g: Graph, mask: int) -> dict[int, int]:
    """reach[v] = members of mask reachable from v inside the induced subgraph."""
    reach = {}
    for v in mask_nodes(mask):
        seen = 0
        stack = [u for u in g.neighbors(v) if (mask >> u) & 1]
        while stack:
            u = stack.pop()
            bit = 1 << u
            if seen & bit:
                continue
            seen |= bit
            stack.extend(w for w in g.neighbors(u) if (mask >> w) & 1)
        reach[v] = seen
    return reach


def weakly_connected(g: Graph, mask: int, _cache: dict | None = None) -> bool:
    """True iff some member is reachable from every other member within the set.

    The reachable member acts as an informational coordinator; singletons
    qualify vacuously.  Evaluated inside the induced subgraph.
    """
    if mask == 0:
        return False
    if mask & (mask - 1) == 0:
        return True
    reach = _within_reach(g, mask)
    for v in mask_nodes(mask):
        bit = 1 << v
        if all(reach[u] & bit for u in mask_nodes(mask ^ bit)):
            return True
    return False


class _KTSupport:
    """Caches weak-connectivity verdicts and coarsest decompositions per graph."""

    def __init__(self, g: Graph):
        self.g = g
        self.wc: dict[int, bool] = {}

    def is_wc(self, mask: int) -> bool:
        hit = self.wc.get(mask)
        if hit is None:
            hit = weakly_connected(self.g, mask)
            self.wc[mask] = hit
        return hit

    def coarsest_partitions(self, mask: int) -> list[list[int]]:
        """All partitions of mask into weakly connected parts with no two
        parts mergeable into a weakly connected set."""
        out: list[list[int]] = []
        parts: list[int] = []

        def rec(rest: int):
            if rest == 0:
                out.append(list(parts))
                return
            low = rest & -rest
            # candidate next part: any weakly connected subset holding the
            # lowest remaining node, unmergeable with every chosen part
            sub = rest
            while True:
                if sub & low:
                    cand = sub
                    if self.is_wc(cand) and all(
                        not self.is_wc(cand | p) for p in parts
                    ):
                        parts.append(cand)
                        rec(rest ^ cand)
                        parts.pop()
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            return

        rec(mask)
        return out


def kt_restriction(game, g: Graph) -> Game:
    """Directed counterpart of the Myerson restriction.

    v(S) = best total over the coarsest splits of S into weakly connected
    parts.  On undirected graphs the unique coarsest split is the component
    decomposition, so this coincides with the Myerson restriction.
    """
    if g.n > 16:
        check_exact_limit(g.n, 16, what="coarsest-partition search")
    base = _as_fn(game)
    support = _KTSupport(g)

    def fn(mask: int) -> float:
        best = -INF
        for parts in support.coarsest_partitions(mask):
            best = max(best, sum(base(p) for p in parts))
        return float(best)

    game_out = Game(g.n, fn, name="kt_restriction")
    game_out.kt_support = support
    return game_out


# -- ordered-coalition restrictions -----------------------------------------


def ag_digraph_restriction(game, g: Graph) -> OrderedGame:
    """Ordered-coalition game: worth = sum of v over maximal path segments.

    A segment is a maximal run of consecutive players joined by arcs of the
    digraph, scanned in coalition order.
    """
    if not g.directed:
        raise GraphError("the accessibility restriction needs a digraph")
    base = _as_fn(game)
    has_edge = g.has_edge

    def fn(seq: tuple) -> float:
        total = 0.0
        seg = 1 << seq[0]
        for a, b in zip(seq, seq[1:]):
            if has_edge(a, b):
                seg |= 1 << b
            else:
                total += base(seg)
                seg = 1 << b
        return total + base(seg)

    return OrderedGame(g.n, fn=fn, name="ag_restriction")


def pozo_digraph_restriction(game, g: Graph, budget: int | None = None) -> OrderedGame:
    """Ordered-coalition game keeping only dividends of simple paths.

    The generalised dividend of an ordered coalition equals the plain
    Harsanyi dividend of its node set when the sequence traces a simple
    path of the digraph (singletons count), and 0 otherwise.
    """
    if not g.directed:
        raise GraphError("the path restriction needs a digraph")
    check_ordered_limit(g.n)
    base_game = game if isinstance(game, Game) else Game(g.n, game)
    div = base_game.dividends()
    dividends: dict[tuple, float] = {}
    for v in range(g.n):
        d = float(div[1 << v])
        if d != 0.0:
            dividends[(v,)] = d
    for path in g.enumerate_simple_paths(min_edges=1, budget=budget):
        d = float(div[nodes_mask(path)])
        if d != 0.0:
            dividends[path] = d
    return OrderedGame(g.n, dividends=dividends, name="pozo_restriction")


# ---------------------------------------------------------------------------
# link (edge-player) games and cohesion


def link_value(game, g: Graph, edge_mask: int) -> float:
    """Raw worth of the grand node coalition when only these edges operate."""
    base = _as_fn(game)
    comps = _components_under(g, edge_mask)
    return float(sum(base(k) for k in comps))


def _components_under(g: Graph, edge_mask: int) -> list[int]:
    """Components of (V, selected edges), direction ignored."""
    edges = g.edges()
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for idx in mask_nodes(edge_mask):
        u, v = edges[idx]
        adj[u].append(v)
        adj[v].append(u)
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 0
        stack = [s]
        while stack:
            u = stack.pop()
            bit = 1 << u
            if comp & bit:
                continue
            comp |= bit
            stack.extend(adj[u])
        seen |= comp
        comps.append(comp)
    return comps


def link_game(game, g: Graph) -> Game:
    """Edge-player game: v(edge set) = restricted grand-coalition worth.

    Players are the edges of g in insertion order.  The constant worth of
    the empty edge set (all nodes isolated) is subtracted so the result is
    a proper game; marginal contributions are unaffected.
    """
    base = _as_fn(game)
    offset = float(sum(base(1 << v) for v in range(g.n)))

    def fn(edge_mask: int) -> float:
        return link_value(game, g, edge_mask) - offset

    return Game(g.m, fn, name="link_game")


def reach_counts(g: Graph, include_self: bool = False) -> np.ndarray:
    """Per-node count of nodes reachable by at least one edge (self optional)."""
    counts = np.zeros(g.n)
    for v, reach in enumerate(g.reachability()):
        bit = 1 << v
        r = (reach | bit) if include_self else (reach & ~bit)
        counts[v] = popcount(r)
    return counts


def cohesion_game(g: Graph, include_self: bool = False) -> Game:
    """Additive game: a coalition's worth is the sum of its members' reach."""
    counts = reach_counts(g, include_self)

    def fn(mask: int) -> float:
        return float(sum(counts[v] for v in mask_nodes(mask)))

    return Game(g.n, fn, name="cohesion")


def cohesion_link_game(g: Graph, include_self: bool = False) -> Game:
    """Edge-player game scoring total reach inside the surviving edge set.

    For undirected graphs every component of size k contributes k(k-1)
    (k^2 with include_self); removing a bridge strictly lowers the worth.
    """
    edges = g.edges()
    n = g.n

    def fn(edge_mask: int) -> float:
        adj: list[list[int]] = [[] for _ in range(n)]
        for idx in mask_nodes(edge_mask):
            u, v = edges[idx]
            adj[u].append(v)
            if not g.directed:
                adj[v].append(u)
        total = 0
        for s in range(n):
            seen = 0
            stack = list(adj[s])
            while stack:
                u = stack.pop()
                bit = 1 << u
                if seen & bit:
                    continue
                seen |= bit
                stack.extend(adj[u])
            if include_self:
                seen |= 1 << s
            else:
                seen &= ~(1 << s)
            total += popcount(seen)
        return float(total)

    return Game(g.m, fn, name="cohesion_link")


__all__ = [
    "ag_digraph_restriction",
    "attachment_game",
    "cohesion_game",
    "cohesion_link_game",
    "connectivity_game",
    "covering_game",
    "cutoff_game",
    "decay_game",
    "fringe_game",
    "group_betweenness",
    "group_closeness",
    "group_closeness_general",
    "group_degree",
    "group_stress",
    "harmonic_decay",
    "influence_game",
    "kt_restriction",
    "link_game",
    "link_value",
    "lt_diffusion_game",
    "myerson_restriction",
    "pozo_digraph_restriction",
    "reach_counts",
    "score_game",
    "threshold_game",
    "weakly_connected",
    "weighted_voting",
]
