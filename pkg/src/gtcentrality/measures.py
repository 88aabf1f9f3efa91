"""Node centrality measures built from cooperative games on graphs.

The universal recipe is compose(): build a group game from the graph, hand
it to a solution concept, read node scores off the payoff vector.  Next to
it live the fast closed-form algorithms that shortcut that composition for
specific games (degree, fringe, distance-decay, dominance), the restricted
game measures (Myerson, accessibility, path dividends, coarsest-split
allocation, attachment, cohesion), the path-swing Banzhaf measure, and the
resource-allocation control measure.  Every fast path is certified against
compose() in the test suite; compose() is always the authority.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import classic
from .errors import GraphError, NumericalError, ConvergenceError
from .games import Game, check_exact_limit, check_ordered_limit, game_from_table
from .graph import INF, Graph, mask_nodes, nodes_mask, popcount
from .solutions import (
    MC_CHUNK,
    PayoffVector,
    _check_distribution,
    banzhaf,
    banzhaf_beta,
    coalitional_semivalue,
    mc_estimate,
    owen_value,
    psi_alpha,
    semivalue_exact,
    shapley_exact,
    weighted_shapley,
)
from .value_functions import (
    attachment_game,
    cohesion_link_game,
    connectivity_game,
    covering_game,
    group_betweenness,
    group_degree,
    influence_game,
    kt_restriction,
    link_game,
    pozo_digraph_restriction,
)


@dataclass
class CentralityResult:
    """Per-node scores with provenance.

    method is "exact", "closed-form" or "mc"; mc results carry sample count,
    seed and per-node standard errors.  meta holds measure-specific extras
    (swing totals, certificates, iteration counts).
    """

    labels: list
    values: np.ndarray
    method: str = "exact"
    samples: int | None = None
    seed: int | None = None
    stderr: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def __iter__(self):
        return iter(self.values)

    def __array__(self, dtype=None):
        return np.asarray(self.values, dtype=dtype)

    def by_label(self) -> dict:
        return {lab: float(v) for lab, v in zip(self.labels, self.values)}


def _from_payoff(g: Graph, pv: PayoffVector, **meta) -> CentralityResult:
    return CentralityResult(
        labels=list(g.labels),
        values=np.asarray(pv.values, dtype=np.float64),
        method=pv.method,
        samples=pv.samples,
        seed=pv.seed,
        stderr=None if pv.stderr is None else np.asarray(pv.stderr),
        meta=meta,
    )


def _plain(g: Graph, values, method: str = "exact", **meta) -> CentralityResult:
    return CentralityResult(
        labels=list(g.labels),
        values=np.asarray(values, dtype=np.float64),
        method=method,
        meta=meta,
    )


# ---------------------------------------------------------------------------
# the universal composition


def compose(psi, phi, g: Graph) -> CentralityResult:
    """Apply solution concept phi to the group game psi(g).

    psi: Graph -> Game (any builder from value_functions, or your own);
    phi: Game -> PayoffVector (any concept from solutions).  This is the
    slow-but-certain route every specialised algorithm is checked against.
    """
    game = psi(g)
    pv = phi(game)
    if not isinstance(pv, PayoffVector):
        pv = PayoffVector(values=np.asarray(pv, dtype=np.float64))
    return _from_payoff(g, pv, game=game.name)


# ---------------------------------------------------------------------------
# Myerson value via connected-subset enumeration


def myerson_dfs(g: Graph, game, budget: int | None = None, stats: dict | None = None) -> PayoffVector:
    """Shapley value of the graph-restricted game, one connected subset at a time.

    For every connected S with neighbour set X, nu(S) is credited to members
    with weight (|S|-1)!|X|!/(|S|+|X|)! and debited from neighbours with
    weight |S|!(|X|-1)!/(|S|+|X|)!.  Runs in O(#connected subsets * |E|)
    regardless of how many subsets are disconnected.
    """
    base = game if callable(game) else game.__call__
    mv = np.zeros(g.n)
    coeff: dict[tuple[int, int], tuple[float, float]] = {}
    fact = math.factorial
    count = 0
    evals = 0
    for s_mask, x_mask in g.enumerate_connected_subsets(order="degree_desc", budget=budget):
        count += 1
        val = float(base(s_mask))
        evals += 1
        if val == 0.0:
            continue
        s = popcount(s_mask)
        x = popcount(x_mask)
        pair = coeff.get((s, x))
        if pair is None:
            denom = fact(s + x)
            plus = float(Fraction(fact(s - 1) * fact(x), denom))
            minus = float(Fraction(fact(s) * fact(x - 1), denom)) if x else 0.0
            pair = (plus, minus)
            coeff[(s, x)] = pair
        for v in mask_nodes(s_mask):
            mv[v] += pair[0] * val
        for v in mask_nodes(x_mask):
            mv[v] -= pair[1] * val
    if stats is not None:
        stats["subsets"] = count
        stats["evaluations"] = evals
    return PayoffVector(values=mv, method="exact")


def gomez_centrality(g: Graph, game) -> CentralityResult:
    """Myerson value minus plain Shapley value: power gained from position."""
    base = game if isinstance(game, Game) else Game(g.n, game)
    mv = myerson_dfs(g, base)
    sv = shapley_exact(base)
    return _plain(g, mv.values - sv.values)


# ---------------------------------------------------------------------------
# fast Shapley formulas for the influence-game family


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    if g.m == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    e = np.asarray(g.edges(), dtype=np.int64)
    return e[:, 0], e[:, 1]


def sv_degree_fast(g: Graph) -> CentralityResult:
    """Shapley value of the fringe game in O(|V|+|E|).

    Each node u hands out 1/(1+indeg(u)) to itself and to every node that
    can reach it in one step: exactly the nodes whose presence can claim u.
    """
    us, vs = _edge_arrays(g)
    indeg = np.zeros(g.n, dtype=np.int64)
    np.add.at(indeg, vs, 1)
    if not g.directed:
        np.add.at(indeg, us, 1)
    share = 1.0 / (1.0 + indeg)
    score = share.copy()
    np.add.at(score, us, share[vs])
    if not g.directed:
        np.add.at(score, vs, share[us])
    return _plain(g, score, method="closed-form")


def sv_g2_fast(g: Graph, k: int) -> CentralityResult:
    """Shapley value of the k-threshold influence game in O(|V|+|E|).

    A node v claims itself unless k-1 or fewer of its neighbours suffice,
    and claims each neighbour u of degree >= k with the probability that v
    is the k-th member of u's neighbourhood to arrive.
    """
    if g.directed:
        raise GraphError("the threshold fast path handles undirected graphs only")
    if k < 1:
        raise ValueError("threshold k must be at least 1")
    deg = g.degrees().astype(np.float64)
    own = np.minimum(float(k), deg + 1.0) / (deg + 1.0)
    us, vs = _edge_arrays(g)
    give = np.where(deg >= k, (deg - k + 1.0) / np.maximum(deg * (deg + 1.0), 1.0), 0.0)
    score = own.copy()
    np.add.at(score, us, give[vs])
    np.add.at(score, vs, give[us])
    return _plain(g, score, method="closed-form")


def _sparse_distance_columns(g: Graph) -> np.ndarray:
    """All-pairs distance matrix via sparse Dijkstra; entry [s, t] = dist(s->t)."""
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import dijkstra

    us, vs = _edge_arrays(g)
    w = np.array([g.weight(int(u), int(v)) for u, v in zip(us, vs)], dtype=np.float64)
    if g.directed:
        rows, cols, data = us, vs, w
    else:
        rows = np.concatenate([us, vs])
        cols = np.concatenate([vs, us])
        data = np.concatenate([w, w])
    mat = csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    return dijkstra(mat, directed=True, indices=None)


def sv_closeness_fast(
    g: Graph,
    f: Callable[[float], float] | None = None,
    d_cutoff: float | None = None,
) -> CentralityResult:
    """Shapley value of the distance-decay game without coalition enumeration.

    The game's worth is sum_u f(dist(S,u)); pass a non-increasing f with
    f(inf)=0, or d_cutoff for the indicator variant.  For each target u,
    nodes are ranked by distance to u (ties share a rank): v expects to be
    the first provider with probability 1/(e+1) where e counts nodes at most
    as far as v, and the displaced-provider terms telescope over ranks:

        E[MC_u(v)] = f(d_v) / (e+1) - sum_{q>e} f(D_q) / (q (q+1)).

    Total cost O(|V| * SSSP + |V|^2 log |V|).
    """
    if (f is None) == (d_cutoff is None):
        raise ValueError("pass exactly one of f or d_cutoff")
    if f is None:
        if d_cutoff < 0:
            raise ValueError("cutoff distance must be non-negative")
        cut = float(d_cutoff)
        f = lambda d: 1.0 if d <= cut else 0.0
    if abs(f(INF)) > 1e-12:
        raise ValueError("decay function must vanish at infinite distance")
    if not math.isfinite(f(0.0)):
        raise ValueError("decay function must be finite at distance 0")
    dist = _sparse_distance_columns(g)
    n = g.n
    score = np.zeros(n)
    idx = np.arange(n)
    fvals: dict[float, float] = {}

    def fv(d: float) -> float:
        hit = fvals.get(d)
        if hit is None:
            hit = float(f(d))
            fvals[d] = hit
        return hit

    q = np.arange(1, n)
    qden = q * (q + 1.0)
    for t in range(n):
        col = dist[:, t]
        order = np.lexsort((idx, col))
        d_sorted = col[order]
        uniq, inv = np.unique(d_sorted, return_inverse=True)
        fu = np.array([fv(float(d)) for d in uniq])
        if np.any(fu < -1e-12) or np.any(fu[:-1] < fu[1:] - 1e-12):
            raise ValueError("decay function must be non-negative and non-increasing")
        fd = fu[inv]
        tail = fd[1:] / qden
        suffix = np.concatenate([np.cumsum(tail[::-1])[::-1], [0.0]])
        # positions sharing a distance all use the tie group's last index
        e = np.searchsorted(d_sorted, d_sorted, side="right") - 1
        score[order] += fd / (e + 1.0) - suffix[e]
    return _plain(g, score, method="closed-form")


def sv_g5_mc(g: Graph, w_cutoff, samples: int, seed: int) -> CentralityResult:
    """Unbiased Monte Carlo Shapley value of the weighted influence game."""
    pv = mc_estimate(influence_game(g, w_cutoff), "shapley", samples=samples, seed=seed)
    return _from_payoff(g, pv)


# ---------------------------------------------------------------------------
# betweenness compositions


def sv_betweenness(g: Graph, method: str = "oracle") -> CentralityResult:
    """Shapley value of the group betweenness game.

    method="oracle" evaluates the composition exactly.  method="closed_form"
    evaluates the literature's distance-weighted reformulation

        sum_{s != v} sum_{t != v} [ sigma_st(v) / (sigma_st dist(s,t))
                                    + (2 - dist(s,v)) / (2 dist(s,v)) ]

    verbatim.  The reformulation does not agree with the oracle (its second
    term is independent of the game) and is shipped for inspection only;
    results carry meta["experimental"] = True.
    """
    if method == "oracle":
        return _from_payoff(g, shapley_exact(group_betweenness(g)))
    if method != "closed_form":
        raise ValueError("method must be 'oracle' or 'closed_form'")
    dm = g.distance_matrix()
    n = g.n
    score = np.zeros(n)
    from .graph import geodesic_tables

    tables = geodesic_tables(g)
    sigma = [tables[s][1] for s in range(n)]
    for v in range(n):
        total = 0.0
        for s in range(n):
            if s == v:
                continue
            d_sv = dm[s][v]
            for t in range(n):
                if t == v:
                    continue
                d_st = dm[s][t]
                if t != s and 0.0 < d_st < INF:
                    if abs(d_sv + dm[v][t] - d_st) <= 1e-9:
                        through = sigma[s][v] * sigma[v][t]
                    else:
                        through = 0
                    if through:
                        total += through / (sigma[s][t] * d_st)
            if 0.0 < d_sv < INF:
                total += (n - 1) * (2.0 - d_sv) / (2.0 * d_sv)
        score[v] = total
    return _plain(g, score, method="closed-form", experimental=True)


def beta_measure(g: Graph) -> CentralityResult:
    """Shapley value of the dominance (score) game, in closed form.

    Every dominated node u splits one unit equally among its dominators,
    so beta_v = sum over successors u of 1/indeg(u).
    """
    if not g.directed:
        raise GraphError("the dominance measure needs a digraph")
    us, vs = _edge_arrays(g)
    indeg = np.zeros(g.n, dtype=np.int64)
    np.add.at(indeg, vs, 1)
    share = 1.0 / np.maximum(indeg, 1)
    score = np.zeros(g.n)
    np.add.at(score, us, share[vs])
    return _plain(g, score, method="closed-form")


# ---------------------------------------------------------------------------
# accessibility (ordered restriction by path segments)


def accessibility(
    g: Graph,
    game,
    mode: str = "exact",
    beta=None,
    samples: int | None = None,
    seed: int | None = None,
    limit: int | None = None,
) -> CentralityResult:
    """Expected marginal worth when players arrive in random order and only
    consecutive arcs cooperate.

    The restricted worth of an ordered coalition is the sum of nu over its
    maximal path segments.  exact mode averages over all n! orders (the
    Nowak-Radzik value of the restriction); semivalue mode draws the prefix
    size from beta instead of uniformly (beta = 1/n recovers exact); mc mode
    samples whole orders.
    """
    if not g.directed:
        raise GraphError("accessibility needs a digraph")
    n = g.n
    base_game = game if isinstance(game, Game) else Game(n, game)
    has_edge = g.has_edge
    acc = np.zeros(n)

    if mode == "mc":
        if not samples or seed is None:
            raise ValueError("mc mode needs samples and seed")
        rng = np.random.default_rng(seed)
        acc2 = np.zeros(n)
        done = 0
        while done < samples:
            chunk = min(MC_CHUNK, samples - done)
            perms = rng.random((chunk, n)).argsort(axis=1)
            for row in perms:
                closed = 0.0
                open_mask = 0
                val = 0.0
                last = -1
                for v in row:
                    v = int(v)
                    if open_mask and not has_edge(last, v):
                        closed += base_game(open_mask)
                        open_mask = 0
                    open_mask |= 1 << v
                    new_val = closed + base_game(open_mask)
                    marg = new_val - val
                    acc[v] += marg
                    acc2[v] += marg * marg
                    val = new_val
                    last = v
            done += chunk
        mean = acc / samples
        var = np.maximum(acc2 / samples - mean * mean, 0.0)
        return CentralityResult(
            labels=list(g.labels),
            values=mean,
            method="mc",
            samples=samples,
            seed=seed,
            stderr=np.sqrt(var / samples),
            meta={"mode": "mc"},
        )

    if mode == "exact":
        check_ordered_limit(n, limit, what="accessibility")
        fact = math.factorial
        weights = [float(Fraction(fact(n - L - 1), fact(n))) for L in range(n)]
    elif mode == "semivalue":
        check_ordered_limit(n, limit, what="accessibility")
        b = _check_distribution(beta, n, "beta")
        fact = math.factorial
        weights = [b[L] / (math.comb(n - 1, L) * fact(L)) for L in range(n)]
    else:
        raise ValueError("mode must be 'exact', 'semivalue' or 'mc'")

    # DFS over ordered prefixes; worth tracked incrementally per segment
    def rec(depth: int, mask: int, closed: float, open_mask: int, val: float, last: int):
        w = weights[depth]
        for v in range(n):
            if (mask >> v) & 1:
                continue
            if open_mask and has_edge(last, v):
                new_closed = closed
                new_open = open_mask | (1 << v)
            else:
                new_closed = closed + (base_game(open_mask) if open_mask else 0.0)
                new_open = 1 << v
            new_val = new_closed + base_game(new_open)
            acc[v] += w * (new_val - val)
            if depth + 1 < n:
                rec(depth + 1, mask | (1 << v), new_closed, new_open, new_val, v)

    rec(0, 0, 0.0, 0, 0.0, -1)
    return _plain(g, acc, mode=mode)


def pozo_centrality(g: Graph, game, alpha: float, budget: int | None = None) -> CentralityResult:
    """Position value in the path-dividend restriction minus plain Shapley.

    alpha interpolates between rewarding path endpoints (alpha=0, the
    Nowak-Radzik end of the family) and spreading a path's dividend evenly
    (alpha=1); subtracting the network-free Shapley value isolates what the
    digraph's structure grants or withholds.
    """
    base_game = game if isinstance(game, Game) else Game(g.n, game)
    restricted = pozo_digraph_restriction(base_game, g, budget=budget)
    pos = psi_alpha(restricted, alpha)
    sv = shapley_exact(base_game)
    return _plain(g, pos.values - sv.values, alpha=alpha)


# ---------------------------------------------------------------------------
# cohesion (edge importance folded back onto nodes)


def cohesion_centrality(
    g: Graph,
    game=None,
    alpha: float = 0.0,
    index: str = "shapley",
    base: str = "degree",
    include_self: bool = False,
    samples: int | None = None,
    seed: int | None = None,
    limit: int | None = None,
) -> CentralityResult:
    """Rank edges by a power index of the edge game, blend with edge weights,
    then read node scores off a classic measure of the reweighted graph.

    With game=None the edge game scores total reachability inside the
    surviving edge set; any node game is accepted and played over the
    components the edges induce.  alpha weighs original edge weights against
    (sum-normalised) edge payoffs; base is the classic measure applied to
    the blended weights (for distance-based bases they act as edge lengths,
    so every blended weight must stay positive).
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    if index not in ("shapley", "banzhaf"):
        raise ValueError("index must be 'shapley' or 'banzhaf'")
    edge_game = cohesion_link_game(g, include_self) if game is None else link_game(game, g)
    if samples is not None:
        if index == "shapley":
            pv = mc_estimate(edge_game, "shapley", samples=samples, seed=seed)
        else:
            pv = mc_estimate(
                edge_game, "semivalue", samples=samples, seed=seed, beta=banzhaf_beta(g.m)
            )
    else:
        pv = shapley_exact(edge_game, limit) if index == "shapley" else banzhaf(edge_game, limit)
    phi = np.asarray(pv.values, dtype=np.float64)
    tot = phi.sum()
    if abs(tot) < 1e-12:
        raise NumericalError("edge payoffs sum to zero; cannot normalise")
    phi_norm = phi / tot
    edges = g.edges()
    w = np.array([g.weight(u, v) for u, v in edges], dtype=np.float64)
    w_norm = w / w.sum() if g.m else w
    blended = alpha * w_norm + (1.0 - alpha) * phi_norm

    if base == "degree":
        score = np.zeros(g.n)
        for (u, v), bw in zip(edges, blended):
            score[u] += bw
            score[v] += bw
    elif base in ("closeness", "betweenness"):
        if np.any(blended <= 0):
            raise NumericalError(
                "blended edge weights must be positive for distance-based measures"
            )
        rg = Graph(
            g.n,
            [(u, v, bw) for (u, v), bw in zip(edges, blended)],
            directed=g.directed,
            labels=g.labels,
        )
        score = (
            classic.closeness_centrality(rg)
            if base == "closeness"
            else classic.betweenness_centrality(rg)
        )
    else:
        raise ValueError("base must be 'degree', 'closeness' or 'betweenness'")
    return CentralityResult(
        labels=list(g.labels),
        values=np.asarray(score, dtype=np.float64),
        method=pv.method,
        samples=pv.samples,
        seed=pv.seed,
        meta={"edge_payoffs": phi.tolist(), "blended_weights": blended.tolist(), "base": base},
    )


# ---------------------------------------------------------------------------
# path-swing (Banzhaf-style) measure


def grofman_owen_swings(
    g: Graph, count_endpoint_swings: bool = False, budget: int | None = None
) -> tuple[np.ndarray, int]:
    """Swing counts per node over all simple paths with at least one edge.

    A node swings on a path when the remaining visited nodes cannot form any
    replacement path between the same endpoints.  Endpoints always swing, so
    they are skipped unless asked for.
    """
    n = g.n
    counts = np.zeros(n, dtype=np.int64)
    reach_cache: dict[tuple[int, int], int] = {}

    def reach_from(mask: int, s: int) -> int:
        key = (mask, s)
        seen = reach_cache.get(key)
        if seen is None:
            seen = 1 << s
            stack = [s]
            while stack:
                u = stack.pop()
                for x in g.neighbors(u):
                    bit = 1 << x
                    if (mask & bit) and not (seen & bit):
                        seen |= bit
                        stack.append(x)
            reach_cache[key] = seen
        return seen

    for path in g.enumerate_simple_paths(min_edges=1, budget=budget):
        s, t = path[0], path[-1]
        pmask = nodes_mask(path)
        members = path if count_endpoint_swings else path[1:-1]
        for v in members:
            avail = pmask & ~(1 << v)
            if v == s or v == t:
                counts[v] += 1
                continue
            if not (reach_from(avail, s) >> t) & 1:
                counts[v] += 1
    return counts, int(counts.sum())


def grofman_owen(
    g: Graph,
    count_endpoint_swings: bool = False,
    normalized: bool = False,
    budget: int | None = None,
) -> CentralityResult:
    """Relative swing share per node (or swings / 2^(n-1) when normalized)."""
    counts, total = grofman_owen_swings(g, count_endpoint_swings, budget)
    if normalized:
        values = counts / float(2 ** (g.n - 1))
    else:
        values = counts / float(total) if total else counts.astype(np.float64)
    return _plain(g, values, swings=counts.tolist(), total_swings=total)


# ---------------------------------------------------------------------------
# restricted-game allocations


def kt_allocation(g: Graph, game) -> CentralityResult:
    """Shapley value of the coarsest-split restricted game."""
    return _from_payoff(g, shapley_exact(kt_restriction(game, g)))


def attachment_centrality(
    g: Graph, method: str = "myerson", budget: int | None = None
) -> CentralityResult:
    """How much a node's presence glues components together.

    Equals the Shapley value of nu(C) = 2(|C| - #components(C)); the default
    route enumerates connected subsets only (within any connected S the game
    is 2(|S|-1)), the direct route evaluates the full 2^n table.
    """
    if method == "myerson":
        pv = myerson_dfs(g, lambda m: 2.0 * (popcount(m) - 1), budget=budget)
    elif method == "direct":
        check_exact_limit(g.n, 20, what="direct attachment evaluation")
        pv = shapley_exact(attachment_game(g), limit=g.n)
    else:
        raise ValueError("method must be 'myerson' or 'direct'")
    return _from_payoff(g, pv)


def connectivity_centrality(
    g: Graph,
    f: Callable[[int], float] | None = None,
    concept: str = "shapley",
    beta=None,
    samples: int | None = None,
    seed: int | None = None,
    limit: int | None = None,
) -> CentralityResult:
    """Solution concept applied to the all-or-nothing connectivity game.

    No fast path exists for this family (computing the values is #P-hard),
    so the choices are exact enumeration or Monte Carlo.
    """
    game = connectivity_game(g, f)
    if concept == "shapley":
        pv = shapley_exact(game, limit)
    elif concept == "semivalue":
        pv = semivalue_exact(game, beta, limit)
    elif concept == "mc":
        pv = mc_estimate(game, "shapley", samples=samples, seed=seed)
    else:
        raise ValueError("concept must be 'shapley', 'semivalue' or 'mc'")
    return _from_payoff(g, pv)


# ---------------------------------------------------------------------------
# resource-allocation control measure


def vl_control(g: Graph, tolerance: float = 1e-8, max_iters: int = 100_000) -> CentralityResult:
    """Optimal division of one unit of search resource over the nodes.

    Maximises prod_v y_v with y_v = x_v + sum of x over v's successors, x on
    the simplex.  The log objective is a sum of logs of linear forms, so the
    mixture-weight update x_i <- x_i * grad_i / n is an EM step: monotone in
    the objective, needs no line search, and keeps x on the simplex because
    sum_i x_i grad_i = n identically.  By the same identity
    max_i grad_i / n - 1 >= 0 is a KKT certificate that vanishes exactly at
    the optimum, so a returned vector is always certified.

    The optimum is also a fixed point of the weighted Shapley value of the
    covering game scaled to worth 1; the achieved deviation is reported in
    meta["proper_residual"].
    """
    n = g.n
    if n == 0:
        raise GraphError("empty graph")
    from scipy.sparse import csr_matrix

    rows = list(range(n))
    cols = list(range(n))
    for v in range(n):
        for u in g.neighbors(v):
            rows.append(v)
            cols.append(u)
    M = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))

    def certificate(vec: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
        y = M @ vec
        if np.any(y <= 0.0):
            raise ConvergenceError("allocation lost coverage of some node", iterate=vec)
        grad = M.T @ (1.0 / y)
        return y, grad, float(grad.max() / n - 1.0)

    x = np.full(n, 1.0 / n)
    iters = 0
    y, grad, residual = certificate(x)
    while residual > tolerance and iters < max_iters:
        x *= grad / n
        x /= x.sum()
        y, grad, residual = certificate(x)
        iters += 1
    if residual > tolerance:
        raise ConvergenceError(
            f"control measure did not reach tolerance {tolerance} "
            f"(residual {residual:.3e} after {iters} iterations)",
            iterate=x,
        )
    # EM never produces exact zeros; snap decayed mass, keep only if certified
    tiny = x <= 1e-15
    if tiny.any():
        snapped = np.where(tiny, 0.0, x)
        snapped /= snapped.sum()
        y2, grad2, res2 = certificate(snapped)
        if res2 <= tolerance:
            x, y, residual = snapped, y2, res2
    scaled = game_from_table(covering_game(g).table() / n, name="covering/n")
    wsv = weighted_shapley(scaled, x, allow_zero=True)
    proper_residual = float(np.max(np.abs(wsv.values - x)))
    return _plain(
        g,
        x,
        iterations=iters,
        kkt_residual=float(residual),
        proper_residual=proper_residual,
        objective=float(np.log(y).sum()),
    )


# ---------------------------------------------------------------------------
# community-aware degree


def owen_degree(
    g: Graph,
    communities: Sequence[Sequence[int]],
    mode: str = "exact",
    beta=None,
    alpha=None,
    samples: int | None = None,
    seed: int | None = None,
) -> CentralityResult:
    """Community-respecting division of the group-degree game.

    Plain mode is the Owen value; supplying beta (community-count sizes) and
    alpha (within-community sizes) switches to the general two-level
    semivalue.  mc mode samples the two-level ordering process.
    """
    game = group_degree(g)
    masks = [nodes_mask(c) if not isinstance(c, int) else c for c in communities]
    if mode == "exact":
        if beta is None and alpha is None:
            pv = owen_value(game, masks)
        else:
            m = len(masks)
            if beta is None:
                beta = np.full(m, 1.0 / m)
            if alpha is None:
                alpha = lambda b: np.full(b, 1.0 / b)
            pv = coalitional_semivalue(game, masks, beta, alpha)
    elif mode == "mc":
        pv = mc_estimate(game, "owen", samples=samples, seed=seed, communities=masks)
    else:
        raise ValueError("mode must be 'exact' or 'mc'")
    return _from_payoff(g, pv)


__all__ = [
    "CentralityResult",
    "accessibility",
    "attachment_centrality",
    "beta_measure",
    "cohesion_centrality",
    "compose",
    "connectivity_centrality",
    "gomez_centrality",
    "grofman_owen",
    "grofman_owen_swings",
    "kt_allocation",
    "myerson_dfs",
    "owen_degree",
    "pozo_centrality",
    "sv_betweenness",
    "sv_closeness_fast",
    "sv_degree_fast",
    "sv_g2_fast",
    "sv_g5_mc",
    "vl_control",
]
