"""Classic centrality measures: degree, closeness, betweenness, stress, eigenvector."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import ConvergenceError, NumericalError
from .graph import INF, Graph

EIG_TOL = 1e-10
EIG_MAX_ITERS = 100_000


def degree_centrality(g: Graph) -> np.ndarray:
    """Out-degree of every node."""
    return g.degrees().astype(float)


def closeness_centrality(g: Graph) -> np.ndarray:
    """Total distance from each node to all others (lower is more central).

    Raises NumericalError when some node cannot reach every other node.
    """
    d = g.distance_matrix()
    if np.isinf(d).any():
        raise NumericalError("closeness undefined: graph has unreachable node pairs")
    return d.sum(axis=1)


def generalized_closeness(g: Graph, f: Callable[[float], float]) -> np.ndarray:
    """Sum of f(dist(v,u)) over all other nodes u (higher is more central).

    ``f`` must be non-increasing with f(inf) = 0, so unreachable targets
    simply contribute nothing.
    """
    d = g.distance_matrix()
    out = np.zeros(g.n)
    for v in range(g.n):
        out[v] = sum(f(d[v, u]) for u in range(g.n) if u != v and d[v, u] < INF)
    return out


def harmonic_f(dist: float) -> float:
    return 0.0 if dist == 0 or math.isinf(dist) else 1.0 / dist


def betweenness_centrality(
    g: Graph, ordered_pairs: bool = True, include_endpoints: bool = False
) -> np.ndarray:
    """Brandes-style betweenness: sum over pairs of the geodesic fraction through v.

    Pairs (s, t) are ordered by default, which on an undirected graph counts
    every unordered pair twice; ``ordered_pairs=False`` halves undirected
    totals.  ``include_endpoints`` adds, per pair, the geodesics on which v
    appears as an endpoint (and counts the trivial (s, s) pair for v = s).
    """
    scores = np.zeros(g.n)
    for s in range(g.n):
        dist, sigma, preds, order = g.shortest_path_dag(s)
        delta = [0.0] * g.n
        for v in reversed(order):
            for u in preds[v]:
                delta[u] += sigma[u] / sigma[v] * (1.0 + delta[v])
            if v != s:
                scores[v] += delta[v]
        if include_endpoints:
            reach = sum(1 for t in range(g.n) if t != s and dist[t] < INF)
            # v = s on every geodesic it sources, plus the length-0 (s, s) path;
            # v = t on every geodesic ending at it.
            scores[s] += reach + 1
            for t in range(g.n):
                if t != s and dist[t] < INF:
                    scores[t] += 1
    if not g.directed and not ordered_pairs:
        scores /= 2.0
    return scores


def stress_centrality(
    g: Graph, ordered_pairs: bool = True, include_endpoints: bool = False
) -> np.ndarray:
    """Raw geodesic counts through each node, rather than Brandes fractions.

    With ``include_endpoints`` every geodesic also counts towards its two
    endpoints and each node picks up its own length-0 path, matching the
    convention where a monitor at v sees traffic originating or ending there.
    """
    scores = np.zeros(g.n)
    for s in range(g.n):
        dist, sigma, preds, order = g.shortest_path_dag(s)
        succ: list[list[int]] = [[] for _ in range(g.n)]
        for v in order:
            for u in preds[v]:
                succ[u].append(v)
        # paths_from[v]: geodesic continuations from v to any target, incl. t = v
        paths_from = [0] * g.n
        for v in reversed(order):
            paths_from[v] = 1 + sum(paths_from[w] for w in succ[v])
        for v in order:
            if v == s:
                continue
            # geodesics s->t through v with t not in {s, v}: sigma[v] branches on
            # towards paths_from[v]-1 proper continuations
            scores[v] += sigma[v] * (paths_from[v] - 1)
        if include_endpoints:
            finite = [t for t in range(g.n) if t != s and dist[t] < INF]
            outgoing = sum(sigma[t] for t in finite)
            scores[s] += outgoing + 1  # v = s as source, plus the (s, s) self path
            for t in finite:
                scores[t] += sigma[t]  # v = t as destination
    if not g.directed and not ordered_pairs:
        scores /= 2.0
    return scores


def eigenvector_centrality(
    g: Graph, tol: float = EIG_TOL, max_iters: int = EIG_MAX_ITERS
) -> np.ndarray:
    """Principal eigenvector of the adjacency matrix, L2-normalised, >= 0.

    Power iteration runs on A + I: the shift leaves eigenvectors unchanged
    but guarantees a strictly dominant eigenvalue even on bipartite graphs,
    where plain iteration oscillates.
    """
    if g.directed:
        raise NumericalError("eigenvector centrality expects an undirected graph")
    if g.m == 0:
        raise NumericalError("eigenvector centrality undefined on empty edge set")
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        w = g.weight(u, v)
        a[u, v] += w
        a[v, u] += w
    a += np.eye(g.n)
    x = np.full(g.n, 1.0 / math.sqrt(g.n))
    for _ in range(max_iters):
        y = a @ x
        norm = np.linalg.norm(y)
        if norm == 0:
            raise NumericalError("power iteration collapsed to zero vector")
        y /= norm
        if np.max(np.abs(y - x)) < tol:
            x = y
            break
        x = y
    else:
        raise ConvergenceError(
            f"eigenvector power iteration did not converge in {max_iters} iterations",
            iterate=x,
        )
    lam = x @ (a @ x) - 1.0  # undo the +I shift
    resid = np.max(np.abs((a - np.eye(g.n)) @ x - lam * x))
    if resid > 100 * tol:
        raise ConvergenceError(f"eigenvector residual {resid:.3e} too large", iterate=x)
    return np.abs(x)
