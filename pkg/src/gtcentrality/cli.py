"""Command-line surface: compute, compare, list, bench.

compute runs one measure on an edge-list file and emits a JSON or CSV
result document; compare runs a fast path next to its exact compose oracle
and prints the max absolute difference; list prints the measure catalog;
bench times the two polynomial fast paths across doubling sizes and checks
the fitted log-log slopes.

Exit codes: 0 success, 2 usage or input format trouble, 3 size-bound
exceeded, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import sys
import time

import numpy as np

from . import classic, measures, solutions, value_functions as vf
from .errors import (
    ConvergenceError,
    FormatError,
    GraphError,
    NumericalError,
    SizeLimitError,
)
from .games import Game
from .graph import Graph, popcount
from .io import ResultDocument, communities_to_masks, parse_communities, parse_graph, write_atomic
from .measures import CentralityResult

ORACLE_TOL = 1e-9

GAME_HELP = "square (|C|^2), pow:K (|C|^K), count (|C|), or unit (1 for any non-empty C)"


def built_in_game(spec: str):
    """Return a coalition-mask -> value callable for one of the built-in games."""
    if spec == "square":
        return lambda mask: float(popcount(mask)) ** 2
    if spec == "count":
        return lambda mask: float(popcount(mask))
    if spec == "unit":
        return lambda mask: 1.0 if mask else 0.0
    if spec.startswith("pow:"):
        try:
            k = float(spec.split(":", 1)[1])
        except ValueError:
            raise FormatError(f"bad exponent in --game {spec!r}") from None
        return lambda mask: float(popcount(mask)) ** k
    raise FormatError(f"unknown --game {spec!r}; choose {GAME_HELP}")


def _resolve_beta(arg: str, n: int) -> np.ndarray:
    if arg == "shapley":
        return solutions.shapley_beta(n)
    if arg == "banzhaf":
        return solutions.banzhaf_beta(n)
    try:
        with open(arg) as fh:
            vals = [float(tok) for tok in fh.read().split()]
    except OSError as e:
        raise FormatError(f"cannot read beta file {arg!r}: {e}") from None
    if len(vals) != n:
        raise FormatError(f"beta file holds {len(vals)} weights, need {n}")
    return np.asarray(vals)


def _decay_from_args(args) -> tuple:
    """Map --f/--cutoff onto (f, d_cutoff) for the distance-decay measure."""
    spec = args.f or ("indicator" if args.cutoff is not None else "harmonic")
    if spec == "harmonic":
        return vf.harmonic_decay, None
    if spec == "indicator":
        if args.cutoff is None:
            raise FormatError("--f indicator needs --cutoff D")
        return None, float(args.cutoff)
    env = {"__builtins__": {}, "exp": math.exp, "log": math.log, "sqrt": math.sqrt,
           "inf": math.inf, "isinf": math.isinf}

    def f(d: float) -> float:
        return float(eval(spec, env, {"d": d}))  # noqa: S307 - user-supplied kernel

    try:
        f(1.0)
    except Exception as e:
        raise FormatError(f"--f expression {spec!r} failed on d=1: {e}") from None
    return f, None


def _need_directed(g: Graph, measure: str) -> None:
    if not g.directed:
        raise GraphError(f"measure {measure!r} needs a directed graph (%directed or --directed)")


def _need_undirected(g: Graph, measure: str) -> None:
    if g.directed:
        raise GraphError(f"measure {measure!r} needs an undirected graph")


def _mc_args(args) -> tuple[int, int]:
    if not args.mc_samples:
        raise FormatError("this mode needs --mc-samples N (and optionally --seed S)")
    return int(args.mc_samples), int(args.seed)


def _as_result(g: Graph, values) -> CentralityResult:
    return CentralityResult(labels=list(g.labels), values=np.asarray(values, dtype=np.float64))


# runner(g, args) -> CentralityResult; oracle(g, args) -> (fast, exact) or None
def _run_degree(g, args):
    return _as_result(g, classic.degree_centrality(g))


def _run_closeness(g, args):
    if args.f == "harmonic":
        return _as_result(g, classic.generalized_closeness(g, classic.harmonic_f))
    if args.f:
        f, _ = _decay_from_args(args)
        return _as_result(g, classic.generalized_closeness(g, f))
    return _as_result(g, classic.closeness_centrality(g))


def _run_betweenness(g, args):
    return _as_result(g, classic.betweenness_centrality(g))


def _run_stress(g, args):
    return _as_result(g, classic.stress_centrality(g))


def _run_eigenvector(g, args):
    return _as_result(g, classic.eigenvector_centrality(g))


def _run_sv_degree(g, args):
    return measures.sv_degree_fast(g)


def _cmp_sv_degree(g, args):
    fast = measures.sv_degree_fast(g)
    exact = measures.compose(vf.fringe_game, solutions.shapley_exact, g)
    return fast.values, exact.values


def _run_sv_threshold(g, args):
    if args.k is None:
        raise FormatError("sv-threshold needs --k K")
    return measures.sv_g2_fast(g, int(args.k))


def _cmp_sv_threshold(g, args):
    if args.k is None:
        raise FormatError("sv-threshold needs --k K")
    k = int(args.k)
    fast = measures.sv_g2_fast(g, k)
    exact = measures.compose(lambda h: vf.threshold_game(h, k), solutions.shapley_exact, g)
    return fast.values, exact.values


def _run_sv_closeness(g, args):
    f, cut = _decay_from_args(args)
    return measures.sv_closeness_fast(g, f=f, d_cutoff=cut)


def _cmp_sv_closeness(g, args):
    f, cut = _decay_from_args(args)
    fast = measures.sv_closeness_fast(g, f=f, d_cutoff=cut)
    psi = (lambda h: vf.cutoff_game(h, cut)) if f is None else (lambda h: vf.decay_game(h, f))
    exact = measures.compose(psi, solutions.shapley_exact, g)
    return fast.values, exact.values


def _run_sv_influence(g, args):
    if args.cutoff is None:
        raise FormatError("sv-influence needs --cutoff W (per-node weight threshold)")
    samples, seed = _mc_args(args)
    return measures.sv_g5_mc(g, float(args.cutoff), samples=samples, seed=seed)


def _run_sv_betweenness(g, args):
    return measures.sv_betweenness(g, method="oracle")


def _run_sv_betweenness_cf(g, args):
    return measures.sv_betweenness(g, method="closed_form")


def _cmp_sv_betweenness_cf(g, args):
    closed = measures.sv_betweenness(g, method="closed_form")
    exact = measures.sv_betweenness(g, method="oracle")
    return closed.values, exact.values


def _run_beta_measure(g, args):
    _need_directed(g, "beta-measure")
    return measures.beta_measure(g)


def _cmp_beta_measure(g, args):
    _need_directed(g, "beta-measure")
    fast = measures.beta_measure(g)
    exact = measures.compose(vf.score_game, solutions.shapley_exact, g)
    return fast.values, exact.values


def _run_myerson(g, args):
    pv = measures.myerson_dfs(g, built_in_game(args.game))
    return CentralityResult(labels=list(g.labels), values=np.asarray(pv.values))


def _cmp_myerson(g, args):
    game = Game(g.n, built_in_game(args.game))
    fast = measures.myerson_dfs(g, game)
    exact = solutions.shapley_exact(vf.myerson_restriction(game, g))
    return fast.values, exact.values


def _run_gomez(g, args):
    return measures.gomez_centrality(g, built_in_game(args.game))


def _run_accessibility(g, args):
    _need_directed(g, "accessibility")
    game = built_in_game(args.game)
    if args.mc_samples:
        samples, seed = _mc_args(args)
        return measures.accessibility(g, game, mode="mc", samples=samples, seed=seed)
    if args.beta:
        return measures.accessibility(
            g, game, mode="semivalue", beta=_resolve_beta(args.beta, g.n)
        )
    return measures.accessibility(g, game, mode="exact")


def _cmp_accessibility(g, args):
    _need_directed(g, "accessibility")
    game = Game(g.n, built_in_game(args.game))
    fast = measures.accessibility(g, game, mode="exact")
    exact = solutions.nowak_radzik(vf.ag_digraph_restriction(game, g))
    return fast.values, exact.values


def _run_pozo(g, args):
    _need_directed(g, "pozo")
    return measures.pozo_centrality(g, built_in_game(args.game), alpha=args.alpha)


def _run_cohesion(g, args):
    index = "banzhaf" if args.beta == "banzhaf" else "shapley"
    game = None if args.game == "unit" else Game(g.n, built_in_game(args.game))
    kwargs = {}
    if args.mc_samples:
        kwargs["samples"], kwargs["seed"] = _mc_args(args)
    return measures.cohesion_centrality(
        g, game=game, alpha=args.alpha, index=index, base=args.base, **kwargs
    )


def _run_grofman_owen(g, args):
    return measures.grofman_owen(g)


def _run_kt(g, args):
    return measures.kt_allocation(g, built_in_game(args.game))


def _cmp_kt(g, args):
    _need_undirected(g, "kt comparison (directed has no independent oracle)")
    game = Game(g.n, built_in_game(args.game))
    fast = measures.kt_allocation(g, game)
    exact = measures.myerson_dfs(g, game)
    return fast.values, exact.values


def _run_attachment(g, args):
    return measures.attachment_centrality(g)


def _cmp_attachment(g, args):
    fast = measures.attachment_centrality(g, method="myerson")
    exact = measures.attachment_centrality(g, method="direct")
    return fast.values, exact.values


def _run_connectivity(g, args):
    f = None if args.game == "unit" else built_in_game(args.game)
    if args.mc_samples:
        samples, seed = _mc_args(args)
        return measures.connectivity_centrality(g, f, concept="mc", samples=samples, seed=seed)
    if args.beta:
        return measures.connectivity_centrality(
            g, f, concept="semivalue", beta=_resolve_beta(args.beta, g.n)
        )
    return measures.connectivity_centrality(g, f)


def _run_vl_control(g, args):
    return measures.vl_control(g)


def _run_owen_degree(g, args):
    if not args.communities:
        raise FormatError("owen-degree needs --communities FILE")
    with open(args.communities) as fh:
        comms = parse_communities(fh.read())
    masks = communities_to_masks(g, comms)
    if args.mc_samples:
        samples, seed = _mc_args(args)
        return measures.owen_degree(g, masks, mode="mc", samples=samples, seed=seed)
    return measures.owen_degree(g, masks)


class Entry:
    def __init__(self, run, summary, compare=None, flags=""):
        self.run = run
        self.summary = summary
        self.compare = compare
        self.flags = flags


CATALOG: dict[str, Entry] = {
    "degree": Entry(_run_degree, "out-degree of every node"),
    "closeness": Entry(_run_closeness, "total distance to all nodes (lower is central); --f for a decay kernel", flags="[--f]"),
    "betweenness": Entry(_run_betweenness, "shortest-path betweenness, ordered pairs"),
    "stress": Entry(_run_stress, "raw geodesic counts through each node"),
    "eigenvector": Entry(_run_eigenvector, "principal adjacency eigenvector (undirected)"),
    "sv-degree": Entry(_run_sv_degree, "Shapley value of the fringe game, linear time", _cmp_sv_degree),
    "sv-threshold": Entry(_run_sv_threshold, "Shapley value of the k-threshold influence game", _cmp_sv_threshold, flags="--k K"),
    "sv-closeness": Entry(_run_sv_closeness, "Shapley value of the distance-decay game", _cmp_sv_closeness, flags="[--f harmonic|indicator|EXPR] [--cutoff D]"),
    "sv-influence": Entry(_run_sv_influence, "MC Shapley value of the weighted influence game", flags="--cutoff W --mc-samples N [--seed S]"),
    "sv-betweenness": Entry(_run_sv_betweenness, "exact Shapley value of group betweenness"),
    "sv-betweenness-closed-form": Entry(_run_sv_betweenness_cf, "experimental closed form; disagrees with the exact route", _cmp_sv_betweenness_cf),
    "beta-measure": Entry(_run_beta_measure, "dominance shares: sum of 1/indeg over dominated nodes (directed)", _cmp_beta_measure),
    "myerson": Entry(_run_myerson, "Shapley value of the graph-restricted game", _cmp_myerson, flags="[--game G]"),
    "gomez": Entry(_run_gomez, "Myerson value minus plain Shapley value", flags="[--game G]"),
    "accessibility": Entry(_run_accessibility, "expected marginal worth over orders, consecutive-arc restriction (directed)", _cmp_accessibility, flags="[--game G] [--beta B | --mc-samples N]"),
    "pozo": Entry(_run_pozo, "path-dividend position value minus Shapley (directed)", flags="[--game G] [--alpha X]"),
    "cohesion": Entry(_run_cohesion, "edge-power blend re-read through a classic measure", flags="[--game G] [--alpha X] [--base B] [--beta shapley|banzhaf]"),
    "grofman-owen": Entry(_run_grofman_owen, "relative swing share over simple paths"),
    "kt": Entry(_run_kt, "Shapley value of the weak-connectivity restricted game", _cmp_kt, flags="[--game G]"),
    "attachment": Entry(_run_attachment, "how much each node glues components together", _cmp_attachment),
    "connectivity": Entry(_run_connectivity, "solution of the all-or-nothing connectivity game", flags="[--game G] [--beta B | --mc-samples N]"),
    "vl-control": Entry(_run_vl_control, "optimal unit-resource allocation over closed neighbourhoods"),
    "owen-degree": Entry(_run_owen_degree, "community-aware division of the group-degree game", flags="--communities FILE [--mc-samples N]"),
}


def _load_graph(args) -> Graph:
    try:
        with open(args.graph) as fh:
            text = fh.read()
    except OSError as e:
        raise FormatError(f"cannot read graph file {args.graph!r}: {e}") from None
    if getattr(args, "directed", False) and "%directed" not in text:
        text = "%directed\n" + text
    return parse_graph(text)


def _params_dict(args) -> dict:
    keep = ("game", "alpha", "k", "cutoff", "f", "beta", "base", "communities",
            "mc_samples", "seed")
    out = {}
    for key in keep:
        val = getattr(args, key, None)
        if val is not None:
            out[key.replace("_", "-")] = val
    return out


def cmd_compute(args) -> int:
    entry = CATALOG.get(args.measure)
    if entry is None:
        raise FormatError(f"unknown measure {args.measure!r}; see `gtc list`")
    g = _load_graph(args)
    t0 = time.perf_counter()
    result = entry.run(g, args)
    runtime_ms = (time.perf_counter() - t0) * 1000.0
    doc = ResultDocument.build(args.measure, _params_dict(args), g, result, runtime_ms)
    text = doc.to_csv() if args.format == "csv" else doc.to_json()
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_compare(args) -> int:
    entry = CATALOG.get(args.measure)
    if entry is None:
        raise FormatError(f"unknown measure {args.measure!r}; see `gtc list`")
    if entry.compare is None:
        raise FormatError(f"measure {args.measure!r} has no compose oracle wired for compare")
    g = _load_graph(args)
    fast, exact = entry.compare(g, args)
    diff = float(np.max(np.abs(np.asarray(fast) - np.asarray(exact)))) if g.n else 0.0
    ok = diff <= ORACLE_TOL
    print(f"measure={args.measure} n={g.n} m={g.m} max_abs_diff={diff:.3e} "
          f"tolerance={ORACLE_TOL:.0e} {'OK' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def cmd_list(args) -> int:
    width = max(len(name) for name in CATALOG)
    for name in sorted(CATALOG):
        entry = CATALOG[name]
        flags = f"  ({entry.flags})" if entry.flags else ""
        oracle = "  [compare]" if entry.compare else ""
        print(f"{name:<{width}}  {entry.summary}{flags}{oracle}")
    return 0


def _bench_graph(rng, V: int, E: int) -> Graph:
    seen = set()
    edges = []
    while len(edges) < E:
        us = rng.integers(0, V, size=E)
        vs = rng.integers(0, V, size=E)
        for u, v in zip(us.tolist(), vs.tolist()):
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            edges.append(key)
            if len(edges) == E:
                break
    return Graph(V, edges)


def _best_of(fn, repeats: int = 3) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _fit_slope(sizes, times) -> float:
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(times, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def run_bench_table(out=None) -> bool:
    """Time the two polynomial fast paths across doubling sizes.

    Fits the log-log slope of runtime against |V| (with |E| = 5|V|): the
    linear-time path should fit ~1 and the distance-rank path ~2, both with
    factor-of-two tolerance.  Returns True when both slopes are in range.
    """
    if out is None:
        out = sys.stdout
    rng = np.random.default_rng(0)
    rows = []
    sizes = [25_000, 50_000, 100_000]
    times = []
    for V in sizes:
        g = _bench_graph(rng, V, 5 * V)
        t = _best_of(lambda: measures.sv_degree_fast(g))
        times.append(t)
        rows.append(("sv-degree", V, 5 * V, t))
    slope_deg = _fit_slope(sizes, times)
    sizes2 = [500, 1000, 2000]
    times2 = []
    for V in sizes2:
        g = _bench_graph(rng, V, 5 * V)
        t = _best_of(lambda: measures.sv_closeness_fast(g, f=vf.harmonic_decay))
        times2.append(t)
        rows.append(("sv-closeness", V, 5 * V, t))
    slope_clo = _fit_slope(sizes2, times2)
    print(f"{'measure':<14}{'|V|':>9}{'|E|':>9}{'seconds':>12}", file=out)
    for name, V, E, t in rows:
        print(f"{name:<14}{V:>9}{E:>9}{t:>12.4f}", file=out)
    deg_ok = 0.5 <= slope_deg <= 2.0
    clo_ok = 1.0 <= slope_clo <= 4.0
    print(f"sv-degree     log-log slope {slope_deg:.2f} "
          f"(linear target 1, accepted 0.5..2)  {'OK' if deg_ok else 'OUT OF RANGE'}", file=out)
    print(f"sv-closeness  log-log slope {slope_clo:.2f} "
          f"(quadratic target 2, accepted 1..4)  {'OK' if clo_ok else 'OUT OF RANGE'}", file=out)
    return deg_ok and clo_ok


def cmd_bench(args) -> int:
    if args.suite != "table":
        raise FormatError(f"unknown bench suite {args.suite!r} (only: table)")
    return 0 if run_bench_table() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtc", description="game-theoretic network centrality toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--measure", required=True, help="measure name; see `gtc list`")
        p.add_argument("--graph", required=True, help="edge-list file")
        p.add_argument("--directed", action="store_true", help="treat input as directed")
        p.add_argument("--game", default="square", help=f"built-in game: {GAME_HELP}")
        p.add_argument("--beta", help="size weights: shapley, banzhaf, or a file of n numbers")
        p.add_argument("--alpha", type=float, default=0.0, help="blend / family parameter in [0,1]")
        p.add_argument("--k", type=int, help="neighbour threshold for sv-threshold")
        p.add_argument("--cutoff", type=float, help="distance or weight cutoff")
        p.add_argument("--f", help="decay kernel: harmonic, indicator, or an expression in d")
        p.add_argument("--base", default="degree", choices=("degree", "closeness", "betweenness"),
                       help="classic base measure for cohesion")
        p.add_argument("--communities", help="community file (label community_id lines)")
        p.add_argument("--mc-samples", type=int, help="Monte Carlo sample count")
        p.add_argument("--seed", type=int, default=0, help="Monte Carlo seed")

    pc = sub.add_parser("compute", help="run one measure and emit a result document")
    add_common(pc)
    pc.add_argument("--format", default="json", choices=("json", "csv"))
    pc.add_argument("--out", help="write output to a file (atomically)")
    pc.set_defaults(func=cmd_compute)

    pm = sub.add_parser("compare", help="fast path vs compose oracle, print max diff")
    add_common(pm)
    pm.set_defaults(func=cmd_compare)

    pl = sub.add_parser("list", help="print the measure catalog")
    pl.set_defaults(func=cmd_list)

    pb = sub.add_parser("bench", help="timing suite with scaling check")
    pb.add_argument("--suite", default="table")
    pb.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        return args.func(args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SizeLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (ConvergenceError, NumericalError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
