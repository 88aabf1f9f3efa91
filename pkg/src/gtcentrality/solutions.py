"""Payoff-division schemes for cooperative games.

Exact solution concepts (Shapley, semivalues, Banzhaf, Owen and its
community-structure generalisations, weighted Shapley, values for games
on ordered coalitions, interaction indices) plus Monte Carlo estimators.
Everything here runs from first principles on the full coalition table,
so it doubles as the brute-force oracle for the fast graph algorithms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import NumericalError
from .games import (
    Game,
    check_exact_limit,
    check_ordered_limit,
    coalition_sizes,
    factorials,
)
from .graph import mask_nodes, popcount

DIST_TOL = 1e-12
PROPER_TOL = 1e-6


@dataclass
class PayoffVector:
    """Per-player payoffs plus provenance of the computation."""

    values: np.ndarray
    method: str = "exact"
    samples: int | None = None
    seed: int | None = None
    stderr: np.ndarray | None = None

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __array__(self, dtype=None, copy=None):
        arr = self.values
        if dtype is not None:
            arr = arr.astype(dtype)
        return arr


# ---------------------------------------------------------------------------
# coefficient helpers (exact rationals, converted to float once)


def shapley_size_weights(n: int) -> np.ndarray:
    """w[k] = k!(n-k-1)!/n!, the Shapley coefficient per coalition size."""
    f = factorials(n)
    return np.array(
        [float(Fraction(f[k] * f[n - k - 1], f[n])) for k in range(n)],
        dtype=np.float64,
    )


def shapley_beta(n: int) -> np.ndarray:
    return np.full(n, 1.0 / n)


def banzhaf_beta(n: int) -> np.ndarray:
    return np.array(
        [float(Fraction(math.comb(n - 1, k), 1 << (n - 1))) for k in range(n)],
        dtype=np.float64,
    )


def point_beta(n: int, k: int = 0) -> np.ndarray:
    """All weight on coalition size k (k = 0 degenerates to singleton marginals)."""
    beta = np.zeros(n)
    beta[k] = 1.0
    return beta


def _check_distribution(beta, length: int, what: str) -> np.ndarray:
    b = np.asarray(beta, dtype=np.float64)
    if b.shape != (length,):
        raise ValueError(f"{what} must have length {length}, got shape {b.shape}")
    if np.any(b < -DIST_TOL):
        raise ValueError(f"{what} must be non-negative")
    if abs(float(b.sum()) - 1.0) > 1e-12:
        raise ValueError(f"{what} must sum to 1 (got {b.sum()!r})")
    return b


def check_partition(n: int, communities: Sequence[int]) -> None:
    grand = (1 << n) - 1
    seen = 0
    for q in communities:
        if q == 0:
            raise ValueError("empty community in coalition structure")
        if q & seen:
            raise ValueError("communities overlap; a partition is required here")
        seen |= q
    if seen != grand:
        raise ValueError("communities must cover every player")


def check_cover(n: int, communities: Sequence[int]) -> None:
    grand = (1 << n) - 1
    seen = 0
    for q in communities:
        if q == 0:
            raise ValueError("empty community in coalition structure")
        seen |= q
    if seen != grand:
        raise ValueError("every player must belong to at least one community")


# ---------------------------------------------------------------------------
# exact solutions from the full coalition table


def _per_size_solution(game: Game, coeff: np.ndarray, limit: int | None) -> np.ndarray:
    """phi_i = sum over C not containing i of coeff[|C|] * (v(C+i) - v(C))."""
    t = game.table(limit)
    n = game.n
    sizes = coalition_sizes(n)
    idx = np.arange(1 << n)
    phi = np.empty(n)
    for i in range(n):
        bit = 1 << i
        without = idx[(idx & bit) == 0]
        mc = t[without | bit] - t[without]
        phi[i] = float(np.dot(coeff[sizes[without]], mc))
    return phi


def shapley_exact(game: Game, limit: int | None = None) -> PayoffVector:
    """Shapley value via the subset (marginal-contribution) form."""
    return PayoffVector(_per_size_solution(game, shapley_size_weights(game.n), limit))


def shapley_from_dividends(game: Game, limit: int | None = None) -> PayoffVector:
    """Shapley value as equal splits of Harsanyi dividends: SV_i = sum_{C: i in C} d(C)/|C|."""
    d = game.dividends(limit)
    n = game.n
    sizes = coalition_sizes(n)
    idx = np.arange(1 << n)
    phi = np.empty(n)
    with np.errstate(invalid="ignore"):
        share = np.where(sizes > 0, d / np.maximum(sizes, 1), 0.0)
    for i in range(n):
        phi[i] = float(share[(idx & (1 << i)) != 0].sum())
    return PayoffVector(phi)


def shapley_permutation(game: Game, limit: int | None = None) -> PayoffVector:
    """Shapley value by full scan of all n! arrival orders.

    Factorial cost; this is the reference oracle for tiny n, not a fast path.
    """
    n = game.n
    check_ordered_limit(n, limit, what="full permutation scan")
    acc = np.zeros(n)
    for perm in itertools.permutations(range(n)):
        mask = 0
        prev = 0.0
        for p in perm:
            mask |= 1 << p
            v = game(mask)
            acc[p] += v - prev
            prev = v
    return PayoffVector(acc / math.factorial(n))


def semivalue_exact(game: Game, beta, limit: int | None = None) -> PayoffVector:
    """phi_i = sum_k beta(k) * average marginal contribution over size-k coalitions."""
    n = game.n
    b = _check_distribution(beta, n, "semivalue weights")
    coeff = np.array([b[k] / math.comb(n - 1, k) for k in range(n)])
    return PayoffVector(_per_size_solution(game, coeff, limit))


def banzhaf(game: Game, limit: int | None = None) -> PayoffVector:
    """Banzhaf value: the uniform-coalition semivalue (1/2^(n-1) per subset)."""
    n = game.n
    coeff = np.full(n, 1.0 / (1 << (n - 1)))
    return PayoffVector(_per_size_solution(game, coeff, limit))


# ---------------------------------------------------------------------------
# voting games


def weighted_voting_game(weights: Sequence[float], quota: float) -> Game:
    """Simple game: a coalition wins iff its total weight reaches the quota."""
    w = np.asarray(weights, dtype=np.float64)
    if np.any(w < 0):
        raise ValueError("voting weights must be non-negative")
    if quota <= 0:
        raise ValueError("quota must be positive")

    def fn(mask: int) -> float:
        return 1.0 if sum(w[i] for i in mask_nodes(mask)) >= quota else 0.0

    return Game(len(w), fn, name="weighted_voting")


def swing_counts(game: Game, limit: int | None = None) -> np.ndarray:
    """S_i = number of coalitions C (i not in C) with v(C)=0 and v(C+i)=1."""
    t = game.table(limit)
    n = game.n
    idx = np.arange(1 << n)
    counts = np.empty(n, dtype=np.int64)
    for i in range(n):
        bit = 1 << i
        without = idx[(idx & bit) == 0]
        counts[i] = int(np.round(t[without | bit] - t[without]).sum())
    return counts


def banzhaf_voting(weights: Sequence[float], quota: float, limit: int | None = None):
    """Relative and normalised Banzhaf indices of a weighted voting game.

    Returns (relative, normalised): S_i / sum_j S_j and S_i / 2^(n-1).
    """
    game = weighted_voting_game(weights, quota)
    s = swing_counts(game, limit)
    total = int(s.sum())
    if total == 0:
        raise NumericalError("no player ever swings; relative Banzhaf index undefined")
    n = game.n
    relative = s / total
    normalised = s / float(1 << (n - 1))
    return relative, normalised


# ---------------------------------------------------------------------------
# community structures: Owen value and friends


def _community_unions(communities: Sequence[int]) -> list[int]:
    m = len(communities)
    unions = [0] * (1 << m)
    for tm in range(1, 1 << m):
        low = tm & -tm
        unions[tm] = unions[tm ^ low] | communities[low.bit_length() - 1]
    return unions


def _subsets_of(mask: int):
    """All subsets of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _two_level_value(
    game: Game,
    communities: Sequence[int],
    outer_coeff: Callable[[int], float],
    inner_coeff: Callable[[int, int], float],
) -> np.ndarray:
    """Shared engine for Owen-style values on a partition.

    outer_coeff(t) weighs community subsets of size t; inner_coeff(c, b)
    weighs intra-community subsets of size c inside a community of size b.
    """
    n = game.n
    m = len(communities)
    check_exact_limit(m, what="community-subset enumeration")
    unions = _community_unions(communities)
    all_comms = (1 << m) - 1
    phi = np.zeros(n)
    for q, qmask in enumerate(communities):
        b = popcount(qmask)
        others = all_comms ^ (1 << q)
        bases = [(popcount(tm), unions[tm]) for tm in _subsets_of(others)]
        for i in mask_nodes(qmask):
            bit = 1 << i
            rest = qmask ^ bit
            total = 0.0
            for t, base in bases:
                wt = outer_coeff(t)
                for c_mask in _subsets_of(rest):
                    w = wt * inner_coeff(popcount(c_mask), b)
                    coalition = base | c_mask
                    total += w * (game(coalition | bit) - game(coalition))
            phi[i] = total
    return phi


def owen_value(game: Game, communities: Sequence[int]) -> PayoffVector:
    """Owen value for a partition of the players into communities.

    Two-level Shapley: communities enter in random order, then members
    within the community in random order.
    """
    check_partition(game.n, communities)
    m = len(communities)
    fm = factorials(m)
    outer = [float(Fraction(fm[t] * fm[m - t - 1], fm[m])) for t in range(m)]
    inner_cache: dict[int, list[float]] = {}

    def inner(c: int, b: int) -> float:
        w = inner_cache.get(b)
        if w is None:
            fb = factorials(b)
            w = [float(Fraction(fb[k] * fb[b - k - 1], fb[b])) for k in range(b)]
            inner_cache[b] = w
        return w[c]

    return PayoffVector(_two_level_value(game, communities, lambda t: outer[t], inner))


def coalitional_semivalue(
    game: Game,
    communities: Sequence[int],
    beta,
    alpha,
) -> PayoffVector:
    """Two-level semivalue over a community partition.

    beta is a distribution over the number of other communities present
    (size |CS|); alpha gives, per community size b, a distribution over
    the number of fellow members present (callable b -> length-b array,
    or a plain array when all communities share one size).  Uniform beta
    and alpha reduce to the Owen value.
    """
    check_partition(game.n, communities)
    m = len(communities)
    b_arr = _check_distribution(beta, m, "community-level weights")
    alpha_cache: dict[int, np.ndarray] = {}

    def alpha_for(bsize: int) -> np.ndarray:
        arr = alpha_cache.get(bsize)
        if arr is None:
            raw = alpha(bsize) if callable(alpha) else alpha
            arr = _check_distribution(raw, bsize, "member-level weights")
            alpha_cache[bsize] = arr
        return arr

    def outer(t: int) -> float:
        return b_arr[t] / math.comb(m - 1, t)

    def inner(c: int, b: int) -> float:
        return alpha_for(b)[c] / math.comb(b - 1, c)

    return PayoffVector(_two_level_value(game, communities, outer, inner))


def configuration_value(game: Game, communities: Sequence[int]) -> PayoffVector:
    """Owen-style value for overlapping community covers.

    For each player the sum runs over community subsets T disjoint from
    all of the player's own communities, each owning community Q, and
    each subset C of Q minus the player, with the two-factorial Owen
    coefficients.  On a partition this is exactly the Owen value.
    """
    n = game.n
    check_cover(n, communities)
    m = len(communities)
    check_exact_limit(m, what="community-subset enumeration")
    fm = factorials(m)
    outer = [float(Fraction(fm[t] * fm[m - t - 1], fm[m])) for t in range(m)]
    inner_cache: dict[int, list[float]] = {}

    def inner(b: int) -> list[float]:
        w = inner_cache.get(b)
        if w is None:
            fb = factorials(b)
            w = [float(Fraction(fb[k] * fb[b - k - 1], fb[b])) for k in range(b)]
            inner_cache[b] = w
        return w

    unions = _community_unions(communities)
    all_comms = (1 << m) - 1
    phi = np.zeros(n)
    for i in range(n):
        bit = 1 << i
        own = 0
        for q, qmask in enumerate(communities):
            if qmask & bit:
                own |= 1 << q
        avail = all_comms ^ own
        total = 0.0
        for tm in _subsets_of(avail):
            wt = outer[popcount(tm)]
            base = unions[tm]
            for q in mask_nodes(own):
                qmask = communities[q]
                b = popcount(qmask)
                w_in = inner(b)
                for c_mask in _subsets_of(qmask ^ bit):
                    w = wt * w_in[popcount(c_mask)]
                    coalition = base | c_mask
                    total += w * (game(coalition | bit) - game(coalition))
        phi[i] = total
    return PayoffVector(phi)


# ---------------------------------------------------------------------------
# weighted and proper Shapley


def weighted_shapley(
    game: Game,
    weights: Sequence[float],
    limit: int | None = None,
    allow_zero: bool = False,
) -> PayoffVector:
    """SV^w_i = sum over coalitions C containing i of (w_i / w(C)) * dividend(C).

    With allow_zero, zero-weight players simply take no share (a coalition
    whose members all have weight zero forfeits its dividend).
    """
    n = game.n
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != (n,):
        raise ValueError(f"need {n} weights")
    if np.any(w < 0) or (not allow_zero and np.any(w == 0)):
        raise ValueError("weights must be positive")
    d = game.dividends(limit)
    size = 1 << n
    wsum = np.zeros(size)
    idx = np.arange(size)
    for b in range(n):
        has = (idx & (1 << b)) != 0
        wsum[has] += w[b]
    with np.errstate(divide="ignore", invalid="ignore"):
        share = np.where(wsum > 0, d / np.where(wsum > 0, wsum, 1.0), 0.0)
    phi = np.empty(n)
    for i in range(n):
        if w[i] == 0:
            phi[i] = 0.0
            continue
        phi[i] = w[i] * float(share[(idx & (1 << i)) != 0].sum())
    return PayoffVector(phi)


def is_proper(game: Game, x: Sequence[float], tol: float = PROPER_TOL) -> bool:
    """True iff x is a fixed point of the weighted Shapley map: SV^x(v) = x."""
    xv = np.asarray(x, dtype=np.float64)
    sv = weighted_shapley(game, xv, allow_zero=True).values
    return bool(np.max(np.abs(sv - xv)) <= tol)


# ---------------------------------------------------------------------------
# interaction indices


def synergy(game: Game, c_mask: int, i: int, j: int) -> float:
    """Second difference v(C+ij) - v(C+i) - v(C+j) + v(C); C must avoid i and j."""
    if i == j:
        raise ValueError("synergy needs two distinct players")
    bi, bj = 1 << i, 1 << j
    if c_mask & (bi | bj):
        raise ValueError("the context coalition must exclude both players")
    return game(c_mask | bi | bj) - game(c_mask | bi) - game(c_mask | bj) + game(c_mask)


def interaction_index(
    game: Game,
    i: int,
    j: int,
    kind: str = "shapley",
    beta=None,
    communities: Sequence[int] | None = None,
    alpha=None,
    limit: int | None = None,
) -> float:
    """Expected synergy of players i and j under a coalition distribution.

    kind "shapley": Shapley-type weights over contexts C (equivalently the
    Shapley value of the merged player minus the two removal values).
    kind "semivalue": beta over context sizes 0..n-2, uniform within a size.
    kind "coalitional": i and j must live in two different communities P, Q
    of a partition; contexts are unions of whole other communities plus a
    subset of (P u Q)\\{i,j}, with beta over the community count and alpha
    (indexed by |P|+|Q|-1) over the local context size.
    """
    n = game.n
    if i == j:
        raise ValueError("interaction index needs two distinct players")
    bi, bj = 1 << i, 1 << j
    pair = bi | bj
    t = game.table(limit)
    idx = np.arange(1 << n)
    contexts = idx[(idx & pair) == 0]
    syn = t[contexts | pair] - t[contexts | bi] - t[contexts | bj] + t[contexts]
    sizes = coalition_sizes(n)[contexts]

    if kind == "shapley":
        f = factorials(n)
        coeff = np.array(
            [float(Fraction(f[k] * f[n - k - 2], f[n - 1])) for k in range(n - 1)]
        )
        return float(np.dot(coeff[sizes], syn))
    if kind == "semivalue":
        b = _check_distribution(beta, n - 1, "interaction weights")
        coeff = np.array([b[k] / math.comb(n - 2, k) for k in range(n - 1)])
        return float(np.dot(coeff[sizes], syn))
    if kind == "coalitional":
        if communities is None:
            raise ValueError("coalitional interaction needs a community partition")
        check_partition(n, communities)
        m = len(communities)
        p_idx = next(q for q, qm in enumerate(communities) if qm & bi)
        q_idx = next(q for q, qm in enumerate(communities) if qm & bj)
        if p_idx == q_idx:
            raise ValueError(
                "coalitional interaction compares players from two different communities"
            )
        b_arr = _check_distribution(beta, m - 1, "community-level weights")
        local = (communities[p_idx] | communities[q_idx]) ^ pair
        lsize = popcount(local)
        a_arr = _check_distribution(
            alpha(lsize + 1) if callable(alpha) else alpha, lsize + 1, "local weights"
        )
        unions = _community_unions(communities)
        avail = ((1 << m) - 1) ^ (1 << p_idx) ^ (1 << q_idx)
        g = game
        total = 0.0
        for tm in _subsets_of(avail):
            k = popcount(tm)
            wt = b_arr[k] / math.comb(m - 2, k)
            base = unions[tm]
            for c_mask in _subsets_of(local):
                l = popcount(c_mask)
                w = wt * a_arr[l] / math.comb(lsize, l)
                ctx = base | c_mask
                total += w * (g(ctx | pair) - g(ctx | bi) - g(ctx | bj) + g(ctx))
        return total
    raise ValueError(f"unknown interaction kind {kind!r}")


# ---------------------------------------------------------------------------
# games on ordered coalitions


class OrderedGame:
    """A game whose worth depends on the order in which players arrive.

    Define it either by a function on player tuples or directly by a
    sparse dividend map {tuple: dividend}.  Dividends follow the
    subsequence recursion d(p) = v(p) - sum of d over proper subsequences,
    i.e. the Moebius inversion on the position lattice of p.
    """

    def __init__(
        self,
        n: int,
        fn: Callable[[tuple], float] | None = None,
        dividends: dict[tuple, float] | None = None,
        name: str | None = None,
    ):
        if (fn is None) == (dividends is None):
            raise ValueError("give exactly one of fn or dividends")
        self.n = n
        self._fn = fn
        self._div = dict(dividends) if dividends is not None else None
        self._vcache: dict[tuple, float] = {(): 0.0}
        self.name = name or "ordered_game"

    def value(self, seq: Sequence[int]) -> float:
        seq = tuple(seq)
        v = self._vcache.get(seq)
        if v is not None:
            return v
        if self._fn is not None:
            v = float(self._fn(seq))
        else:
            # v(p) = sum of dividends over all subsequences of p
            k = len(seq)
            div = self._div
            v = 0.0
            for r in range(1, k + 1):
                for pos in itertools.combinations(range(k), r):
                    v += div.get(tuple(seq[p] for p in pos), 0.0)
        self._vcache[seq] = v
        return v

    def dividends(self, limit: int | None = None) -> dict[tuple, float]:
        """All non-zero generalised dividends, keyed by ordered coalition."""
        if self._div is not None:
            return self._div
        check_ordered_limit(self.n, limit, what=f"ordered dividends of {self.name!r}")
        div: dict[tuple, float] = {}
        players = range(self.n)
        for k in range(1, self.n + 1):
            for seq in itertools.permutations(players, k):
                d = self.value(seq)
                for r in range(1, k):
                    for pos in itertools.combinations(range(k), r):
                        sub = tuple(seq[p] for p in pos)
                        d -= div.get(sub, 0.0)
                if d != 0.0:
                    div[seq] = d
        self._div = div
        return div


def from_unordered(game: Game) -> OrderedGame:
    """Wrap an order-insensitive game for use with ordered-coalition values."""
    from .graph import nodes_mask

    return OrderedGame(
        game.n, fn=lambda seq: game(nodes_mask(seq)), name=f"{game.name}*"
    )


def _ordered_value(
    og: OrderedGame,
    weight: Callable[[int, int], float],
    limit: int | None = None,
) -> PayoffVector:
    """acc_i = sum over ordered coalitions containing i of d * weight(|S|, position of i)."""
    acc = np.zeros(og.n)
    for seq, d in og.dividends(limit).items():
        k = len(seq)
        for pos, player in enumerate(seq, start=1):
            w = weight(k, pos)
            if w:
                acc[player] += d * w
    return PayoffVector(acc)


def nowak_radzik(og: OrderedGame, limit: int | None = None) -> PayoffVector:
    """Whole dividend of each ordered coalition to its last player, over |S|!."""
    return _ordered_value(
        og, lambda k, pos: 1.0 / math.factorial(k) if pos == k else 0.0, limit
    )


def sanchez_bergantinos(og: OrderedGame, limit: int | None = None) -> PayoffVector:
    """Dividend split equally among the coalition's players, over |S|!."""
    return _ordered_value(og, lambda k, pos: 1.0 / (math.factorial(k) * k), limit)


def psi_alpha(og: OrderedGame, alpha: float, limit: int | None = None) -> PayoffVector:
    """Hybrid order-value: weights alpha^(|S|-pos) with 0^0 = 1.

    alpha = 0 gives the last-player rule, alpha = 1 the equal split; the
    per-coalition weights always sum to 1/|S|!.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")

    def weight(k: int, pos: int) -> float:
        e = k - pos
        num = 1.0 if e == 0 else alpha**e
        denom = sum(1.0 if j == 0 else alpha**j for j in range(k))
        return num / (math.factorial(k) * denom)

    return _ordered_value(og, weight, limit)


# ---------------------------------------------------------------------------
# Monte Carlo estimation


MC_CHUNK = 4096


def _finish_mc(acc, acc2, m, seed, method):
    mean = acc / m
    var = np.maximum(acc2 / m - mean**2, 0.0)
    return PayoffVector(
        mean,
        method=method,
        samples=m,
        seed=seed,
        stderr=np.sqrt(var / m),
    )


def _mc_shapley(game: Game, m: int, rng, n: int):
    acc = np.zeros(n)
    acc2 = np.zeros(n)
    done = 0
    while done < m:
        chunk = min(MC_CHUNK, m - done)
        perms = np.argsort(rng.random((chunk, n)), axis=1)
        for row in perms:
            mask = 0
            prev = 0.0
            for p in row:
                p = int(p)
                mask |= 1 << p
                v = game(mask)
                mc = v - prev
                acc[p] += mc
                acc2[p] += mc * mc
                prev = v
        done += chunk
    return acc, acc2


def _mc_owen(game: Game, communities, m: int, rng, n: int):
    members = [list(mask_nodes(q)) for q in communities]
    acc = np.zeros(n)
    acc2 = np.zeros(n)
    for _ in range(m):
        order: list[int] = []
        for q in rng.permutation(len(members)):
            block = members[int(q)]
            order.extend(block[int(t)] for t in rng.permutation(len(block)))
        mask = 0
        prev = 0.0
        for p in order:
            mask |= 1 << p
            v = game(mask)
            mc = v - prev
            acc[p] += mc
            acc2[p] += mc * mc
            prev = v
    return acc, acc2


def _mc_semivalue(game: Game, beta, m: int, rng, n: int):
    b = _check_distribution(beta, n, "semivalue weights")
    acc = np.zeros(n)
    acc2 = np.zeros(n)
    others = [[j for j in range(n) if j != i] for i in range(n)]
    for _ in range(m):
        for i in range(n):
            k = int(rng.choice(n, p=b))
            pool = others[i]
            pick = np.argsort(rng.random(n - 1))[:k]
            c_mask = 0
            for t in pick:
                c_mask |= 1 << pool[int(t)]
            mc = game(c_mask | (1 << i)) - game(c_mask)
            acc[i] += mc
            acc2[i] += mc * mc
    return acc, acc2


def _mc_coalitional(game: Game, communities, beta, alpha, m: int, rng, n: int):
    check_partition(n, communities)
    mm = len(communities)
    b = _check_distribution(beta, mm, "community-level weights")
    comm_of = {}
    members = [list(mask_nodes(q)) for q in communities]
    for q, block in enumerate(members):
        for i in block:
            comm_of[i] = q
    alpha_arrs = {}
    for q, block in enumerate(members):
        bsize = len(block)
        if bsize not in alpha_arrs:
            raw = alpha(bsize) if callable(alpha) else alpha
            alpha_arrs[bsize] = _check_distribution(raw, bsize, "member-level weights")
    acc = np.zeros(n)
    acc2 = np.zeros(n)
    for _ in range(m):
        for i in range(n):
            q = comm_of[i]
            other_comms = [x for x in range(mm) if x != q]
            t = int(rng.choice(mm, p=b))
            pick = np.argsort(rng.random(mm - 1))[:t]
            base = 0
            for x in pick:
                base |= communities[other_comms[int(x)]]
            block = [p for p in members[q] if p != i]
            bsize = len(block) + 1
            c = int(rng.choice(bsize, p=alpha_arrs[bsize]))
            cpick = np.argsort(rng.random(len(block)))[:c]
            c_mask = 0
            for x in cpick:
                c_mask |= 1 << block[int(x)]
            coalition = base | c_mask
            mc = game(coalition | (1 << i)) - game(coalition)
            acc[i] += mc
            acc2[i] += mc * mc
    return acc, acc2


def mc_estimate(
    game: Game,
    concept: str = "shapley",
    samples: int = 1000,
    seed: int | None = None,
    beta=None,
    communities: Sequence[int] | None = None,
    alpha=None,
    exhaustive: bool = False,
) -> PayoffVector:
    """Monte Carlo payoff estimate with per-player standard errors.

    Permutation sampling for shapley/owen, size-then-subset sampling for
    semivalue/coalitional; `samples` counts samples per player.  The same
    seed always reproduces the exact same vector.  With exhaustive=True the
    shapley concept scans all n! permutations instead of sampling.
    """
    n = game.n
    if exhaustive:
        if concept != "shapley":
            raise ValueError("exhaustive scan is only wired up for the shapley concept")
        result = shapley_permutation(game)
        return PayoffVector(
            result.values,
            method="exact",
            samples=math.factorial(n),
            seed=seed,
            stderr=np.zeros(n),
        )
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    if concept == "shapley":
        acc, acc2 = _mc_shapley(game, samples, rng, n)
    elif concept == "owen":
        if communities is None:
            raise ValueError("owen estimation needs a community partition")
        check_partition(n, communities)
        acc, acc2 = _mc_owen(game, communities, samples, rng, n)
    elif concept == "semivalue":
        acc, acc2 = _mc_semivalue(game, beta, samples, rng, n)
    elif concept == "coalitional":
        if communities is None:
            raise ValueError("coalitional estimation needs a community partition")
        acc, acc2 = _mc_coalitional(game, communities, beta, alpha, samples, rng, n)
    else:
        raise ValueError(f"unknown concept {concept!r}")
    return _finish_mc(acc, acc2, samples, seed, "mc")


__all__ = [
    "OrderedGame",
    "PayoffVector",
    "banzhaf",
    "banzhaf_beta",
    "banzhaf_voting",
    "check_cover",
    "check_partition",
    "coalitional_semivalue",
    "configuration_value",
    "from_unordered",
    "interaction_index",
    "is_proper",
    "mc_estimate",
    "nowak_radzik",
    "owen_value",
    "point_beta",
    "psi_alpha",
    "sanchez_bergantinos",
    "semivalue_exact",
    "shapley_beta",
    "shapley_exact",
    "shapley_from_dividends",
    "shapley_permutation",
    "shapley_size_weights",
    "swing_counts",
    "synergy",
    "weighted_shapley",
    "weighted_voting_game",
]
