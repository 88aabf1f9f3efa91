"""Cooperative games on bitmask coalitions.

A game is any callable mask -> float together with the player count.
The Game wrapper adds memoisation, tabulation over all 2^n coalitions,
the dividend (Moebius) transform and a few structural checks.  Exact
enumeration is guarded by a size bound because the tables grow as 2^n.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable

import numpy as np

from .errors import SizeLimitError
from .graph import mask_nodes, popcount

EXACT_LIMIT = 24
ORDERED_LIMIT = 10


def check_exact_limit(n: int, limit: int | None = None, what: str = "exact enumeration") -> None:
    cap = EXACT_LIMIT if limit is None else limit
    if n > cap:
        raise SizeLimitError(
            f"{what} needs 2^{n} coalition evaluations; limit is n <= {cap} "
            f"(pass a higher limit to override)"
        )


def check_ordered_limit(n: int, limit: int | None = None, what: str = "ordered-coalition enumeration") -> None:
    cap = ORDERED_LIMIT if limit is None else limit
    if n > cap:
        raise SizeLimitError(
            f"{what} scans factorially many orderings; limit is n <= {cap} "
            f"(pass a higher limit to override)"
        )


class Game:
    """A characteristic function v: 2^N -> R with v(empty) = 0.

    `fn` takes a coalition bitmask.  Values are memoised; `table()`
    materialises all 2^n values as a numpy array indexed by mask.
    """

    def __init__(self, n: int, fn: Callable[[int], float], name: str | None = None):
        if n < 1:
            raise ValueError("a game needs at least one player")
        if abs(float(fn(0))) > 1e-12:
            raise ValueError("characteristic function must vanish on the empty coalition")
        self.n = n
        self._fn = fn
        self.name = name or getattr(fn, "__name__", "game")
        self._cache: dict[int, float] = {0: 0.0}
        self._table: np.ndarray | None = None

    def __call__(self, mask: int) -> float:
        if self._table is not None:
            return float(self._table[mask])
        v = self._cache.get(mask)
        if v is None:
            v = float(self._fn(mask))
            self._cache[mask] = v
        return v

    @property
    def grand(self) -> int:
        return (1 << self.n) - 1

    def table(self, limit: int | None = None) -> np.ndarray:
        """All 2^n values, index = coalition mask."""
        if self._table is None:
            check_exact_limit(self.n, limit, what=f"tabulating {self.name!r}")
            fn = self._fn
            t = np.empty(1 << self.n, dtype=np.float64)
            t[0] = 0.0
            for mask in range(1, 1 << self.n):
                t[mask] = fn(mask)
            self._table = t
        return self._table

    def dividends(self, limit: int | None = None) -> np.ndarray:
        """Harsanyi dividends of every coalition (Moebius transform)."""
        return dividend_transform(self.table(limit))

    def restrict_fn(self) -> Callable[[int], float]:
        return self.__call__


def tabulate(n: int, fn: Callable[[int], float], limit: int | None = None) -> np.ndarray:
    return Game(n, fn).table(limit)


def dividend_transform(table: np.ndarray) -> np.ndarray:
    """In-place-style Moebius transform: d[S] = sum_{T<=S} (-1)^{|S\\T|} v[T].

    One pass per bit, the standard subset-sum inversion.
    """
    d = np.array(table, dtype=np.float64, copy=True)
    size = d.shape[0]
    n = size.bit_length() - 1
    idx = np.arange(size)
    for b in range(n):
        has = (idx >> b) & 1 == 1
        d[has] -= d[idx[has] ^ (1 << b)]
    return d


def from_dividends(dividends: np.ndarray) -> np.ndarray:
    """Inverse transform: v[S] = sum_{T<=S} d[T]."""
    v = np.array(dividends, dtype=np.float64, copy=True)
    size = v.shape[0]
    n = size.bit_length() - 1
    idx = np.arange(size)
    for b in range(n):
        has = (idx >> b) & 1 == 1
        v[has] += v[idx[has] ^ (1 << b)]
    return v


def unanimity_game(n: int, support: int) -> Game:
    """u_T(S) = 1 iff T is a subset of S."""
    if support == 0:
        raise ValueError("unanimity support must be non-empty")

    def fn(mask: int, T: int = support) -> float:
        return 1.0 if mask & T == T else 0.0

    return Game(n, fn, name=f"unanimity({support:#x})")


def additive_game(weights: Iterable[float]) -> Game:
    w = np.asarray(list(weights), dtype=np.float64)

    def fn(mask: int) -> float:
        return float(sum(w[i] for i in mask_nodes(mask)))

    return Game(len(w), fn, name="additive")


def is_monotone(table: np.ndarray) -> bool:
    size = table.shape[0]
    n = size.bit_length() - 1
    for mask in range(size):
        for b in range(n):
            if mask & (1 << b):
                if table[mask] < table[mask ^ (1 << b)] - 1e-12:
                    return False
    return True


def is_superadditive(table: np.ndarray) -> bool:
    size = table.shape[0]
    grand = size - 1
    for s in range(1, size):
        rest = grand ^ s
        # iterate subsets t of rest, t > 0; skip symmetric half via s < t not needed
        t = rest
        while t:
            if table[s | t] < table[s] + table[t] - 1e-9:
                return False
            t = (t - 1) & rest
    return True


def game_from_table(table: np.ndarray, name: str = "table") -> Game:
    t = np.asarray(table, dtype=np.float64)
    n = t.shape[0].bit_length() - 1
    g = Game(n, lambda mask: float(t[mask]), name=name)
    g._table = t
    return g


def coalition_sizes(n: int) -> np.ndarray:
    """popcount of every mask 0..2^n-1, vectorised."""
    sizes = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        sizes[(np.arange(1 << n) >> b) & 1 == 1] += 1
    return sizes


def factorials(n: int) -> list[int]:
    return [math.factorial(k) for k in range(n + 1)]


__all__ = [
    "EXACT_LIMIT",
    "ORDERED_LIMIT",
    "Game",
    "additive_game",
    "check_exact_limit",
    "check_ordered_limit",
    "coalition_sizes",
    "dividend_transform",
    "from_dividends",
    "game_from_table",
    "is_monotone",
    "is_superadditive",
    "tabulate",
    "unanimity_game",
]
