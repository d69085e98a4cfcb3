"""Bernoulli numbers (convention B_1 = -1/2) and generalized Bernoulli numbers B_{n,chi}.

The even-index table is produced from tangent numbers with integer-only
arithmetic and memoized in a process-wide, thread-safe table. A persistent
cache (see mock_eisenstein.storage) can be attached to skip recomputation
across runs.
"""

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb

from mock_eisenstein.core.base_bernoulli_cache import BaseBernoulliCache
from mock_eisenstein.core.errors import DomainError
from mock_eisenstein.numtheory.arithmetic import QuadraticCharacter

logger = logging.getLogger(__name__)

MIN_TABLE_SIZE = 64


def even_bernoulli_numbers(max_index: int) -> dict[int, Fraction]:
    """B_0, B_2, ..., B_{2K} for 2K <= max_index, from the tangent numbers T_1..T_K.

    Uses B_{2k} = (-1)^(k-1) * 2k * T_k / (4^k * (4^k - 1)); the tangent numbers come
    from an O(K^2) in-place integer recurrence.
    """
    K = max_index // 2
    table = {0: Fraction(1)}
    if K == 0:
        return table

    tangent = [0] * (K + 1)
    tangent[1] = 1
    for k in range(2, K + 1):
        tangent[k] = (k - 1) * tangent[k - 1]
    for k in range(2, K + 1):
        for j in range(k, K + 1):
            tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j]

    for k in range(1, K + 1):
        four_k = 4 ** k
        value = Fraction(2 * k * tangent[k], four_k * (four_k - 1))
        table[2 * k] = value if k % 2 == 1 else -value
    return table


class BernoulliTable:
    """Memo table of even-index Bernoulli numbers.

    Readers see an immutable (max_index, values) snapshot; extension is
    serialized by a lock and publishes a new snapshot in one assignment.
    """

    def __init__(self, cache: BaseBernoulliCache | None = None):
        self._lock = threading.Lock()
        self._snapshot: tuple[int, dict[int, Fraction]] = (0, {0: Fraction(1)})
        self._cache = cache
        self._cache_consulted = False

    @property
    def max_index(self) -> int:
        return self._snapshot[0]

    def attach_cache(self, cache: BaseBernoulliCache | None) -> None:
        with self._lock:
            self._cache = cache
            self._cache_consulted = False

    def reset(self) -> None:
        """Forget every computed value (the persistent cache is left untouched)."""
        with self._lock:
            self._snapshot = (0, {0: Fraction(1)})
            self._cache_consulted = False

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"Bernoulli index must be >= 0, got {n}")
        if n == 1:
            return Fraction(-1, 2)
        if n % 2 == 1:
            return Fraction(0)
        max_index, values = self._snapshot
        if n > max_index:
            max_index, values = self._extend(n)
        return values[n]

    def _extend(self, n: int) -> tuple[int, dict[int, Fraction]]:
        with self._lock:
            max_index, values = self._snapshot
            if n <= max_index:
                return self._snapshot

            if self._cache is not None and not self._cache_consulted:
                self._cache_consulted = True
                stored = self._cache.load()
                if stored:
                    merged = dict(values)
                    merged.update(stored)
                    top = self._contiguous_top(merged)
                    self._snapshot = (top, merged)
                    logger.debug(f"Loaded Bernoulli numbers up to index {top} from cache")
                    if n <= top:
                        return self._snapshot
                    max_index = top

            target = max(n, 2 * max_index, MIN_TABLE_SIZE)
            target -= target % 2
            logger.debug(f"Computing Bernoulli numbers up to index {target}")
            computed = even_bernoulli_numbers(target)
            self._snapshot = (target, computed)
            if self._cache is not None:
                self._cache.store(computed)
            return self._snapshot

    @staticmethod
    def _contiguous_top(values: dict[int, Fraction]) -> int:
        top = 0
        while top + 2 in values:
            top += 2
        return top


_TABLE = BernoulliTable()


def bernoulli_table() -> BernoulliTable:
    return _TABLE


def configure_bernoulli_cache(cache: BaseBernoulliCache | None) -> None:
    """Attach (or detach, with None) the persistent cache behind the shared table."""
    _TABLE.attach_cache(cache)


def bernoulli(n: int) -> Fraction:
    """The n-th Bernoulli number with B_1 = -1/2."""
    return _TABLE.get(n)


def bernoulli_polynomial(n: int, x: Fraction) -> Fraction:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j)."""
    return sum(
        (comb(n, j) * bernoulli(j) * x ** (n - j) for j in range(n + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=4096)
def _character_power_sums(discriminant: int, n: int) -> tuple[int, ...]:
    """S_m = sum_{a=1}^{f} chi(a) a^m for m = 0..n."""
    chi = QuadraticCharacter(discriminant)
    f = chi.conductor
    sums = [0] * (n + 1)
    for a in range(1, f + 1):
        c = chi(a)
        if c == 0:
            continue
        power = 1
        for m in range(n + 1):
            sums[m] += c * power
            power *= a
    return tuple(sums)


@lru_cache(maxsize=8192)
def _generalized_bernoulli(n: int, discriminant: int) -> Fraction:
    chi = QuadraticCharacter(discriminant)
    f = chi.conductor
    sums = _character_power_sums(discriminant, n)
    # f^(n-1) * sum_a chi(a) B_n(a/f), expanded so the a-sum is an integer power sum
    total = Fraction(0)
    for j in range(n + 1):
        b_j = bernoulli(j)
        if b_j == 0 or sums[n - j] == 0:
            continue
        total += comb(n, j) * b_j * Fraction(f) ** (j - 1) * sums[n - j]
    return total


def generalized_bernoulli(n: int, chi: QuadraticCharacter) -> Fraction:
    """B_{n,chi} = f^(n-1) * sum_{a=1}^{f} chi(a) B_n(a/f), f the conductor of chi."""
    if n < 1:
        raise DomainError(f"generalized_bernoulli expects n >= 1, got {n}")
    return _generalized_bernoulli(n, chi.discriminant)
