"""Exact rational arithmetic: Bernoulli numbers, binomials, even zeta values.

Everything in this module is computed over ``fractions.Fraction`` with no
floating point anywhere, so results are exact and reproducible bit for bit.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "ExactRational",
    "bernoulli",
    "binomial",
    "zeta_even_exact",
]

# Arbitrary-size signed rationals.  fractions.Fraction already guarantees the
# canonical form we rely on: lowest terms, positive denominator.
ExactRational = Fraction

# Cache of computed Bernoulli numbers, keyed by index.  Holds B_0, B_1 and a
# contiguous prefix of the even indices; odd indices >= 3 are never stored.
_BERNOULLI_CACHE: dict[int, Fraction] = {0: Fraction(1), 1: Fraction(-1, 2)}
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """Return the k-th Bernoulli number, convention B_1 = -1/2.

    Uses the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 over exact
    rationals.  Results are cached; concurrent callers are synchronized.
    """
    if k < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {k}")
    if k > 1 and k % 2 == 1:
        return Fraction(0)
    with _BERNOULLI_LOCK:
        if k not in _BERNOULLI_CACHE:
            _extend_bernoulli_cache(k)
        return _BERNOULLI_CACHE[k]


def _extend_bernoulli_cache(k: int) -> None:
    # Ascending order guarantees every B_j needed by the recurrence for B_m
    # is already present when m is reached.
    for m in range(2, k + 1, 2):
        if m in _BERNOULLI_CACHE:
            continue
        # sum_{j=0}^{m-1} C(m+1, j) B_j, odd j >= 3 contribute nothing.
        acc = (m + 1) * Fraction(-1, 2)
        for j in range(0, m, 2):
            acc += comb(m + 1, j) * _BERNOULLI_CACHE[j]
        _BERNOULLI_CACHE[m] = -acc / (m + 1)


def _bernoulli_reference(k: int) -> Fraction:
    """Independent Bernoulli evaluation via the tangent-number triangle.

    Deliberately avoids bernoulli() and its cache so the two routes can be
    cross-checked; used by the self-check machinery and the test suite.
    """
    if k < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {k}")
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(-1, 2)
    if k % 2 == 1:
        return Fraction(0)
    n = k // 2
    # Tangent numbers T_1..T_n by the triangle recurrence, integers throughout.
    t = [0] * (n + 1)
    t[1] = 1
    for i in range(2, n + 1):
        t[i] = t[i - 1] * (i - 1)
    for i in range(2, n + 1):
        for j in range(i, n + 1):
            t[j] = (j - i) * t[j - 1] + (j - i + 2) * t[j]
    sign = 1 if n % 2 == 1 else -1
    return Fraction(sign * k * t[n], 4**n * (4**n - 1))


def binomial(m: int, j: int) -> int:
    """Binomial coefficient C(m, j) for nonnegative arguments; 0 when j > m."""
    if m < 0 or j < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({m}, {j})")
    if j > m:
        return 0
    return comb(m, j)


def zeta_even_exact(j: int) -> tuple[Fraction, int]:
    """Exact value of zeta(2j) as a pair (c, 2j) meaning c * pi**(2j).

    Uses c = 2**(2j-1) * |B_{2j}| / (2j)!, valid for all j >= 1.
    """
    if j < 1:
        raise ValueError(f"zeta_even_exact requires j >= 1, got {j}")
    c = Fraction(2 ** (2 * j - 1)) * abs(bernoulli(2 * j)) / factorial(2 * j)
    return c, 2 * j
