"""Exact closed-form sequence values.

All functions return Python ints (arbitrary precision).  Arguments that may
arise as half-integers in the recursions can be passed as ``Fraction``;
non-integer arguments map to 0 per the sequence conventions, which keeps
every function total.  Divisions in closed forms are checked to be exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


def _integral(x) -> int | None:
    """int value of x when x is integer-valued, else None."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else None
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def binomial(n: int, k: int) -> int:
    """n choose k; 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


@lru_cache(maxsize=None)
def catalan(n) -> int:
    """Catalan number C(n) = binomial(2n, n)/(n+1); 0 for negative or non-integer n."""
    i = _integral(n)
    if i is None or i < 0:
        return 0
    return _exact_div(comb(2 * i, i), i + 1)


@lru_cache(maxsize=None)
def fuss_catalan(n: int, k: int) -> int:
    """Fuss-Catalan number: binomial(kn, n)/((k-1)n + 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 2:
        raise ValueError("k must be >= 2")
    return _exact_div(comb(k * n, n), (k - 1) * n + 1)


def quadrangulation_count(n) -> int:
    """Number of quadrangulations of a (2n+2)-gon: binomial(3n, n)/(2n+1).

    Returns 0 unless n is a nonnegative integer (half-integer call sites in
    the diameter terms rely on this).
    """
    i = _integral(n)
    if i is None or i < 0:
        return 0
    return _exact_div(comb(3 * i, i), 2 * i + 1)


@lru_cache(maxsize=None)
def kangulation_count(n, k: int = 3) -> int:
    """Number of dissections of an n-gon into k-gons.

    Nonzero only when n = (k-2)m + 2 for some integer m >= 0, in which case
    the count is the Fuss-Catalan number with parameters (m, k-1).  The
    degenerate n = 2 case counts 1 (an edge, dissected by doing nothing).
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    i = _integral(n)
    if i is None:
        return 0
    m, r = divmod(i - 2, k - 2)
    if r or m < 0:
        return 0
    return fuss_catalan(m, k - 1)


def ballot_T(n: int, k: int) -> int:
    """Ballot number (n-2k+1)/(n-k+1) * binomial(n, k); 0 when k < 0 or n-2k+1 <= 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or n - 2 * k + 1 <= 0:
        return 0
    return _exact_div((n - 2 * k + 1) * comb(n, k), n - k + 1)


def catalan_mod(n: int, m: int) -> int:
    """C(n) mod m, via the cached exact value."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if m < 2:
        raise ValueError("modulus must be >= 2")
    return catalan(n) % m
