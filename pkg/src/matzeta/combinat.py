"""Integer combinatorics: Stirling numbers, factorial variants, binomials.

Stirling triangles are memoized up to a configured row bound (default 64);
larger arguments are computed on the fly without caching.
"""

from __future__ import annotations

import math

from .algebra import Polynomial

STIRLING_CACHE_ROWS = 64

# triangle rows; row n holds values for k = 0..n
_FIRST_ROWS: list[list[int]] = [[1]]
_SECOND_ROWS: list[list[int]] = [[1]]


def _next_first_row(prev: list[int], n: int) -> list[int]:
    # c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(n + 1):
        row[k] = (n - 1) * (prev[k] if k < n else 0) + (prev[k - 1] if k >= 1 else 0)
    return row


def _next_second_row(prev: list[int], n: int) -> list[int]:
    # S(n,k) = k S(n-1,k) + S(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(n + 1):
        row[k] = k * (prev[k] if k < n else 0) + (prev[k - 1] if k >= 1 else 0)
    return row


def _stirling(rows: list[list[int]], step, n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("Stirling numbers need nonnegative arguments")
    if k > n:
        return 0
    while len(rows) <= min(n, STIRLING_CACHE_ROWS):
        rows.append(step(rows[-1], len(rows)))
    if n < len(rows):
        return rows[n][k]
    row = rows[-1]
    for m in range(len(rows), n + 1):
        row = step(row, m)
    return row[k]


def stirling_first(n: int, k: int) -> int:
    """Unsigned count of n-permutations with exactly k disjoint cycles."""
    return _stirling(_FIRST_ROWS, _next_first_row, n, k)


def stirling_second(n: int, k: int) -> int:
    """Count of partitions of an n-set into exactly k blocks."""
    return _stirling(_SECOND_ROWS, _next_second_row, n, k)


def rising_factorial(n: int, k: int) -> int:
    """n (n+1) ... (n+k-1); the empty product is 1."""
    if k < 0:
        raise ValueError("negative factorial length")
    out = 1
    for i in range(k):
        out *= n + i
    return out


def falling_factorial(n: int, k: int) -> int:
    """n (n-1) ... (n-k+1); the empty product is 1."""
    if k < 0:
        raise ValueError("negative factorial length")
    out = 1
    for i in range(k):
        out *= n - i
    return out


def generalized_binomial(a: int, k: int) -> int:
    """Binomial coefficient a-choose-k for any integer a (k >= 0)."""
    if k < 0:
        raise ValueError("negative lower index")
    if a >= 0:
        return math.comb(a, k) if k <= a else 0
    return (-1) ** k * math.comb(k - a - 1, k)


def multichoose(n: int, k: int) -> int:
    """Number of k-multisets from n symbols: binomial(n+k-1, k)."""
    if n < 0 or k < 0:
        raise ValueError("negative multichoose argument")
    if k == 0:
        return 1
    return math.comb(n + k - 1, k)


def q_analogue(n: int) -> Polynomial:
    """1 + q + ... + q^(n-1); the zero polynomial for n = 0."""
    if n < 0:
        raise ValueError("negative argument")
    return Polynomial([1] * n)


def verify_stirling_lemma(k: int) -> bool:
    """Check j * sum_i c(k,i)S(i,j) = k * sum_i c(k-1,i-1)S(i,j) for 1 <= j <= k."""
    if k < 1:
        raise ValueError("k must be positive")
    for j in range(1, k + 1):
        lhs = j * sum(stirling_first(k, i) * stirling_second(i, j) for i in range(j, k + 1))
        rhs = k * sum(
            stirling_first(k - 1, i - 1) * stirling_second(i, j) for i in range(j, k + 1)
        )
        if lhs != rhs:
            return False
    return True
