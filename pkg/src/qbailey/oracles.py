"""Slow, independent reference computations.

Nothing here touches :mod:`qbailey.series`; polynomials are plain lists of
ints, so agreement with the production code is genuine cross-validation.
"""

from __future__ import annotations

from typing import Iterator


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every partition of ``n`` as a non-increasing tuple."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def count_partitions_enum(n: int) -> int:
    return sum(1 for _ in partitions(n))


def overpartitions(n: int) -> Iterator[tuple[tuple[int, bool], ...]]:
    """Every overpartition of ``n``: parts paired with an overline flag on the first copy."""
    for lam in partitions(n):
        distinct = sorted(set(lam), reverse=True)
        for mask in range(1 << len(distinct)):
            marked = {d for i, d in enumerate(distinct) if mask >> i & 1}
            seen: set[int] = set()
            parts = []
            for part in lam:
                parts.append((part, part in marked and part not in seen))
                seen.add(part)
            yield tuple(parts)


def count_overpartitions_enum(n: int) -> int:
    return sum(1 for _ in overpartitions(n))


def partition_counts_dp(max_n: int) -> list[int]:
    """Coin-change dynamic programme: ways to make ``n`` from parts ``1..max_n``."""
    ways = [1] + [0] * max_n
    for part in range(1, max_n + 1):
        for total in range(part, max_n + 1):
            ways[total] += ways[total - part]
    return ways


def distinct_parts_product(max_n: int) -> list[int]:
    """Coefficients of ``prod_{j>=1} (1 + q^j)`` up to ``q^max_n`` by direct expansion."""
    coeffs = [1] + [0] * max_n
    for j in range(1, max_n + 1):
        for total in range(max_n, j - 1, -1):
            coeffs[total] += coeffs[total - j]
    return coeffs


# -- polynomials as lists ------------------------------------------------------------


def poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def poly_divexact(f: list[int], g: list[int]) -> list[int]:
    """``f / g`` for monic-leading ``g`` (constant term 1), asserting no remainder."""
    if not g or g[0] != 1:
        raise ValueError("divisor must have constant term 1")
    f = list(f)
    n = len(f) - len(g) + 1
    if n <= 0:
        if any(f):
            raise ArithmeticError("inexact division")
        return [0]
    quot = [0] * n
    for i in range(n):
        c = f[i]
        quot[i] = c
        if c:
            for j, b in enumerate(g):
                f[i + j] -= c * b
    if any(f):
        raise ArithmeticError("inexact division")
    return quot


def q_factorial(n: int) -> list[int]:
    """``(q;q)_n`` as a coefficient list."""
    out = [1]
    for j in range(1, n + 1):
        out = poly_mul(out, [1] + [0] * (j - 1) + [-1])
    return out


def qbinomial_quotient(N: int, M: int) -> list[int]:
    """Gaussian polynomial ``(q;q)_N / ((q;q)_M (q;q)_{N-M})``; ``[]`` when out of range."""
    if M < 0 or M > N:
        return []
    q = poly_divexact(q_factorial(N), poly_mul(q_factorial(M), q_factorial(N - M)))
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q
