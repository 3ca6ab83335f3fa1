"""Standard q-objects: Pochhammer products, Gaussian polynomials,
partition tables, theta sums and triple products.

Parameters of the identities (``a``, ``b``, ``c``, ``gamma`` ...) are always
specialised to signed powers of ``q``; :class:`Monomial` is that value.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .series import (
    LaurentSeries,
    PrecisionError,
    div_binomial,
    from_coeffs,
    mul_binomial,
    one,
    truncate,
)

__all__ = [
    "Monomial",
    "Q",
    "ONE",
    "PartitionTable",
    "poch_finite",
    "poch_infinite",
    "poch_factors",
    "times_poch",
    "over_poch",
    "over_poch_infinite",
    "poch_valuation",
    "neg_val",
    "qbinomial",
    "partition_table",
    "overpartition_table",
    "theta_sum_odd_M",
    "triple_product_rhs",
]


@dataclass(frozen=True, order=True)
class Monomial:
    """The nonzero value ``sign * q**exp``."""

    sign: int
    exp: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"Monomial sign must be +1 or -1, got {self.sign}")

    @classmethod
    def q(cls, exp: int = 1, sign: int = 1) -> "Monomial":
        return cls(sign, exp)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse ``q``, ``-q^3``, ``q^-2``, ``1``, ``-1``, ``q**2``."""
        t = text.strip().replace(" ", "").replace("**", "^")
        sign = 1
        if t.startswith("-"):
            sign, t = -1, t[1:]
        elif t.startswith("+"):
            t = t[1:]
        if t == "1":
            return cls(sign, 0)
        if t == "q":
            return cls(sign, 1)
        if t.startswith("q^"):
            body = t[2:].strip("()")
            return cls(sign, int(body))
        raise ValueError(f"not a signed power of q: {text!r}")

    def __mul__(self, other: "Monomial | int") -> "Monomial":
        if isinstance(other, int):
            # multiplying by q^other
            return Monomial(self.sign, self.exp + other)
        return Monomial(self.sign * other.sign, self.exp + other.exp)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exp - other.exp)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.sign**k if k >= 0 else self.sign ** (-k), self.exp * k)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.sign, self.exp)

    def inverse(self) -> "Monomial":
        return Monomial(self.sign, -self.exp)

    def series(self, prec: Optional[int] = None) -> LaurentSeries:
        return LaurentSeries(self.exp, (self.sign,), prec)

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        if self.exp == 0:
            return s + "1"
        if self.exp == 1:
            return s + "q"
        return f"{s}q^{self.exp}"


Q = Monomial(1, 1)
ONE = Monomial(1, 0)


# -- Pochhammer symbols ------------------------------------------------------


def poch_factors(f: Monomial, step: int, n: int) -> Iterator[tuple[int, int]]:
    """Binomials ``(c, e)`` with ``(f; q^step)_n = prod (1 + c q^e)``."""
    for j in range(n):
        yield -f.sign, f.exp + step * j


def poch_valuation(f: Monomial, step: int, n: int) -> int:
    """Lower bound for the valuation of ``(f; q^step)_n`` (exact unless a factor vanishes)."""
    return sum(min(0, e) for _, e in poch_factors(f, step, n))


def times_poch(s: LaurentSeries, f: Monomial, step: int, n: int) -> LaurentSeries:
    for c, e in poch_factors(f, step, n):
        s = mul_binomial(s, c, e)
    return s


def over_poch(s: LaurentSeries, f: Monomial, step: int, n: int, prec: Optional[int] = None) -> LaurentSeries:
    for c, e in poch_factors(f, step, n):
        s = div_binomial(s, c, e, prec)
        prec = None
    return s


def poch_finite(f: Monomial, step: int, n: int, prec: Optional[int] = None) -> LaurentSeries:
    """``(f; q^step)_n`` as an exact Laurent polynomial (cut at ``prec`` if given)."""
    if n < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    out = times_poch(one(), f, step, n)
    return out if prec is None else truncate(out, prec)


def _infinite_factors(f: Monomial, step: int, prec: int, base_val: int = 0) -> list[tuple[int, int]]:
    if step <= 0:
        raise ValueError("infinite product needs a positive step")
    neg = 0
    j = 0
    while f.exp + step * j <= 0:
        neg += min(0, f.exp + step * j)
        j += 1
    # factors with exponent >= prec - base_val - neg cannot affect q^e, e < prec
    out = []
    j = 0
    while True:
        e = f.exp + step * j
        if e > 0 and e >= prec - base_val - neg:
            break
        out.append((-f.sign, e))
        j += 1
    return out


def poch_infinite(f: Monomial, step: int, prec: int) -> LaurentSeries:
    """``(f; q^step)_inf`` known below ``prec``."""
    if step <= 0:
        raise ValueError("infinite product needs a positive step")
    s = one(prec - min(0, sum(min(0, e) for _, e in _infinite_factors(f, step, prec))))
    for c, e in _infinite_factors(f, step, prec):
        s = mul_binomial(s, c, e)
    return truncate(s, prec)


def over_poch_infinite(s: LaurentSeries, f: Monomial, step: int, prec: Optional[int] = None) -> LaurentSeries:
    """``s / (f; q^step)_inf``; ``prec`` caps the result (required for exact ``s``)."""
    if step <= 0:
        raise ValueError("infinite product needs a positive step")
    target = s.prec if prec is None else (prec if s.prec is None else min(prec, s.prec))
    if target is None:
        raise PrecisionError("dividing an exact series by an infinite product needs prec")
    base = s.min_exp if not s.is_zero() else target
    first = True
    for c, e in _infinite_factors(f, step, target, base):
        s = div_binomial(s, c, e, target if first else None)
        first = False
    if first:
        s = truncate(s, target) if s.prec is None else s
    return s


# -- Gaussian polynomials ----------------------------------------------------


_qbin_lock = threading.Lock()


@lru_cache(maxsize=None)
def _gauss_base1(N: int, M: int) -> tuple[int, ...]:
    # [N, M] = [N-1, M-1] + q^M [N-1, M]
    if M < 0 or M > N:
        return ()
    if M == 0 or M == N:
        return (1,)
    a = _gauss_base1(N - 1, M - 1)
    b = _gauss_base1(N - 1, M)
    out = [0] * (M * (N - M) + 1)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + M] += c
    return tuple(out)


def qbinomial(N: int, M: int, base_step: int = 1) -> LaurentSeries:
    """Gaussian polynomial ``[N, M]`` in ``q^base_step``; zero unless ``0 <= M <= N``."""
    if N < 0 or M < 0 or M > N:
        return from_coeffs(())
    with _qbin_lock:
        cs = _gauss_base1(N, M)
    if base_step == 1:
        return from_coeffs(cs)
    spread = [0] * ((len(cs) - 1) * base_step + 1)
    for i, c in enumerate(cs):
        spread[i * base_step] = c
    return from_coeffs(spread)


# -- partition tables --------------------------------------------------------


@dataclass(frozen=True)
class PartitionTable:
    kind: str  # "plain" | "overpartition"
    max_n: int
    values: tuple[int, ...]
    provenance: str  # "recurrence" | "series-expansion" | "enumeration"

    def __call__(self, n: int) -> int:
        """Table lookup with the convention that negative arguments give 0."""
        if n < 0:
            return 0
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


_ptable_lock = threading.Lock()
_ptable: list[int] = [1]


def _pentagonal_extend(max_n: int) -> None:
    p = _ptable
    for n in range(len(p), max_n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sgn = 1 if k % 2 else -1
            total += sgn * p[n - g1]
            g2 = g1 + k
            if g2 <= n:
                total += sgn * p[n - g2]
            k += 1
        p.append(total)


def partition_table(max_n: int) -> PartitionTable:
    """``p(0..max_n)`` by Euler's pentagonal-number recurrence."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    with _ptable_lock:
        _pentagonal_extend(max_n)
        vals = tuple(_ptable[: max_n + 1])
    return PartitionTable("plain", max_n, vals, "recurrence")


def overpartition_table(max_n: int) -> PartitionTable:
    """``pbar(0..max_n)`` from the expansion of ``(-q;q)_inf / (q;q)_inf``."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    prec = max_n + 1
    s = over_poch_infinite(poch_infinite(Monomial(-1, 1), 1, prec), Q, 1)
    vals = tuple(s[n] for n in range(prec))
    return PartitionTable("overpartition", max_n, vals, "series-expansion")


# -- theta sums and triple products ----------------------------------------


def _check_odd(M: int, lowest: int) -> None:
    if M % 2 == 0 or M < lowest:
        raise ValueError(f"M must be an odd integer >= {lowest}, got {M}")


def theta_sum_odd_M(M: int, prec: int) -> LaurentSeries:
    """Bilateral ``sum_n (-1)^n q^((M n^2 + n)/2)`` truncated below ``prec``."""
    _check_odd(M, 1)
    buf = [0] * max(prec, 0)
    n = 0
    while True:
        hit = False
        for m in {n, -n}:
            e = (M * m * m + m) // 2
            if e < prec:
                buf[e] += -1 if m % 2 else 1
                hit = True
        if not hit:
            break
        n += 1
    return from_coeffs(buf, 0, prec)


def triple_product_rhs(M: int, prec: int) -> LaurentSeries:
    """``(q^((M-1)/2), q^((M+1)/2), q^M; q^M)_inf`` below ``prec``."""
    _check_odd(M, 3)
    s = one(prec)
    for start in ((M - 1) // 2, (M + 1) // 2, M):
        for c, e in _infinite_factors(Monomial(1, start), M, prec):
            s = mul_binomial(s, c, e)
    return s


def neg_val(f: Monomial, step: int) -> int:
    """Constant lower bound for the valuation of ``(f; q^step)_n`` over all ``n``."""
    total = 0
    e = f.exp
    while e < 0:
        total += e
        e += step
    return total
