"""Lazy products of q-factors, expanded to a target precision.

Every summand in the identity catalogue is a signed monomial times a
product of binomials ``(1 + c q^e)``, Gaussian polynomials and infinite
Pochhammer symbols, some of them in the denominator.  :class:`Product`
collects those factors, pulls the monomial part out of every binomial with
``e < 0`` (``1 + c q^e = c q^e (1 + c q^-e)``), and only then expands.  The
valuation of the summand is therefore known before any arithmetic, and the
expansion runs on ordinary power series without losing precision to
negative exponents.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .qtools import Monomial, poch_factors
from .series import (
    LaurentSeries,
    NonUnitError,
    SeriesError,
    div_binomial,
    mul,
    mul_binomial,
    one,
    scale,
    series_sum,
    shift,
    zero,
)


class Product:
    """``scalar * q^exp * prod(num) / prod(den)``, built incrementally."""

    def __init__(self, scalar: int = 1, exp: int = 0) -> None:
        self.scalar = scalar
        self.exp = exp
        self._num: list[int] = []
        self._num_c: list[int] = []
        self._den: list[tuple[int, int]] = []
        self._polys: list[LaurentSeries] = []
        self._inf_num: list[tuple[Monomial, int]] = []
        self._inf_den: list[tuple[Monomial, int]] = []

    # -- building ---------------------------------------------------------

    def mono(self, m: Monomial, power: int = 1) -> "Product":
        if power < 0:
            raise ValueError("use a negative exponent on the Monomial instead")
        self.scalar *= m.sign**power
        self.exp += m.exp * power
        return self

    def q(self, e: int) -> "Product":
        self.exp += e
        return self

    def times(self, k: int) -> "Product":
        self.scalar *= k
        return self

    def binom(self, c: int, e: int) -> "Product":
        """Multiply by ``1 + c q^e``."""
        if c not in (1, -1):
            raise ValueError("binomial coefficient must be +-1")
        if e < 0:
            self.scalar *= c
            self.exp += e
            e = -e
        if e == 0:
            self.scalar *= 1 + c
            return self
        self._num.append(e)
        self._num_c.append(c)
        return self

    def over_binom(self, c: int, e: int) -> "Product":
        """Divide by ``1 + c q^e``."""
        if c not in (1, -1):
            raise NonUnitError("binomial coefficient must be +-1")
        if e < 0:
            self.scalar *= c
            self.exp -= e
            e = -e
        if e == 0:
            if c == -1:
                raise ZeroDivisionError("division by (1 - 1)")
            raise NonUnitError("division by the constant 2")
        self._den.append((c, e))
        return self

    def one_minus(self, x: Monomial, e: int = 0) -> "Product":
        """Multiply by ``1 - x q^e``."""
        return self.binom(-x.sign, x.exp + e)

    def over_one_minus(self, x: Monomial, e: int = 0) -> "Product":
        """Divide by ``1 - x q^e``."""
        return self.over_binom(-x.sign, x.exp + e)

    def poch(self, f: Monomial, step: int, n: int) -> "Product":
        """Multiply by ``(f; q^step)_n``."""
        for c, e in poch_factors(f, step, n):
            self.binom(c, e)
        return self

    def over_poch(self, f: Monomial, step: int, n: int) -> "Product":
        """Divide by ``(f; q^step)_n``."""
        for c, e in poch_factors(f, step, n):
            self.over_binom(c, e)
        return self

    def poly(self, p: LaurentSeries) -> "Product":
        """Multiply by an exact Laurent polynomial."""
        if p.prec is not None:
            raise ValueError("Product.poly expects an exact polynomial")
        if p.is_zero():
            self.scalar = 0
            return self
        self.exp += p.min_exp
        self._polys.append(shift(p, -p.min_exp))
        return self

    def poch_inf(self, f: Monomial, step: int) -> "Product":
        if f.exp <= 0:
            raise ValueError("infinite Pochhammer needs a start of positive valuation")
        self._inf_num.append((f, step))
        return self

    def over_poch_inf(self, f: Monomial, step: int) -> "Product":
        if f.exp <= 0:
            raise ValueError("infinite Pochhammer needs a start of positive valuation")
        self._inf_den.append((f, step))
        return self

    # -- evaluation -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.scalar == 0

    def valuation(self) -> Optional[int]:
        """Exact valuation, or None for the zero product."""
        return None if self.scalar == 0 else self.exp

    def expand(self, prec: int) -> LaurentSeries:
        """The product known below ``q^prec``."""
        rel = prec - self.exp
        if self.scalar == 0 or rel <= 0:
            return zero(prec)
        s = one(rel)
        for p in self._polys:
            s = mul(s, p)
        for c, e in zip(self._num_c, self._num):
            if e < rel:
                s = mul_binomial(s, c, e)
        for f, step in self._inf_num:
            e = f.exp
            while e < rel:
                s = mul_binomial(s, -f.sign, e)
                e += step
        for c, e in self._den:
            if e < rel:
                s = div_binomial(s, c, e)
        for f, step in self._inf_den:
            e = f.exp
            while e < rel:
                s = div_binomial(s, -f.sign, e)
                e += step
        return shift(scale(s, self.scalar), self.exp)


def expand_sum(terms: Iterable[Product], prec: int) -> LaurentSeries:
    """Sum of products, each expanded below ``q^prec``."""
    return series_sum([t.expand(prec) for t in terms], prec)


def outer_sum(
    make_terms: Callable[[int], Iterable[Product]],
    bound: Callable[[int], int],
    prec: int,
    start: int = 0,
    cap: Optional[int] = None,
) -> LaurentSeries:
    """``sum_{n >= start}`` of the products ``make_terms(n)``, cut by a valuation bound.

    ``bound(n)`` must be a non-decreasing lower bound for the valuation of
    every product in ``make_terms(n)``; summation stops at the first ``n``
    with ``bound(n) >= prec``.  Each product's exact valuation is checked
    against the bound, so a wrong bound raises instead of silently dropping
    terms.
    """
    cap = 10 * max(prec, 1) + start + 10 if cap is None else cap
    parts: list[LaurentSeries] = []
    n = start
    while bound(n) < prec:
        if n > cap:
            raise SeriesError(f"valuation bound stayed below {prec} up to index {cap}")
        for t in make_terms(n):
            v = t.valuation()
            if v is not None and v < bound(n):
                raise SeriesError(f"term at index {n} has valuation {v} below its bound {bound(n)}")
            parts.append(t.expand(prec))
        n += 1
    return series_sum(parts, prec)
