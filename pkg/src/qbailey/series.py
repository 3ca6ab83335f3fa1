"""Truncated formal Laurent series in ``q`` with exact integer coefficients.

A :class:`LaurentSeries` stores a dense block of coefficients starting at
``min_exp`` together with a precision ``prec``: every coefficient with
exponent ``e < prec`` is known exactly (those below ``min_exp`` are zero),
nothing is known at or above ``prec``.  ``prec=None`` marks an exact
Laurent polynomial, known at every exponent.

All operations propagate precision so that a coefficient reported as known
is never affected by truncation upstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "LaurentSeries",
    "VerificationReport",
    "SeriesError",
    "PrecisionError",
    "NonUnitError",
    "monomial",
    "from_coeffs",
    "zero",
    "one",
    "add",
    "sub",
    "neg",
    "scale",
    "shift",
    "mul",
    "invert",
    "div",
    "mul_binomial",
    "div_binomial",
    "coefficient_at",
    "truncate",
    "equal_up_to",
]


class SeriesError(ArithmeticError):
    """Base class for series-arithmetic failures."""


class PrecisionError(SeriesError):
    """A coefficient was requested outside the range where it is known."""


class NonUnitError(SeriesError):
    """Inversion of a series whose leading coefficient is not +1 or -1."""


def _strip(min_exp: int, coeffs: list[int]) -> tuple[int, list[int]]:
    lead = 0
    n = len(coeffs)
    while lead < n and coeffs[lead] == 0:
        lead += 1
    return min_exp + lead, coeffs[lead:]


@dataclass(frozen=True)
class LaurentSeries:
    """Immutable truncated Laurent series ``sum_e coeffs[e - min_exp] q^e + O(q^prec)``.

    Leading zeros are stripped on construction, so for a nonzero series
    ``min_exp`` is its valuation.  A series that is zero below ``prec`` is
    stored with ``min_exp == prec`` and no coefficients.
    """

    min_exp: int
    coeffs: tuple[int, ...]
    prec: Optional[int] = None

    def __post_init__(self) -> None:
        lo, cs = _strip(self.min_exp, list(self.coeffs))
        if self.prec is None:
            while cs and cs[-1] == 0:
                cs.pop()
            if not cs:
                lo = 0
        else:
            if self.prec < self.min_exp:
                raise PrecisionError(f"prec {self.prec} below min_exp {self.min_exp}")
            keep = max(0, self.prec - lo)
            cs = cs[:keep] + [0] * (keep - len(cs))
            if not any(cs):
                lo, cs = self.prec, []
        object.__setattr__(self, "min_exp", lo)
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    # -- queries ---------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    @property
    def max_exp(self) -> int:
        """Exclusive upper bound of the stored block."""
        return self.min_exp + len(self.coeffs)

    def valuation(self) -> Optional[int]:
        """Exponent of the first nonzero coefficient, or None if none is known."""
        return self.min_exp if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> int:
        return coefficient_at(self, e)

    def items(self, lo: Optional[int] = None, hi: Optional[int] = None) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs on ``[lo, hi)``; defaults to the stored block."""
        lo = self.min_exp if lo is None else lo
        hi = (self.prec if self.prec is not None else self.max_exp) if hi is None else hi
        return [(e, coefficient_at(self, e)) for e in range(lo, hi)]

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs[:12]):
            if c:
                terms.append(f"{c}*q^{self.min_exp + i}")
        body = " + ".join(terms) or "0"
        if len(self.coeffs) > 12:
            body += " + ..."
        tail = "" if self.prec is None else f" + O(q^{self.prec})"
        return f"LaurentSeries({body}{tail})"

    # -- operator sugar --------------------------------------------------

    def __add__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        return sub(self, _coerce(other))

    def __rsub__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        return sub(_coerce(other), self)

    def __neg__(self) -> "LaurentSeries":
        return neg(self)

    def __mul__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        return div(self, other)


def _coerce(x: "LaurentSeries | int") -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    return LaurentSeries(0, (int(x),), None)


def _prec_min(*ps: Optional[float]) -> Optional[int]:
    vals = [p for p in ps if p is not None and p != math.inf]
    return int(min(vals)) if vals else None


# -- constructors ----------------------------------------------------------


def monomial(c: int, e: int, prec: Optional[int] = None) -> LaurentSeries:
    """``c*q^e``, known below ``prec`` (exact when ``prec`` is None)."""
    if prec is not None and prec <= e:
        raise PrecisionError(f"monomial q^{e} needs prec > {e}, got {prec}")
    return LaurentSeries(e, (c,), prec)


def from_coeffs(coeffs: Sequence[int], min_exp: int = 0, prec: Optional[int] = None) -> LaurentSeries:
    return LaurentSeries(min_exp, tuple(coeffs), prec)


def zero(prec: Optional[int] = None) -> LaurentSeries:
    if prec is None:
        return LaurentSeries(0, (), None)
    return LaurentSeries(prec, (), prec)


def one(prec: Optional[int] = None) -> LaurentSeries:
    return monomial(1, 0, prec)


# -- ring operations -------------------------------------------------------


def add(s: LaurentSeries, t: LaurentSeries) -> LaurentSeries:
    prec = _prec_min(s.prec, t.prec)
    if s.is_zero() and t.is_zero():
        return zero(prec)
    lo = min(x.min_exp for x in (s, t) if not x.is_zero())
    hi = max(s.max_exp, t.max_exp)
    if prec is not None:
        hi = min(hi, prec)
        lo = min(lo, prec)
    out = [0] * max(0, hi - lo)
    for x in (s, t):
        off = x.min_exp - lo
        for i, c in enumerate(x.coeffs[: max(0, hi - x.min_exp)]):
            out[off + i] += c
    return LaurentSeries(lo, tuple(out), prec)


def neg(s: LaurentSeries) -> LaurentSeries:
    return LaurentSeries(s.min_exp, tuple(-c for c in s.coeffs), s.prec)


def sub(s: LaurentSeries, t: LaurentSeries) -> LaurentSeries:
    return add(s, neg(t))


def scale(s: LaurentSeries, c: int) -> LaurentSeries:
    return LaurentSeries(s.min_exp, tuple(c * x for x in s.coeffs), s.prec)


def shift(s: LaurentSeries, k: int) -> LaurentSeries:
    """Multiply by ``q^k``."""
    prec = None if s.prec is None else s.prec + k
    if s.is_zero():
        return zero(prec)
    return LaurentSeries(s.min_exp + k, s.coeffs, prec)


def truncate(s: LaurentSeries, prec: int) -> LaurentSeries:
    """Forget everything at exponents >= ``prec``."""
    if s.prec is not None and prec > s.prec:
        raise PrecisionError(f"cannot raise precision from {s.prec} to {prec}")
    lo = min(s.min_exp, prec)
    return LaurentSeries(lo, s.coeffs[: max(0, prec - s.min_exp)], prec)


def _mul_prec(s: LaurentSeries, t: LaurentSeries) -> Optional[int]:
    # Unknown coefficients of one factor first reach the product at
    # (its prec) + (valuation of the other factor).
    cands: list[int] = []
    if s.prec is not None:
        cands.append(s.prec + (t.min_exp if not t.is_zero() else _far(t)))
    if t.prec is not None:
        cands.append(t.prec + (s.min_exp if not s.is_zero() else _far(s)))
    return min(cands) if cands else None


def _far(x: LaurentSeries) -> int:
    # valuation lower bound of a series known to vanish below its prec
    return x.prec if x.prec is not None else 0


def mul(s: LaurentSeries, t: LaurentSeries) -> LaurentSeries:
    """Cauchy product, truncated at the tightest precision the inputs support."""
    prec = _mul_prec(s, t)
    if s.is_zero() or t.is_zero():
        if prec is None:
            return zero(None)
        lo = min(prec, (s.min_exp + t.min_exp))
        return LaurentSeries(lo, (), prec)
    lo = s.min_exp + t.min_exp
    a, b = s.coeffs, t.coeffs
    if prec is not None:
        n = prec - lo
        if n <= 0:
            return LaurentSeries(prec, (), prec)
        a, b = a[:n], b[:n]
    if len(a) == 1 or len(b) == 1:
        c0, other = (a[0], b) if len(a) == 1 else (b[0], a)
        out = [c0 * x for x in other]
    else:
        out = np.convolve(np.array(a, dtype=object), np.array(b, dtype=object)).tolist()
    if prec is not None:
        out = out[: prec - lo]
    return LaurentSeries(lo, tuple(out), prec)


def invert(s: LaurentSeries, prec: Optional[int] = None) -> LaurentSeries:
    """Multiplicative inverse of a series with leading coefficient +1 or -1.

    Writes ``s = c q^v (1 + u)`` and expands ``c q^(-v) sum (-u)^k``.  For an
    exact input ``prec`` fixes where the (infinite) result is cut off; for a
    truncated input the result is known on ``[-v, s.prec - 2v)``.
    """
    if s.is_zero():
        raise ZeroDivisionError("inverse of the zero series")
    v = s.min_exp
    c0 = s.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitError(f"leading coefficient {c0} is not a unit")
    natural = None if s.prec is None else s.prec - 2 * v
    if prec is None:
        if natural is None:
            raise PrecisionError("inverting an exact series needs an explicit prec")
        prec = natural
    elif natural is not None and prec > natural:
        raise PrecisionError(f"inverse only known below {natural}, requested {prec}")
    n = prec + v
    if n <= 0:
        return LaurentSeries(prec, (), prec)
    w = s.coeffs
    nz = [(i, w[i]) for i in range(1, min(len(w), n)) if w[i]]
    b = [0] * n
    b[0] = c0
    for k in range(1, n):
        acc = 0
        for i, wi in nz:
            if i > k:
                break
            acc += wi * b[k - i]
        b[k] = -c0 * acc
    return LaurentSeries(-v, tuple(b), prec)


def div(s: LaurentSeries, t: LaurentSeries, prec: Optional[int] = None) -> LaurentSeries:
    """``s / t``; ``prec`` is required only when both inputs are exact."""
    if t.is_zero():
        raise ZeroDivisionError("division by the zero series")
    tv = t.min_exp
    sv = s.min_exp if not s.is_zero() else (s.prec if s.prec is not None else 0)
    cands = [] if prec is None else [prec]
    if s.prec is not None:
        cands.append(s.prec - tv)
    if t.prec is not None:
        cands.append(t.prec - 2 * tv + sv)
    if not cands:
        raise PrecisionError("dividing exact series needs an explicit prec")
    target = min(cands)
    out = mul(s, invert(t, target - sv))
    return truncate(out, target)


def mul_binomial(s: LaurentSeries, c: int, e: int) -> LaurentSeries:
    """``s * (1 + c q^e)`` in O(len(s))."""
    if e == 0:
        return scale(s, 1 + c)
    if e < 0:
        # 1 + c q^e = c q^e (1 + c q^-e) for c = +-1
        if c not in (1, -1):
            return mul(s, from_coeffs([c] + [0] * (-e - 1) + [1], e))
        return scale(shift(mul_binomial(s, c, -e), e), c)
    prec = s.prec
    if s.is_zero():
        return s
    cs = list(s.coeffs)
    n = len(cs) + e if prec is None else max(0, prec - s.min_exp)
    out = cs + [0] * (n - len(cs))
    for i in range(min(len(cs), n - e)):
        out[i + e] += c * cs[i]
    return LaurentSeries(s.min_exp, tuple(out), prec)


def div_binomial(s: LaurentSeries, c: int, e: int, prec: Optional[int] = None) -> LaurentSeries:
    """``s / (1 + c q^e)`` for ``c = +-1``; ``prec`` caps an exact input."""
    if c not in (1, -1):
        raise NonUnitError(f"binomial coefficient {c} is not a unit")
    if e == 0:
        if c == -1:
            raise ZeroDivisionError("division by (1 - 1)")
        raise NonUnitError("division by the constant 2")
    if e < 0:
        # s / (c q^e (1 + c q^-e)) = c q^-e * s / (1 + c q^-e)
        inner_prec = None if prec is None else prec + e
        return scale(shift(div_binomial(s, c, -e, inner_prec), -e), c)
    if s.prec is None:
        if prec is None:
            raise PrecisionError("dividing an exact series needs an explicit prec")
        target = prec
    else:
        target = s.prec if prec is None else min(prec, s.prec)
    if s.is_zero():
        return zero(target)
    n = target - s.min_exp
    if n <= 0:
        return LaurentSeries(target, (), target)
    out = list(s.coeffs[:n]) + [0] * max(0, n - len(s.coeffs))
    for i in range(e, n):
        out[i] -= c * out[i - e]
    return LaurentSeries(s.min_exp, tuple(out), target)


# -- extraction and comparison ---------------------------------------------


def coefficient_at(s: LaurentSeries, e: int) -> int:
    """Exact coefficient of ``q^e``; raises PrecisionError at or above ``prec``."""
    if s.prec is not None and e >= s.prec:
        raise PrecisionError(f"coefficient of q^{e} unknown (series known below q^{s.prec})")
    i = e - s.min_exp
    if 0 <= i < len(s.coeffs):
        return s.coeffs[i]
    return 0


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a coefficientwise comparison on ``[lo, hi)``.

    ``first_mismatch`` is ``(exponent, lhs, rhs)`` exactly when the status is
    ``"fail"``.  ``identity`` and ``params`` are filled in by callers that
    verify a named identity.
    """

    window: tuple[int, int]
    status: str
    first_mismatch: Optional[tuple[int, int, int]] = None
    identity: Optional[str] = None
    params: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self) -> None:
        if (self.status == "fail") != (self.first_mismatch is not None):
            raise ValueError("status 'fail' must come with a first_mismatch and vice versa")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            e, a, b = self.first_mismatch
            mm = {"exponent": e, "lhs": str(a), "rhs": str(b)}
        return {
            "identity": self.identity,
            "params": {k: str(v) for k, v in self.params.items()},
            "window": [self.window[0], self.window[1]],
            "status": self.status,
            "first_mismatch": mm,
        }


def equal_up_to(s: LaurentSeries, t: LaurentSeries, lo: int, hi: int) -> VerificationReport:
    """Compare ``s`` and ``t`` at every exponent in ``[lo, hi)``."""
    for x, name in ((s, "left"), (t, "right")):
        if x.prec is not None and hi > x.prec:
            raise PrecisionError(f"{name} series known only below q^{x.prec}, window ends at {hi}")
    for e in range(lo, hi):
        a, b = coefficient_at(s, e), coefficient_at(t, e)
        if a != b:
            return VerificationReport((lo, hi), "fail", (e, a, b))
    return VerificationReport((lo, hi), "pass")


def series_sum(terms: Iterable[LaurentSeries], prec: Optional[int] = None) -> LaurentSeries:
    """Sum of many series, accumulated on one dense buffer."""
    terms = list(terms)
    precs = [t.prec for t in terms if t.prec is not None]
    if prec is not None:
        precs.append(prec)
    top = min(precs) if precs else None
    nz = [t for t in terms if not t.is_zero()]
    if not nz:
        return zero(top)
    lo = min(t.min_exp for t in nz)
    hi = max(t.max_exp for t in nz)
    if top is not None:
        hi = min(hi, top)
        lo = min(lo, top)
    buf = [0] * max(0, hi - lo)
    for t in nz:
        off = t.min_exp - lo
        for i, c in enumerate(t.coeffs[: max(0, hi - t.min_exp)]):
            if c:
                buf[off + i] += c
    return LaurentSeries(lo, tuple(buf), top)
