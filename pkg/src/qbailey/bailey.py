"""Extended Bailey transform over truncated series.

Given sequences ``A, D, U, V`` and positive integers ``d | m`` and ``e``, put

    B_n = sum_{j=0}^{floor(dn/m)} A_{ej} U_{dn-mj} V_{dn+mj}
    C_n = sum_{j >= ceil(mn/d)}   D_{ej} U_{dj-mn} V_{dj+mn}

Then ``sum_n A_{en} C_n = sum_n B_n D_{en}``.  Every infinite sum here is
cut off by valuation bounds carried with each sequence, so a passing check
certifies an exact window of coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .product import Product
from .qtools import Monomial, Q, neg_val
from .series import (
    LaurentSeries,
    PrecisionError,
    SeriesError,
    VerificationReport,
    equal_up_to,
    mul,
    series_sum,
    truncate,
    zero,
)

__all__ = [
    "SequenceGen",
    "BaileySystem",
    "NonTerminationError",
    "compute_B",
    "compute_C",
    "verify_transform",
    "conjugate_pair_check",
    "product_sequence",
    "bressoud_system",
    "bw1_system",
    "bw2_system",
    "bw3_system",
    "classical_system",
]


class NonTerminationError(SeriesError):
    """A valuation bound failed to pass the working precision within the index cap."""


@dataclass(frozen=True)
class SequenceGen:
    """A sequence of series ``term(n, prec)`` with a lower bound on each valuation.

    ``valuation_bound`` must be non-decreasing and unbounded.
    """

    term: Callable[[int, int], LaurentSeries]
    valuation_bound: Callable[[int], int]
    name: str = "?"

    def at(self, n: int, prec: int) -> LaurentSeries:
        """``term(n)`` known below ``prec``, with its bound and precision checked."""
        s = self.term(n, prec)
        if s.prec is not None and s.prec < prec:
            raise PrecisionError(f"{self.name}[{n}] is known only below q^{s.prec}, needed q^{prec}")
        v = s.valuation()
        if v is not None and v < self.valuation_bound(n):
            raise SeriesError(f"{self.name}[{n}] has valuation {v} below its bound {self.valuation_bound(n)}")
        return truncate(s, prec) if s.prec is None or s.prec > prec else s


def product_sequence(make: Callable[[int], Product], bound: Callable[[int], int], name: str) -> SequenceGen:
    """Wrap a :class:`Product` factory as a sequence."""
    return SequenceGen(lambda n, prec: make(n).expand(prec), bound, name)


@dataclass(frozen=True)
class BaileySystem:
    d: int
    e: int
    m: int
    A: SequenceGen
    D: SequenceGen
    U: SequenceGen
    V: SequenceGen
    name: str = ""
    cap_factor: int = 10

    def __post_init__(self) -> None:
        for label in ("d", "e", "m"):
            v = getattr(self, label)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{label} must be a positive integer, got {v!r}")
        if self.m % self.d:
            raise ValueError(f"d = {self.d} does not divide m = {self.m}")

    def cap(self, prec: int) -> int:
        return self.cap_factor * max(prec, 1)


def _triple(x: SequenceGen, i: int, y: SequenceGen, j: int, z: SequenceGen, k: int, prec: int) -> Optional[LaurentSeries]:
    """``x_i y_j z_k`` below ``prec``, or None if the bounds already put it above."""
    bx, by, bz = x.valuation_bound(i), y.valuation_bound(j), z.valuation_bound(k)
    if bx + by + bz >= prec:
        return None
    sx = x.at(i, prec - by - bz)
    sy = y.at(j, prec - bx - bz)
    sz = z.at(k, prec - bx - by)
    return truncate(mul(mul(sx, sy), sz), prec)


def compute_B(sys: BaileySystem, n: int, prec: int) -> LaurentSeries:
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n > sys.cap(prec):
        raise NonTerminationError(f"B index {n} exceeds the cap {sys.cap(prec)}")
    parts = []
    for j in range(sys.d * n // sys.m + 1):
        t = _triple(sys.A, sys.e * j, sys.U, sys.d * n - sys.m * j, sys.V, sys.d * n + sys.m * j, prec)
        if t is not None:
            parts.append(t)
    return series_sum(parts, prec) if parts else zero(prec)


def _c_start(sys: BaileySystem, n: int) -> int:
    return -(-sys.m * n // sys.d)


def compute_C(sys: BaileySystem, n: int, prec: int) -> LaurentSeries:
    if n < 0:
        raise ValueError("index must be nonnegative")
    cap = sys.cap(prec)
    parts = []
    j = _c_start(sys, n)
    while True:
        u, v = sys.d * j - sys.m * n, sys.d * j + sys.m * n
        if sys.D.valuation_bound(sys.e * j) + sys.U.valuation_bound(u) + sys.V.valuation_bound(v) >= prec:
            break
        if j > cap:
            raise NonTerminationError(f"C[{n}]: bounds of D, U, V stayed below q^{prec} up to index {cap}")
        t = _triple(sys.D, sys.e * j, sys.U, u, sys.V, v, prec)
        if t is not None:
            parts.append(t)
        j += 1
    return series_sum(parts, prec) if parts else zero(prec)


def _floor_uv(sys: BaileySystem) -> int:
    return sys.U.valuation_bound(0) + sys.V.valuation_bound(0)


def _c_bound(sys: BaileySystem, n: int) -> int:
    return sys.D.valuation_bound(sys.e * _c_start(sys, n)) + _floor_uv(sys)


def _b_bound(sys: BaileySystem) -> int:
    return sys.A.valuation_bound(0) + _floor_uv(sys)


def _outer(bound: Callable[[int], int], term: Callable[[int, int], Optional[LaurentSeries]], prec: int, cap: int, what: str) -> LaurentSeries:
    parts = []
    n = 0
    while bound(n) < prec:
        if n > cap:
            raise NonTerminationError(f"{what}: valuation bound stayed below q^{prec} up to index {cap}")
        t = term(n, prec)
        if t is not None:
            parts.append(t)
        n += 1
    return series_sum(parts, prec) if parts else zero(prec)


def transform_sides(sys: BaileySystem, prec: int) -> tuple[LaurentSeries, LaurentSeries]:
    """``(sum_n A_{en} C_n, sum_n B_n D_{en})`` below ``prec``."""
    cap = sys.cap(prec)
    fb = _b_bound(sys)

    def lhs_term(n, p):
        ba, bc = sys.A.valuation_bound(sys.e * n), _c_bound(sys, n)
        a = sys.A.at(sys.e * n, p - bc)
        c = compute_C(sys, n, p - ba)
        return truncate(mul(a, c), p)

    def rhs_term(n, p):
        bd = sys.D.valuation_bound(sys.e * n)
        b = compute_B(sys, n, p - bd)
        dd = sys.D.at(sys.e * n, p - fb)
        return truncate(mul(b, dd), p)

    lhs = _outer(lambda n: sys.A.valuation_bound(sys.e * n) + _c_bound(sys, n), lhs_term, prec, cap, "sum A C")
    rhs = _outer(lambda n: sys.D.valuation_bound(sys.e * n) + fb, rhs_term, prec, cap, "sum B D")
    return lhs, rhs


def verify_transform(sys: BaileySystem, prec: int) -> VerificationReport:
    lhs, rhs = transform_sides(sys, prec)
    lo = min([0] + [s.min_exp for s in (lhs, rhs) if not s.is_zero()])
    rep = equal_up_to(lhs, rhs, lo, prec)
    return VerificationReport(rep.window, rep.status, rep.first_mismatch, sys.name or "bailey-transform", {"d": sys.d, "e": sys.e, "m": sys.m})


# -- kernels and concrete systems -------------------------------------------------


def kernel(f: Monomial, name: str) -> SequenceGen:
    """``1 / (f; q)_n``; ``f`` needs a positive exponent so every term is a unit power series."""
    if f.exp < 1:
        raise ValueError("kernel start must have positive exponent")
    return product_sequence(lambda n: Product().over_poch(f, 1, n), lambda n: 0, name)


def _gauss_D(a: Monomial, power: int) -> SequenceGen:
    # a^{power n} q^{n^2}
    return product_sequence(
        lambda n: Product(1, n * n).mono(a, power * n), lambda n: n * n + power * a.exp * n, "D"
    )


def bressoud_system(a: Monomial = Monomial(1, 1), gamma: Monomial = Monomial(1, 2)) -> BaileySystem:
    """Modulus-2 system built on Bressoud's identity."""
    agq = a * gamma * Q

    def A(n):
        t = Product(1, 2 * n * n).mono(a, 2 * n).mono(gamma, n).one_minus(a, 2 * n)
        t.poch(a, 1, n).poch(gamma.inverse(), 1, n)
        return t.over_one_minus(a).over_poch(Q, 1, n).over_poch(agq, 1, n)

    def bound(n):
        return 2 * n * n + (2 * a.exp + gamma.exp) * n + neg_val(gamma.inverse(), 1)

    return BaileySystem(
        1,
        1,
        2,
        product_sequence(A, bound, "A"),
        _gauss_D(a, 2),
        kernel(Q, "U"),
        kernel(a * a * Q, "V"),
        name=f"bailey-m2[a={a},gamma={gamma}]",
    )


def _standard(a: Monomial, m: int, A: SequenceGen, name: str) -> BaileySystem:
    return BaileySystem(1, 1, m, A, _gauss_D(a, 1), kernel(Q, "U"), kernel(a * Q, "V"), name=name)


def bw1_system(a: Monomial = Monomial(1, 4), b: Monomial = Monomial(1, 2)) -> BaileySystem:
    """Modulus-4 system built on the first Berkovich-Warnaar identity."""
    a2 = a * a
    c = (a2 * 4) / b

    def A(n):
        t = Product(1, 4 * n * (2 * n - 1)).mono(b, n).one_minus(a2, 16 * n).poch(a2, 8, n).poch(c, 8, n)
        return t.over_one_minus(a2).over_poch(Monomial(1, 8), 8, n).over_poch(b * 4, 8, n)

    def bound(n):
        return 8 * n * n - 4 * n + b.exp * n + neg_val(c, 8)

    return _standard(a, 4, product_sequence(A, bound, "A"), f"bailey-m4[a={a},b={b}]")


def bw2_system(a: Monomial = Monomial(1, 4)) -> BaileySystem:
    """Modulus-4 system built on the second Berkovich-Warnaar identity."""
    a4 = a**4

    def A(n):
        t = Product((-1) ** n, 2 * n * (4 * n - 4)).one_minus(a4, 32 * n).poch(a4, 16, n)
        return t.over_one_minus(a4).over_poch(Monomial(1, 16), 16, n)

    return _standard(a, 4, product_sequence(A, lambda n: 8 * n * n - 8 * n, "A"), f"bailey-m4-second[a={a}]")


def bw3_system(a: Monomial = Monomial(1, 6)) -> BaileySystem:
    """Modulus-6 system built on the third Berkovich-Warnaar identity."""
    a2 = a * a

    def A(n):
        t = Product((-1) ** n, 3 * n * (6 * n - 2)).mono(a, 2 * n).one_minus(a2, 24 * n).poch(a2, 12, n)
        return t.over_one_minus(a2).over_poch(Monomial(1, 12), 12, n)

    def bound(n):
        return 18 * n * n - 6 * n + 2 * a.exp * n

    return _standard(a, 6, product_sequence(A, bound, "A"), f"bailey-m6[a={a}]")


def finite_sequence(values: list[LaurentSeries], name: str) -> SequenceGen:
    """A sequence equal to ``values[n]`` for ``n < len(values)`` and zero afterwards."""
    lows = [v.min_exp if not v.is_zero() else 0 for v in values]
    floor = min([0] + lows)
    top = len(values)

    def term(n, prec):
        if n < top:
            v = values[n]
            return truncate(v, prec) if v.prec is None else v
        return zero(prec)

    # past the support the terms vanish, so any bound is valid; make it grow
    return SequenceGen(term, lambda n: floor if n < top else floor + (n - top + 1) * 10**6, name)


def classical_system(A: list[LaurentSeries], D: list[LaurentSeries], a: Monomial = Q) -> BaileySystem:
    """``d = e = m = 1`` with the kernels ``1/(q)_n`` and ``1/(aq)_n``."""
    return BaileySystem(1, 1, 1, finite_sequence(A, "A"), finite_sequence(D, "D"), kernel(Q, "U"), kernel(a * Q, "V"), name="bailey-classical")


def conjugate_pair_check(a: Monomial, n: int, prec: int) -> VerificationReport:
    """``sum_{k>=n} a^k q^{k^2} / ((q)_{k-n} (aq)_{k+n}) = a^n q^{n^2} / (aq)_inf`` below ``prec``."""
    if a.exp < 0 or (a.exp == 0 and a.sign != 1):
        raise ValueError("conjugate pair needs a = 1 or a of positive exponent")
    sys = BaileySystem(1, 1, 1, _gauss_D(a, 1), _gauss_D(a, 1), kernel(Q, "U"), kernel(a * Q, "V"), name="bailey-0")
    lhs = compute_C(sys, n, prec)
    rhs = Product(1, n * n).mono(a, n).over_poch_inf(a * Q, 1).expand(prec)
    rep = equal_up_to(lhs, rhs, 0, prec)
    return VerificationReport(rep.window, rep.status, rep.first_mismatch, "bailey-0", {"a": str(a), "n": n})
