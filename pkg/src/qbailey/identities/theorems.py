"""The four main theorems: alternating theta sums over (q;q)_inf against
double sums with visibly nonnegative coefficients.

Each theorem is registered twice.  The ``thmN`` entry transcribes the
displayed statement; ``thmN-derived`` is what the Bailey-level identity
gives at the relevant value of ``a`` without any further rearrangement.
"""

from __future__ import annotations

from typing import Callable

from ..product import Product, outer_sum
from ..qtools import Monomial, Q, qbinomial
from ..series import from_coeffs
from .registry import IdentityDescriptor, register

M = Monomial
NEG_Q_INV = M(-1, -1)


def theta_quotient(first: Callable[[int], int], second: Callable[[int], int]):
    """Builder for ``(1/(q;q)_inf) sum_n (-1)^n (q^first(n) - q^second(n))``."""

    def build(p, prec):
        return outer_sum(
            lambda n: [
                Product((-1) ** n, first(n)).over_poch_inf(Q, 1),
                Product(-((-1) ** n), second(n)).over_poch_inf(Q, 1),
            ],
            first,
            prec,
        )

    return build


# families of the left-hand numerators, each (first, second)
THM1_FAMILY = (lambda n: (13 * n * n + 11 * n) // 2, lambda n: (13 * n * n + 15 * n) // 2 + 1)
THM2_FAMILY = (lambda n: 4 * n * (10 * n - 1) + 4, lambda n: 4 * n * (10 * n + 3) + 12)
THM2_DERIVED_FAMILY = (lambda n: 28 * n * n + 20 * n, lambda n: 28 * n * n + 36 * n + 8)
THM3_FAMILY = (lambda n: 8 * n * (3 * n + 1), lambda n: 8 * n * (3 * n + 5) + 16)
THM4_FAMILY = (lambda n: 6 * n * (9 * n + 7), lambda n: 6 * n * (9 * n + 11) + 12)


# -- printed right-hand sides ----------------------------------------------------


def _thm1_rhs(dropped_factor: bool):
    def build(p, prec):
        def terms(n):
            out = []
            for k in range(n + 1):
                t = Product(1, n * n + 2 * n + k * k + k).poly(qbinomial(n, k)).over_poch(M(1, 2), 1, 2 * n + 1)
                if not dropped_factor:
                    # (q^2;q)_n / (q;q)_n
                    t.binom(-1, n + 1).over_binom(-1, 1)
                out.append(t)
            return out

        return outer_sum(terms, lambda n: n * n + 2 * n, prec)

    return build


def _thm2_rhs(p, prec):
    def terms(n):
        return [
            Product(1, (n - 2 * k) ** 2 + 5 * n + 2 * k)
            .poch(NEG_Q_INV, 2, n)
            .over_poch(Q, 1, 2 * n + 3)
            .poch(M(-1, 4), 4, k + 1)
            .over_binom(-1, 4 * k + 2)
            .over_poch(M(-1, 3 - 2 * n), 2, 2 * k)
            .poly(qbinomial(2 * n, 2 * k, 2))
            for k in range(n + 1)
        ]

    return outer_sum(terms, lambda n: n * n + 3 * n - 1, prec)


def _thm3_rhs(p, prec):
    def terms(n):
        return [
            Product(1, (n - 2 * k) ** 2 + 5 * n + 6 * k)
            .poch(NEG_Q_INV, 2, n)
            .over_poch(M(1, 2), 2, n)
            .over_poch(Q, 2, n + 2)
            .binom(1, 4 * k + 4)
            .over_binom(-1, 4 * k + 2)
            .poly(qbinomial(2 * n, 2 * k, 2))
            for k in range(n + 1)
        ]

    return outer_sum(terms, lambda n: 8 * n - 4, prec)


_ONE_Q4_Q8 = from_coeffs([1, 0, 0, 0, 1, 0, 0, 0, 1])


def _thm4_rhs(p, prec):
    def terms(n):
        return [
            Product(1, (n - 2 * k) ** 2 + 7 * n + 2 * k)
            .poch(NEG_Q_INV, 2, n)
            .over_poch(M(1, 2), 2, n)
            .over_poch(Q, 2, n + 3)
            .poly(_ONE_Q4_Q8)
            .binom(1, 6 + 4 * k)
            .over_binom(-1, 2 * k + 2)
            .over_binom(-1, 2 * k + 4)
            .over_poch(M(-1, 3 - 2 * n), 2, 2 * k)
            .poly(qbinomial(2 * n, 2 * k, 2))
            for k in range(n + 1)
        ]

    return outer_sum(terms, lambda n: n * n + 5 * n - 1, prec)


# -- derived right-hand sides ----------------------------------------------------
#
#   ((1 - q^c) / (q;q)_r) sum_n q^{n^2+(r+1)n} (-q^{-1};q^2)_n / ((q^2;q^2)_n (q^{r+1};q^2)_n)
#       * sum_k inner(n, k)


def _derived_rhs(r: int, c: int, inner, slack: int):
    def build(p, prec):
        def terms(n):
            out = []
            for k in range(n // 2 + 1):
                t = Product(1, n * n + (r + 1) * n).binom(-1, c).over_poch(Q, 1, r)
                t.poch(NEG_Q_INV, 2, n).over_poch(M(1, 2), 2, n).over_poch(M(1, r + 1), 2, n)
                t.poch(M(1, -2 * n), 2, 2 * k).over_poch(M(-1, 3 - 2 * n), 2, 2 * k)
                out.append(inner(t, k))
            return out

        return outer_sum(terms, lambda n: n * n + r * n - slack, prec)

    return build


def _thm2_inner(t, k):
    return t.q(4 * k).poch(M(-1, 8), 4, k).over_poch(M(1, 4), 4, k).over_poch(M(1, 6), 4, k)


def _thm3_inner(t, k):
    t.q(8 * k).poch(M(-1, -4), 8, k).poch(M(-1, 8), 4, k)
    return t.over_poch(M(1, 8), 8, k).over_poch(M(1, 6), 4, k)


def _thm4_inner(t, k):
    t.q(4 * k).poch(M(1, 12), 12, k).poch(M(-1, 10), 4, k)
    return t.over_poch(M(1, 4), 4, k).over_poch(M(1, 12), 8, k).over_poch(M(1, 8), 4, k)


_SPECS = [
    # id, anchor, lhs family, rhs, default order, extra keyword arguments
    (
        "thm1",
        "first theorem: q^{(13n^2+11n)/2}(1-q^{2n+1}) over (q;q)_inf",
        THM1_FAMILY,
        _thm1_rhs(True),
        dict(companion="thm1-derived", note="the displayed right side omits (q^2;q)_n/(q;q)_n"),
    ),
    (
        "thm1-derived",
        "first theorem with the factor (q^2;q)_n/(q;q)_n restored",
        THM1_FAMILY,
        _thm1_rhs(False),
        dict(reading="derived", companion="thm1"),
    ),
    (
        "thm2",
        "second theorem: q^{4n(10n-1)+4}(1-q^{16n+8}) over (q;q)_inf",
        THM2_FAMILY,
        _thm2_rhs,
        dict(companion="thm2-derived", note="the displayed sides differ at q^0"),
    ),
    (
        "thm2-derived",
        "second theorem as given by the b -> 0, a = q^4 case of the first Berkovich-Warnaar transform",
        THM2_DERIVED_FAMILY,
        _derived_rhs(4, 8, _thm2_inner, 1),
        dict(reading="derived", companion="thm2"),
    ),
    (
        "thm3",
        "third theorem: q^{8n(3n+1)}(1-q^{32n+16}) over (q;q)_inf",
        THM3_FAMILY,
        _thm3_rhs,
        dict(companion="thm3-derived", note="the displayed sides differ at q^8"),
    ),
    (
        "thm3-derived",
        "third theorem as given by the a = q^4 case of the corrected second Berkovich-Warnaar transform",
        THM3_FAMILY,
        _derived_rhs(4, 16, _thm3_inner, 5),
        dict(reading="derived", companion="thm3"),
    ),
    (
        "thm4",
        "fourth theorem: q^{6n(9n+7)}(1-q^{24n+12}) over (q;q)_inf",
        THM4_FAMILY,
        _thm4_rhs,
        dict(companion="thm4-derived", note="the displayed sides differ at q^4"),
    ),
    (
        "thm4-derived",
        "fourth theorem as given by the a = q^6 case of the third Berkovich-Warnaar transform",
        THM4_FAMILY,
        _derived_rhs(6, 12, _thm4_inner, 1),
        dict(reading="derived", companion="thm4"),
    ),
]

for _id, _anchor, _family, _rhs, _extra in _SPECS:
    register(IdentityDescriptor(_id, _anchor, theta_quotient(*_family), _rhs, **_extra))
