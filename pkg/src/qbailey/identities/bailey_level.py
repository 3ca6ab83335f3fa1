"""Identities obtained by feeding a terminating identity through the Bailey transform.

These hold for a free parameter ``a`` (and ``b`` or ``gamma``), before the
specialisation that produces the four theorems.
"""

from __future__ import annotations

from typing import Callable

from ..product import Product, outer_sum
from ..qtools import Monomial, Q, neg_val, qbinomial
from .registry import IdentityDescriptor, grid, mono_param, register

M = Monomial
NEG_Q_INV = M(-1, -1)


# -- gamma family (modulus 2) --------------------------------------------------------


def _help0_lhs(p, prec):
    a, g = p["a"], p["gamma"]
    agq = a * g * Q

    def head(n):
        t = Product(1, n * n).mono(a, 2 * n).poch(a * Q, 1, n).poch(agq, 1, n)
        return t.over_poch(a * a * Q, 1, 2 * n).over_poch(Q, 1, n)

    def terms(n):
        return [
            head(n).q(k * k).mono(a, k).poly(qbinomial(n, k)).over_poch(agq, 1, k).over_poch(agq, 1, n - k)
            for k in range(n + 1)
        ]

    return outer_sum(terms, lambda n: n * n + 2 * a.exp * n, prec)


def _help0_rhs(corrected: bool):
    def build(p, prec):
        a, g = p["a"], p["gamma"]
        agq = a * g * Q

        def terms(n):
            t = Product(1, 6 * n * n).mono(a, 6 * n).mono(g, n)
            if corrected:
                t.one_minus(a, 2 * n)
            else:
                t.binom(-1, 2 * n)
            t.poch(a, 1, n).poch(g.inverse(), 1, n)
            t.over_one_minus(a).over_poch(Q, 1, n).over_poch(agq, 1, n).over_poch_inf(a * a * Q, 1)
            return [t]

        return outer_sum(terms, lambda n: 6 * n * n + (6 * a.exp + g.exp) * n + neg_val(g.inverse(), 1), prec)

    return build


_HELP0_PARAMS = (mono_param("a"), mono_param("gamma"))
_HELP0_GRID = grid(a=[M(1, 1), M(1, 2), M(-1, 1)], gamma=[M(1, 1), M(1, 2), M(1, 3)])

register(
    IdentityDescriptor(
        "help-0",
        "Bailey transform of Bressoud's identity, factor (1 - q^{2n}) as displayed",
        _help0_lhs,
        _help0_rhs(False),
        _HELP0_PARAMS,
        _HELP0_GRID,
        companion="help-0-corrected",
        note="the displayed factor kills the n = 0 term; fails at q^0",
        default_order=100,
    )
)

register(
    IdentityDescriptor(
        "help-0-corrected",
        "Bailey transform of Bressoud's identity with the factor (1 - a q^{2n})",
        _help0_lhs,
        _help0_rhs(True),
        _HELP0_PARAMS,
        _HELP0_GRID,
        reading="corrected",
        companion="help-0",
        default_order=100,
    )
)


def _help1_lhs(p, prec):
    a = p["a"]
    return outer_sum(
        lambda n: [
            Product((-1) ** n, (13 * n * n - n) // 2)
            .mono(a, 6 * n)
            .one_minus(a, 2 * n)
            .poch(a, 1, n)
            .over_one_minus(a)
            .over_poch(Q, 1, n)
            .over_poch_inf(a * a * Q, 1)
        ],
        lambda n: (13 * n * n - n) // 2 + 6 * a.exp * n,
        prec,
    )


def _help1_rhs(p, prec):
    a = p["a"]

    def terms(n):
        return [
            Product(1, n * n + k * k)
            .mono(a, 2 * n + k)
            .poch(a * Q, 1, n)
            .over_poch(a * a * Q, 1, 2 * n)
            .over_poch(Q, 1, n)
            .poly(qbinomial(n, k))
            for k in range(n + 1)
        ]

    return outer_sum(terms, lambda n: n * n + 2 * a.exp * n, prec)


register(
    IdentityDescriptor(
        "help-1",
        "gamma -> 0 limit of the Bailey transform of Bressoud's identity",
        _help1_lhs,
        _help1_rhs,
        (mono_param("a"),),
        grid(a=[M(1, 1), M(1, 2), M(-1, 1), M(1, 3)]),
        default_order=100,
    )
)


# -- modulus 4 and 6 families ---------------------------------------------------
#
# Every left side has the shape
#   sum_n a^n q^{n^2+n} (-q^{-1};q^2)_n / ((q^2;q^2)_n (aq;q^2)_n) * sum_k inner(n, k)
# with the k-sum cut off by the factor (q^{-2n};q^2)_{2k}, which vanishes for 2k > n.

Inner = Callable[[Product, int, int], Product]


def _bailey_side(a: Monomial, inner: Inner, slack: int, prec: int):
    def terms(n):
        out = []
        for k in range(n // 2 + 1):
            t = Product(1, n * n + n).mono(a, n).poch(NEG_Q_INV, 2, n).over_poch(M(1, 2), 2, n).over_poch(a * Q, 2, n)
            t.poch(M(1, -2 * n), 2, 2 * k)
            out.append(inner(t, n, k))
        return out

    return outer_sum(terms, lambda n: n * n + a.exp * n - slack, prec)


def _help20_lhs(p, prec):
    a, b = p["a"], p["b"]

    def inner(t, n, k):
        # (b^{1/2}, -b^{1/2}; q^4)_k = (b; q^8)_k
        t.q(4 * k).poch(b, 8, k).poch(-(a * 4), 4, k)
        return t.over_poch(M(1, 4), 4, k).over_poch(b, 4, k).over_poch(a * 2, 4, k).over_poch(M(-1, 3 - 2 * n), 2, 2 * k)

    return _bailey_side(a, inner, 1, prec)


def _help20_rhs(p, prec):
    a, b = p["a"], p["b"]
    a2 = a * a
    c = (a2 * 4) / b
    return outer_sum(
        lambda n: [
            Product(1, 24 * n * n - 4 * n)
            .mono(a, 4 * n)
            .mono(b, n)
            .one_minus(a2, 16 * n)
            .poch(a2, 8, n)
            .poch(c, 8, n)
            .over_one_minus(a2)
            .over_poch(M(1, 8), 8, n)
            .over_poch(b * 4, 8, n)
            .over_poch_inf(a * Q, 1)
        ],
        lambda n: 24 * n * n - 4 * n + (4 * a.exp + b.exp) * n + neg_val(c, 8),
        prec,
    )


register(
    IdentityDescriptor(
        "help-2-0",
        "Bailey transform of the first Berkovich-Warnaar identity",
        _help20_lhs,
        _help20_rhs,
        (mono_param("a"), mono_param("b")),
        grid(a=[M(1, 2), M(1, 4), M(1, 6)], b=[M(1, 2), M(1, 4)]),
        default_order=100,
    )
)


def _bw2_bailey_lhs(numer: Monomial, denom: Monomial, sign: int):
    def build(p, prec):
        a = p["a"]

        def inner(t, n, k):
            t.q(8 * k).poch(numer, 8, k).poch(-(a * 4), 4, k)
            return t.over_poch(denom, 8, k).over_poch(M(sign, 3 - 2 * n), 2, 2 * k).over_poch(a * 2, 4, k)

        return _bailey_side(a, inner, 5, prec)

    return build


def _bw2_bailey_rhs(p, prec):
    a = p["a"]
    a4 = a**4
    return outer_sum(
        lambda n: [
            Product((-1) ** n, 24 * n * n - 8 * n)
            .mono(a, 4 * n)
            .one_minus(a4, 32 * n)
            .poch(a4, 16, n)
            .over_one_minus(a4)
            .over_poch(M(1, 16), 16, n)
            .over_poch_inf(a * Q, 1)
        ],
        lambda n: 24 * n * n - 8 * n + 4 * a.exp * n,
        prec,
    )


_A_GRID = grid(a=[M(1, 2), M(1, 4), M(1, 6)])

register(
    IdentityDescriptor(
        "bw2-bailey",
        "Bailey transform of the second Berkovich-Warnaar identity as displayed",
        _bw2_bailey_lhs(M(-1, 4), M(-1, 8), 1),
        _bw2_bailey_rhs,
        (mono_param("a"),),
        _A_GRID,
        companion="bw2-bailey-corrected",
        note="inherits the misprinted k-sum of the simplified second Berkovich-Warnaar display",
        default_order=100,
    )
)

register(
    IdentityDescriptor(
        "bw2-bailey-corrected",
        "Bailey transform of the corrected second Berkovich-Warnaar identity",
        _bw2_bailey_lhs(M(-1, -4), M(1, 8), -1),
        _bw2_bailey_rhs,
        (mono_param("a"),),
        _A_GRID,
        reading="corrected",
        companion="bw2-bailey",
        default_order=100,
    )
)


def _bw3_bailey_lhs(p, prec):
    a = p["a"]
    a2 = a * a

    def inner(t, n, k):
        t.q(4 * k).poch(a2, 12, k).poch(-(a * 4), 4, k)
        t.over_poch(M(1, 4), 4, k).over_poch(a2, 8, k).over_poch(a * 2, 4, k)
        return t.over_poch(M(-1, 3 - 2 * n), 2, 2 * k)

    return _bailey_side(a, inner, 1, prec)


def _bw3_bailey_rhs(p, prec):
    a = p["a"]
    a2 = a * a
    return outer_sum(
        lambda n: [
            Product((-1) ** n, 54 * n * n - 6 * n)
            .mono(a, 8 * n)
            .one_minus(a2, 24 * n)
            .poch(a2, 12, n)
            .over_one_minus(a2)
            .over_poch(M(1, 12), 12, n)
            .over_poch_inf(a * Q, 1)
        ],
        lambda n: 54 * n * n - 6 * n + 8 * a.exp * n,
        prec,
    )


register(
    IdentityDescriptor(
        "bw3-bailey",
        "Bailey transform of the third Berkovich-Warnaar identity",
        _bw3_bailey_lhs,
        _bw3_bailey_rhs,
        (mono_param("a"),),
        grid(a=[M(1, 3), M(1, 4), M(1, 6)]),
        default_order=100,
    )
)
