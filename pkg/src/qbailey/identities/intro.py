"""Truncated theta identities and the two classical transformations they rest on."""

from __future__ import annotations

from math import comb

from ..product import Product, expand_sum, outer_sum
from ..qtools import Monomial, Q, neg_val, qbinomial
from ..series import add, one
from .registry import IdentityDescriptor, grid, int_param, mono_param, register

NEG_Q = Monomial(-1, 1)  # the parameter value -q
NEG_ONE = Monomial(-1, 0)


# -- truncated pentagonal number theorem -------------------------------------


def _pentagonal_truncated_lhs(p, prec):
    k = p["k"]
    terms = [Product((-1) ** j, j * (3 * j + 1) // 2).binom(-1, 2 * j + 1).over_poch_inf(Q, 1) for j in range(k)]
    return expand_sum(terms, prec)


def _pentagonal_truncated_rhs(p, prec):
    k = p["k"]
    base = comb(k, 2)
    tail = outer_sum(
        lambda n: [Product((-1) ** (k - 1), base + (k + 1) * n).over_poch(Q, 1, n).poly(qbinomial(n - 1, k - 1))],
        lambda n: base + (k + 1) * n,
        prec,
        start=1,
    )
    return add(one(prec), tail)


register(
    IdentityDescriptor(
        "andrews-merca-trunc",
        "Andrews-Merca truncated pentagonal number theorem",
        _pentagonal_truncated_lhs,
        _pentagonal_truncated_rhs,
        (int_param("k", 1),),
        grid(k=range(1, 7)),
        default_order=100,
    )
)


# -- truncated Gauss theta series ---------------------------------------------


def _gauss_truncated_lhs(p, prec):
    k = p["k"]
    terms = [Product(1, 0)] + [Product(2 * (-1) ** j, j * j) for j in range(1, k + 1)]
    return expand_sum((t.poch_inf(NEG_Q, 1).over_poch_inf(Q, 1) for t in terms), prec)


def _guo_zeng_rhs(binom_bottom):
    def build(p, prec):
        k = p["k"]
        tail = outer_sum(
            lambda n: [
                Product((-1) ** k, (k + 1) * n)
                .poch(NEG_Q, 1, k)
                .poch(NEG_ONE, 1, n - k)
                .over_poch(Q, 1, n)
                .poly(qbinomial(n - 1, binom_bottom(k)))
            ],
            lambda n: (k + 1) * n,
            prec,
            start=k + 1,
        )
        return add(one(prec), tail)

    return build


register(
    IdentityDescriptor(
        "guo-zeng-trunc",
        "Guo-Zeng truncated theta identity, Gaussian coefficient [n-1, k-1] as displayed",
        _gauss_truncated_lhs,
        _guo_zeng_rhs(lambda k: k - 1),
        (int_param("k", 1),),
        grid(k=range(1, 7)),
        companion="guo-zeng-trunc-corrected",
        note="fails for every k: the displayed bottom index k-1 should be k",
        default_order=100,
    )
)

register(
    IdentityDescriptor(
        "guo-zeng-trunc-corrected",
        "Guo-Zeng truncated theta identity with Gaussian coefficient [n-1, k]",
        _gauss_truncated_lhs,
        _guo_zeng_rhs(lambda k: k),
        (int_param("k", 1),),
        grid(k=range(1, 7)),
        reading="corrected",
        companion="guo-zeng-trunc",
        default_order=100,
    )
)


def _andrews_merca_overp_rhs(p, prec):
    k = p["k"]
    # (-q^m;q)_inf / (q^m;q)_inf with m = k + j + 2
    tail = outer_sum(
        lambda j: [
            Product(2 * (-1) ** k, (k + 1) * (k + j + 1))
            .poch(NEG_Q, 1, k)
            .over_poch(Q, 1, k)
            .poch_inf(Monomial(-1, k + j + 2), 1)
            .over_binom(-1, j + k + 1)
            .over_poch_inf(Monomial(1, k + j + 2), 1)
        ],
        lambda j: (k + 1) * (k + j + 1),
        prec,
    )
    return add(one(prec), tail)


register(
    IdentityDescriptor(
        "andrews-merca-overp",
        "Andrews-Merca overpartition form of the truncated Gauss theta identity",
        _gauss_truncated_lhs,
        _andrews_merca_overp_rhs,
        (int_param("k", 1),),
        grid(k=range(1, 5)),
        default_order=100,
    )
)


# -- Rogers-Fine ----------------------------------------------------------------


def _rogers_fine_lhs(p, prec):
    a, b, c = p["a"], p["b"], p["c"]
    return outer_sum(
        lambda j: [Product().poch(a, 1, j).mono(c, j).over_poch(b, 1, j)],
        lambda j: c.exp * j + neg_val(a, 1),
        prec,
    )


def _rogers_fine_rhs(p, prec):
    a, b, c = p["a"], p["b"], p["c"]
    acq_b = a * c * Q / b
    ac = a * c
    return outer_sum(
        lambda j: [
            Product(1, j * j - j)
            .poch(a, 1, j)
            .poch(acq_b, 1, j)
            .mono(b * c, j)
            .binom(-ac.sign, ac.exp + 2 * j)
            .over_poch(b, 1, j)
            .over_poch(c, 1, j + 1)
        ],
        lambda j: j * j - j + (b.exp + c.exp) * j + neg_val(a, 1) + neg_val(acq_b, 1) + min(0, ac.exp),
        prec,
    )


register(
    IdentityDescriptor(
        "rogers-fine",
        "Rogers-Fine transformation",
        _rogers_fine_lhs,
        _rogers_fine_rhs,
        (mono_param("a"), mono_param("b"), mono_param("c")),
        grid(
            a=[Monomial(1, 1), Monomial(-1, 1), Monomial(1, 2), Monomial(-1, 2)],
            b=[Monomial(1, 1), Monomial(1, 2)],
            c=[Monomial(1, 1), Monomial(1, 2), Monomial(1, 3)],
        ),
        default_order=100,
    )
)


# -- Andrews' terminating transformation in a and b --------------------------


def _andrews_1986_lhs(p, prec):
    a, b, n = p["a"], p["b"], p["n"]
    terms = []
    for j in range(n + 1):
        terms.append(
            Product(1, j * j)
            .poch(b, 1, j)
            .binom(-b.sign, b.exp + 2 * j)
            .poch(b / a, 1, j)
            .mono(a, j)
            .over_binom(-b.sign, b.exp)
            .over_poch(Q, 1, j)
            .over_poch(a * Q, 1, j)
        )
    return expand_sum(terms, prec)


def _andrews_1986_rhs(p, prec):
    a, b, n = p["a"], p["b"], p["n"]
    terms = [
        Product(1, (n + 1) * j)
        .poch(b * Q, 1, n)
        .over_poch(a * Q, 1, n)
        .poch(b / a, 1, j)
        .mono(a, j)
        .over_poch(Q, 1, j)
        for j in range(n + 1)
    ]
    return expand_sum(terms, prec)


register(
    IdentityDescriptor(
        "andrews-1986",
        "Andrews' terminating q-series transformation in a and b",
        _andrews_1986_lhs,
        _andrews_1986_rhs,
        (mono_param("a"), mono_param("b"), int_param("n", 0)),
        grid(
            a=[Monomial(1, 1), Monomial(1, 2), Monomial(-1, 1)],
            b=[Monomial(1, 1), Monomial(1, 3), Monomial(-1, 2)],
            n=range(0, 11),
        ),
        default_order=100,
    )
)
