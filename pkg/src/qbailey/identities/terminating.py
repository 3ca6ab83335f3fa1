"""Terminating identities that feed the Bailey machinery, plus the conjugate pair."""

from __future__ import annotations

from math import comb

from ..product import Product, expand_sum, outer_sum
from ..qtools import Monomial, Q, qbinomial
from .registry import IdentityDescriptor, grid, int_param, mono_param, register

M = Monomial
NEG_Q_INV = M(-1, -1)  # -q^{-1}


# -- Bressoud -------------------------------------------------------------------


def _bressoud_lhs(p, prec):
    a, g, n = p["a"], p["gamma"], p["n"]
    agq = a * g * Q
    terms = [
        Product(1, k * k)
        .mono(a, k)
        .poly(qbinomial(n, k))
        .poch(agq, 1, n)
        .over_poch(agq, 1, k)
        .over_poch(agq, 1, n - k)
        for k in range(n + 1)
    ]
    return expand_sum(terms, prec)


def _bressoud_rhs(p, prec):
    a, g, n = p["a"], p["gamma"], p["n"]
    agq = a * g * Q
    a2q = a * a * Q
    terms = []
    for k in range(n // 2 + 1):
        t = Product(1, 2 * k * k).mono(a, 2 * k).mono(g, k)
        t.one_minus(a, 2 * k).poch(a, 1, k).poch(g.inverse(), 1, k)
        t.over_one_minus(a).over_poch(Q, 1, k).over_poch(agq, 1, k)
        t.over_poch(Q, 1, n - 2 * k).over_poch(a2q, 1, n + 2 * k)
        t.poch(a2q, 1, 2 * n).poch(Q, 1, n).over_poch(a * Q, 1, n)
        terms.append(t)
    return expand_sum(terms, prec)


register(
    IdentityDescriptor(
        "bressoud-3.4",
        "Bressoud's terminating identity with parameters a and gamma",
        _bressoud_lhs,
        _bressoud_rhs,
        (mono_param("a"), mono_param("gamma"), int_param("n", 0)),
        grid(a=[M(1, 1), M(1, 2), M(1, 4)], gamma=[M(1, 1), M(1, 2)], n=range(13)),
        default_order=120,
    )
)


# -- Berkovich-Warnaar family ------------------------------------------------------
#
# Shared right-hand prefactor  q^n (-q^{-1};q^2)_n / ((q^2;q^2)_n (aq;q^2)_n).
# The first identity carries (aq;q)_n/((-q;q)_n (aq;q^2)_n) instead; both are
# transcribed literally.


def _bw_prefactor(n: int, a: Monomial) -> Product:
    return Product(1, n).poch(NEG_Q_INV, 2, n).over_poch(M(1, 2), 2, n).over_poch(a * Q, 2, n)


def _bw1_lhs(p, prec):
    a, b, n = p["a"], p["b"], p["n"]
    a2 = a * a
    terms = []
    for k in range(n // 4 + 1):
        t = Product(1, comb(4 * k, 2) - 2 * k).mono(b, k)
        t.one_minus(a2, 16 * k).poch(a2, 8, k).poch((a2 * 4) / b, 8, k)
        t.poch(Q, 1, n).poch(a * Q, 1, n)
        t.over_one_minus(a2).over_poch(M(1, 8), 8, k).over_poch(b * 4, 8, k)
        t.over_poch(Q, 1, n - 4 * k).over_poch(a * Q, 1, n + 4 * k)
        terms.append(t)
    return expand_sum(terms, prec)


def _bw1_rhs(p, prec):
    a, b, n = p["a"], p["b"], p["n"]
    terms = []
    for k in range(n // 2 + 1):
        # (b^{1/2}, -b^{1/2}; q^4)_k = (b; q^8)_k and (q^{-2n}, q^{2-2n}; q^4)_k = (q^{-2n}; q^2)_{2k}
        t = Product(1, n + 4 * k).poch(NEG_Q_INV, 2, n).poch(a * Q, 1, n)
        t.over_poch(M(-1, 1), 1, n).over_poch(a * Q, 2, n)
        t.poch(b, 8, k).poch(-(a * 4), 4, k).poch(M(1, -2 * n), 2, 2 * k)
        t.over_poch(M(1, 4), 4, k).over_poch(b, 4, k).over_poch(a * 2, 4, k).over_poch(M(-1, 3 - 2 * n), 2, 2 * k)
        terms.append(t)
    return expand_sum(terms, prec)


register(
    IdentityDescriptor(
        "berkovich-warnaar-1",
        "Berkovich-Warnaar terminating identity with a free parameter b",
        _bw1_lhs,
        _bw1_rhs,
        (mono_param("a"), mono_param("b"), int_param("n", 0)),
        grid(a=[M(1, 4), M(1, 6)], b=[M(1, 2), M(1, 4)], n=range(13)),
        default_order=120,
    )
)


def _bw2_lhs(p, prec):
    a, n = p["a"], p["n"]
    a4 = a**4
    terms = []
    for k in range(n // 4 + 1):
        t = Product((-1) ** k, 8 * k * k - 8 * k)
        t.one_minus(a4, 32 * k).poch(a4, 16, k)
        t.over_one_minus(a4).over_poch(M(1, 16), 16, k)
        t.over_poch(Q, 1, n - 4 * k).over_poch(a * Q, 1, n + 4 * k)
        terms.append(t)
    return expand_sum(terms, prec)


def _bw2_rhs(numer: Monomial, denom: Monomial, sign: int):
    """Right side with ``(numer;q^8)_k / (denom;q^8)_k`` and ``(sign q^{3-2n};q^2)_{2k}``."""

    def build(p, prec):
        a, n = p["a"], p["n"]
        terms = []
        for k in range(n // 2 + 1):
            t = _bw_prefactor(n, a).q(8 * k)
            t.poch(numer, 8, k).poch(M(1, -2 * n), 2, 2 * k).poch(-(a * 4), 4, k)
            t.over_poch(denom, 8, k).over_poch(a * 2, 4, k).over_poch(M(sign, 3 - 2 * n), 2, 2 * k)
            terms.append(t)
        return expand_sum(terms, prec)

    return build


_BW2_PARAMS = (mono_param("a"), int_param("n", 0))
_BW2_GRID = grid(a=[M(1, 4), M(1, 6)], n=range(13))

register(
    IdentityDescriptor(
        "berkovich-warnaar-2",
        "Berkovich-Warnaar identity in a^4 and q^16, simplified display",
        _bw2_lhs,
        _bw2_rhs(M(-1, 4), M(-1, 8), 1),
        _BW2_PARAMS,
        _BW2_GRID,
        companion="berkovich-warnaar-2-corrected",
        note="fails for n >= 2 as displayed",
        default_order=120,
    )
)

register(
    IdentityDescriptor(
        "berkovich-warnaar-2-corrected",
        "Berkovich-Warnaar identity in a^4 and q^16, factors (-q^-4;q^8)_k/(q^8;q^8)_k and (-q^{3-2n};q^2)_{2k}",
        _bw2_lhs,
        _bw2_rhs(M(-1, -4), M(1, 8), -1),
        _BW2_PARAMS,
        _BW2_GRID,
        reading="corrected",
        companion="berkovich-warnaar-2",
        default_order=120,
    )
)


def _bw3_lhs(p, prec):
    a, n = p["a"], p["n"]
    a2 = a * a
    terms = []
    for k in range(n // 6 + 1):
        t = Product((-1) ** k, 18 * k * k - 6 * k).mono(a, 2 * k)
        t.one_minus(a2, 24 * k).poch(a2, 12, k)
        t.over_one_minus(a2).over_poch(M(1, 12), 12, k)
        t.over_poch(Q, 1, n - 6 * k).over_poch(a * Q, 1, n + 6 * k)
        terms.append(t)
    return expand_sum(terms, prec)


def _bw3_rhs(p, prec):
    a, n = p["a"], p["n"]
    a2 = a * a
    terms = []
    for k in range(n // 2 + 1):
        # cube-root triple -> (a^2; q^12)_k, and (a, -a; q^4)_k -> (a^2; q^8)_k
        t = _bw_prefactor(n, a).q(4 * k)
        t.poch(a2, 12, k).poch(M(1, -2 * n), 2, 2 * k).poch(-(a * 4), 4, k)
        t.over_poch(M(1, 4), 4, k).over_poch(a2, 8, k).over_poch(a * 2, 4, k)
        t.over_poch(M(-1, 3 - 2 * n), 2, 2 * k)
        terms.append(t)
    return expand_sum(terms, prec)


register(
    IdentityDescriptor(
        "berkovich-warnaar-3",
        "Berkovich-Warnaar identity in a^2 and q^12 after removing the cube roots of unity",
        _bw3_lhs,
        _bw3_rhs,
        (mono_param("a"), int_param("n", 0)),
        grid(a=[M(1, 4), M(1, 6)], n=range(13)),
        default_order=120,
    )
)


# -- conjugate Bailey pair -----------------------------------------------------------


def _bailey0_lhs(p, prec):
    a, n = p["a"], p["n"]
    return outer_sum(
        lambda k: [Product(1, k * k).mono(a, k).over_poch(Q, 1, k - n).over_poch(a * Q, 1, k + n)],
        lambda k: k * k + a.exp * k,
        prec,
        start=n,
    )


def _bailey0_rhs(p, prec):
    a, n = p["a"], p["n"]
    return Product(1, n * n).mono(a, n).over_poch_inf(a * Q, 1).expand(prec)


register(
    IdentityDescriptor(
        "bailey-0",
        "conjugate Bailey pair a^k q^{k^2} with kernels 1/(q)_{k-n} and 1/(aq)_{k+n}",
        _bailey0_lhs,
        _bailey0_rhs,
        (mono_param("a", 0), int_param("n", 0)),
        grid(a=[M(1, 0), M(1, 1), M(1, 2), M(1, 4)], n=range(5)),
        default_order=120,
    )
)
