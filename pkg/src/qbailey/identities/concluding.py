"""The a -> 1 case of the modulus-13 identity and its triple-product companions."""

from __future__ import annotations

from ..product import Product, outer_sum
from ..qtools import Q, poch_infinite, qbinomial, theta_sum_odd_M, triple_product_rhs
from ..series import div
from .registry import IdentityDescriptor, grid, int_param, register


def _double_sum(p, prec):
    """``sum_n sum_k q^{n^2+k^2} [n, k] / (q;q)_{2n}``."""
    return outer_sum(
        lambda n: [Product(1, n * n + k * k).poly(qbinomial(n, k)).over_poch(Q, 1, 2 * n) for k in range(n + 1)],
        lambda n: n * n,
        prec,
    )


def _concluding0_lhs(n0_weight: int):
    # (1 + q^n) at n = 0 is 2; the a -> 1 limit gives weight 1 there instead
    def build(p, prec):
        def terms(n):
            base = (13 * n * n - n) // 2
            if n == 0:
                return [Product(n0_weight, 0).over_poch_inf(Q, 1)]
            sign = (-1) ** n
            return [Product(sign, base).over_poch_inf(Q, 1), Product(sign, base + n).over_poch_inf(Q, 1)]

        return outer_sum(terms, lambda n: (13 * n * n - n) // 2, prec)

    return build


register(
    IdentityDescriptor(
        "concluding-0",
        "a -> 1 case: (1/(q;q)_inf) sum_n (-1)^n (1+q^n) q^{(13n^2-n)/2} as displayed",
        _concluding0_lhs(2),
        _double_sum,
        companion="concluding-0-corrected",
        note="the n = 0 summand is 2 as displayed; fails at q^0",
    )
)

register(
    IdentityDescriptor(
        "concluding-0-corrected",
        "a -> 1 case with the n = 0 summand equal to 1",
        _concluding0_lhs(1),
        _double_sum,
        reading="corrected",
        companion="concluding-0",
    )
)


def _bilateral_over_euler(M: int):
    def build(p, prec):
        return div(theta_sum_odd_M(M, prec), poch_infinite(Q, 1, prec))

    return build


def _triple_over_euler(p, prec):
    M = p.get("M", 13)
    return div(triple_product_rhs(M, prec), poch_infinite(Q, 1, prec))


register(
    IdentityDescriptor(
        "concluding-1",
        "bilateral form: (1/(q;q)_inf) sum_{n in Z} (-1)^n q^{(13n^2+n)/2}",
        _bilateral_over_euler(13),
        _double_sum,
    )
)

register(
    IdentityDescriptor(
        "concluding-2",
        "double sum equals (q^6,q^7,q^13;q^13)_inf/(q;q)_inf",
        _double_sum,
        _triple_over_euler,
    )
)


def _general_lhs(p, prec):
    return _bilateral_over_euler(p["M"])(p, prec)


register(
    IdentityDescriptor(
        "general-odd-M",
        "(1/(q;q)_inf) sum_{n in Z} (-1)^n q^{(Mn^2+n)/2} = (q^{(M-1)/2},q^{(M+1)/2},q^M;q^M)_inf/(q;q)_inf",
        _general_lhs,
        _triple_over_euler,
        (int_param("M", 3, "odd", lambda m: m % 2 == 1),),
        grid(M=[3, 5, 7, 9, 11, 13]),
        default_order=500,
    )
)
