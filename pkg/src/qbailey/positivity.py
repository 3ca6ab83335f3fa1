"""Alternating partition sums and their generating-function counterparts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from .identities import build_side
from .identities.theorems import (
    THM1_FAMILY,
    THM2_DERIVED_FAMILY,
    THM2_FAMILY,
    THM3_FAMILY,
    THM4_FAMILY,
)
from .qtools import Monomial, PartitionTable, Q, overpartition_table, partition_table, poch_infinite, theta_sum_odd_M
from .series import LaurentSeries, VerificationReport, div, mul

Offset = Callable[[int], int]


@dataclass(frozen=True)
class AlternatingSumSpec:
    """``S(n) = sum_j (-1)^j (P(n - offset_a(j)) - P(n - offset_b(j)))``."""

    kind: str  # "plain" | "overpartition"
    offset_a: Offset
    offset_b: Offset
    description: str
    theorem: Optional[str] = None  # registry id whose left side generates S

    def __post_init__(self) -> None:
        if self.kind not in ("plain", "overpartition"):
            raise ValueError(f"unknown partition kind {self.kind!r}")


COROLLARIES: dict[str, AlternatingSumSpec] = {
    "1": AlternatingSumSpec("plain", lambda j: j * (13 * j + 11) // 2, lambda j: j * (13 * j + 15) // 2 + 1, "p(n - j(13j+11)/2) - p(n - j(13j+15)/2 - 1)", "thm1"),
    "2": AlternatingSumSpec("overpartition", lambda j: 4 * j * (10 * j + 1) + 4, lambda j: 4 * j * (10 * j + 3) + 12, "pbar(n - 4j(10j+1) - 4) - pbar(n - 4j(10j+3) - 12)", "thm2"),
    "3": AlternatingSumSpec("plain", lambda j: 8 * j * (3 * j + 1), lambda j: 8 * j * (3 * j + 5) + 16, "p(n - 8j(3j+1)) - p(n - 8j(3j+5) - 16)", "thm3"),
    "4": AlternatingSumSpec("overpartition", lambda j: 6 * j * (9 * j + 7), lambda j: 6 * j * (9 * j + 11) + 12, "pbar(n - 6j(9j+7)) - pbar(n - 6j(9j+11) - 12)", "thm4"),
    # the same sum with the first family of the second theorem's left side
    "2-theorem-family": AlternatingSumSpec("overpartition", *THM2_FAMILY, "pbar(n - 4j(10j-1) - 4) - pbar(n - 4j(10j+3) - 12)", "thm2"),
    # the families the derivation actually produces
    "2-derived": AlternatingSumSpec("overpartition", *THM2_DERIVED_FAMILY, "pbar(n - 28j^2 - 20j) - pbar(n - 28j^2 - 36j - 8)", "thm2-derived"),
}

THEOREM_FAMILIES = {"1": THM1_FAMILY, "2": THM2_FAMILY, "3": THM3_FAMILY, "4": THM4_FAMILY}


def _spec(which: Union[int, str, AlternatingSumSpec]) -> AlternatingSumSpec:
    if isinstance(which, AlternatingSumSpec):
        return which
    try:
        return COROLLARIES[str(which)]
    except KeyError:
        raise ValueError(f"unknown corollary {which!r}; choose from {sorted(COROLLARIES)}") from None


def _table(kind: str, n_max: int) -> PartitionTable:
    return partition_table(n_max) if kind == "plain" else overpartition_table(n_max)


def alternating_sums(spec: AlternatingSumSpec, n_max: int, table: Optional[PartitionTable] = None) -> list[int]:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    P = table if table is not None else _table(spec.kind, n_max)
    out = []
    for n in range(n_max + 1):
        s = 0
        j = 0
        while spec.offset_a(j) <= n:
            s += (-1) ** j * (P(n - spec.offset_a(j)) - P(n - spec.offset_b(j)))
            j += 1
        out.append(s)
    return out


def corollary_sums(which: Union[int, str], n_max: int) -> list[int]:
    """The alternating sum of a corollary for ``n = 0..n_max``."""
    return alternating_sums(_spec(which), n_max)


def truncated_pentagonal_sum(k: int, n_max: int) -> list[int]:
    if k < 1:
        raise ValueError("k must be at least 1")
    p = partition_table(n_max)
    sign = (-1) ** (k - 1)
    return [
        sign * sum((-1) ** j * (p(n - j * (3 * j + 1) // 2) - p(n - j * (3 * j + 5) // 2 - 1)) for j in range(k))
        for n in range(n_max + 1)
    ]


def merca_display_sum(n_max: int) -> list[int]:
    """``p(n-5) - p(n-2) - p(n-1) + p(n)`` exactly as written in the introduction."""
    p = partition_table(n_max)
    return [p(n - 5) - p(n - 2) - p(n - 1) + p(n) for n in range(n_max + 1)]


def overpartition_square_sum(k: int, n_max: int, first_j: int = 0) -> list[int]:
    """``(-1)^k (pbar(n) + 2 sum_{j=first_j}^{k} (-1)^j pbar(n - j^2))``.

    ``first_j=0`` is the literal display; ``first_j=1`` is the normalisation
    matching the truncated Gauss theta series.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if first_j not in (0, 1):
        raise ValueError("first_j must be 0 or 1")
    pb = overpartition_table(n_max)
    sign = (-1) ** k
    return [sign * (pb(n) + 2 * sum((-1) ** j * pb(n - j * j) for j in range(first_j, k + 1))) for n in range(n_max + 1)]


def first_negative(values: list[int], start: int = 0) -> Optional[int]:
    return next((n for n in range(start, len(values)) if values[n] < 0), None)


def sequence_report(values: list[int], start: int, label: str, params: Optional[dict] = None) -> VerificationReport:
    """Nonnegativity of ``values[start:]`` as a report."""
    n = first_negative(values, start)
    window = (start, len(values))
    if n is None:
        return VerificationReport(window, "pass", None, label, params or {})
    return VerificationReport(window, "fail", (n, values[n], 0), label, params or {}, note="first negative entry")


def check_nonnegative(series: LaurentSeries, lo: int, hi: int, label: Optional[str] = None) -> VerificationReport:
    """Pass iff every coefficient of ``series`` on ``[lo, hi)`` is at least 0."""
    for e in range(lo, hi):
        c = series[e]
        if c < 0:
            return VerificationReport((lo, hi), "fail", (e, c, 0), label, note="first negative coefficient")
    return VerificationReport((lo, hi), "pass", None, label)


def _overpartition_weight(prec: int) -> LaurentSeries:
    return poch_infinite(Monomial(-1, 1), 1, prec)


def generating_side(identity_id: str, side: str, overpartition: bool, prec: int) -> LaurentSeries:
    s = build_side(identity_id, side, {}, prec)
    return mul(s, _overpartition_weight(prec)) if overpartition else s


def cross_check_corollary(which: Union[int, str], n_max: int) -> VerificationReport:
    """Table-side sums against coefficients of the matching theorem's left side.

    For overpartition corollaries the left side is first multiplied by
    ``(-q;q)_inf``.
    """
    spec = _spec(which)
    table_side = alternating_sums(spec, n_max)
    series = generating_side(spec.theorem, "lhs", spec.kind == "overpartition", n_max + 1)
    label = f"cor{which}"
    for n in range(n_max + 1):
        if table_side[n] != series[n]:
            return VerificationReport((0, n_max + 1), "fail", (n, table_side[n], series[n]), label, {"theorem": spec.theorem})
    return VerificationReport((0, n_max + 1), "pass", None, label, {"theorem": spec.theorem})


def family_mismatches(which: str, j_max: int = 20) -> list[tuple[int, str]]:
    """Indices ``j`` where a corollary's offsets differ from its theorem's exponent families."""
    spec = _spec(which)
    first, second = THEOREM_FAMILIES[which]
    out = []
    for j in range(j_max + 1):
        if spec.offset_a(j) != first(j):
            out.append((j, "first"))
        if spec.offset_b(j) != second(j):
            out.append((j, "second"))
    return out


def theorem_rhs_positivity(identity_id: str, overpartition: bool, order: int = 200) -> VerificationReport:
    """Nonnegativity of a theorem's right side (times ``(-q;q)_inf`` if asked) on ``[0, order)``."""
    s = generating_side(identity_id, "rhs", overpartition, order)
    return check_nonnegative(s, 0, order, identity_id)


def theta_quotient_series(M: int, prec: int) -> LaurentSeries:
    """``(1/(q;q)_inf) sum_{n in Z} (-1)^n q^{(Mn^2+n)/2}``."""
    return div(theta_sum_odd_M(M, prec), poch_infinite(Q, 1, prec))


__all__ = [
    "AlternatingSumSpec",
    "COROLLARIES",
    "alternating_sums",
    "corollary_sums",
    "truncated_pentagonal_sum",
    "merca_display_sum",
    "overpartition_square_sum",
    "first_negative",
    "sequence_report",
    "check_nonnegative",
    "cross_check_corollary",
    "family_mismatches",
    "theorem_rhs_positivity",
    "theta_quotient_series",
]
