"""Acceptance criteria, each checked at exact integer tolerance.

Every item is logged before it is asserted, so the terminal summary shows
one verdict line per criterion even when items fail.  Items marked
supplementary exercise corrected or derived readings and do not affect the
verdict of their criterion.
"""

import random
import time

import pytest

from acceptance_log import LOG
from qbailey.bailey import (
    bressoud_system,
    bw1_system,
    bw2_system,
    bw3_system,
    classical_system,
    conjugate_pair_check,
    verify_transform,
)
from qbailey.identities import get, summarize, verify, verify_grid
from qbailey.oracles import (
    count_overpartitions_enum,
    count_partitions_enum,
    partition_counts_dp,
    qbinomial_quotient,
)
from qbailey.positivity import (
    corollary_sums,
    cross_check_corollary,
    overpartition_square_sum,
    sequence_report,
    theorem_rhs_positivity,
    theta_quotient_series,
    truncated_pentagonal_sum,
)
from qbailey.qtools import ONE, Q, Monomial, overpartition_table, partition_table, qbinomial, theta_sum_odd_M, triple_product_rhs
from qbailey.series import equal_up_to, from_coeffs


def describe(report):
    if report.passed:
        return ""
    e, lhs, rhs = report.first_mismatch
    if report.note == "first negative entry":
        return f"(n={e}: {lhs})"
    where = ", ".join(f"{k}={v}" for k, v in report.params.items())
    return f"(q^{e}: {lhs} vs {rhs}{'; ' + where if where else ''})"


def logged(criterion, item, report, supplementary=False):
    LOG.record(criterion, item, report.passed, describe(report), supplementary)
    return report


def readings(ids):
    """Repaired companions of the stated ids."""
    return [get(i).companion for i in ids if get(i).companion]


# -- 1 ------------------------------------------------------------------------------

THEOREMS = ["thm1", "thm2", "thm3", "thm4"]


@pytest.mark.parametrize("identity_id", THEOREMS)
def test_c1_theorem(identity_id):
    r = logged(1, identity_id, verify(identity_id, hi=200))
    assert r.passed, describe(r)


@pytest.mark.parametrize("identity_id", readings(THEOREMS))
def test_c1_derived_reading(identity_id):
    r = logged(1, identity_id, verify(identity_id, hi=200), supplementary=True)
    assert r.passed, describe(r)


def test_c1_runtime():
    start = time.perf_counter()
    for identity_id in THEOREMS:
        verify(identity_id, hi=200)
    elapsed = time.perf_counter() - start
    LOG.record(1, "runtime < 60 s", elapsed < 60, f"({elapsed:.1f} s)")
    assert elapsed < 60


# -- 2 ------------------------------------------------------------------------------

TRUNCATED = [("andrews-merca-trunc", k) for k in range(1, 7)]
TRUNCATED += [("guo-zeng-trunc", k) for k in range(1, 7)]
TRUNCATED += [("andrews-merca-overp", k) for k in range(1, 5)]


@pytest.mark.parametrize("identity_id, k", TRUNCATED)
def test_c2_truncated(identity_id, k):
    r = logged(2, f"{identity_id} k={k}", verify(identity_id, {"k": k}, lo=0, hi=150))
    assert r.passed, describe(r)


@pytest.mark.parametrize("k", range(1, 7))
def test_c2_corrected_binomial(k):
    r = logged(2, f"guo-zeng-trunc-corrected k={k}", verify("guo-zeng-trunc-corrected", {"k": k}, lo=0, hi=150), True)
    assert r.passed, describe(r)


# -- 3 ------------------------------------------------------------------------------

PARAMETRIC = ["rogers-fine", "andrews-1986", "bressoud-3.4", "berkovich-warnaar-1", "berkovich-warnaar-2", "berkovich-warnaar-3"]


@pytest.mark.parametrize("identity_id", PARAMETRIC)
def test_c3_parametric(identity_id):
    reports = verify_grid(identity_id, hi=120)
    r = logged(3, f"{identity_id} ({len(reports)} points)", summarize(reports))
    assert r.passed, describe(r)


@pytest.mark.parametrize("identity_id", readings(PARAMETRIC))
def test_c3_corrected_reading(identity_id):
    r = logged(3, identity_id, summarize(verify_grid(identity_id, hi=120)), supplementary=True)
    assert r.passed, describe(r)


def test_c3_grids_cover_the_stated_ranges():
    bress = {(str(p["a"]), str(p["gamma"]), p["n"]) for p in get("bressoud-3.4").grid}
    assert bress == {(a, g, n) for a in ("q", "q^2", "q^4") for g in ("q", "q^2") for n in range(13)}
    assert max(p["n"] for p in get("andrews-1986").grid) == 10
    for identity_id in PARAMETRIC[3:]:
        pts = get(identity_id).grid
        assert {str(p["a"]) for p in pts} == {"q^4", "q^6"} and {p["n"] for p in pts} == set(range(13))
    assert {str(p["b"]) for p in get("berkovich-warnaar-1").grid} == {"q^2", "q^4"}


# -- 4 ------------------------------------------------------------------------------

SYSTEMS = {
    "m=2 (a=q, gamma=q^2)": (bressoud_system, 120),
    "m=4 first (a=q^4, b=q^2)": (bw1_system, 150),
    "m=4 second (a=q^4)": (bw2_system, 150),
    "m=6 (a=q^6)": (bw3_system, 150),
}


@pytest.mark.parametrize("label", list(SYSTEMS))
def test_c4_system(label):
    make, order = SYSTEMS[label]
    r = logged(4, label, verify_transform(make(), order))
    assert r.passed, describe(r)


def random_finite(rng):
    return [
        from_coeffs([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))], rng.randint(0, 4))
        for _ in range(rng.randint(1, 5))
    ]


def test_c4_classical_random():
    rng = random.Random(20240611)
    failures = []
    for case in range(20):
        A, D = random_finite(rng), random_finite(rng)
        a = rng.choice([Q, Monomial(1, 2), Monomial(-1, 1), Monomial(1, 3)])
        if not verify_transform(classical_system(A, D, a), 60):
            failures.append(case)
    LOG.record(4, "classical d=e=m=1, 20 random cases", not failures, f"(cases {failures})" if failures else "")
    assert not failures


# -- 5 ------------------------------------------------------------------------------


@pytest.mark.parametrize("a", [ONE, Q, Monomial(1, 2), Monomial(1, 4)], ids=str)
@pytest.mark.parametrize("n", range(5))
def test_c5_conjugate_pair(a, n):
    r = logged(5, f"a={a} n={n}", conjugate_pair_check(a, n, 120))
    assert r.passed, describe(r)


def test_c5_registry_form():
    r = logged(5, "bailey-0 via registry (20 points)", summarize(verify_grid("bailey-0", hi=120)))
    assert r.passed, describe(r)


# -- 6 ------------------------------------------------------------------------------


@pytest.mark.parametrize("which", ["1", "2", "3", "4"])
def test_c6_corollary_sums(which):
    r = logged(6, f"cor{which} n<=2000", sequence_report(corollary_sums(which, 2000), 0, f"cor{which}"))
    assert r.passed, describe(r)


@pytest.mark.parametrize("k", range(1, 7))
def test_c6_truncated_pentagonal(k):
    # the inequality is claimed for n > 0
    r = logged(6, f"truncated pentagonal k={k}", sequence_report(truncated_pentagonal_sum(k, 500), 1, "andmer", {"k": k}))
    assert r.passed, describe(r)


@pytest.mark.parametrize("k", range(1, 7))
def test_c6_overpartition_square_literal(k):
    vals = overpartition_square_sum(k, 500)
    r = logged(6, f"overpartition square k={k}", sequence_report(vals, 1, "guozeng", {"k": k}))
    assert r.passed, describe(r)


@pytest.mark.parametrize("k", range(1, 7))
def test_c6_overpartition_square_from_one(k):
    vals = overpartition_square_sum(k, 500, first_j=1)
    r = logged(6, f"overpartition square k={k}, sum from j=1", sequence_report(vals, 1, "guozeng", {"k": k}), True)
    assert r.passed, describe(r)


@pytest.mark.parametrize("identity_id, weighted", [("thm1", False), ("thm2", True), ("thm3", False), ("thm4", True)])
def test_c6_rhs_nonnegative(identity_id, weighted):
    label = f"{identity_id} rhs{' x (-q;q)_inf' if weighted else ''}"
    r = logged(6, label, theorem_rhs_positivity(identity_id, weighted, 200))
    assert r.passed, describe(r)


@pytest.mark.parametrize("identity_id, weighted", [("thm1-derived", False), ("thm2-derived", True), ("thm3-derived", False), ("thm4-derived", True)])
def test_c6_derived_rhs_nonnegative(identity_id, weighted):
    r = logged(6, f"{identity_id} rhs", theorem_rhs_positivity(identity_id, weighted, 200), True)
    assert r.passed, describe(r)


# -- 7 ------------------------------------------------------------------------------


def test_c7_partitions_recurrence_vs_dp():
    ok = LOG.record(7, "p(n) recurrence = DP, n<=500", list(partition_table(500).values) == partition_counts_dp(500))
    assert ok


def test_c7_partitions_recurrence_vs_enumeration():
    p = partition_table(25)
    ok = LOG.record(7, "p(n) recurrence = enumeration, n<=25", all(p(n) == count_partitions_enum(n) for n in range(26)))
    assert ok


def test_c7_overpartitions_series_vs_enumeration():
    pb = overpartition_table(20)
    ok = LOG.record(7, "pbar(n) series = enumeration, n<=20", all(pb(n) == count_overpartitions_enum(n) for n in range(21)))
    assert ok


def test_c7_qbinomial_pascal_vs_quotient():
    bad = [(N, M) for N in range(31) for M in range(N + 1) if list(qbinomial(N, M).coeffs) != qbinomial_quotient(N, M)]
    ok = LOG.record(7, "q-binomial Pascal = factorial quotient, N<=30", not bad, f"({bad[:3]})" if bad else "")
    assert ok


# -- 8 ------------------------------------------------------------------------------


@pytest.mark.parametrize("identity_id", ["concluding-0", "concluding-1", "concluding-2"])
def test_c8_concluding(identity_id):
    r = logged(8, identity_id, verify(identity_id, lo=0, hi=200))
    assert r.passed, describe(r)


def test_c8_concluding_corrected():
    r = logged(8, "concluding-0-corrected", verify("concluding-0-corrected", lo=0, hi=200), supplementary=True)
    assert r.passed, describe(r)


@pytest.mark.parametrize("M", [3, 5, 7, 9, 11, 13])
def test_c8_theta_product(M):
    r = logged(8, f"theta = product, M={M}", equal_up_to(theta_sum_odd_M(M, 500), triple_product_rhs(M, 500), 0, 500))
    assert r.passed, describe(r)


@pytest.mark.parametrize("M", [3, 5, 7, 9, 11, 13])
def test_c8_theta_quotient_nonnegative(M):
    s = theta_quotient_series(M, 500)
    bad = next((e for e in range(500) if s[e] < 0), None)
    ok = LOG.record(8, f"theta quotient >= 0, M={M}", bad is None, f"(q^{bad})" if bad is not None else "")
    assert ok


# -- 9 ------------------------------------------------------------------------------


@pytest.mark.parametrize("which", ["1", "2", "3", "4"])
def test_c9_cross_check(which):
    r = logged(9, f"cor{which}", cross_check_corollary(which, 150))
    assert r.passed, describe(r)


@pytest.mark.parametrize("which", ["2-theorem-family", "2-derived"])
def test_c9_cross_check_other_offsets(which):
    r = logged(9, f"cor{which}", cross_check_corollary(which, 150), supplementary=True)
    assert r.passed, describe(r)
