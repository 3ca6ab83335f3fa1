"""Hand-checked values for the slow reference implementations."""

import pytest

from qbailey.oracles import (
    count_overpartitions_enum,
    count_partitions_enum,
    distinct_parts_product,
    overpartitions,
    partition_counts_dp,
    partitions,
    poly_divexact,
    poly_mul,
    q_factorial,
    qbinomial_quotient,
)

# p(n) and pbar(n) for n = 0..10, counted by hand / standard tables
P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
PBAR = [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]


def test_partitions_of_four():
    assert sorted(partitions(4)) == sorted([(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])


def test_partition_counts():
    assert [count_partitions_enum(n) for n in range(11)] == P
    assert partition_counts_dp(10) == P


def test_overpartitions_of_two():
    assert set(overpartitions(2)) == {((2, False),), ((2, True),), ((1, False), (1, False)), ((1, True), (1, False))}


def test_overpartition_counts():
    assert [count_overpartitions_enum(n) for n in range(11)] == PBAR


def test_distinct_parts():
    # q(n): partitions into distinct parts
    assert distinct_parts_product(8) == [1, 1, 1, 2, 2, 3, 4, 5, 6]


def test_poly_helpers():
    assert poly_mul([1, -1], [1, 1]) == [1, 0, -1]
    assert poly_divexact([1, 0, -1], [1, -1]) == [1, 1]
    with pytest.raises(ArithmeticError):
        poly_divexact([1, 0, 1], [1, -1])
    assert q_factorial(2) == [1, -1, -1, 1]


@pytest.mark.parametrize(
    "N, M, expected",
    [(4, 2, [1, 1, 2, 1, 1]), (3, 1, [1, 1, 1]), (5, 0, [1]), (2, 3, [])],
)
def test_gaussian(N, M, expected):
    assert qbinomial_quotient(N, M) == expected
