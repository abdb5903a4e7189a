from fractions import Fraction
from math import factorial

import mpmath
import pytest
from hypothesis import given, strategies as st

from permlab import oracle
from permlab.exact import (
    ExactPmf,
    check_derangement_identity,
    circular_pmf,
    derangement_count,
    fixed_point_pmf,
    poisson_reference,
    shifted_pmf,
    theta_empty_count,
    tv_distance,
    unseparated_pmf,
    whitworth_zero_prob,
)

F = Fraction

THETA_EMPTY = [0, 0, 1, 1, 8, 36, 229, 1625, 13208, 120288]


def test_pmf_validation():
    with pytest.raises(ValueError):
        ExactPmf({0: F(1, 2)})
    with pytest.raises(ValueError):
        ExactPmf({0: F(3, 2), 1: F(-1, 2)})
    pmf = ExactPmf({0: F(1, 3), 1: F(2, 3), 5: F(0)})
    assert pmf.support == [0, 1]
    assert pmf[7] == 0


def test_pmf_serialization_round_trip():
    pmf = unseparated_pmf(6)
    assert ExactPmf.from_csv(pmf.to_csv()) == pmf
    assert ExactPmf.from_json(pmf.to_json()) == pmf


def test_unseparated_small_values():
    assert unseparated_pmf(1) == ExactPmf.point_mass(0)
    assert unseparated_pmf(4)[0] == F(11, 24)
    assert sum(p for _, p in unseparated_pmf(4).items()) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_unseparated_matches_oracle(n):
    hist = oracle.count_histogram(n, lambda p: oracle.naive_shifted(p, 1))
    assert unseparated_pmf(n) == ExactPmf.from_counts(hist)


@pytest.mark.parametrize("n", range(1, 9))
def test_fixed_point_pmf_matches_oracle(n):
    assert fixed_point_pmf(n) == ExactPmf.from_counts(oracle.count_histogram(n, oracle.naive_fixed_points))


def test_whitworth():
    assert whitworth_zero_prob(4) * 24 == 11
    for n in range(1, 9):
        c = whitworth_zero_prob(n) * factorial(n)
        assert c.denominator == 1 and c >= 0
        assert c == unseparated_pmf(n)[0] * factorial(n)


def test_derangements():
    assert [derangement_count(n) for n in range(8)] == [1, 0, 1, 2, 9, 44, 265, 1854]


@pytest.mark.parametrize("n", range(2, 8))
def test_shifted_matches_oracle(n):
    for h in range(1, n):
        hist = oracle.count_histogram(n, lambda p: oracle.naive_shifted(p, h))
        assert shifted_pmf(n, h) == ExactPmf.from_counts(hist)


def test_shifted_edge_cases():
    assert shifted_pmf(5, 1) == unseparated_pmf(5)
    # h = n-1 leaves one candidate k=1: P{p(n) = p(1)+1} = (n-1)/(n(n-1)) = 1/n
    assert shifted_pmf(5, 4)[1] == F(1, 5)
    for h in (0, 5):
        with pytest.raises(ValueError):
            shifted_pmf(5, h)


@pytest.mark.parametrize("n", range(1, 9))
def test_circular_matches_oracle(n):
    assert circular_pmf(n) == ExactPmf.from_counts(oracle.count_histogram(n, oracle.naive_circular))


def test_circular_small_values():
    assert circular_pmf(1) == ExactPmf.point_mass(1)
    assert circular_pmf(4)[4] == F(1, 6)
    for n in range(2, 12):
        assert circular_pmf(n).mean() == F(n, n - 1)


def test_theta_empty_list():
    assert [theta_empty_count(n) for n in range(1, 11)] == THETA_EMPTY


@pytest.mark.parametrize("n", range(1, 8))
def test_theta_empty_oracle(n):
    assert theta_empty_count(n) == sum(1 for c in oracle.all_circular(n) if not oracle.naive_theta(c))


def test_derangement_identity():
    assert all(check_derangement_identity(n) for n in range(1, 60))


def test_poisson_reference():
    ref = poisson_reference(1, cap=10)
    with mpmath.workdps(60):
        assert abs(mpmath.fsum(ref.probs) + ref.tail - 1) < mpmath.mpf(10) ** -55
        assert abs(ref[0] - mpmath.exp(-1)) < mpmath.mpf(10) ** -55
    assert ref[11] == 0


def test_tv_exact_and_poisson():
    a = ExactPmf({0: F(1, 2), 1: F(1, 2)})
    b = ExactPmf.point_mass(0)
    rep = tv_distance(a, b)
    assert rep.distance == F(1, 2) and isinstance(rep.distance, Fraction)
    assert tv_distance(a, a).distance == 0
    # point mass at n against Poisson(1) is 1 - P{X=n}
    n = 10
    rep = tv_distance(ExactPmf.point_mass(n), poisson_reference())
    assert abs(float(rep) - (1 - float(mpmath.exp(-1) / mpmath.factorial(n)))) < 1e-15


def test_tv_cap_is_extended_to_support():
    rep = tv_distance(ExactPmf.point_mass(60), poisson_reference(cap=5))
    assert abs(float(rep) - 1) < 1e-15


@given(st.integers(1, 40))
def test_unseparated_pmf_normalized(n):
    pmf = unseparated_pmf(n)
    assert sum(pmf.probs.values()) == 1
    assert pmf.mean() == F(n - 1, n)
