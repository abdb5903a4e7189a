from collections import Counter
from fractions import Fraction
from math import factorial, sqrt

import pytest

from permlab import oracle
from permlab.generators import (
    CHAINS,
    RandomSource,
    RestaurantState,
    conjugacy_sampler,
    crp_step,
    cycle_growth_step,
    exact_chain_law,
    insert_at,
    insertion_step,
    is_single_cycle,
    run_chain,
    seat,
    splice_after,
    transition_table,
    uniform_permutation,
)
from permlab.perm import Permutation, cycle_partition

P = Permutation


def within_5_sigma(counts: Counter, outcomes: list, total: int) -> bool:
    p = 1 / len(outcomes)
    sigma = sqrt(total * p * (1 - p))
    return set(counts) <= set(outcomes) and all(abs(counts[o] - total * p) <= 5 * sigma for o in outcomes)


def test_random_source_reproducible():
    a, b = RandomSource(42), RandomSource(42)
    assert [a.randint(1000) for _ in range(50)] == [b.randint(1000) for _ in range(50)]
    c = RandomSource(42, stream=1)
    assert [RandomSource(42).randint(10**9) for _ in range(3)] != [c.randint(10**9) for _ in range(3)]
    with pytest.raises(ValueError):
        RandomSource(-1)
    with pytest.raises(ValueError):
        a.randint(0)


def test_randint_range():
    rng = RandomSource(3)
    draws = {rng.randint(3) for _ in range(200)}
    assert draws == {1, 2, 3}


def test_uniform_permutation_multinomial():
    rng = RandomSource(1)
    assert uniform_permutation(1, rng) == P.identity(1)
    total = 100_000
    counts = Counter(uniform_permutation(4, rng) for _ in range(total))
    assert within_5_sigma(counts, list(oracle.all_permutations(4)), total)


def test_uniform_permutation_reproducible():
    xs = [uniform_permutation(9, RandomSource(5)) for _ in range(2)]
    assert xs[0] == xs[1]


def test_conjugacy_sampler():
    rng = RandomSource(2)
    assert all(conjugacy_sampler(P.identity(5), rng).is_identity() for _ in range(20))
    total = 100_000
    counts = Counter(conjugacy_sampler(P((2, 1, 3)), rng) for _ in range(total))
    assert within_5_sigma(counts, [P((2, 1, 3)), P((3, 2, 1)), P((1, 3, 2))], total)
    eta = P((2, 3, 1, 5, 4, 6, 7))
    for _ in range(200):
        assert cycle_partition(conjugacy_sampler(eta, rng)) == cycle_partition(eta)


def test_single_steps():
    assert insert_at(P.identity(1), 0) == P((2, 1))
    assert insert_at(P.identity(1), 1) == P((1, 2))
    assert {insertion_step(P.identity(1), RandomSource(s)) for s in range(40)} == {P((1, 2)), P((2, 1))}
    st = RestaurantState.initial()
    assert seat(st, 1).permutation() == P((2, 1))
    assert seat(st, 2).permutation() == P((1, 2))
    assert {crp_step(st, RandomSource(s)).permutation() for s in range(40)} == {P((1, 2)), P((2, 1))}
    two = P((2, 1))
    assert {splice_after(two, 1), splice_after(two, 2)} == {P((3, 1, 2)), P((2, 3, 1))}
    assert is_single_cycle(cycle_growth_step(two, RandomSource(0)))
    with pytest.raises(ValueError):
        cycle_growth_step(P.identity(3), RandomSource(0))
    with pytest.raises(ValueError):
        seat(st, 3)
    with pytest.raises(ValueError):
        RestaurantState(((1,), (3,)))


def test_exact_law_small():
    for chain in ("insertion", "crp"):
        law = exact_chain_law(chain, 3)
        assert len(law) == 6 and set(law.values()) == {Fraction(1, 6)}
    law = exact_chain_law("cycle-growth", 4)
    assert len(law) == 6 and set(law.values()) == {Fraction(1, 6)}
    assert all(is_single_cycle(g) for g in law)
    with pytest.raises(ValueError):
        exact_chain_law("insertion", 8)
    with pytest.raises(ValueError):
        exact_chain_law("riffle", 3)


@pytest.mark.parametrize("chain", CHAINS)
@pytest.mark.parametrize("n", range(1, 7))
def test_exact_law_uniform(chain, n):
    law = exact_chain_law(chain, n)
    size = factorial(n - 1) if chain == "cycle-growth" else factorial(n)
    assert len(law) == size
    assert set(law.values()) == {Fraction(1, size)}


@pytest.mark.parametrize("chain", CHAINS)
@pytest.mark.parametrize("n", range(1, 7))
def test_transition_laws(chain, n):
    choices = n if chain == "cycle-growth" else n + 1
    for _, count, moves in transition_table(chain, n):
        assert sum(moves.values()) == choices
        assert moves.get(-1, 0) == count
        assert moves.get(1, 0) == 1
        assert set(moves) <= {-1, 0, 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_cycle_growth_matches_fixed_points(n):
    grown = Counter(
        sum(1 for k in range(1, n + 1) if c.as_cycle()(k) == k + 1) for c in oracle.all_circular(n + 1)
    )
    assert grown == oracle.count_histogram(n, oracle.naive_fixed_points)


@pytest.mark.parametrize("n", range(2, 8))
def test_cycle_successions_exchangeable(n):
    counts = Counter(
        frozenset(k for k in range(1, n + 1) if c.as_cycle()(k) == k + 1) for c in oracle.all_circular(n + 1)
    )
    for vals in oracle.exchangeable_counts(counts, range(1, n + 1)).values():
        assert len(vals) == 1


@pytest.mark.parametrize("chain", CHAINS)
def test_run_chain(chain):
    path = run_chain(chain, 9, RandomSource(11))
    assert [p.n for p in path] == list(range(1, 10))
    assert path == run_chain(chain, 9, RandomSource(11))
    if chain == "cycle-growth":
        assert all(is_single_cycle(p) for p in path)
