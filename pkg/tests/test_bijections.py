from itertools import combinations

import pytest

from permlab import oracle
from permlab.bijections import (
    CanonicalCycleForm,
    build_circular,
    canonical_cycle_form,
    circular_delete,
    circular_insert,
    fixed_to_shifted,
    fundamental_transform,
    inverse_fundamental,
    peel_circular,
    shifted_to_fixed,
    split_at_left_to_right_minima,
)
from permlab.perm import CircularPermutation, Permutation, fixed_points, shifted_successions, unseparated_pairs

P = Permutation
C = CircularPermutation


def test_canonical_form_examples():
    assert str(canonical_cycle_form(P((7, 2, 6, 4, 1, 3, 5)))) == "(4)(3,6)(2)(1,7,5)"
    assert str(canonical_cycle_form(P.identity(3))) == "(3)(2)(1)"
    assert str(canonical_cycle_form(P((1, 3, 7, 5, 2, 4, 6)))) == "(2,3,7,6,4,5)(1)"


def test_canonical_form_rejects_bad_order():
    with pytest.raises(ValueError):
        CanonicalCycleForm(((1,), (2,)))
    with pytest.raises(ValueError):
        CanonicalCycleForm(((3, 1), (2,)))


def test_fundamental_examples():
    assert fundamental_transform(P((1, 3, 7, 5, 2, 4, 6))) == P((2, 3, 7, 6, 4, 5, 1))
    assert inverse_fundamental(P((2, 3, 7, 6, 4, 5, 1))) == P((1, 3, 7, 5, 2, 4, 6))
    assert fundamental_transform(P.identity(5)) == P((5, 4, 3, 2, 1))
    assert inverse_fundamental(P((5, 4, 3, 2, 1))) == P.identity(5)
    assert split_at_left_to_right_minima((4, 3, 6, 2, 1, 7, 5)) == [(4,), (3, 6), (2,), (1, 7, 5)]


def test_fundamental_is_bijection_s6():
    perms = list(oracle.all_permutations(6))
    assert len({fundamental_transform(p) for p in perms}) == 720


@pytest.mark.parametrize("n", range(1, 8))
def test_fundamental_round_trip(n):
    for p in oracle.all_permutations(n):
        assert inverse_fundamental(fundamental_transform(p)) == p
        assert fundamental_transform(inverse_fundamental(p)) == p


def test_shifted_worked_example():
    p = P((7, 2, 6, 4, 1, 3, 5))
    q = fixed_to_shifted(p, 1)
    assert q == P((7, 1, 2, 5, 6, 4, 3))
    assert unseparated_pairs(q) == {2, 4} == {k for k in fixed_points(p) if k <= 6}
    assert shifted_to_fixed(q, 1) == p


def test_shifted_identity_cases():
    for n in range(2, 9):
        ident = P.identity(n)
        q = fixed_to_shifted(ident, 1)
        assert unseparated_pairs(q) == set(range(1, n))
        assert q == ident
        assert shifted_to_fixed(ident, 1) == ident


def test_shifted_to_fixed_of_rotation():
    # the rotation [2,..,n,1] has unseparated set [n-2], so its preimage fixes exactly [n-2]
    for n in range(3, 9):
        p = shifted_to_fixed(P.rotation(n), 1)
        assert {k for k in fixed_points(p) if k <= n - 1} == set(range(1, n - 1))


@pytest.mark.parametrize("n", range(2, 8))
def test_shifted_bijection_exhaustive(n):
    perms = list(oracle.all_permutations(n))
    for h in range(1, n):
        images = set()
        for p in perms:
            q = fixed_to_shifted(p, h)
            images.add(q)
            assert shifted_successions(q, h) == oracle.naive_fixed_in_prefix(p, n - h)
            assert shifted_to_fixed(q, h) == p
        assert len(images) == len(perms)


def test_shift_out_of_range():
    for h in (0, 4, -1):
        with pytest.raises(ValueError):
            fixed_to_shifted(P.identity(4), h)
        with pytest.raises(ValueError):
            shifted_to_fixed(P.identity(4), h)


def test_circular_insert_first_example():
    s = C((3, 1, 6, 5, 7, 2, 4))
    s1 = circular_insert(s, 3)
    assert s1 == C((3, 4, 1, 7, 6, 8, 2, 5))
    s2 = circular_insert(s1, 5)
    assert s2 == C((3, 4, 1, 8, 7, 9, 2, 5, 6))
    s3 = circular_insert(s2, 6)
    assert s3 == C((3, 4, 1, 9, 8, 10, 2, 5, 6, 7))
    assert s3.theta() == {3, 5, 6}
    assert build_circular(s, [3, 5, 6]) == s3


def test_circular_insert_second_example_and_peel():
    s0 = C((6, 1, 3, 5, 4, 7, 2))
    tau = build_circular(s0, [5, 8, 9])
    assert tau == C((7, 1, 3, 5, 6, 4, 8, 9, 10, 2))
    trace = []
    back, ks = peel_circular(tau, trace)
    assert (back, ks) == (s0, (5, 8, 9))
    assert trace[1:] == [
        C((7, 1, 3, 5, 6, 4, 8, 9, 2)),
        C((7, 1, 3, 5, 6, 4, 8, 2)),
        C((6, 1, 3, 5, 4, 7, 2)),
    ]


def test_build_circular_trivial_and_errors():
    s = C((1, 3, 5, 2, 4))
    assert s.theta() == frozenset()
    assert build_circular(s, []) == s
    with pytest.raises(ValueError):
        build_circular(C((1, 2, 3)), [1])
    with pytest.raises(ValueError):
        build_circular(s, [9])
    with pytest.raises(ValueError):
        circular_insert(s, 7)
    with pytest.raises(ValueError):
        circular_delete(s, 1)


def test_insert_delete_round_trip_c6():
    for s in oracle.all_circular(6):
        if s.theta():
            continue
        for k in range(1, 8):
            t = circular_insert(s, k)
            assert k in t.theta()
            assert circular_delete(t, k) == s


@pytest.mark.parametrize("n", range(2, 8))
def test_insert_respects_rotation(n):
    for s in oracle.all_circular(n):
        w = s.word
        for r in range(n):
            rotated = C(w[r:] + w[:r])
            for k in range(1, n + 2):
                assert circular_insert(rotated, k) == circular_insert(s, k)


@pytest.mark.parametrize("n", range(1, 8))
def test_build_circular_bijection(n):
    by_theta = {}
    for c in oracle.all_circular(n):
        by_theta.setdefault(frozenset(c.theta()), set()).add(c)
    for m in range(n):
        sources = [c for c in oracle.all_circular(n - m) if not c.theta()]
        for ks in combinations(range(1, n + 1), m):
            images = {build_circular(s, ks) for s in sources}
            assert len(images) == len(sources)
            assert images == by_theta.get(frozenset(ks), set())
