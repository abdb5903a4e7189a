"""Exhaustive enumeration over S_n and over circular permutations.

Deliberately naive: every statistic is recomputed from its definition on
every element, so nothing here shares code paths with the closed forms.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from typing import Callable, Iterator

from .perm import CircularPermutation, Permutation

ORACLE_MAX_N = 9


def _check(n: int) -> None:
    if not 1 <= n <= ORACLE_MAX_N:
        raise ValueError(f"exhaustive enumeration limited to 1 <= n <= {ORACLE_MAX_N}, got {n}")


def all_permutations(n: int) -> Iterator[Permutation]:
    _check(n)
    for image in permutations(range(1, n + 1)):
        yield Permutation(image)


def all_circular(n: int) -> Iterator[CircularPermutation]:
    """Each circular permutation of [n] once, via its listing starting at 1."""
    _check(n)
    for rest in permutations(range(2, n + 1)):
        yield CircularPermutation((1,) + rest)


def count_histogram(n: int, stat: Callable[[Permutation], object]) -> Counter:
    """Counter of len(stat(p)) (or stat(p) if it is an int) over all p in S_n."""
    hist: Counter = Counter()
    for p in all_permutations(n):
        v = stat(p)
        hist[v if isinstance(v, int) else len(v)] += 1
    return hist


def set_counts(n: int, stat: Callable[[Permutation], frozenset]) -> Counter:
    """Counter of the exact set stat(p) over all p in S_n."""
    return Counter(stat(p) for p in all_permutations(n))


def exchangeable_counts(counts: Counter, ground: range) -> dict[int, set[int]]:
    """For each size m, the set of counts #{stat = A} over every A of size m in ground.

    The random set is exchangeable iff every returned set is a singleton.
    """
    out = {}
    for m in range(len(ground) + 1):
        out[m] = {counts.get(frozenset(a), 0) for a in combinations(ground, m)}
    return out


def naive_fixed_points(p: Permutation) -> set[int]:
    return {k for k in range(1, p.n + 1) if p(k) == k}


def naive_fixed_in_prefix(p: Permutation, upto: int) -> set[int]:
    return {k for k in range(1, upto + 1) if p(k) == k}


def naive_shifted(p: Permutation, h: int) -> set[int]:
    return {k for k in range(1, p.n - h + 1) if p(k + h) == p(k) + 1}


def naive_circular(p: Permutation) -> set[int]:
    n = p.n

    def wrap(x):
        return x - n if x > n else x

    return {k for k in range(1, n + 1) if p(wrap(k + 1)) == wrap(p(k) + 1)}


def naive_commutator_fixed(eta: Permutation, pi: Permutation) -> int:
    """#{i : eta^-1 pi^-1 eta pi (i) = i}, inverting by search."""
    n = eta.n

    def inv(p, y):
        return next(x for x in range(1, n + 1) if p(x) == y)

    return sum(1 for i in range(1, n + 1) if inv(eta, inv(pi, eta(pi(i)))) == i)


def naive_theta(sigma: CircularPermutation) -> set[int]:
    """{j : sigma~(j) = j+1 mod n} through the n-cycle avatar."""
    cyc = sigma.as_cycle()
    n = sigma.n
    return {j for j in range(1, n + 1) if cyc(j) == (j % n) + 1}
