"""Constructive bijections behind the equidistribution results.

* the fundamental transformation (erase the parentheses of the canonical
  cycle form) and its inverse;
* the map carrying fixed points in [n-h] to shifted successions;
* circular insertion/deletion, which adds one prescribed circular
  succession at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import CircularPermutation, Permutation, compose, inverse


@dataclass(frozen=True)
class CanonicalCycleForm:
    """Cycles led by their minima, leaders strictly decreasing left to right."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cycles = tuple(tuple(c) for c in self.cycles)
        leaders = [c[0] for c in cycles]
        if any(c[0] != min(c) for c in cycles):
            raise ValueError("each cycle must start with its least element")
        if any(a <= b for a, b in zip(leaders, leaders[1:])):
            raise ValueError("cycle leaders must strictly decrease")
        entries = sorted(x for c in cycles for x in c)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("cycles must partition [n]")
        object.__setattr__(self, "cycles", cycles)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.n, self.cycles)

    def word(self) -> tuple[int, ...]:
        return tuple(x for c in self.cycles for x in c)

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


def canonical_cycle_form(p: Permutation) -> CanonicalCycleForm:
    # p.cycles() already starts each cycle at its minimum, in increasing order of leaders
    return CanonicalCycleForm(tuple(reversed(p.cycles())))


def fundamental_transform(p: Permutation) -> Permutation:
    return Permutation(canonical_cycle_form(p).word())


def split_at_left_to_right_minima(word: Sequence[int]) -> list[tuple[int, ...]]:
    cycles: list[list[int]] = []
    low = None
    for x in word:
        if low is None or x < low:
            cycles.append([x])
            low = x
        else:
            cycles[-1].append(x)
    return [tuple(c) for c in cycles]


def inverse_fundamental(w: Permutation) -> Permutation:
    """Open a cycle at each entry smaller than everything before it."""
    return CanonicalCycleForm(tuple(split_at_left_to_right_minima(w.image))).to_permutation()


def _check_shift(n: int, h: int) -> None:
    if not 1 <= h < n:
        raise ValueError(f"shift h={h} outside [1, {n - 1}]")


def fixed_to_shifted(p: Permutation, h: int) -> Permutation:
    """q = (rho_h p)^hat^-1; shifted_successions(q, h) == fixed points of p in [n-h]."""
    _check_shift(p.n, h)
    rho_p = compose(Permutation.rotation(p.n, h), p)
    return inverse(fundamental_transform(rho_p))


def shifted_to_fixed(q: Permutation, h: int) -> Permutation:
    _check_shift(q.n, h)
    rho_p = inverse_fundamental(inverse(q))
    return compose(Permutation.rotation(q.n, -h), rho_p)


def circular_insert(sigma: CircularPermutation, k: int) -> CircularPermutation:
    """Add the circular succession k -> k+1 to a circular permutation of [n'].

    For k <= n' the entries above k move up by one and k+1 goes immediately
    after k.  For k = n'+1 the new top entry goes immediately before 1.
    """
    size = sigma.n
    if not 1 <= k <= size + 1:
        raise ValueError(f"k={k} outside [1, {size + 1}]")
    if k == size + 1:
        # canonical storage has 1 in front, so "just before 1" is the end
        return CircularPermutation(sigma.word + (k,))
    out = []
    for x in sigma.word:
        out.append(x + 1 if x > k else x)
        if x == k:
            out.append(k + 1)
    return CircularPermutation(tuple(out))


def circular_delete(sigma: CircularPermutation, k: int) -> CircularPermutation:
    """Inverse of ``circular_insert(., k)``; k must be a circular succession of sigma."""
    size = sigma.n
    if size < 2 or k not in sigma.theta():
        raise ValueError(f"k={k} is not a removable succession of {sigma}")
    if k == size:
        return CircularPermutation(tuple(x for x in sigma.word if x != size))
    return CircularPermutation(tuple(x - 1 if x > k + 1 else x for x in sigma.word if x != k + 1))


def build_circular(
    sigma0: CircularPermutation, ks: Iterable[int], trace: list | None = None
) -> CircularPermutation:
    """Insert k_1 < k_2 < ... in turn starting from sigma0 (which has no successions).

    The result has exactly ``ks`` as its set of circular successions. When
    ``trace`` is a list, every intermediate circular permutation is appended.
    """
    ks = sorted(ks)
    if len(set(ks)) != len(ks):
        raise ValueError("ks must be distinct")
    if sigma0.theta():
        raise ValueError(f"{sigma0} already has circular successions {sorted(sigma0.theta())}")
    target = sigma0.n + len(ks)
    if ks and not (ks[0] >= 1 and ks[-1] <= target):
        raise ValueError(f"ks must lie in [1, {target}]")
    sigma = sigma0
    if trace is not None:
        trace.append(sigma)
    for k in ks:
        sigma = circular_insert(sigma, k)
        if trace is not None:
            trace.append(sigma)
    return sigma


def peel_circular(tau: CircularPermutation, trace: list | None = None) -> tuple[CircularPermutation, tuple[int, ...]]:
    """Remove successions largest first; returns (sigma0, ks) with build_circular(sigma0, ks) == tau."""
    ks = sorted(tau.theta())
    if len(ks) >= tau.n:
        raise ValueError("cannot peel every succession (empty circular permutation)")
    sigma = tau
    if trace is not None:
        trace.append(sigma)
    for k in reversed(ks):
        sigma = circular_delete(sigma, k)
        if trace is not None:
            trace.append(sigma)
    return sigma, tuple(ks)
