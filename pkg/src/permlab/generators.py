"""Sequential generators of uniform random permutations.

Three chains grow a permutation one element at a time:

``insertion``     put n+1 into one of the n+1 slots of the one-line word;
``crp``           Chinese restaurant seating, cycles are tables;
``cycle-growth``  splice n+1 into an n-cycle right after a uniform K in [n].

Each step has a deterministic form taking the choice explicitly, which is
what ``exact_chain_law`` enumerates.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from .perm import Permutation, conjugate, unseparated_pairs

CHAINS = ("insertion", "crp", "cycle-growth")
EXACT_LAW_MAX_N = 7


class RandomSource:
    """Seeded stream of uniform draws; (seed, stream) pairs give independent streams."""

    def __init__(self, seed: int, stream: int = 0):
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.seed = seed
        self.stream = stream
        self.gen = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, stream])))

    def randint(self, k: int) -> int:
        """Uniform on {1, ..., k}."""
        if k < 1:
            raise ValueError("k must be >= 1")
        return int(self.gen.integers(1, k + 1))

    def spawn(self, stream: int) -> RandomSource:
        return RandomSource(self.seed, stream)


def uniform_permutation(n: int, rng: RandomSource) -> Permutation:
    if n < 1:
        raise ValueError("n must be >= 1")
    image = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.randint(i + 1) - 1
        image[i], image[j] = image[j], image[i]
    return Permutation(tuple(image))


# --- insertion chain -------------------------------------------------------

def insert_at(p: Permutation, slot: int) -> Permutation:
    """Insert n+1 into slot 0..n of the word (slot j sits after position j)."""
    if not 0 <= slot <= p.n:
        raise ValueError(f"slot {slot} outside [0, {p.n}]")
    return Permutation(p.image[:slot] + (p.n + 1,) + p.image[slot:])


def insertion_step(p: Permutation, rng: RandomSource) -> Permutation:
    return insert_at(p, rng.randint(p.n + 1) - 1)


# --- Chinese restaurant ----------------------------------------------------

@dataclass(frozen=True)
class RestaurantState:
    """Tables as circular seating orders.

    A table (c1, c2, ..., cr) means c2 sits immediately left of c1, c3 left of
    c2 and so on, so the induced permutation sends c_t to c_{t+1}.
    """

    tables: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        tables = tuple(tuple(t) for t in self.tables)
        labels = sorted(x for t in tables for x in t)
        if not labels or labels != list(range(1, len(labels) + 1)) or any(not t for t in tables):
            raise ValueError("tables must partition [n]")
        object.__setattr__(self, "tables", tables)

    @classmethod
    def initial(cls) -> RestaurantState:
        return cls(((1,),))

    @classmethod
    def from_permutation(cls, p: Permutation) -> RestaurantState:
        return cls(tuple(p.cycles()))

    @property
    def n(self) -> int:
        return sum(len(t) for t in self.tables)

    def permutation(self) -> Permutation:
        return Permutation.from_cycles(self.n, self.tables)


def seat(state: RestaurantState, choice: int) -> RestaurantState:
    """Patron n+1 sits left of patron ``choice`` (1..n) or alone (choice n+1)."""
    n = state.n
    if not 1 <= choice <= n + 1:
        raise ValueError(f"choice {choice} outside [1, {n + 1}]")
    if choice == n + 1:
        return RestaurantState(state.tables + ((n + 1,),))
    tables = []
    for t in state.tables:
        if choice in t:
            i = t.index(choice)
            t = t[: i + 1] + (n + 1,) + t[i + 1 :]
        tables.append(t)
    return RestaurantState(tuple(tables))


def crp_step(state: RestaurantState, rng: RandomSource) -> RestaurantState:
    return seat(state, rng.randint(state.n + 1))


def late_fixed_count(p: Permutation) -> int:
    """#{2 <= k <= n : p(k) = k}."""
    return sum(1 for k in range(2, p.n + 1) if p(k) == k)


# --- n-cycle growth --------------------------------------------------------

def is_single_cycle(p: Permutation) -> bool:
    return len(p.cycles()) == 1


def splice_after(gamma: Permutation, k: int) -> Permutation:
    """Replace (..., k, gamma(k), ...) by (..., k, n+1, gamma(k), ...)."""
    n = gamma.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    image = list(gamma.image) + [gamma(k)]
    image[k - 1] = n + 1
    return Permutation(tuple(image))


def cycle_growth_step(gamma: Permutation, rng: RandomSource) -> Permutation:
    if not is_single_cycle(gamma):
        raise ValueError(f"{gamma} is not a single cycle")
    return splice_after(gamma, rng.randint(gamma.n))


def cycle_successions(gamma: Permutation) -> int:
    """#{k in [n-1] : gamma(k) = k+1}."""
    return sum(1 for k in range(1, gamma.n) if gamma(k) == k + 1)


def conjugacy_sampler(eta: Permutation, rng: RandomSource) -> Permutation:
    return conjugate(eta, uniform_permutation(eta.n, rng))


# --- chain plumbing --------------------------------------------------------

def _chain_ops(chain: str):
    """(initial state, choices(state), apply(state, choice), to_permutation)."""
    if chain == "insertion":
        return Permutation.identity(1), lambda s: range(s.n + 1), insert_at, lambda s: s
    if chain == "crp":
        return RestaurantState.initial(), lambda s: range(1, s.n + 2), seat, RestaurantState.permutation
    if chain == "cycle-growth":
        return Permutation.identity(1), lambda s: range(1, s.n + 1), splice_after, lambda s: s
    raise ValueError(f"unknown chain {chain!r}; expected one of {CHAINS}")


def run_chain(chain: str, n: int, rng: RandomSource) -> list[Permutation]:
    """Trajectory of sizes 1..n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    state, choices, apply, as_perm = _chain_ops(chain)
    path = [as_perm(state)]
    for _ in range(n - 1):
        opts = choices(state)
        state = apply(state, opts[rng.randint(len(opts)) - 1])
        path.append(as_perm(state))
    return path


def exact_chain_law(chain: str, n: int) -> dict[Permutation, Fraction]:
    """Law of the chain's permutation after reaching size n, by summing path products."""
    if not 1 <= n <= EXACT_LAW_MAX_N:
        raise ValueError(f"exact path enumeration limited to n <= {EXACT_LAW_MAX_N}")
    state, choices, apply, as_perm = _chain_ops(chain)
    law = {state: Fraction(1)}
    for _ in range(n - 1):
        nxt: dict = {}
        for s, prob in law.items():
            opts = choices(s)
            step = prob / len(opts)
            for c in opts:
                t = apply(s, c)
                nxt[t] = nxt.get(t, 0) + step
        law = nxt
    out: dict[Permutation, Fraction] = {}
    for s, prob in law.items():
        p = as_perm(s)
        out[p] = out.get(p, 0) + prob
    return out


def chain_states(chain: str, n: int) -> Iterator:
    """Every state of size n the chain can occupy (S_n, or the n-cycles)."""
    from .oracle import all_circular, all_permutations

    if chain == "insertion":
        yield from all_permutations(n)
    elif chain == "crp":
        for p in all_permutations(n):
            yield RestaurantState.from_permutation(p)
    elif chain == "cycle-growth":
        for c in all_circular(n):
            yield c.as_cycle()
    else:
        raise ValueError(f"unknown chain {chain!r}")


def chain_count_statistic(chain: str) -> Callable:
    """The integer-valued count process whose transitions each chain controls."""
    return {
        "insertion": lambda s: len(unseparated_pairs(s)),
        "crp": lambda s: late_fixed_count(s.permutation()),
        "cycle-growth": cycle_successions,
    }[chain]


def transition_table(chain: str, n: int) -> list[tuple[object, int, Counter]]:
    """For each size-n state: (state, count, Counter of count increments over all choices)."""
    _, choices, apply, _ = _chain_ops(chain)
    stat = chain_count_statistic(chain)
    rows = []
    for s in chain_states(chain, n):
        c = stat(s)
        moves = Counter(stat(apply(s, ch)) - c for ch in choices(s))
        rows.append((s, c, moves))
    return rows
