"""Permutations of [n] in one-line notation and the adjacency statistics on them.

Every public value is 1-indexed: ``Permutation((5, 6, 7, 4, 1, 2, 3))`` maps
1 -> 5, 2 -> 6 and so on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if not image:
            raise ValueError("permutation must have n >= 1")
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of [{len(image)}]: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def rotation(cls, n: int, h: int = 1) -> Permutation:
        """i -> i + h mod n, with representatives in [n]."""
        return cls(tuple((i + h - 1) % n + 1 for i in range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        image = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                if a in seen:
                    raise ValueError(f"{a} appears in two cycles")
                seen.add(a)
                image[a - 1] = b
        return cls(tuple(image))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    def __len__(self) -> int:
        return len(self.image)

    def __str__(self) -> str:
        return ",".join(map(str, self.image))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.image, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each started at its least element, in order of leaders."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = []
            k = start
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = self.image[k - 1]
            out.append(tuple(cycle))
        return out


def _same_size(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation k -> p(q(k))."""
    _same_size(p, q)
    return Permutation(tuple(p.image[v - 1] for v in q.image))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for k, v in enumerate(p.image, 1):
        inv[v - 1] = k
    return Permutation(tuple(inv))


def commutator(eta: Permutation, pi: Permutation) -> Permutation:
    """[eta, pi] = eta^-1 pi^-1 eta pi, applied right to left."""
    _same_size(eta, pi)
    return compose(inverse(eta), compose(inverse(pi), compose(eta, pi)))


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """g^-1 p g."""
    _same_size(p, g)
    return compose(inverse(g), compose(p, g))


def fixed_points(p: Permutation) -> frozenset[int]:
    return frozenset(k for k, v in enumerate(p.image, 1) if v == k)


def unseparated_pairs(p: Permutation) -> frozenset[int]:
    """{k in [n-1] : p(k+1) = p(k) + 1}."""
    im = p.image
    return frozenset(k for k in range(1, p.n) if im[k] == im[k - 1] + 1)


def shifted_successions(p: Permutation, h: int) -> frozenset[int]:
    """{k in [n-h] : p(k+h) = p(k) + 1}."""
    if not 1 <= h < p.n:
        raise ValueError(f"shift h={h} outside [1, {p.n - 1}]")
    im = p.image
    return frozenset(k for k in range(1, p.n - h + 1) if im[k + h - 1] == im[k - 1] + 1)


def circular_successions(p: Permutation) -> frozenset[int]:
    """{k in [n] : p(k+1 mod n) = p(k)+1 mod n}; index and value n+1 wrap to 1."""
    n = p.n
    im = p.image
    return frozenset(k for k in range(1, n + 1) if im[k % n] == im[k - 1] % n + 1)


@dataclass(frozen=True)
class CyclePartition:
    cycle_lengths: tuple[int, ...]  # sorted ascending

    @property
    def n(self) -> int:
        return sum(self.cycle_lengths)

    @property
    def f(self) -> int:
        return self.cycle_lengths.count(1)

    @property
    def t(self) -> int:
        return self.cycle_lengths.count(2)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self.cycle_lengths).items()))

    def __str__(self) -> str:
        return "+".join(map(str, sorted(self.cycle_lengths, reverse=True)))


def cycle_partition(p: Permutation) -> CyclePartition:
    return CyclePartition(tuple(sorted(len(c) for c in p.cycles())))


def rotate_to_one(word: Sequence[int]) -> tuple[int, ...]:
    i = list(word).index(1)
    return tuple(word[i:]) + tuple(word[:i])


@dataclass(frozen=True)
class CircularPermutation:
    """A listing of [n] up to cyclic rotation, stored with 1 in front.

    The listing (w1, ..., wn) doubles as the n-cycle sending w_i to w_{i+1}.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if not word or sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a listing of [{len(word)}]: {word}")
        object.__setattr__(self, "word", rotate_to_one(word))

    @classmethod
    def parse(cls, text: str) -> CircularPermutation:
        text = text.strip()
        if text.startswith("c:"):
            text = text[2:]
        return cls(tuple(int(tok) for tok in text.strip("()").split(",") if tok.strip()))

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return "c:" + ",".join(map(str, self.word))

    def as_cycle(self) -> Permutation:
        """The n-cycle whose cycle notation is this listing."""
        return Permutation.from_cycles(self.n, [self.word])

    def theta(self) -> frozenset[int]:
        """{j in [n] : j is immediately followed by j+1 mod n around the circle}."""
        n = self.n
        w = self.word
        return frozenset(w[i] for i in range(n) if w[(i + 1) % n] == w[i] % n + 1)
