"""Closed-form laws of the permutation statistics, evaluated in exact rationals.

Poisson references live in high-precision reals (mpmath) because their
support is infinite; everything else is a ``Fraction``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Union

import mpmath

POISSON_DPS = 60
DEFAULT_POISSON_CAP = 40


@dataclass(frozen=True)
class ExactPmf:
    """Finite law on nonnegative integers with exact rational masses.

    Zero masses are dropped, so two pmfs compare equal iff they are the same law.
    """

    probs: Mapping[int, Fraction]

    def __post_init__(self):
        probs = {}
        for m, p in sorted(self.probs.items()):
            p = Fraction(p)
            if m < 0:
                raise ValueError(f"negative outcome {m}")
            if p < 0:
                raise ValueError(f"negative mass {p} at {m}")
            if p:
                probs[int(m)] = p
        if sum(probs.values()) != 1:
            raise ValueError(f"masses sum to {sum(probs.values())}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> ExactPmf:
        total = sum(counts.values())
        if total <= 0:
            raise ValueError("no observations")
        return cls({m: Fraction(c, total) for m, c in counts.items()})

    @classmethod
    def point_mass(cls, m: int) -> ExactPmf:
        return cls({m: Fraction(1)})

    def __getitem__(self, m: int) -> Fraction:
        return self.probs.get(m, Fraction(0))

    def __iter__(self):
        return iter(self.probs)

    def items(self):
        return self.probs.items()

    @property
    def support(self) -> list[int]:
        return list(self.probs)

    def mean(self) -> Fraction:
        return sum((m * p for m, p in self.probs.items()), Fraction(0))

    def factorial_moment(self, k: int) -> Fraction:
        """E[X (X-1) ... (X-k+1)]."""
        total = Fraction(0)
        for m, p in self.probs.items():
            falling = 1
            for j in range(k):
                falling *= m - j
            total += falling * p
        return total

    def scaled_counts(self, total: int) -> dict[int, int]:
        """total * p(m) for each m; raises unless every one is an integer."""
        out = {}
        for m, p in self.probs.items():
            c = p * total
            if c.denominator != 1:
                raise ValueError(f"{total} * p({m}) = {c} is not an integer")
            out[m] = c.numerator
        return out

    def to_csv(self) -> str:
        return "".join(f"{m},{p.numerator},{p.denominator}\n" for m, p in self.probs.items())

    @classmethod
    def from_csv(cls, text: str) -> ExactPmf:
        probs = {}
        for line in text.splitlines():
            if line.strip():
                m, num, den = line.split(",")
                probs[int(m)] = Fraction(int(num), int(den))
        return cls(probs)

    def to_json(self) -> str:
        return json.dumps({str(m): f"{p.numerator}/{p.denominator}" for m, p in self.probs.items()})

    @classmethod
    def from_json(cls, text: str) -> ExactPmf:
        return cls({int(m): Fraction(v) for m, v in json.loads(text).items()})


def _alt_exp_partial(upto: int) -> Fraction:
    """sum_{k=0}^{upto} (-1)^k / k!; the empty sum (upto < 0) is 0."""
    return sum((Fraction((-1) ** k, factorial(k)) for k in range(upto + 1)), Fraction(0))


def derangement_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum((-1) ** j * (factorial(n) // factorial(j)) for j in range(n + 1))


def fixed_point_prob(n: int, m: int) -> Fraction:
    """P{a uniform permutation of [n] has exactly m fixed points}."""
    if not 0 <= m <= n:
        return Fraction(0)
    return _alt_exp_partial(n - m) / factorial(m)


def fixed_point_pmf(n: int) -> ExactPmf:
    if n < 1:
        raise ValueError("n must be >= 1")
    return ExactPmf({m: fixed_point_prob(n, m) for m in range(n + 1)})


def unseparated_pmf(n: int) -> ExactPmf:
    """Common law of the number of unseparated pairs and of fixed points in [n-1]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    probs = {}
    for m in range(n):
        probs[m] = (
            _alt_exp_partial(n - m) / factorial(m) * Fraction(n - m, n)
            + _alt_exp_partial(n - m - 1) / factorial(m + 1) * Fraction(m + 1, n)
        )
    return ExactPmf(probs)


def whitworth_zero_prob(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be >= 1")
    return _alt_exp_partial(n) + _alt_exp_partial(n - 1) / n


def shifted_pmf(n: int, h: int) -> ExactPmf:
    """Law of #{k in [n-h] : p(k+h) = p(k)+1} for uniform p."""
    if not 1 <= h < n:
        raise ValueError(f"shift h={h} outside [1, {n - 1}]")
    probs = {}
    for m in range(n - h + 1):
        total = Fraction(0)
        for ell in range(m, min(m + h, n) + 1):
            total += fixed_point_prob(n, ell) * Fraction(comb(n - h, m) * comb(h, ell - m), comb(n, ell))
        probs[m] = total
    return ExactPmf(probs)


def circular_pmf(n: int) -> ExactPmf:
    """Law of the number of circular successions of a uniform permutation of [n]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    probs = {}
    for m in range(n + 1):
        s = sum((Fraction((-1) ** h * n, factorial(h) * (n - m - h)) for h in range(n - m)), Fraction(0))
        s += Fraction((-1) ** (n - m) * n, factorial(n - m))
        probs[m] = s / factorial(m)
    return ExactPmf(probs)


def theta_empty_count(n: int) -> int:
    """Number of circular permutations of [n] in which no j is followed by j+1 mod n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum((-1) ** h * comb(n, h) * factorial(n - h - 1) for h in range(n)) + (-1) ** n


def check_derangement_identity(n: int) -> bool:
    return derangement_count(n) == theta_empty_count(n) + theta_empty_count(n + 1)


@dataclass(frozen=True)
class PoissonReference:
    lam: Fraction
    cap: int
    probs: tuple  # mpf masses for 0..cap
    tail: mpmath.mpf  # mass on (cap, inf)
    dps: int = POISSON_DPS

    def __getitem__(self, m: int):
        return self.probs[m] if 0 <= m <= self.cap else mpmath.mpf(0)

    @property
    def label(self) -> str:
        return f"Poisson({self.lam})"


def poisson_reference(lam=1, cap: int = DEFAULT_POISSON_CAP, dps: int = POISSON_DPS) -> PoissonReference:
    lam = Fraction(lam)
    if lam <= 0 or cap < 0:
        raise ValueError("need lam > 0 and cap >= 0")
    with mpmath.workdps(dps):
        x = mpmath.mpf(lam.numerator) / lam.denominator
        e = mpmath.exp(-x)
        probs = tuple(e * x**m / mpmath.factorial(m) for m in range(cap + 1))
        # P{X > cap} as a regularized lower incomplete gamma; avoids 1 - sum cancellation
        tail = mpmath.gammainc(cap + 1, 0, x, regularized=True)
    return PoissonReference(lam, cap, probs, tail, dps)


PmfLike = Union[ExactPmf, PoissonReference, Mapping[int, object]]


@dataclass(frozen=True)
class TvReport:
    distance: object  # Fraction when both sides are exact, mpf otherwise
    reference: str
    tail_contribution: object = 0
    half_width: float | None = None
    samples: int | None = None
    extra: dict = field(default_factory=dict)

    def __float__(self) -> float:
        return float(self.distance)

    def as_dict(self) -> dict:
        d = {
            "distance": float(self.distance),
            "reference": self.reference,
            "tail_contribution": float(self.tail_contribution),
        }
        if isinstance(self.distance, Fraction):
            d["distance_exact"] = f"{self.distance.numerator}/{self.distance.denominator}"
        if self.half_width is not None:
            d["half_width_99"] = self.half_width
            d["samples"] = self.samples
        return d


def _max_support(pmf: PmfLike) -> int:
    if isinstance(pmf, PoissonReference):
        return pmf.cap
    return max((m for m, p in pmf.items() if p), default=0)


def tv_distance(a: PmfLike, b: PmfLike, reference: str | None = None) -> TvReport:
    """Half the l1 distance between two laws on the nonnegative integers.

    A Poisson side is extended so its explicit cap covers the other side's
    support; its remaining tail mass lies where the other side has none, so it
    enters the distance as exactly tail/2 and is reported separately.
    """
    if isinstance(a, PoissonReference) and not isinstance(b, PoissonReference):
        a, b = b, a
    if isinstance(a, PoissonReference):
        raise ValueError("at most one side may be a Poisson reference")
    if reference is None:
        reference = b.label if isinstance(b, PoissonReference) else "pmf"

    if not isinstance(b, PoissonReference):
        da, db = _as_dict(a), _as_dict(b)
        keys = set(da) | set(db)
        if all(isinstance(p, (int, Fraction)) for p in [*da.values(), *db.values()]):
            dist = sum((abs(Fraction(da.get(m, 0)) - Fraction(db.get(m, 0))) for m in keys), Fraction(0)) / 2
        else:
            dist = sum(abs(float(da.get(m, 0)) - float(db.get(m, 0))) for m in keys) / 2
        return TvReport(dist, reference)

    if _max_support(a) > b.cap:
        b = poisson_reference(b.lam, _max_support(a), b.dps)
    with mpmath.workdps(b.dps):
        total = mpmath.mpf(0)
        for m in range(b.cap + 1):
            pa = _get(a, m)
            pa = mpmath.mpf(pa.numerator) / pa.denominator if isinstance(pa, Fraction) else mpmath.mpf(pa)
            total += abs(pa - b.probs[m])
        tail_part = b.tail / 2
        dist = total / 2 + tail_part
    return TvReport(dist, reference, tail_part)


def _as_dict(pmf) -> dict:
    return dict(pmf.probs) if isinstance(pmf, ExactPmf) else dict(pmf)


def _get(pmf, m):
    if isinstance(pmf, ExactPmf):
        return pmf[m]
    return pmf.get(m, 0)
