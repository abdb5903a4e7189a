"""Fixed points of the commutator [eta, Pi] for uniform Pi.

chi([eta, pi]) counts the i with eta(pi(i)) = pi(eta(i)).  For small n the
law is enumerated exactly over S_n; for large n it is sampled in numpy
batches.  The exchangeable pair (W, W') from the Poisson-approximation
argument is sampled the same way.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from statistics import NormalDist

import numpy as np

from .exact import ExactPmf, PoissonReference, TvReport, poisson_reference, tv_distance
from .generators import RandomSource
from .perm import Permutation, conjugate, cycle_partition

EXACT_MAX_N = 8
CI_LEVEL = 0.99
CI_MAX_BIN = 20


@lru_cache(maxsize=None)
def _all_perms_array(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int16)


def _zero_based(p: Permutation) -> np.ndarray:
    return np.asarray(p.image, dtype=np.int64) - 1


def commutator_fixed_counts(eta: Permutation, pis: np.ndarray) -> np.ndarray:
    """chi([eta, pi]) for each 0-based permutation row of ``pis``."""
    e = _zero_based(eta)
    return np.count_nonzero(e[pis] == pis[:, e], axis=1)


def exact_commutator_pmf(eta: Permutation) -> ExactPmf:
    """Exact law of chi([eta, Pi]) over all Pi in S_n (n <= 8).

    The identity commutes with everything, so it is answered for any n.
    """
    n = eta.n
    if eta.is_identity():
        return ExactPmf.point_mass(n)
    if n > EXACT_MAX_N:
        raise ValueError(f"exact enumeration limited to n <= {EXACT_MAX_N}, got {n}")
    chi = commutator_fixed_counts(eta, _all_perms_array(n))
    counts = np.bincount(chi, minlength=n + 1)
    return ExactPmf.from_counts({m: int(c) for m, c in enumerate(counts) if c})


def conjugacy_class(eta: Permutation) -> np.ndarray:
    """All distinct g^-1 eta g, as 0-based rows (n <= 8)."""
    n = eta.n
    if n > EXACT_MAX_N:
        raise ValueError(f"class enumeration limited to n <= {EXACT_MAX_N}")
    g = _all_perms_array(n).astype(np.int64)
    ginv = np.argsort(g, axis=1)
    e = _zero_based(eta)
    members = np.take_along_axis(ginv, e[g], axis=1)
    return np.unique(members, axis=0)


def exact_agreement_pmf(eta: Permutation) -> ExactPmf:
    """Law of #{i : U(i) = V(i)} for independent U, V uniform on eta's class."""
    cls = conjugacy_class(eta)
    agree = np.count_nonzero(cls[:, None, :] == cls[None, :, :], axis=2).ravel()
    counts = np.bincount(agree, minlength=eta.n + 1)
    return ExactPmf.from_counts({m: int(c) for m, c in enumerate(counts) if c})


def expectation_formula(n: int, f: int) -> Fraction:
    """E chi([eta, Pi]) when eta has f fixed points."""
    if n < 2 or not 0 <= f <= n:
        raise ValueError("need n >= 2 and 0 <= f <= n")
    return n * (Fraction(n - f, n) ** 2 / (n - 1) + Fraction(f, n) ** 2)


def two_cycle_factorial_moment(m: int, k: int) -> Fraction:
    """k-th factorial moment of chi/2 when eta is a product of m disjoint 2-cycles."""
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    num = den = 1
    for j in range(k):
        num *= m - j
        den *= 2 * m - 2 * j - 1
    return Fraction(num, den)


def two_cycles_eta(m: int) -> Permutation:
    """(1, m+1)(2, m+2)...(m, 2m)."""
    return Permutation.from_cycles(2 * m, [(i, m + i) for i in range(1, m + 1)])


def cycle_type_representative(lengths: list[int]) -> Permutation:
    """Consecutive blocks: type 3+2+1 gives (1,2,3)(4,5)(6)."""
    if not lengths or any(x < 1 for x in lengths):
        raise ValueError("cycle lengths must be positive")
    cycles, start = [], 1
    for length in lengths:
        cycles.append(tuple(range(start, start + length)))
        start += length
    return Permutation.from_cycles(start - 1, cycles)


def parse_eta(spec: str, n: int | None = None, rng: RandomSource | None = None) -> Permutation:
    """identity | rho | two-cycles:m | type:l1+l2+... | explicit one-line a,b,c,...

    With ``rng`` a ``type:`` representative is replaced by a uniform conjugate.
    """
    spec = spec.strip()
    if spec in ("identity", "rho"):
        if n is None:
            raise ValueError(f"eta {spec!r} needs n")
        eta = Permutation.identity(n) if spec == "identity" else Permutation.rotation(n)
    elif spec.startswith("two-cycles:"):
        eta = two_cycles_eta(int(spec.split(":", 1)[1]))
    elif spec.startswith("type:"):
        eta = cycle_type_representative([int(x) for x in spec.split(":", 1)[1].split("+")])
        if rng is not None:
            from .generators import uniform_permutation

            eta = conjugate(eta, uniform_permutation(eta.n, rng))
    else:
        eta = Permutation.parse(spec)
    if n is not None and eta.n != n:
        raise ValueError(f"eta {spec!r} has size {eta.n}, but n={n}")
    return eta


@dataclass(frozen=True)
class CommutatorReport:
    n: int
    f: int
    t: int
    cycle_type: str
    method: str  # "exact" or "monte-carlo"
    pmf: ExactPmf
    tv: TvReport
    samples: int | None = None
    seed: int | None = None

    @property
    def mean(self) -> Fraction:
        return self.pmf.mean()

    def as_dict(self) -> dict:
        return {
            "descriptor": {"n": self.n, "f": self.f, "t": self.t, "cycle_type": self.cycle_type},
            "method": {"kind": self.method, "samples": self.samples, "seed": self.seed},
            "pmf": {str(m): f"{p.numerator}/{p.denominator}" for m, p in self.pmf.items()},
            "mean": float(self.mean),
            "tv": float(self.tv.distance),
            "ci": self.tv.half_width,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    CSV_HEADER = "n,f,t,cycle_type,method,samples,seed,mean,tv,ci"

    def csv_row(self) -> str:
        ci = "" if self.tv.half_width is None else repr(self.tv.half_width)
        return ",".join(
            str(x)
            for x in (
                self.n, self.f, self.t, self.cycle_type, self.method,
                "" if self.samples is None else self.samples,
                "" if self.seed is None else self.seed,
                float(self.mean), float(self.tv.distance), ci,
            )
        )


def _descriptor(eta: Permutation) -> dict:
    cp = cycle_partition(eta)
    return {"n": eta.n, "f": cp.f, "t": cp.t, "cycle_type": str(cp)}


def poisson_one_for(n: int) -> PoissonReference:
    return poisson_reference(1, cap=max(40, n))


def exact_commutator_report(eta: Permutation) -> CommutatorReport:
    pmf = exact_commutator_pmf(eta)
    return CommutatorReport(method="exact", pmf=pmf, tv=tv_distance(pmf, poisson_one_for(eta.n)), **_descriptor(eta))


def tv_half_width(pmf: ExactPmf, samples: int, level: float = CI_LEVEL, max_bin: int = CI_MAX_BIN) -> float:
    """Conservative TV half-width: half the sum of per-bin normal half-widths.

    Bins 0..max_bin are kept, everything above is pooled into one tail bin.
    """
    z = NormalDist().inv_cdf(0.5 + level / 2)
    bins = [float(pmf[m]) for m in range(max_bin + 1)]
    bins.append(float(sum((p for m, p in pmf.items() if m > max_bin), Fraction(0))))
    return sum(z * (p * (1 - p) / samples) ** 0.5 for p in bins) / 2


def _mc_histogram(eta: Permutation, samples: int, rng: RandomSource, batch: int) -> np.ndarray:
    n = eta.n
    hist = np.zeros(n + 1, dtype=np.int64)
    base = np.arange(n, dtype=np.int64)
    left = samples
    while left > 0:
        b = min(batch, left)
        pis = rng.gen.permuted(np.broadcast_to(base, (b, n)), axis=1)
        hist += np.bincount(commutator_fixed_counts(eta, pis), minlength=n + 1)
        left -= b
    return hist


def mc_commutator_pmf(
    eta: Permutation,
    samples: int,
    rng: RandomSource,
    streams: int = 1,
    workers: int = 1,
    batch: int = 50_000,
) -> CommutatorReport:
    """Empirical law of chi([eta, Pi]) with TV to Poisson(1) and a 99% half-width.

    ``streams`` > 1 splits the work over independent (seed, stream) sources
    whose histograms are summed; the result depends on ``streams`` but not on
    ``workers``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if streams == 1:
        hist = _mc_histogram(eta, samples, rng, batch)
    else:
        shares = [samples // streams + (i < samples % streams) for i in range(streams)]
        sources = [rng.spawn(rng.stream * streams + i + 1) for i in range(streams)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(lambda a: _mc_histogram(eta, a[0], a[1], batch), zip(shares, sources))
            hist = sum(parts)
    pmf = ExactPmf.from_counts({m: int(c) for m, c in enumerate(hist) if c})
    tv = tv_distance(pmf, poisson_one_for(eta.n))
    tv = TvReport(tv.distance, tv.reference, tv.tail_contribution, tv_half_width(pmf, samples), samples)
    return CommutatorReport(method="monte-carlo", pmf=pmf, tv=tv, samples=samples, seed=rng.seed, **_descriptor(eta))


# --- exchangeable pair -----------------------------------------------------

@dataclass(frozen=True)
class ExchangeablePairSample:
    W: int
    W_prime: int
    A: bool
    U: Permutation
    V: Permutation
    V_prime: Permutation
    I: int
    J: int


def _random_conjugates(e: np.ndarray, b: int, gen: np.random.Generator) -> np.ndarray:
    n = e.size
    g = gen.permuted(np.broadcast_to(np.arange(n), (b, n)), axis=1)
    ginv = np.argsort(g, axis=1)
    return np.take_along_axis(ginv, e[g], axis=1)


def _fixed_or_two_cycle(p: np.ndarray) -> np.ndarray:
    """Rows of masks: i is a fixed point or lies in a 2-cycle, i.e. p(p(i)) = i."""
    return np.take_along_axis(p, p, axis=1) == np.arange(p.shape[1])


def _pair_draw(eta: Permutation, b: int, gen: np.random.Generator):
    n = eta.n
    e = _zero_based(eta)
    U = _random_conjugates(e, b, gen)
    V = _random_conjugates(e, b, gen)
    I = gen.integers(0, n, b)
    J = gen.integers(0, n - 1, b)
    J = J + (J >= I)
    rows = np.arange(b)
    tau = np.broadcast_to(np.arange(n), (b, n)).copy()
    tau[rows, I] = J
    tau[rows, J] = I
    # V' = tau V tau: swap the labels I and J in V's cycles
    Vp = np.take_along_axis(tau, np.take_along_axis(V, tau, axis=1), axis=1)
    bad_uv = _fixed_or_two_cycle(U) | _fixed_or_two_cycle(V)
    bad_uvp = _fixed_or_two_cycle(U) | _fixed_or_two_cycle(Vp)
    A = ~bad_uv[rows, I] & ~bad_uv[rows, J]
    N = np.count_nonzero((U == V) & ~bad_uv, axis=1)
    Np = np.count_nonzero((U == Vp) & ~bad_uvp, axis=1)
    return U, V, Vp, I, J, A, N * A, Np * A


def exchangeable_pair_sample(eta: Permutation, rng: RandomSource) -> ExchangeablePairSample:
    if eta.n < 4:
        raise ValueError("exchangeable pair needs n >= 4")
    U, V, Vp, I, J, A, W, Wp = _pair_draw(eta, 1, rng.gen)

    def perm(row):
        return Permutation(tuple(int(x) + 1 for x in row))

    return ExchangeablePairSample(
        W=int(W[0]), W_prime=int(Wp[0]), A=bool(A[0]),
        U=perm(U[0]), V=perm(V[0]), V_prime=perm(Vp[0]), I=int(I[0]) + 1, J=int(J[0]) + 1,
    )


def exchangeable_pair_batch(
    eta: Permutation, samples: int, rng: RandomSource, batch: int = 20_000
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Arrays (W, W', A) for ``samples`` independent draws."""
    if eta.n < 4:
        raise ValueError("exchangeable pair needs n >= 4")
    Ws, Wps, As = [], [], []
    left = samples
    while left > 0:
        b = min(batch, left)
        *_, A, W, Wp = _pair_draw(eta, b, rng.gen)
        Ws.append(W)
        Wps.append(Wp)
        As.append(A)
        left -= b
    return np.concatenate(Ws), np.concatenate(Wps), np.concatenate(As)
