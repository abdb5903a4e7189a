"""Oracle-backed verification suites run by ``permlab verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

from . import oracle
from .bijections import (
    build_circular,
    fixed_to_shifted,
    fundamental_transform,
    inverse_fundamental,
    shifted_to_fixed,
)
from .commutator import (
    exact_commutator_pmf,
    expectation_formula,
    two_cycle_factorial_moment,
    two_cycles_eta,
)
from .exact import (
    ExactPmf,
    check_derangement_identity,
    circular_pmf,
    shifted_pmf,
    theta_empty_count,
    unseparated_pmf,
    whitworth_zero_prob,
)
from .generators import CHAINS, EXACT_LAW_MAX_N, exact_chain_law, transition_table
from .perm import Permutation, cycle_partition, unseparated_pairs


@dataclass
class SuiteResult:
    suite: str
    failures: list[str] = field(default_factory=list)
    checks: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"{status} {self.suite} ({self.checks} checks)"
        return head if self.passed else head + ": " + "; ".join(self.failures[:5])


# n caps per suite; the CLI refuses anything larger
CAPS = {
    "thm1": 8,
    "whitworth": 8,
    "exchangeability": 7,
    "bijection": 7,
    "shifted": 7,
    "circular": 8,
    "identity53": 500,
    "chains": 6,
    "commutator": 6,
}


def suite_thm1(nmax: int) -> SuiteResult:
    res = SuiteResult("thm1")
    for n in range(1, nmax + 1):
        hs = oracle.count_histogram(n, lambda p: oracle.naive_shifted(p, 1))
        ht = oracle.count_histogram(n, lambda p: oracle.naive_fixed_in_prefix(p, p.n - 1))
        res.check(hs == ht, f"n={n}: #S and #T histograms differ")
        res.check(dict(hs) == unseparated_pmf(n).scaled_counts(factorial(n)), f"n={n}: formula != histogram")
    return res


def suite_whitworth(nmax: int) -> SuiteResult:
    res = SuiteResult("whitworth")
    for n in range(1, nmax + 1):
        c = whitworth_zero_prob(n) * factorial(n)
        zero = sum(1 for p in oracle.all_permutations(n) if not unseparated_pairs(p))
        res.check(c.denominator == 1 and c.numerator == zero, f"n={n}: {c} vs {zero}")
    return res


def suite_exchangeability(nmax: int) -> SuiteResult:
    res = SuiteResult("exchangeability")
    for n in range(2, nmax + 1):
        s_counts = oracle.set_counts(n, lambda p: frozenset(oracle.naive_shifted(p, 1)))
        for m, vals in oracle.exchangeable_counts(s_counts, range(1, n)).items():
            res.check(len(vals) == 1, f"S_{n}, |A|={m}: counts {sorted(vals)}")
        u_counts = oracle.set_counts(n, lambda p: frozenset(oracle.naive_circular(p)))
        for m, vals in oracle.exchangeable_counts(u_counts, range(1, n + 1)).items():
            res.check(len(vals) == 1, f"U_{n}, |A|={m}: counts {sorted(vals)}")
    return res


def suite_bijection(nmax: int) -> SuiteResult:
    res = SuiteResult("bijection")
    for n in range(2, nmax + 1):
        perms = list(oracle.all_permutations(n))
        res.check(
            all(fundamental_transform(inverse_fundamental(p)) == p for p in perms),
            f"n={n}: fundamental transform round trip",
        )
        for h in range(1, n):
            image = set()
            for p in perms:
                q = fixed_to_shifted(p, h)
                image.add(q)
                if oracle.naive_shifted(q, h) != oracle.naive_fixed_in_prefix(p, n - h):
                    res.check(False, f"n={n}, h={h}: set identity fails at {p}")
                    break
                if shifted_to_fixed(q, h) != p:
                    res.check(False, f"n={n}, h={h}: inverse fails at {p}")
                    break
            res.check(len(image) == len(perms), f"n={n}, h={h}: not a bijection")
    return res


def suite_shifted(nmax: int) -> SuiteResult:
    res = SuiteResult("shifted")
    for n in range(2, nmax + 1):
        for h in range(1, n):
            hist = oracle.count_histogram(n, lambda p: oracle.naive_shifted(p, h))
            res.check(dict(hist) == shifted_pmf(n, h).scaled_counts(factorial(n)), f"n={n}, h={h}")
    return res


def suite_circular(nmax: int) -> SuiteResult:
    res = SuiteResult("circular")
    for n in range(1, nmax + 1):
        hist = oracle.count_histogram(n, oracle.naive_circular)
        res.check(dict(hist) == circular_pmf(n).scaled_counts(factorial(n)), f"n={n}: circular pmf")
        by_theta: dict = {}
        for c in oracle.all_circular(n):
            by_theta.setdefault(frozenset(oracle.naive_theta(c)), set()).add(c)
        res.check(len(by_theta.get(frozenset(), ())) == theta_empty_count(n), f"n={n}: empty count")
        for m in range(n):
            sources = [c for c in oracle.all_circular(n - m) if not oracle.naive_theta(c)] if n - m >= 1 else []
            for ks in combinations(range(1, n + 1), m):
                images = {build_circular(s, ks) for s in sources}
                target = by_theta.get(frozenset(ks), set())
                res.check(
                    len(images) == len(sources) and images == target,
                    f"n={n}, K={ks}: build_circular is not a bijection onto Theta=K",
                )
    return res


def suite_identity53(nmax: int) -> SuiteResult:
    res = SuiteResult("identity53")
    for n in range(1, nmax + 1):
        res.check(check_derangement_identity(n), f"n={n}")
    return res


def suite_chains(nmax: int) -> SuiteResult:
    res = SuiteResult("chains")
    for n in range(1, min(nmax, EXACT_LAW_MAX_N) + 1):
        for chain in CHAINS:
            law = exact_chain_law(chain, n)
            size = factorial(n - 1) if chain == "cycle-growth" else factorial(n)
            uniform = len(law) == size and set(law.values()) == {Fraction(1, size)}
            res.check(uniform, f"{chain}, n={n}: not uniform")
            for _, c, moves in transition_table(chain, n):
                up = moves.get(1, 0)
                down = moves.get(-1, 0)
                total = sum(moves.values())
                res.check(
                    down == c and up == 1 and set(moves) <= {-1, 0, 1},
                    f"{chain}, n={n}: transition counts {dict(moves)} at count {c}",
                )
                if chain != "cycle-growth":
                    res.check(total == n + 1, f"{chain}, n={n}: {total} choices")
    return res


def suite_commutator(nmax: int) -> SuiteResult:
    res = SuiteResult("commutator")
    for n in range(2, nmax + 1):
        res.check(exact_commutator_pmf(Permutation.rotation(n)) == circular_pmf(n), f"n={n}: rho law")
        for eta in oracle.all_permutations(n):
            f = cycle_partition(eta).f
            res.check(exact_commutator_pmf(eta).mean() == expectation_formula(n, f), f"n={n}, eta={eta}: mean")
    for m in range(1, nmax // 2 + 1):
        pmf = exact_commutator_pmf(two_cycles_eta(m))
        half = ExactPmf({c // 2: p for c, p in pmf.items()})
        res.check(all(c % 2 == 0 for c in pmf.support), f"m={m}: odd support")
        for k in range(1, m + 1):
            res.check(half.factorial_moment(k) == two_cycle_factorial_moment(m, k), f"m={m}, k={k}: factorial moment")
    return res


SUITES = {
    "thm1": suite_thm1,
    "whitworth": suite_whitworth,
    "exchangeability": suite_exchangeability,
    "bijection": suite_bijection,
    "shifted": suite_shifted,
    "circular": suite_circular,
    "identity53": suite_identity53,
    "chains": suite_chains,
    "commutator": suite_commutator,
}

DEFAULT_N = {
    "thm1": 8,
    "whitworth": 8,
    "exchangeability": 6,
    "bijection": 6,
    "shifted": 6,
    "circular": 7,
    "identity53": 20,
    "chains": 6,
    "commutator": 6,
}


def run_suite(name: str, nmax: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    nmax = DEFAULT_N[name] if nmax is None else nmax
    if nmax > CAPS[name]:
        raise ValueError(f"suite {name} is capped at n={CAPS[name]}, got {nmax}")
    return SUITES[name](nmax)
