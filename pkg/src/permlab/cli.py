"""Batch command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error or refused request.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from math import factorial

from .bijections import build_circular, canonical_cycle_form, fixed_to_shifted, fundamental_transform, peel_circular
from .commutator import EXACT_MAX_N, CommutatorReport, exact_commutator_report, mc_commutator_pmf, parse_eta
from .exact import (
    ExactPmf,
    circular_pmf,
    derangement_count,
    fixed_point_pmf,
    shifted_pmf,
    theta_empty_count,
    unseparated_pmf,
)
from .generators import CHAINS, RandomSource, conjugacy_sampler, run_chain, uniform_permutation
from .perm import CircularPermutation, Permutation, compose, fixed_points, inverse, shifted_successions
from .verify import CAPS, SUITES, run_suite

DEFAULT_SEED = 20130601
SEED_ENV = "PERMLAB_SEED"
STATS = ("unseparated", "fixed", "circular", "shifted")


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    n: int | None = None
    h: int | None = None
    m: int | None = None
    eta: str | None = None
    samples: int | None = None
    seed: int = DEFAULT_SEED
    fmt: str = "text"
    output: str | None = None

    def validate(self) -> None:
        for name in ("n", "h", "m", "samples"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise UsageError(f"--{name} must be positive, got {v}")
        if not 0 <= self.seed < 2**64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        if self.fmt not in ("text", "csv", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None


def _pmf_table(pmf: ExactPmf, fmt: str) -> str:
    if fmt == "csv":
        return pmf.to_csv()
    if fmt == "json":
        return pmf.to_json() + "\n"
    return "".join(f"{m}, {p.numerator}/{p.denominator}, {float(p)!r}\n" for m, p in pmf.items())


def cmd_dist(cfg: CommandConfig, stat: str, what: str) -> str:
    n = cfg.n
    if n is None:
        raise UsageError("dist needs --n")
    if stat == "shifted":
        if cfg.h is None or not 1 <= cfg.h < n:
            raise UsageError("shifted needs 1 <= --h < n")
        pmf = shifted_pmf(n, cfg.h)
    else:
        pmf = {"unseparated": unseparated_pmf, "fixed": fixed_point_pmf, "circular": circular_pmf}[stat](n)
    if what == "pmf":
        return _pmf_table(pmf, cfg.fmt)
    if what == "empty-count":
        if stat == "circular":
            value = theta_empty_count(n)
        elif stat == "fixed":
            value = derangement_count(n)
        else:
            value = (pmf[0] * factorial(n)).numerator
        return json.dumps({"n": n, "stat": stat, "empty_count": value}) + "\n" if cfg.fmt == "json" else f"{value}\n"
    if what == "mean":
        mean = pmf.mean()
        return f"{mean.numerator}/{mean.denominator}\n"
    raise UsageError(f"unknown --what {what!r}")


def cmd_verify(suite: str, nmax: int | None) -> tuple[str, int]:
    names = list(SUITES) if suite == "all" else [suite]
    lines, failed = [], False
    for name in names:
        try:
            res = run_suite(name, nmax)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lines.append(res.line())
        failed |= not res.passed
    return "\n".join(lines) + "\n", 1 if failed else 0


def cmd_sample(cfg: CommandConfig, chain: str, count: int, trajectory: bool) -> str:
    if cfg.n is None:
        raise UsageError("sample needs --n")
    rng = RandomSource(cfg.seed)
    out = []
    for _ in range(count):
        if chain == "uniform":
            out.append(str(uniform_permutation(cfg.n, rng)))
        elif chain == "conjugacy":
            if cfg.eta is None:
                raise UsageError("conjugacy sampling needs --eta")
            out.append(str(conjugacy_sampler(parse_eta(cfg.eta, cfg.n), rng)))
        else:
            path = run_chain(chain, cfg.n, rng)
            if trajectory:
                out.extend(f"{p.n}: {p}" for p in path)
                out.append("")
            else:
                out.append(str(path[-1]))
    return "\n".join(out).rstrip("\n") + "\n"


def cmd_commutator(cfg: CommandConfig, mode: str, streams: int) -> CommutatorReport:
    if cfg.eta is None:
        raise UsageError("commutator needs --eta")
    try:
        rng = RandomSource(cfg.seed)
        eta = parse_eta(cfg.eta, cfg.n, rng if cfg.eta.startswith("type:") else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if mode == "exact":
        if eta.n > EXACT_MAX_N and not eta.is_identity():
            raise UsageError(f"exact mode is limited to n <= {EXACT_MAX_N}; use --mode mc")
        return exact_commutator_report(eta)
    return mc_commutator_pmf(eta, cfg.samples or 100_000, rng, streams=streams, workers=streams)


def format_report(report: CommutatorReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json() + "\n"
    if fmt == "csv":
        return CommutatorReport.CSV_HEADER + "\n" + report.csv_row() + "\n"
    d = report.as_dict()
    lines = [
        f"n={report.n} f={report.f} t={report.t} type={report.cycle_type} method={report.method}"
        + (f" samples={report.samples} seed={report.seed}" if report.samples else ""),
        f"mean={d['mean']!r} tv_poisson1={d['tv']!r}" + (f" ci99={d['ci']!r}" if d["ci"] is not None else ""),
    ]
    lines += [f"{m}, {p.numerator}/{p.denominator}, {float(p)!r}" for m, p in report.pmf.items()]
    return "\n".join(lines) + "\n"


def cmd_trace(args) -> str:
    lines = []
    if args.what == "circular":
        sigma = CircularPermutation.parse(args.sigma)
        trace: list = []
        build_circular(sigma, [int(k) for k in args.ks.split(",") if k], trace)
        lines += [f"sigma_{i} = {s}  theta={sorted(s.theta())}" for i, s in enumerate(trace)]
    elif args.what == "peel":
        tau = CircularPermutation.parse(args.sigma)
        trace = []
        _, ks = peel_circular(tau, trace)
        lines.append(f"peel order: {list(reversed(ks))}")
        lines += [f"{s}  theta={sorted(s.theta())}" for s in trace]
    else:
        p = Permutation.parse(args.perm)
        h = args.h
        rho_p = compose(Permutation.rotation(p.n, h), p)
        hat = fundamental_transform(rho_p)
        q = fixed_to_shifted(p, h)
        lines += [
            f"pi            = {p}",
            f"cycles(pi)    = {canonical_cycle_form(p)}",
            f"rho_h pi      = {rho_p}",
            f"cycles        = {canonical_cycle_form(rho_p)}",
            f"hat           = {hat}",
            f"hat^-1        = {inverse(hat)}",
            f"fixed in [n-h]       = {sorted(k for k in fixed_points(p) if k <= p.n - h)}",
            f"shifted successions  = {sorted(shifted_successions(q, h))}",
        ]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, seed=False):
        p.add_argument("--format", dest="fmt", choices=("text", "csv", "json"), default="text")
        p.add_argument("--output", help="write to this file instead of stdout")
        if seed:
            p.add_argument("--seed", type=int, default=None, help=f"default ${SEED_ENV} or {DEFAULT_SEED}")

    p = sub.add_parser("dist", help="exact pmf tables")
    p.add_argument("--stat", choices=STATS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--what", choices=("pmf", "empty-count", "mean"), default="pmf")
    common(p)

    p = sub.add_parser("verify", help="exhaustive oracle suites")
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.add_argument("--n", "--nmax", dest="nmax", type=int, help="largest n to check; caps: "
                   + ", ".join(f"{k}={v}" for k, v in CAPS.items()))
    common(p)

    p = sub.add_parser("sample", help="draw permutations from a generator")
    p.add_argument("--chain", choices=("uniform", "conjugacy") + CHAINS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--eta")
    p.add_argument("--trajectory", action="store_true", help="print every intermediate size")
    common(p, seed=True)

    p = sub.add_parser("commutator", help="law of fixed points of [eta, Pi]")
    p.add_argument("--eta", required=True, help="identity | rho | two-cycles:m | type:3+2+1 | a,b,c,...")
    p.add_argument("--n", type=int)
    p.add_argument("--mode", choices=("exact", "mc"), default="exact")
    p.add_argument("--samples", type=int)
    p.add_argument("--streams", type=int, default=1)
    common(p, seed=True)

    p = sub.add_parser("trace", help="show the steps of a bijection")
    p.add_argument("what", choices=("circular", "peel", "shifted"))
    p.add_argument("--sigma", help="circular permutation, e.g. 3,1,6,5,7,2,4")
    p.add_argument("--ks", default="", help="successions to insert, e.g. 3,5,6")
    p.add_argument("--perm", help="one-line permutation for 'shifted'")
    p.add_argument("--h", type=int, default=1)
    common(p)
    return parser


def run(argv: list[str] | None = None) -> tuple[str, int, str | None]:
    """(text, exit code, output path) for one invocation."""
    args = build_parser().parse_args(argv)
    seed = getattr(args, "seed", None)
    cfg = CommandConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        h=getattr(args, "h", None),
        eta=getattr(args, "eta", None),
        samples=getattr(args, "samples", None),
        seed=default_seed() if seed is None else seed,
        fmt=args.fmt,
        output=args.output,
    )
    cfg.validate()
    code = 0
    if args.subcommand == "dist":
        text = cmd_dist(cfg, args.stat, args.what)
    elif args.subcommand == "verify":
        text, code = cmd_verify(args.suite, args.nmax)
    elif args.subcommand == "sample":
        if args.count < 1:
            raise UsageError("--count must be positive")
        text = cmd_sample(cfg, args.chain, args.count, args.trajectory)
    elif args.subcommand == "commutator":
        text = format_report(cmd_commutator(cfg, args.mode, args.streams), cfg.fmt)
    else:
        try:
            text = cmd_trace(args)
        except (TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    return text, code, cfg.output


def main(argv: list[str] | None = None) -> int:
    try:
        text, code, out_path = run(argv)
    except UsageError as exc:
        print(f"permlab: error: {exc}", file=sys.stderr)
        return 2
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # downstream closed early (e.g. piped into head)
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return code


if __name__ == "__main__":
    sys.exit(main())
