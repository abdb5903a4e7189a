"""Exact TV(circular successions, Poisson(1)) against n, with n*TV next to e^-1.

    python scripts/tv_decay.py --ns 10,20,40,80,160,320 --csv tv_decay.csv
"""

import argparse
import csv
import math
import sys
import time
from dataclasses import dataclass, field

from permlab.exact import circular_pmf, poisson_reference, tv_distance


@dataclass
class Config:
    ns: list[int] = field(default_factory=lambda: [10, 20, 40, 80, 160, 320])
    csv_path: str | None = None


def run(cfg: Config) -> list[dict]:
    ref = poisson_reference()
    rows = []
    for n in cfg.ns:
        t0 = time.perf_counter()
        tv = float(tv_distance(circular_pmf(n), ref))
        rows.append({"n": n, "tv": tv, "n_tv": n * tv, "seconds": time.perf_counter() - t0})
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ns", default="10,20,40,80,160,320")
    ap.add_argument("--csv", dest="csv_path")
    args = ap.parse_args()
    cfg = Config([int(x) for x in args.ns.split(",")], args.csv_path)
    rows = run(cfg)
    print(f"e^-1 = {math.exp(-1):.6f}")
    print(f"{'n':>6} {'TV':>12} {'n*TV':>8}")
    for r in rows:
        print(f"{r['n']:>6} {r['tv']:>12.6g} {r['n_tv']:>8.4f}")
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="\n", encoding="utf-8") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)


if __name__ == "__main__":
    sys.exit(main())
