"""Kernel class counts for a seeded sweep, explored on term oracles.

    python scripts/kernel_sizes.py --seed 2024 --count 100 --horizon 4096
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from dataclasses import dataclass

from autoseq import TermOracle, hyperquadratic_sweep, kernel_explore


@dataclass(frozen=True)
class KernelSweepConfig:
    seed: int = 2024
    count: int = 100
    horizon: int = 4096


def run(cfg: KernelSweepConfig) -> list[dict]:
    rows = []
    for spec in hyperquadratic_sweep(cfg.seed, cfg.count):
        k = kernel_explore(TermOracle(spec), spec.field.p, cfg.horizon)
        rows.append({"q": spec.field.q, "ell": spec.ell, "r": spec.r, "k": spec.k,
                     "closed": k.closed, "classes": k.class_count})
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=KernelSweepConfig.seed)
    parser.add_argument("--count", type=int, default=KernelSweepConfig.count)
    parser.add_argument("--horizon", type=int, default=KernelSweepConfig.horizon)
    parser.add_argument("--json", action="store_true", help="print one JSON row per spec")
    args = parser.parse_args()
    rows = run(KernelSweepConfig(args.seed, args.count, args.horizon))
    if args.json:
        for row in rows:
            print(json.dumps(row))
        return
    print("classes:", [row["classes"] for row in rows])
    print("not closed:", sum(not row["closed"] for row in rows))
    by_q = Counter()
    for row in rows:
        by_q[row["q"]] = max(by_q[row["q"]], row["classes"])
    print("largest kernel by q:", dict(sorted(by_q.items())))


if __name__ == "__main__":
    main()
