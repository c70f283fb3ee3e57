"""Check the hyperquadratic identities on a seeded sweep of random specs.

    python scripts/certify_sweep.py --seed 2024 --count 100 --order 1000 --out sweep.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from autoseq import hyperquadratic_sweep, spec_to_dict, verify_hyperquadratic


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 2024
    count: int = 100
    order: int = 1000


def run(cfg: SweepConfig) -> dict:
    rows = []
    start = time.perf_counter()
    for spec in hyperquadratic_sweep(cfg.seed, cfg.count):
        cert = verify_hyperquadratic(spec, cfg.order)
        rows.append({"spec": spec_to_dict(spec), "ok": cert.ok, "order_checked": cert.order_checked})
    return {
        "config": asdict(cfg),
        "seconds": round(time.perf_counter() - start, 3),
        "failures": sum(not row["ok"] for row in rows),
        "results": rows,
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    parser.add_argument("--count", type=int, default=SweepConfig.count)
    parser.add_argument("--order", type=int, default=SweepConfig.order)
    parser.add_argument("--out", help="write the full JSON here")
    args = parser.parse_args()
    result = run(SweepConfig(args.seed, args.count, args.order))
    print(f"{args.count} specs, {result['failures']} failures, {result['seconds']} s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
