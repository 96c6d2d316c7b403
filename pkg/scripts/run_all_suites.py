"""Run every law suite over a spread of rings and print a pass/fail table.

    python3 scripts/run_all_suites.py --size 4 --cases 10 --seed 0

Exits 1 if any suite reports a failure.  ``--inject-fault`` runs the
same sweep with a corrupted case added, where every row should fail.
"""

import argparse
import sys
from dataclasses import dataclass, field

from rigidity_dual.suites import SUITES, SuiteConfig, run_suite


@dataclass
class SweepConfig:
    rings: list = field(default_factory=lambda: ["Z", "Q", "Z/4", "Z/6", "GF(2)", "GF(5)", "GF(2)xGF(3)"])
    field_rings: list = field(default_factory=lambda: ["GF(2)", "GF(3)"])
    size: int = 4
    cases: int = 10
    seed: int = 0
    inject_fault: bool = False


def sweep(cfg: SweepConfig):
    for suite in SUITES:
        rings = cfg.field_rings if suite == "findual" else cfg.rings
        for ring in rings:
            rep = run_suite(SuiteConfig(suite, ring, cfg.size, cfg.seed, cfg.cases, inject_fault=cfg.inject_fault))
            controls = sum(c.law.startswith("control:") for c in rep.cases)
            yield suite, ring, len(rep.cases), len(rep.failures), controls


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=4)
    ap.add_argument("--cases", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--inject-fault", action="store_true")
    args = ap.parse_args(argv)
    cfg = SweepConfig(size=args.size, cases=args.cases, seed=args.seed, inject_fault=args.inject_fault)
    print(f"{'suite':<12} {'ring':<12} {'cases':>6} {'failed':>6} {'controls':>8}")
    any_failed = False
    for suite, ring, n, failed, controls in sweep(cfg):
        any_failed |= failed > 0
        print(f"{suite:<12} {ring:<12} {n:>6} {failed:>6} {controls:>8}")
    return 1 if any_failed else 0


if __name__ == "__main__":
    sys.exit(main())
