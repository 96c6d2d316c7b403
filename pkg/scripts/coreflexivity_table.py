"""Characters, one-dimensional subcoalgebras and codimension-1 ideals of k^X.

    python3 scripts/coreflexivity_table.py --field GF(2) --field GF(3) --max-n 4

For the function algebra all three counts equal |X|.  Sizes whose search
space exceeds the enumeration budget are skipped.
"""

import argparse

from rigidity_dual.findual import DEFAULT_BUDGET, coreflexivity_check
from rigidity_dual.freemod import FiniteIndex
from rigidity_dual.rings import parse_ring


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", action="append", default=None)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = ap.parse_args(argv)
    print(f"{'field':<7} {'n':>2} {'homs':>5} {'1-dim':>6} {'ideals':>7} passed")
    for spec in args.field or ["GF(2)", "GF(3)", "GF(5)"]:
        k = parse_ring(spec)
        for n in range(1, args.max_n + 1):
            if k.order**n > args.budget:
                break
            rep = coreflexivity_check(k, FiniteIndex([f"x{i}" for i in range(n)]), args.budget)
            s = rep.summary
            print(
                f"{k.spec:<7} {n:>2} {s['hom_count']:>5} {s['one_dim_subcoalgebras']:>6}"
                f" {s['codim1_ideals']:>7} {rep.passed}"
            )


if __name__ == "__main__":
    main()
