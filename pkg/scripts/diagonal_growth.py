"""Support of the diagonal functional on (R^X)^X as |X| grows.

    python3 scripts/diagonal_growth.py --max-n 16 --ring GF(2) --ring Z/6

Each basis vector delta_x is sent to a nonzero functional, so the support
has exactly n elements; the table makes the linear growth visible.
"""

import argparse

from rigidity_dual.duality import diagonal_functional_support
from rigidity_dual.rings import parse_ring


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--ring", action="append", default=None)
    args = ap.parse_args(argv)
    rings = [parse_ring(r) for r in (args.ring or ["GF(2)", "Z/6", "Z"])]
    print("n    " + "  ".join(f"{R.spec:>6}" for R in rings))
    for n in range(1, args.max_n + 1):
        sizes = [diagonal_functional_support(n, R)[0] for R in rings]
        print(f"{n:<4} " + "  ".join(f"{s:>6}" for s in sizes))


if __name__ == "__main__":
    main()
