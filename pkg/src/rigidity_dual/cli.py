"""Command-line front end.

    rigidity-dual check --suite dualization --ring "GF(5)" --size 4 --seed 7
    rigidity-dual dualize monoid.json --out coalgebra.json
    rigidity-dual findual --ring "GF(2)" --size 3
    rigidity-dual demo diagonal 8
    rigidity-dual ring info --ring Z/6
    rigidity-dual example hadamard --ring "GF(3)" --size 3

Exit codes: 0 all cases pass, 1 some law failed, 2 usage or format error.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import generate as gen
from .duality import diagonal_demo
from .findual import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    FiniteAlgebra,
    RequiresField,
    coreflexivity_check,
    finite_dual,
    function_algebra,
    truncated_polynomial_algebra,
)
from .moncat import (
    Coalgebra,
    TopMonoid,
    alg_dual_monoid,
    grouplike_coalgebra,
    hadamard_monoid,
    top_dual_coalgebra,
)
from .report import Report
from .rings import RingError, idempotents, is_von_neumann_regular, parse_ring, weak_inverse
from .serialize import FormatError, dump_structure, dumps, load_structure
from .suites import SUITES, SuiteConfig, UsageError, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def default_budget() -> int:
    env = os.environ.get("RIGIDITY_DUAL_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"RIGIDITY_DUAL_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(rep: Report, args) -> int:
    _emit(rep.to_json() if args.json else rep.to_text(), args.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_check(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite,
        ring=args.ring,
        size=args.size,
        seed=args.seed,
        cases=args.cases,
        fmt="json" if args.json else "text",
        budget=args.budget if args.budget is not None else default_budget(),
        inject_fault=args.inject_fault,
    )
    return _emit_report(run_suite(cfg), args)


_DIRECTIONS = {
    "monoid-to-coalgebra": TopMonoid,
    "coalgebra-to-monoid": Coalgebra,
    "algebra-to-finite-dual": FiniteAlgebra,
}


def cmd_dualize(args) -> int:
    with open(args.input) as fh:
        S = load_structure(fh.read())
    if args.direction != "auto" and not isinstance(S, _DIRECTIONS[args.direction]):
        raise UsageError(f"input kind does not match direction {args.direction}")
    try:
        if isinstance(S, TopMonoid):
            D = top_dual_coalgebra(S, verify=args.verify)
        elif isinstance(S, Coalgebra):
            D = alg_dual_monoid(S, verify=args.verify)
        else:
            if args.verify:
                from .findual import algebra_laws_check

                rep = algebra_laws_check(S)
                if not rep.passed:
                    raise ValueError(f"input is not an algebra: {rep.failures[0].law}")
            D = finite_dual(S)
    except ValueError as e:
        if isinstance(e, (RequiresField, FormatError)):
            raise
        sys.stderr.write(f"law violation: {e}\n")
        return EXIT_FAIL
    _emit(dump_structure(D), args.out)
    return EXIT_OK


def cmd_findual(args) -> int:
    k = parse_ring(args.ring)
    if not (k.is_field and k.is_finite):
        raise UsageError("findual needs a finite field, e.g. GF(2)")
    budget = args.budget if args.budget is not None else default_budget()
    rep = coreflexivity_check(k, gen.labels(args.size), budget)
    rep.suite = "findual"
    rep.seed = 0
    return _emit_report(rep, args)


def cmd_demo_diagonal(args) -> int:
    if args.n < 1:
        raise UsageError("n must be at least 1")
    ring = parse_ring(args.ring)
    rows = []
    ok = True
    for k in range(1, args.n + 1):
        rep = diagonal_demo(k, ring)
        ok = ok and rep.passed
        rows.append((k, rep.summary["support_size"]))
    if args.json:
        text = dumps({"demo": "diagonal", "ring": ring.spec, "rows": [[k, s] for k, s in rows]})
    else:
        text = "".join(f"{k}: {s}\n" for k, s in rows)
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ring_info(args) -> int:
    R = parse_ring(args.ring)
    info = {"ring": R.spec, "field": R.is_field, "finite": R.is_finite}
    try:
        info["von_neumann_regular"] = is_von_neumann_regular(R)
    except RingError:
        info["von_neumann_regular"] = None
    if R.is_finite:
        info["order"] = R.order
        info["idempotents"] = [R.format_scalar(e) for e in idempotents(R)]
        if info["von_neumann_regular"]:
            info["weak_inverses"] = [[R.format_scalar(x), R.format_scalar(weak_inverse(R, x))] for x in R.elements()]
    if args.json:
        _emit(dumps(info), args.out)
    else:
        lines = [f"{k}: {v}" for k, v in info.items() if k != "weak_inverses"]
        for x, y in info.get("weak_inverses", []):
            lines.append(f"  {x}^+ = {y}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_example(args) -> int:
    R = parse_ring(args.ring)
    X = gen.labels(args.size)
    name = args.name
    if name == "hadamard":
        S = hadamard_monoid(R, X)
    elif name == "grouplike":
        S = grouplike_coalgebra(R, X)
    elif name == "function-algebra":
        S = function_algebra(R, X)
    elif name == "truncated-poly":
        S = truncated_polynomial_algebra(R, args.size)
    else:
        _, S = gen.monoid(R, args.size, random.Random(args.seed))
    _emit(dump_structure(S), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigidity-dual", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, ring_default=None):
        if ring_default is None:
            sp.add_argument("--ring", required=True, help='ring spec: Z, Q, Z/6, GF(5), GF(2)xGF(3)')
        else:
            sp.add_argument("--ring", default=ring_default, help="ring spec (default %(default)s)")
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.add_argument("--out", help="write output to a file")

    c = sub.add_parser("check", help="run a law suite")
    common(c)
    c.add_argument("--suite", required=True, choices=SUITES)
    c.add_argument("--size", type=int, default=6, help="max index size")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--cases", type=int, default=20)
    c.add_argument("--budget", type=int, default=None, help="enumeration budget")
    c.add_argument("--inject-fault", action="store_true", help="add a corrupted case (expect exit 1)")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("dualize", help="dualize a structure file")
    d.add_argument("input")
    d.add_argument("--direction", default="auto", choices=["auto", *_DIRECTIONS])
    d.add_argument("--verify", action="store_true", help="check the input's laws first")
    d.add_argument("--out")
    d.set_defaults(func=cmd_dualize)

    f = sub.add_parser("findual", help="coreflexivity checks for k^X")
    common(f)
    f.add_argument("--size", type=int, default=3)
    f.add_argument("--budget", type=int, default=None)
    f.set_defaults(func=cmd_findual)

    demo = sub.add_parser("demo", help="demonstrations")
    demo_sub = demo.add_subparsers(dest="demo", required=True)
    dg = demo_sub.add_parser("diagonal", help="support growth of the diagonal functional")
    dg.add_argument("n", type=int)
    common(dg, ring_default="GF(2)")
    dg.set_defaults(func=cmd_demo_diagonal)

    r = sub.add_parser("ring", help="ring utilities")
    r_sub = r.add_subparsers(dest="ring_cmd", required=True)
    ri = r_sub.add_parser("info", help="idempotents and weak inverses")
    common(ri)
    ri.set_defaults(func=cmd_ring_info)

    e = sub.add_parser("example", help="write an example structure file")
    e.add_argument("name", choices=["hadamard", "grouplike", "function-algebra", "truncated-poly", "random-monoid"])
    e.add_argument("--ring", required=True)
    e.add_argument("--size", type=int, default=3)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--out")
    e.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RingError, FormatError, RequiresField, BudgetExceeded, OSError) as e:
        sys.stderr.write(f"rigidity-dual: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
