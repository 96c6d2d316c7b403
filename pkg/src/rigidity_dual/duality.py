"""Algebraic and topological duals as transposition.

Over a discrete ring every continuous functional on R^X is a finite
combination of coordinate projections, so a functional is a FinVec and
the two dual functors swap ColMaps and RowMaps.  With the canonical
bases fixed, the natural isomorphisms between a module and its double
dual are identity reindexers; what is left to check are the laws.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from .freemod import (
    ColMap,
    FinVec,
    FiniteIndex,
    IndexMismatch,
    IndexSet,
    colmap_apply,
    colmap_compose,
    require_finite,
)
from .report import Report
from .rings import Ring, RingMismatch
from .topfree import (
    ProVec,
    RowMap,
    delta_provec,
    ones,
    rowmap_apply,
    rowmap_compose,
    zero_provec,
)


class DualNotRepresentable(ValueError):
    def __init__(self, msg: str = "dual not representable (non-rigid direction)"):
        super().__init__(msg)


def functional_apply(p: FinVec, f: ProVec):
    """Pair a functional in FinVec form with a vector of R^X (finite sum)."""
    if p.ring != f.ring:
        raise RingMismatch()
    if p.index != f.index:
        raise IndexMismatch("functional and vector live over different index sets")
    R = p.ring
    total = R.zero
    for x, c in p.raw_items():
        total = R.add(total, R.mul(c, f.at(x)))
    return total


def functional_from_oracle(ell: Callable[[ProVec], object], X: IndexSet, ring: Ring) -> FinVec:
    """Recover the FinVec of a continuous functional from its values on the delta_x."""
    if not X.is_finite:
        raise ValueError("rigidity extraction requires finite enumeration")
    return FinVec(ring, X, [(x, ell(delta_provec(ring, X, x))) for x in X])


def alg_dual(F: ColMap) -> RowMap:
    """F*: R^Y -> R^X, l |-> l o F.  Row x is the column F(delta_x)."""
    if not F.is_tabulated:
        return RowMap(F.ring, F.codomain, F.domain, row_oracle=F.column)
    return RowMap(F.ring, F.codomain, F.domain, F.nonzero_columns())


def top_dual(F: RowMap) -> ColMap:
    """F': (R^D)' -> (R^B)'.  Column d is row d of F."""
    if not F.is_tabulated:
        return ColMap(F.ring, F.codomain, F.domain, column_oracle=F.row)
    return ColMap(F.ring, F.codomain, F.domain, F.nonzero_rows())


def colmap_transpose(F: ColMap, certificate: Callable | None = None) -> ColMap:
    """The matrix transpose of F as a column-finite map Y -> X.

    Column y collects the y-entries of every column of F, which is only a
    finite computation when the domain is finite or a ``certificate(y)``
    lists the x whose column can be nonzero at y.
    """
    R, X, Y = F.ring, F.domain, F.codomain
    if X.is_finite:
        cols: dict = {}
        for x, col in F.nonzero_columns().items():
            for y, c in col.raw_items():
                cols.setdefault(y, []).append((x, c))
        return ColMap(R, Y, X, {y: FinVec(R, X, e) for y, e in cols.items()})
    if certificate is None:
        raise DualNotRepresentable()

    def column(y):
        return FinVec(R, X, [(x, F.column(x).get(y)) for x in certificate(y)])

    if Y.is_finite:
        return ColMap(R, Y, X, {y: column(y) for y in Y})
    return ColMap(R, Y, X, column_oracle=column)


def sharp(f: Mapping, B: IndexSet, X: IndexSet, ring: Ring) -> RowMap:
    """The continuous map R^B -> R^X whose x-th coordinate is the functional f[x]."""
    return RowMap(ring, B, X, dict(f))


# --- law checks ------------------------------------------------------------


def _first_entry_mismatch(A: dict, B: dict):
    for k in sorted(set(A) | set(B), key=repr):
        a, b = A.get(k), B.get(k)
        if a != b:
            return [k, repr(a), repr(b)]
    return None


def lambda_nat_check(
    F: ColMap,
    vectors: Iterable[FinVec] = (),
    functionals: Iterable[ProVec] = (),
    alg=alg_dual,
    top=top_dual,
    report: Report | None = None,
) -> Report:
    """Check top(alg(F)) == F, the transpose entries, and the pairing square.

    ``alg`` and ``top`` are injectable so that negative controls can feed a
    corrupted transpose.
    """
    rep = report or Report("lambda", F.ring.spec)
    require_finite(F.domain)
    require_finite(F.codomain)
    Fs = alg(F)
    back = top(Fs)
    rep.add("lambda:double-dual", back == F, _first_entry_mismatch(back.nonzero_columns(), F.nonzero_columns()))
    bad = None
    for x in F.domain:
        for y in F.codomain:
            if Fs.entry(x, y) != F.entry(y, x):
                bad = [x, y]
                break
        if bad:
            break
    rep.add("lambda:transpose-entries", bad is None, bad)
    for i, p in enumerate(vectors):
        rep.add(
            "lambda:naturality",
            colmap_apply(back, p) == colmap_apply(F, p),
            ["vector", i],
        )
        for j, ell in enumerate(functionals):
            lhs = functional_apply(colmap_apply(F, p), ell)
            rhs = functional_apply(p, rowmap_apply(Fs, ell))
            rep.add("lambda:pairing", lhs == rhs, ["vector", i, "functional", j])
    return rep


def gamma_nat_check(
    F: RowMap,
    vectors: Iterable[ProVec] = (),
    functionals: Iterable[FinVec] = (),
    alg=alg_dual,
    top=top_dual,
    report: Report | None = None,
) -> Report:
    """Mirror image of lambda_nat_check for a RowMap."""
    rep = report or Report("gamma", F.ring.spec)
    require_finite(F.domain)
    require_finite(F.codomain)
    Ft = top(F)
    back = alg(Ft)
    rep.add("gamma:double-dual", back == F, _first_entry_mismatch(back.nonzero_rows(), F.nonzero_rows()))
    bad = None
    for d in F.codomain:
        for b in F.domain:
            if Ft.entry(b, d) != F.entry(d, b):
                bad = [d, b]
                break
        if bad:
            break
    rep.add("gamma:transpose-entries", bad is None, bad)
    for i, v in enumerate(vectors):
        rep.add("gamma:naturality", rowmap_apply(back, v) == rowmap_apply(F, v), ["vector", i])
        for j, p in enumerate(functionals):
            lhs = functional_apply(p, rowmap_apply(F, v))
            rhs = functional_apply(colmap_apply(Ft, p), v)
            rep.add("gamma:pairing", lhs == rhs, ["vector", i, "functional", j])
    return rep


def contravariance_check(G: ColMap, F: ColMap, report: Report | None = None) -> Report:
    """alg_dual(G o F) == alg_dual(F) o alg_dual(G), and the same for top_dual."""
    rep = report or Report("contravariance", F.ring.spec)
    lhs, rhs = alg_dual(colmap_compose(G, F)), rowmap_compose(alg_dual(F), alg_dual(G))
    rep.add("alg-dual:contravariant", lhs == rhs, _first_entry_mismatch(lhs.nonzero_rows(), rhs.nonzero_rows()))
    Gs, Fs = alg_dual(G), alg_dual(F)
    lhs, rhs = top_dual(rowmap_compose(Fs, Gs)), colmap_compose(top_dual(Gs), top_dual(Fs))
    rep.add("top-dual:contravariant", lhs == rhs, _first_entry_mismatch(lhs.nonzero_columns(), rhs.nonzero_columns()))
    return rep


# --- the nested-product counterexample -------------------------------------


def diagonal_functional_support(n: int, ring: Ring) -> tuple:
    """Evaluate the diagonal functional of (R^X)^X on the basis, |X| = n.

    The functional sends f in (R^X)^X to x |-> f(x)(x).  Returns
    (size of supp of l-hat, sizes of supp of each coordinate functional).
    """
    if n < 1:
        raise ValueError("n must be positive")
    X = FiniteIndex(range(n))
    unit = ones(ring, X)
    zero = zero_provec(ring, X)

    def nested_delta(x):
        return lambda xx: unit if xx == x else zero

    def ell(f) -> ProVec:
        return ProVec(ring, X, lambda x: f(x).at(x))

    hat = {x: ell(nested_delta(x)) for x in X}
    support = [x for x in X if hat[x].support()]
    # coordinate i of l is pi_i o l; its hat is x |-> l(delta_x)(i)
    coord_supports = [sum(1 for x in X if not ring.is_zero(hat[x].at(i))) for i in X]
    return len(support), coord_supports


def diagonal_demo(n: int, ring: Ring) -> Report:
    rep = Report("diagonal", ring.spec)
    size, coords = diagonal_functional_support(n, ring)
    rep.add("diagonal:support-is-X", size == n, [n, size], id=f"n={n:03d}")
    rep.add("diagonal:coordinates-finite", all(c == 1 for c in coords), coords, id=f"n={n:03d}:coords")
    rep.summary = {"n": n, "support_size": size}
    return rep
