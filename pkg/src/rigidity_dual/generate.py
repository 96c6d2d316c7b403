"""Seeded random instances for the law suites.

The library itself never draws random numbers; everything random that the
CLI and the suites feed it comes from here, driven by a ``random.Random``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .findual import (
    algebra_to_monoid,
    cyclic_group_algebra,
    function_algebra,
    matrix_algebra,
    max_semigroup_algebra,
    span,
    truncated_polynomial_algebra,
    upper_triangular_algebra,
)
from .freemod import ColMap, FinVec, FiniteIndex, IndexSet, ProductIndex, delta
from .moncat import TopMonoid, hadamard_monoid, weighted_diagonal_monoid
from .rings import IntegersMod, ProductRing, Rationals, Ring
from .topfree import ProVec, RowMap, ostar_maps, provec_from_dense, rowmap_apply, rowmap_compose


def labels(n: int, prefix: str = "x") -> FiniteIndex:
    return FiniteIndex(f"{prefix}{i}" for i in range(n))


def scalar(ring: Ring, rng: random.Random):
    if isinstance(ring, ProductRing):
        return tuple(scalar(f, rng) for f in ring.factors)
    if isinstance(ring, IntegersMod):
        return rng.randrange(ring.n)
    if isinstance(ring, Rationals):
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return rng.randint(-6, 6)


def unit(ring: Ring, rng: random.Random):
    if isinstance(ring, ProductRing):
        return tuple(unit(f, rng) for f in ring.factors)
    if isinstance(ring, IntegersMod):
        units = [x for x in range(ring.n) if ring.is_unit(x)]
        return rng.choice(units)
    if isinstance(ring, Rationals):
        return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    return rng.choice([-1, 1])


def finvec(ring: Ring, X: IndexSet, rng: random.Random, density: float = 0.6) -> FinVec:
    return FinVec(ring, X, [(x, scalar(ring, rng)) for x in X if rng.random() < density])


def provec(ring: Ring, X: IndexSet, rng: random.Random) -> ProVec:
    return provec_from_dense(ring, X, [scalar(ring, rng) for _ in X])


def colmap(ring: Ring, X: IndexSet, Y: IndexSet, rng: random.Random, density: float = 0.5) -> ColMap:
    return ColMap(ring, X, Y, {x: finvec(ring, Y, rng, density) for x in X})


def rowmap(ring: Ring, B: IndexSet, D: IndexSet, rng: random.Random, density: float = 0.5) -> RowMap:
    return RowMap(ring, B, D, {d: finvec(ring, B, rng, density) for d in D})


def unimodular(ring: Ring, X: FiniteIndex, rng: random.Random, steps: int = 6) -> tuple:
    """A random invertible RowMap P on R^X together with its inverse.

    Built from elementary row operations and unit scalings, so it works
    over any commutative ring.
    """
    P = _identity(ring, X)
    Pinv = _identity(ring, X)
    xs = list(X)
    for _ in range(steps):
        if len(xs) > 1 and rng.random() < 0.7:
            i, j = rng.sample(xs, 2)
            r = scalar(ring, rng)
            E = _elementary(ring, X, i, j, r)
            Einv = _elementary(ring, X, i, j, ring.neg(ring.coerce(r) if not ring.is_element(r) else r))
        else:
            i = rng.choice(xs)
            u = unit(ring, rng)
            E = _scaling(ring, X, i, u)
            Einv = _scaling(ring, X, i, ring.inv(ring.coerce(u) if not ring.is_element(u) else u))
        P = rowmap_compose(E, P)
        Pinv = rowmap_compose(Pinv, Einv)
    return P, Pinv


def _identity(ring, X):
    return RowMap(ring, X, X, {x: delta(ring, X, x) for x in X})


def _elementary(ring, X, i, j, r):
    rows = {x: delta(ring, X, x) for x in X}
    rows[i] = FinVec(ring, X, [(i, ring.one), (j, r)])
    return RowMap(ring, X, X, rows)


def _scaling(ring, X, i, u):
    rows = {x: delta(ring, X, x) for x in X}
    rows[i] = FinVec(ring, X, [(i, u)])
    return RowMap(ring, X, X, rows)


def transport(A: TopMonoid, P: RowMap, Pinv: RowMap) -> TopMonoid:
    """Move a monoid along the isomorphism P: mu' = P mu (P^-1 (*) P^-1), eta' = P eta."""
    mu = rowmap_compose(P, rowmap_compose(A.mu, ostar_maps(Pinv, Pinv)))
    eta = rowmap_apply(P, A.eta)
    table = {x: eta(x) for x in A.index}
    return TopMonoid(A.ring, A.index, mu, ProVec(A.ring, A.index, table.__getitem__, list(A.index)))


def base_algebras(ring: Ring, n: int) -> list:
    """Named finite-dimensional algebras of dimension n over ``ring``."""
    out = [
        ("function", function_algebra(ring, labels(n))),
        ("truncated-poly", truncated_polynomial_algebra(ring, n)),
        ("cyclic-group", cyclic_group_algebra(ring, n)),
        ("max-semigroup", max_semigroup_algebra(ring, n)),
    ]
    if n == 3:
        out.append(("upper-triangular", upper_triangular_algebra(ring)))
    if n == 4:
        out.append(("matrix-2x2", matrix_algebra(ring, 2)))
    return out


def _relabel_monoid(A: TopMonoid, X: FiniteIndex) -> TopMonoid:
    """Rename the basis of A to X, position by position."""
    old = list(A.index)
    ren = dict(zip(old, X))
    XX = ProductIndex(X, X)
    rows = {
        ren[d]: FinVec(A.ring, XX, [((ren[a], ren[b]), c) for (a, b), c in r.raw_items()])
        for d, r in A.mu.nonzero_rows().items()
    }
    table = {ren[x]: A.eta(x) for x in old}
    return TopMonoid(
        A.ring, X, RowMap(A.ring, XX, X, rows), ProVec(A.ring, X, table.__getitem__, list(X))
    )


def monoid(ring: Ring, n: int, rng: random.Random, twist: bool = True) -> tuple:
    """A random valid monoid of dimension n: a named algebra moved by a random basis change."""
    X = labels(n)
    kind = rng.choice(["hadamard", "diagonal", "algebra"])
    if kind == "hadamard":
        A, name = hadamard_monoid(ring, X), "hadamard"
    elif kind == "diagonal":
        A = weighted_diagonal_monoid(ring, X, {x: unit(ring, rng) for x in X})
        name = "weighted-diagonal"
    else:
        name, alg = rng.choice(base_algebras(ring, n))
        A = _relabel_monoid(algebra_to_monoid(alg), X)
    if twist:
        P, Pinv = unimodular(ring, X, rng)
        A = transport(A, P, Pinv)
        name += "+twist"
    return name, A


def algebra(ring: Ring, n: int, rng: random.Random) -> tuple:
    return rng.choice(base_algebras(ring, n))


def subspace(field: Ring, X: IndexSet, rng: random.Random):
    k = rng.randint(0, len(X))
    return span(field, X, [finvec(field, X, rng, 0.7) for _ in range(k)])


# --- corruptions for negative controls ---------------------------------------


def corrupt_unit(A: TopMonoid) -> TopMonoid:
    R, X = A.ring, A.index
    x0 = next(iter(X))
    table = {x: A.eta(x) for x in X}
    table[x0] = R.add(table[x0], R.one)
    return TopMonoid(R, X, A.mu, ProVec(R, X, table.__getitem__, list(X)))


def corrupt_multiplication(A: TopMonoid) -> TopMonoid:
    """Add delta_x0 to the product of a basis pair (a, a) with eta(a) != 0.

    Then mu'(eta (*) delta_a) = delta_a + eta(a) delta_x0, so the left unit
    law must fail.
    """
    R, X = A.ring, A.index
    XX = ProductIndex(X, X)
    a = next(x for x in X if not R.is_zero(A.eta(x)))
    x0 = next(iter(X))
    rows = A.mu.nonzero_rows()
    base = rows.get(x0, FinVec(R, XX, {}))
    rows[x0] = base + FinVec(R, XX, {(a, a): R.one})
    return TopMonoid(R, X, RowMap(R, XX, X, rows), A.eta)
