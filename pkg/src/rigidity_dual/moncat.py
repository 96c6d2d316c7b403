"""Topological monoids on R^X, coalgebras on R^(X), and their dualization.

A TopMonoid stores its multiplication as a RowMap R^(X*X) -> R^X and its
unit by the value eta(1).  A Coalgebra stores its comultiplication as a
ColMap R^(X) -> R^(X*X) and its counit by its values on the delta_x.
Dualizing swaps the two, row for column.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .duality import alg_dual, functional_apply, top_dual
from .freemod import (
    ONE_POINT,
    UNIT_LABEL,
    ColMap,
    FinVec,
    IndexMismatch,
    IndexSet,
    ProductIndex,
    assoc_index,
    assoc_label,
    colmap_compose,
    delta,
    first_difference,
    identity_colmap,
    kron,
    relabel_colmap,
    require_finite,
    swap_label,
    tensor_colmaps,
)
from .report import Report
from .rings import Ring
from .topfree import (
    ProVec,
    RowMap,
    identity_rowmap,
    ones,
    ostar_elements,
    ostar_maps,
    provec_from_finvec,
    relabel_rowmap,
    rowmap_apply,
    rowmap_compose,
)


@dataclass(frozen=True, eq=False)
class TopMonoid:
    ring: Ring
    index: IndexSet
    mu: RowMap
    eta: ProVec

    def __post_init__(self):
        XX = ProductIndex(self.index, self.index)
        if self.mu.domain != XX or self.mu.codomain != self.index:
            raise IndexMismatch("multiplication must be a map R^(X*X) -> R^X")
        if self.eta.index != self.index:
            raise IndexMismatch("unit must be a vector of R^X")

    def __eq__(self, other):
        if not isinstance(other, TopMonoid):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.index == other.index
            and self.mu == other.mu
            and self.eta == other.eta
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Coalgebra:
    ring: Ring
    index: IndexSet
    delta: ColMap
    epsilon: ProVec

    def __post_init__(self):
        XX = ProductIndex(self.index, self.index)
        if self.delta.domain != self.index or self.delta.codomain != XX:
            raise IndexMismatch("comultiplication must be a map R^(X) -> R^(X*X)")
        if self.epsilon.index != self.index:
            raise IndexMismatch("counit must be given on the basis X")

    def counit(self, v: FinVec):
        return functional_apply(v, self.epsilon)

    def __eq__(self, other):
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.index == other.index
            and self.delta == other.delta
            and self.epsilon == other.epsilon
        )

    __hash__ = None


# --- examples --------------------------------------------------------------


def hadamard_monoid(ring: Ring, X: IndexSet) -> TopMonoid:
    """Pointwise multiplication on R^X with the all-ones unit."""
    XX = ProductIndex(X, X)
    if X.is_finite:
        mu = RowMap(ring, XX, X, {x: delta(ring, XX, (x, x)) for x in X})
    else:
        mu = RowMap(ring, XX, X, row_oracle=lambda x: delta(ring, XX, (x, x)))
    return TopMonoid(ring, X, mu, ones(ring, X))


def grouplike_coalgebra(ring: Ring, X: IndexSet) -> Coalgebra:
    """delta_x |-> delta_x (x) delta_x, counit 1 on every basis vector."""
    XX = ProductIndex(X, X)
    if X.is_finite:
        d = ColMap(ring, X, XX, {x: delta(ring, XX, (x, x)) for x in X})
    else:
        d = ColMap(ring, X, XX, column_oracle=lambda x: delta(ring, XX, (x, x)))
    return Coalgebra(ring, X, d, ones(ring, X))


def weighted_diagonal_monoid(ring: Ring, X: IndexSet, weights: dict) -> TopMonoid:
    """(u v)(x) = w_x u(x) v(x); a monoid when every w_x is a unit, with eta(x) = 1/w_x."""
    require_finite(X)
    XX = ProductIndex(X, X)
    mu = RowMap(ring, XX, X, {x: FinVec(ring, XX, {(x, x): weights[x]}) for x in X})
    table = {}
    for x in X:
        w = ring.coerce(weights[x])
        table[x] = ring.inv(w) if ring.is_unit(w) else ring.zero
    eta = ProVec(ring, X, table.__getitem__, [x for x in X if not ring.is_zero(table[x])])
    return TopMonoid(ring, X, mu, eta)


def monoid_from_structure_constants(ring: Ring, X: IndexSet, constants: Iterable, unit: Iterable) -> TopMonoid:
    """Build from triples (a, b, x, c) meaning delta_a * delta_b has x-coefficient c."""
    XX = ProductIndex(X, X)
    rows: dict = {}
    for a, b, x, c in constants:
        rows.setdefault(x, []).append(((a, b), c))
    mu = RowMap(ring, XX, X, {x: FinVec(ring, XX, e) for x, e in rows.items()})
    eta = provec_from_finvec(FinVec(ring, X, zip(X, unit)))
    return TopMonoid(ring, X, mu, eta)


# --- dualization -----------------------------------------------------------


def top_dual_coalgebra(A: TopMonoid, verify: bool = False) -> Coalgebra:
    """The coalgebra of continuous functionals: delta = mu', counit(l) = l(eta(1))."""
    if verify:
        rep = monoid_laws_check(A)
        if not rep.passed:
            raise ValueError(f"input is not a monoid: {rep.failures[0].law} at {rep.failures[0].witness}")
    return Coalgebra(A.ring, A.index, top_dual(A.mu), A.eta)


def alg_dual_monoid(C: Coalgebra, verify: bool = False) -> TopMonoid:
    """The dual algebra R^X: mu = delta*, eta(1) = counit."""
    if verify:
        rep = coalgebra_laws_check(C)
        if not rep.passed:
            raise ValueError(f"input is not a coalgebra: {rep.failures[0].law} at {rep.failures[0].witness}")
    return TopMonoid(C.ring, C.index, alg_dual(C.delta), C.epsilon)


def ua_multiply(A: TopMonoid, u: ProVec, v: ProVec) -> ProVec:
    """The bilinear product mu(u (*) v) of the underlying algebra."""
    if u.index != A.index or v.index != A.index:
        raise IndexMismatch("operands must live in R^X")
    return rowmap_apply(A.mu, ostar_elements(u, v))


# --- structure maps as morphisms -------------------------------------------


def unit_rowmap(A: TopMonoid) -> RowMap:
    """eta as a continuous map R -> R^X (R = R^{pt})."""
    R, X = A.ring, A.index
    require_finite(X)
    return RowMap(R, ONE_POINT, X, {x: FinVec(R, ONE_POINT, {UNIT_LABEL: A.eta.at(x)}) for x in X})


def counit_colmap(C: Coalgebra) -> ColMap:
    """epsilon as a linear map R^(X) -> R^(pt)."""
    R, X = C.ring, C.index
    require_finite(X)
    return ColMap(R, X, ONE_POINT, {x: FinVec(R, ONE_POINT, {UNIT_LABEL: C.epsilon.at(x)}) for x in X})


def first_row_mismatch(F: RowMap, G: RowMap):
    Fr, Gr = F.nonzero_rows(), G.nonzero_rows()
    for d in F.codomain:
        a, b = Fr.get(d), Gr.get(d)
        if a != b:
            a = dict(a.raw_items()) if a else {}
            b = dict(b.raw_items()) if b else {}
            for k in F.domain.sorted(set(a) | set(b)):
                if a.get(k) != b.get(k):
                    return [d, k]
    return None


def first_column_mismatch(F: ColMap, G: ColMap):
    Fc, Gc = F.nonzero_columns(), G.nonzero_columns()
    for x in F.domain:
        a, b = Fc.get(x), Gc.get(x)
        if a != b:
            a = dict(a.raw_items()) if a else {}
            b = dict(b.raw_items()) if b else {}
            for k in F.codomain.sorted(set(a) | set(b)):
                if a.get(k) != b.get(k):
                    return [x, k]
    return None


def structure_difference(S, T):
    """Witness [field, row-or-column, entry] for two unequal structures."""
    if S.index != T.index:
        return ["index"]
    if isinstance(S, TopMonoid):
        bad = first_row_mismatch(S.mu, T.mu)
        if bad:
            return ["mu", *bad]
    else:
        bad = first_column_mismatch(S.delta, T.delta)
        if bad:
            return ["delta", *bad]
    unit_s = S.eta if isinstance(S, TopMonoid) else S.epsilon
    unit_t = T.eta if isinstance(T, TopMonoid) else T.epsilon
    x = next((x for x in S.index if unit_s.at(x) != unit_t.at(x)), None)
    return None if x is None else ["unit", x]


# --- law checks ------------------------------------------------------------


def monoid_laws_check(A: TopMonoid, report: Report | None = None, prefix: str = "") -> Report:
    """Associativity and both unit laws, entrywise, with witnesses.

    Associativity compares mu o (mu (*) id) with mu o (id (*) mu) after
    the associator ((x,y),z) |-> (x,(y,z)) on the domain.
    """
    R, X = A.ring, A.index
    require_finite(X)
    rep = report or Report("monoid", R.spec)
    idX = identity_rowmap(R, X)
    left = rowmap_compose(A.mu, ostar_maps(A.mu, idX))
    right = rowmap_compose(A.mu, ostar_maps(idX, A.mu))
    left = relabel_rowmap(left, dom_map=assoc_label, domain=assoc_index(left.domain))
    rep.add("monoid:associativity", left == right, first_row_mismatch(left, right), id=prefix + "assoc")

    eta = unit_rowmap(A)
    lu = rowmap_compose(A.mu, ostar_maps(eta, idX))
    # rows of lu are over ONE_POINT*X; strip the unit factor
    lu = RowMap(R, X, X, {d: r.relabel(lambda p: p[1], X) for d, r in lu.nonzero_rows().items()})
    rep.add("monoid:left-unit", lu == idX, first_row_mismatch(lu, idX), id=prefix + "unit-left")

    ru = rowmap_compose(A.mu, ostar_maps(idX, eta))
    ru = RowMap(R, X, X, {d: r.relabel(lambda p: p[0], X) for d, r in ru.nonzero_rows().items()})
    rep.add("monoid:right-unit", ru == idX, first_row_mismatch(ru, idX), id=prefix + "unit-right")
    return rep


def coalgebra_laws_check(C: Coalgebra, report: Report | None = None, prefix: str = "") -> Report:
    """Coassociativity and both counit laws, columnwise."""
    R, X = C.ring, C.index
    require_finite(X)
    rep = report or Report("coalgebra", R.spec)
    idX = identity_colmap(R, X)
    left = colmap_compose(tensor_colmaps(C.delta, idX), C.delta)
    right = colmap_compose(tensor_colmaps(idX, C.delta), C.delta)
    left = relabel_colmap(left, cod_map=assoc_label, codomain=assoc_index(left.codomain))
    rep.add("coalgebra:coassociativity", left == right, first_column_mismatch(left, right), id=prefix + "coassoc")

    eps = counit_colmap(C)
    lc = colmap_compose(tensor_colmaps(eps, idX), C.delta)
    lc = ColMap(R, X, X, {x: c.relabel(lambda p: p[1], X) for x, c in lc.nonzero_columns().items()})
    rep.add("coalgebra:left-counit", lc == idX, first_column_mismatch(lc, idX), id=prefix + "counit-left")
    rc = colmap_compose(tensor_colmaps(idX, eps), C.delta)
    rc = ColMap(R, X, X, {x: c.relabel(lambda p: p[0], X) for x, c in rc.nonzero_columns().items()})
    rep.add("coalgebra:right-counit", rc == idX, first_column_mismatch(rc, idX), id=prefix + "counit-right")
    return rep


def is_commutative(A: TopMonoid) -> bool:
    swapped = relabel_rowmap(A.mu, dom_map=swap_label, domain=A.mu.domain)
    return swapped == A.mu


def is_cocommutative(C: Coalgebra) -> bool:
    swapped = relabel_colmap(C.delta, cod_map=swap_label, codomain=C.delta.codomain)
    return swapped == C.delta


def faithfulness_check(A: TopMonoid, B: TopMonoid) -> bool:
    """Equal products on all basis pairs and equal units force equal structures."""
    R, X = A.ring, A.index
    require_finite(X)
    for a in X:
        da = provec_from_finvec(delta(R, X, a))
        for b in X:
            db = provec_from_finvec(delta(R, X, b))
            if ua_multiply(A, da, db) != ua_multiply(B, da, db):
                return False
    return A.eta == B.eta


# --- monoidal structure of the dual functors --------------------------------


def monoidal_transformation_check(
    row_pairs: Iterable = (),
    col_pairs: Iterable = (),
    element_samples: Iterable = (),
    kron_impl: Callable = kron,
    ostar_impl: Callable = ostar_maps,
    tensor_impl: Callable = tensor_colmaps,
    report: Report | None = None,
) -> Report:
    """Check that dualization exchanges the two tensor products.

    ``row_pairs`` are (F, G) RowMaps, ``col_pairs`` are (F, G) ColMaps,
    ``element_samples`` are (p, q, u, v) with p, q FinVecs and u, v ProVecs
    over matching indices.  The tensor implementations are injectable for
    negative controls.
    """
    rep = report
    for i, (F, G) in enumerate(row_pairs):
        rep = rep or Report("coherence", F.ring.spec)
        lhs = top_dual(ostar_impl(F, G))
        rhs = tensor_impl(top_dual(F), top_dual(G))
        rep.add("top:exchange", lhs == rhs, first_column_mismatch(lhs, rhs) if lhs.domain == rhs.domain else "index")
        back = top_dual(alg_dual(top_dual(ostar_impl(F, G))))
        rep.add("gamma:monoidal", back == rhs, ["pair", i])
    for i, (F, G) in enumerate(col_pairs):
        rep = rep or Report("coherence", F.ring.spec)
        lhs = alg_dual(tensor_impl(F, G))
        rhs = ostar_impl(alg_dual(F), alg_dual(G))
        rep.add("alg:exchange", lhs == rhs, first_row_mismatch(lhs, rhs) if lhs.domain == rhs.domain else "index")
        back = top_dual(alg_dual(tensor_impl(F, G)))
        rep.add("lambda:monoidal", back == tensor_impl(top_dual(alg_dual(F)), top_dual(alg_dual(G))), ["pair", i])
    for i, (p, q, u, v) in enumerate(element_samples):
        rep = rep or Report("coherence", p.ring.spec)
        R = p.ring
        pq = kron_impl(p, q)
        uv = ostar_elements(u, v)
        if pq.index == uv.index:
            lhs = functional_apply(pq, uv)
            ok = lhs == R.mul(functional_apply(p, u), functional_apply(q, v))
        else:
            ok = False
        rep.add("phi:pairing", ok, ["sample", i])
    if rep is None:
        rep = Report("coherence")
    return rep


def unit_coherence_check(ring: Ring, report: Report | None = None) -> Report:
    """The unit identifications R = R^(pt) = (R^pt)' are compatible with duality."""
    rep = report or Report("coherence", ring.spec)
    idp = identity_colmap(ring, ONE_POINT)
    rep.add("unit:alg-dual", alg_dual(idp) == identity_rowmap(ring, ONE_POINT), [UNIT_LABEL])
    rep.add("unit:top-dual", top_dual(identity_rowmap(ring, ONE_POINT)) == idp, [UNIT_LABEL])
    one = delta(ring, ONE_POINT, UNIT_LABEL)
    pair = delta(ring, ProductIndex(ONE_POINT, ONE_POINT), (UNIT_LABEL, UNIT_LABEL))
    rep.add("unit:kron", kron(one, one) == pair, first_difference(kron(one, one), pair))
    return rep
