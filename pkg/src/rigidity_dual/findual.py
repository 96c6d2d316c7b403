"""Finite duality over a field: orthogonals, finite duals, algebra homs.

Everything here is finite-dimensional.  For such an algebra A every
functional has a finite-codimensional ideal (zero) in its kernel, so the
finite dual A^0 is the full dual A* and its comultiplication is the
transpose of the multiplication.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .duality import alg_dual, colmap_transpose, functional_apply
from .freemod import (
    ONE_POINT,
    UNIT_LABEL,
    ColMap,
    FinVec,
    FiniteIndex,
    IndexMismatch,
    IndexSet,
    ProductIndex,
    assoc_index,
    assoc_label,
    colmap_apply,
    colmap_compose,
    delta,
    identity_colmap,
    kron,
    relabel_colmap,
    require_finite,
    tensor_colmaps,
)
from .moncat import (
    Coalgebra,
    TopMonoid,
    first_column_mismatch,
    grouplike_coalgebra,
    hadamard_monoid,
    structure_difference,
    top_dual_coalgebra,
)
from .report import Report
from .rings import Ring
from .topfree import ProVec, RowMap, provec_from_finvec, rowmap_apply

DEFAULT_BUDGET = 2**20


class RequiresField(ValueError):
    def __init__(self, msg: str = "requires a field"):
        super().__init__(msg)


class BudgetExceeded(RuntimeError):
    pass


def _require_field(R: Ring):
    if not R.is_field:
        raise RequiresField()


# --- exact Gaussian elimination ------------------------------------------


def rref(field: Ring, rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form with pivots chosen left to right.

    Returns (nonzero rows, pivot columns).
    """
    _require_field(field)
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if not field.is_zero(M[i][c])), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = field.inv(M[r][c])
        M[r] = [field.mul(inv, a) for a in M[r]]
        for i in range(len(M)):
            if i != r and not field.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(field: Ring, rows: Sequence[Sequence]) -> int:
    return len(rref(field, rows)[0])


def nullspace(field: Ring, rows: Sequence[Sequence], ncols: int) -> list:
    """Basis of {v : M v = 0}, one vector per free column."""
    R, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(R, pivots):
            v[pc] = field.neg(row[f])
        basis.append(v)
    return basis


# --- subspaces ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A linearly independent list of vectors in k^(X), X finite."""

    field: Ring
    ambient: IndexSet
    basis: tuple

    def __post_init__(self):
        _require_field(self.field)
        require_finite(self.ambient)
        for v in self.basis:
            if v.index != self.ambient or v.ring != self.field:
                raise IndexMismatch("basis vector outside the ambient space")
        if rank(self.field, self.rows()) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")

    def rows(self) -> list:
        return [v.dense() for v in self.basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: FinVec) -> bool:
        return rank(self.field, self.rows() + [v.dense()]) == self.dim

    def issubspace(self, other: "SubspaceBasis") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient == other.ambient
            and self.dim == other.dim
            and self.issubspace(other)
        )

    __hash__ = None


def span(field: Ring, X: IndexSet, vectors: Iterable[FinVec]) -> SubspaceBasis:
    """Canonical (reduced echelon) basis of the span."""
    vectors = list(vectors)
    R, _ = rref(field, [v.dense() for v in vectors])
    return SubspaceBasis(field, X, tuple(FinVec(field, X, zip(X, r)) for r in R))


def orthogonal(W: SubspaceBasis) -> SubspaceBasis:
    """W-dagger: functionals (in dual-basis coordinates over X) vanishing on W."""
    k, X = W.field, W.ambient
    n = len(X)
    if W.dim == 0:
        basis = [[k.one if i == j else k.zero for j in range(n)] for i in range(n)]
    else:
        basis = nullspace(k, W.rows(), n)
    return span(k, X, [FinVec(k, X, zip(X, v)) for v in basis])


def codim_check(W: SubspaceBasis, report: Report | None = None) -> Report:
    rep = report or Report("codim", W.field.spec)
    n = len(W.ambient)
    Wd = orthogonal(W)
    rep.add("codim:dagger", n - Wd.dim == W.dim, [n, W.dim, Wd.dim])
    Wdd = orthogonal(Wd)
    missing = next((i for i, v in enumerate(W.basis) if not Wdd.contains(v)), None)
    rep.add("codim:inclusion", missing is None, ["basis", missing])
    rep.add("codim:double-dagger", Wdd == W, [W.dim, Wdd.dim])
    return rep


# --- finite-dimensional algebras ------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """Structure constants: ``mul`` sends delta_(a,b) to the product delta_a delta_b."""

    ring: Ring
    index: IndexSet
    mul: ColMap
    one: FinVec

    def __post_init__(self):
        require_finite(self.index)
        XX = ProductIndex(self.index, self.index)
        if self.mul.domain != XX or self.mul.codomain != self.index:
            raise IndexMismatch("multiplication must be a map k^(X*X) -> k^(X)")
        if self.one.index != self.index:
            raise IndexMismatch("unit must be a vector of k^(X)")

    def multiply(self, u: FinVec, v: FinVec) -> FinVec:
        return colmap_apply(self.mul, kron(u, v))

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.index == other.index
            and self.mul == other.mul
            and self.one == other.one
        )

    __hash__ = None


def algebra_from_table(ring: Ring, X: IndexSet, table: Iterable, one: Iterable) -> FiniteAlgebra:
    """``table`` holds (a, b, x, c): the x-coefficient of delta_a delta_b is c."""
    XX = ProductIndex(X, X)
    cols: dict = {}
    for a, b, x, c in table:
        cols.setdefault((a, b), []).append((x, c))
    mul = ColMap(ring, XX, X, {p: FinVec(ring, X, e) for p, e in cols.items()})
    return FiniteAlgebra(ring, X, mul, FinVec(ring, X, zip(X, one)))


def function_algebra(ring: Ring, X: IndexSet) -> FiniteAlgebra:
    """k^X with pointwise product, basis the indicator functions delta_x."""
    return algebra_from_table(ring, X, [(x, x, x, 1) for x in X], [1] * len(X))


def truncated_polynomial_algebra(ring: Ring, n: int) -> FiniteAlgebra:
    """k[t]/(t^n) on the monomial basis 1, t, ..., t^(n-1), labelled by exponent."""
    X = FiniteIndex(range(n))
    table = [(i, j, i + j, 1) for i in range(n) for j in range(n) if i + j < n]
    return algebra_from_table(ring, X, table, [1] + [0] * (n - 1))


def cyclic_group_algebra(ring: Ring, n: int) -> FiniteAlgebra:
    X = FiniteIndex(range(n))
    table = [(i, j, (i + j) % n, 1) for i in range(n) for j in range(n)]
    return algebra_from_table(ring, X, table, [1] + [0] * (n - 1))


def max_semigroup_algebra(ring: Ring, n: int) -> FiniteAlgebra:
    """The monoid ({0..n-1}, max) with identity 0."""
    X = FiniteIndex(range(n))
    table = [(i, j, max(i, j), 1) for i in range(n) for j in range(n)]
    return algebra_from_table(ring, X, table, [1] + [0] * (n - 1))


def upper_triangular_algebra(ring: Ring) -> FiniteAlgebra:
    """2x2 upper triangular matrices on e11, e12, e22 (noncommutative)."""
    X = FiniteIndex(["e11", "e12", "e22"])
    table = [
        ("e11", "e11", "e11", 1),
        ("e11", "e12", "e12", 1),
        ("e12", "e22", "e12", 1),
        ("e22", "e22", "e22", 1),
    ]
    return algebra_from_table(ring, X, table, [1, 0, 1])


def matrix_algebra(ring: Ring, n: int) -> FiniteAlgebra:
    labels = [f"e{i}{j}" for i in range(n) for j in range(n)]
    X = FiniteIndex(labels)
    table = [(f"e{i}{j}", f"e{j}{l}", f"e{i}{l}", 1) for i in range(n) for j in range(n) for l in range(n)]
    one = [1 if lab[1] == lab[2] else 0 for lab in labels]
    return algebra_from_table(ring, X, table, one)


def algebra_to_monoid(A: FiniteAlgebra) -> TopMonoid:
    """Read the structure constants as a monoid on k^X (finite X)."""
    R, X = A.ring, A.index
    mu = RowMap(R, A.mul.domain, X, colmap_transpose(A.mul).nonzero_columns())
    return TopMonoid(R, X, mu, provec_from_finvec(A.one))


def algebra_laws_check(A: FiniteAlgebra, report: Report | None = None) -> Report:
    R, X = A.ring, A.index
    rep = report or Report("algebra", R.spec)
    idX = identity_colmap(R, X)
    left = colmap_compose(A.mul, tensor_colmaps(A.mul, idX))
    right = colmap_compose(A.mul, tensor_colmaps(idX, A.mul))
    left = relabel_colmap(left, dom_map=assoc_label, domain=assoc_index(left.domain))
    rep.add("algebra:associativity", left == right, first_column_mismatch(left, right))
    u = ColMap(R, ONE_POINT, X, {UNIT_LABEL: A.one})
    lu = colmap_compose(A.mul, tensor_colmaps(u, idX))
    lu = ColMap(R, X, X, {p[1]: c for p, c in lu.nonzero_columns().items()})
    rep.add("algebra:left-unit", lu == idX, first_column_mismatch(lu, idX))
    ru = colmap_compose(A.mul, tensor_colmaps(idX, u))
    ru = ColMap(R, X, X, {p[0]: c for p, c in ru.nonzero_columns().items()})
    rep.add("algebra:right-unit", ru == idX, first_column_mismatch(ru, idX))
    return rep


def finite_dual(A: FiniteAlgebra) -> Coalgebra:
    """A^0 = A* for finite-dimensional A: delta = mul transposed, counit = evaluation at 1."""
    _require_field(A.ring)
    require_finite(A.index)
    return Coalgebra(A.ring, A.index, colmap_transpose(A.mul), provec_from_finvec(A.one))


def dual_algebra(C: Coalgebra) -> FiniteAlgebra:
    """C* with the convolution product; inverse of finite_dual."""
    R, X = C.ring, C.index
    require_finite(X)
    return FiniteAlgebra(R, X, colmap_transpose(C.delta), C.epsilon.to_finvec())


# --- algebra homomorphisms --------------------------------------------------


def _all_functionals(A: FiniteAlgebra, budget: int):
    k, X = A.ring, A.index
    if not k.is_finite:
        raise BudgetExceeded("enumeration needs a finite field")
    n = len(X)
    total = k.order**n
    if total > budget:
        raise BudgetExceeded(f"{total} candidate functionals exceed the budget {budget}")
    elems = list(k.elements())
    for values in itertools.product(elems, repeat=n):
        yield FinVec(k, X, zip(X, values))


def is_algebra_hom(A: FiniteAlgebra, ell: FinVec) -> bool:
    """Unital and multiplicative on basis pairs (enough by bilinearity)."""
    k, X = A.ring, A.index
    f = provec_from_finvec(ell)
    if functional_apply(A.one, f) != k.one:
        return False
    for a in X:
        for b in X:
            prod = A.mul.column((a, b))
            if functional_apply(prod, f) != k.mul(ell.get(a), ell.get(b)):
                return False
    return True


def algebra_homs_enumerate(A: FiniteAlgebra, budget: int = DEFAULT_BUDGET) -> list:
    """All unital algebra maps A -> k, by brute force over every functional."""
    return [ell for ell in _all_functionals(A, budget) if is_algebra_hom(A, ell)]


def function_algebra_homs(k: Ring, X: IndexSet, budget: int = DEFAULT_BUDGET) -> list:
    return algebra_homs_enumerate(function_algebra(k, X), budget)


# --- coreflexivity at finite scale -------------------------------------------


def _normalized_nonzero_vectors(k: Ring, X: IndexSet, budget: int):
    """One representative per line: first nonzero coordinate equal to 1."""
    n = len(X)
    if k.order**n > budget:
        raise BudgetExceeded(f"{k.order**n} candidates exceed the budget {budget}")
    elems = list(k.elements())
    for values in itertools.product(elems, repeat=n):
        first = next((c for c in values if not k.is_zero(c)), None)
        if first == k.one:
            yield FinVec(k, X, zip(X, values))


def is_ideal(A: FiniteAlgebra, I: SubspaceBasis) -> bool:
    X = A.index
    basis_vecs = [delta(A.ring, X, x) for x in X]
    return all(I.contains(A.multiply(h, b)) and I.contains(A.multiply(b, h)) for h in I.basis for b in basis_vecs)


def one_dimensional_subcoalgebras(C: Coalgebra, budget: int = DEFAULT_BUDGET) -> list:
    """Lines k c with delta(c) in k c (x) c."""
    k, X = C.ring, C.index
    found = []
    for c in _normalized_nonzero_vectors(k, X, budget):
        d = colmap_apply(C.delta, c)
        cc = kron(c, c)
        # cc has a coefficient 1 where c does, at (x0, x0) for x0 the first support label
        x0 = next(x for x in X if not k.is_zero(c.get(x)))
        lam = d.get((x0, x0))
        if d == cc.scale(lam) and not d.is_zero():
            found.append(c)
    return found


def coreflexivity_check(k: Ring, X: IndexSet, budget: int = DEFAULT_BUDGET, report: Report | None = None) -> Report:
    """Finite-X instance of the coreflexivity equivalences for the function algebra k^X.

    (i) the unital algebra maps k^X -> k are exactly the projections;
    (ii) the finite dual of k^X is the dual coalgebra of the Hadamard monoid;
    (iii) every ideal of codimension at most 1 is the orthogonal of a
        subcoalgebra of dimension at most 1 (hence closed).
    """
    _require_field(k)
    require_finite(X)
    rep = report or Report("findual", k.spec)
    A = function_algebra(k, X)

    homs = algebra_homs_enumerate(A, budget)
    projections = [delta(k, X, x) for x in X]
    rep.add("coreflexive:homs-are-projections", set(homs) == set(projections), [len(homs), len(X)])

    C_fin = finite_dual(A)
    C_top = top_dual_coalgebra(hadamard_monoid(k, X))
    G = grouplike_coalgebra(k, X)
    rep.add("coreflexive:finite-dual-equals-top-dual", C_fin == C_top, structure_difference(C_fin, C_top))
    rep.add("coreflexive:grouplike", C_fin == G, structure_difference(C_fin, G))

    # codimension 0: the whole algebra is the orthogonal of the zero subcoalgebra
    whole = span(k, X, projections)
    full = orthogonal(span(k, X, []))
    rep.add("coreflexive:codim-0-closed", full == whole, [full.dim, len(X)])

    lines = one_dimensional_subcoalgebras(C_fin, budget)
    daggers = [orthogonal(span(k, X, [c])) for c in lines]
    kernels = [orthogonal(span(k, X, [h])) for h in homs]
    ideals = []
    for h in _normalized_nonzero_vectors(k, X, budget):
        H = orthogonal(span(k, X, [h]))
        if is_ideal(A, H):
            ideals.append(H)
    every_closed = all(any(I == D for D in daggers) for I in ideals)
    every_kernel = all(any(I == K for K in kernels) for I in ideals)
    rep.add("coreflexive:codim-1-ideals-closed", every_closed, [len(ideals), len(daggers)])
    rep.add("coreflexive:codim-1-ideals-are-hom-kernels", every_kernel, [len(ideals), len(kernels)])
    rep.summary = {
        "hom_count": len(homs),
        "codim1_ideals": len(ideals),
        "one_dim_subcoalgebras": len(lines),
    }
    return rep


def algebraic_dual_agreement(F: ColMap, functionals: Iterable[ProVec]) -> bool:
    """The algebraic dual l |-> l o F, computed by definition on the basis,
    agrees with the underlying map of alg_dual(F)."""
    Fs = alg_dual(F)
    require_finite(F.domain)
    for ell in functionals:
        by_definition = [functional_apply(F.column(x), ell) for x in F.domain]
        via_transpose = rowmap_apply(Fs, ell).dense()
        if by_definition != via_transpose:
            return False
    return True
