import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from rigidity_dual import generate as gen
from rigidity_dual.duality import alg_dual, top_dual
from rigidity_dual.freemod import (
    FiniteIndex,
    FinVec,
    IndexMismatch,
    ProductIndex,
    colmap_apply,
    delta,
    identity_colmap,
    kron,
    tensor_colmaps,
)
from rigidity_dual.moncat import (
    Coalgebra,
    TopMonoid,
    alg_dual_monoid,
    coalgebra_laws_check,
    faithfulness_check,
    grouplike_coalgebra,
    hadamard_monoid,
    is_cocommutative,
    is_commutative,
    monoid_from_structure_constants,
    monoid_laws_check,
    monoidal_transformation_check,
    top_dual_coalgebra,
    ua_multiply,
    unit_coherence_check,
    weighted_diagonal_monoid,
)
from rigidity_dual.findual import algebra_to_monoid, upper_triangular_algebra
from rigidity_dual.rings import GF, ZZ, Zmod
from rigidity_dual.topfree import (
    ProVec,
    ostar_maps,
    provec_from_dense,
    provec_from_finvec,
    zero_provec,
)

from helpers import SMALL_RINGS, index, modulus, rowmap_dense
from oracles import kron_mat, transpose

AB = FiniteIndex(["a", "b"])


def dense_product(A, u, v, m):
    """Oracle for the bilinear product from raw structure constants."""
    X = list(A.index)
    out = []
    for x in X:
        s = sum(A.mu.entry(x, (a, b)) * u[i] * v[j] for i, a in enumerate(X) for j, b in enumerate(X))
        out.append(s if m is None else s % m)
    return out


def dense_laws_hold(A, m):
    """Brute-force associativity and unit laws on basis triples."""
    n = len(A.index)
    basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    eta = A.eta.dense()
    for e1, e2, e3 in product(basis, repeat=3):
        lhs = dense_product(A, dense_product(A, e1, e2, m), e3, m)
        rhs = dense_product(A, e1, dense_product(A, e2, e3, m), m)
        if lhs != rhs:
            return False
    return all(dense_product(A, eta, e, m) == e == dense_product(A, e, eta, m) for e in basis)


def test_hadamard_single_point():
    R = ZZ
    X = FiniteIndex(["a"])
    H = hadamard_monoid(R, X)
    f, g = provec_from_dense(R, X, [6]), provec_from_dense(R, X, [-4])
    assert ua_multiply(H, f, g).dense() == [-24]
    assert H.mu.row("a") == delta(R, ProductIndex(X, X), ("a", "a"))


def test_hadamard_pointwise_examples():
    R = Zmod(6)
    H = hadamard_monoid(R, AB)
    u, v = provec_from_dense(R, AB, [2, 3]), provec_from_dense(R, AB, [5, 2])
    assert ua_multiply(H, u, v).dense() == [(2 * 5) % 6, (3 * 2) % 6] == [4, 0]
    assert ua_multiply(H, H.eta, v) == v
    H = hadamard_monoid(ZZ, AB)
    u, v = provec_from_dense(ZZ, AB, [2, 3]), provec_from_dense(ZZ, AB, [5, 7])
    assert ua_multiply(H, u, v).dense() == [10, 21]
    assert ua_multiply(H, zero_provec(ZZ, AB), v) == zero_provec(ZZ, AB)


def test_ua_multiply_index_mismatch():
    H = hadamard_monoid(ZZ, AB)
    with pytest.raises(IndexMismatch):
        ua_multiply(H, zero_provec(ZZ, index(3)), H.eta)


def test_grouplike_examples():
    R = GF(2)
    X = FiniteIndex(["a"])
    C = grouplike_coalgebra(R, X)
    assert C.delta.column("a") == delta(R, ProductIndex(X, X), ("a", "a"))
    assert C.counit(delta(R, X, "a")) == 1
    rep = coalgebra_laws_check(grouplike_coalgebra(R, AB))
    assert rep.passed and len(rep.cases) == 3


def test_grouplike_coassociativity_by_hand():
    R = ZZ
    C = grouplike_coalgebra(R, AB)
    idX = identity_colmap(R, AB)
    for x in AB:
        col = colmap_apply(tensor_colmaps(C.delta, idX), C.delta.column(x))
        # ((x,x),x) before reindexing, (x,(x,x)) after
        assert col.items() == [(((x, x), x), 1)]
        col2 = colmap_apply(tensor_colmaps(idX, C.delta), C.delta.column(x))
        assert col2.items() == [((x, (x, x)), 1)]


@pytest.mark.parametrize("R", SMALL_RINGS, ids=lambda R: R.spec)
@pytest.mark.parametrize("n", range(1, 7))
def test_hadamard_dualizes_to_grouplike(R, n):
    X = index(n)
    H, G = hadamard_monoid(R, X), grouplike_coalgebra(R, X)
    assert top_dual_coalgebra(H) == G
    assert alg_dual_monoid(G) == H
    assert monoid_laws_check(H).passed and coalgebra_laws_check(G).passed


def test_one_point_structures():
    R = GF(3)
    X = FiniteIndex(["a"])
    A = monoid_from_structure_constants(R, X, [("a", "a", "a", 1)], [1])
    C = top_dual_coalgebra(A)
    assert C == grouplike_coalgebra(R, X)
    assert alg_dual_monoid(C) == A


@pytest.mark.parametrize("seed", range(10))
def test_random_monoids_satisfy_laws(seed):
    rng = random.Random(seed)
    R = rng.choice([GF(3), GF(5), Zmod(4), ZZ])
    n = rng.randint(1, 4)
    name, A = gen.monoid(R, n, rng)
    m = modulus(R)
    assert dense_laws_hold(A, m), name
    assert monoid_laws_check(A).passed
    C = top_dual_coalgebra(A, verify=True)
    assert coalgebra_laws_check(C).passed
    assert alg_dual_monoid(C) == A
    assert top_dual_coalgebra(alg_dual_monoid(C)) == C
    # brute-force transpose of the multiplication table
    assert [[C.delta.entry(p, x) for x in A.index] for p in A.mu.domain] == [
        list(r) for r in zip(*rowmap_dense(A.mu))
    ]


@pytest.mark.parametrize("seed", range(10))
def test_diagonal_monoids_gf3(seed):
    rng = random.Random(seed)
    R = GF(3)
    X = index(rng.randint(1, 5))
    A = weighted_diagonal_monoid(R, X, {x: rng.choice([1, 2]) for x in X})
    assert dense_laws_hold(A, 3)
    assert monoid_laws_check(A).passed


def test_corrupted_unit_fails_with_witness():
    R = GF(5)
    X = index(3)
    A = gen.corrupt_unit(hadamard_monoid(R, X))
    rep = monoid_laws_check(A)
    assert not rep.passed
    laws = {c.law for c in rep.failures}
    assert laws == {"monoid:left-unit", "monoid:right-unit"}
    assert all(c.witness is not None for c in rep.failures)
    with pytest.raises(ValueError, match="not a monoid"):
        top_dual_coalgebra(A, verify=True)


def test_corrupted_multiplication_fails():
    R = Zmod(4)
    _, A = gen.monoid(R, 3, random.Random(2))
    B = gen.corrupt_multiplication(A)
    assert not dense_laws_hold(B, 4)
    assert not monoid_laws_check(B).passed


def test_corrupted_counit_fails():
    R = GF(2)
    G = grouplike_coalgebra(R, AB)
    bad = Coalgebra(R, AB, G.delta, zero_provec(R, AB))
    rep = coalgebra_laws_check(bad)
    assert {c.law for c in rep.failures} == {"coalgebra:left-counit", "coalgebra:right-counit"}
    with pytest.raises(ValueError, match="not a coalgebra"):
        alg_dual_monoid(bad, verify=True)


@pytest.mark.parametrize("seed", range(10))
def test_commutativity_transfer(seed):
    rng = random.Random(100 + seed)
    R = rng.choice([GF(2), GF(3), Zmod(4)])
    _, A = gen.monoid(R, rng.randint(1, 4), rng)
    assert is_commutative(A) == is_cocommutative(top_dual_coalgebra(A))


def test_noncommutative_example():
    A = algebra_to_monoid(upper_triangular_algebra(GF(3)))
    assert monoid_laws_check(A).passed
    assert not is_commutative(A)
    assert not is_cocommutative(top_dual_coalgebra(A))


def test_faithfulness():
    R = GF(3)
    X = index(3)
    H = hadamard_monoid(R, X)
    W = weighted_diagonal_monoid(R, X, {x: 1 for x in X})
    assert faithfulness_check(H, W) and H == W
    W2 = weighted_diagonal_monoid(R, X, {"x0": 2, "x1": 1, "x2": 1})
    assert not faithfulness_check(H, W2) and H != W2


def test_structure_index_validation():
    R = ZZ
    H = hadamard_monoid(R, AB)
    with pytest.raises(IndexMismatch):
        TopMonoid(R, index(3), H.mu, H.eta)
    with pytest.raises(IndexMismatch):
        Coalgebra(R, AB, identity_colmap(R, AB), H.eta)


@pytest.mark.parametrize("seed", range(20))
def test_monoidal_exchange_gf5(seed):
    rng = random.Random(seed)
    R = GF(5)
    X1, Y1 = index(rng.randint(1, 3), "a"), index(rng.randint(1, 3), "b")
    X2, Y2 = index(rng.randint(1, 3), "c"), index(rng.randint(1, 3), "d")
    F, G = gen.rowmap(R, X1, Y1, rng), gen.rowmap(R, X2, Y2, rng)
    H, K = gen.colmap(R, X1, Y1, rng), gen.colmap(R, X2, Y2, rng)
    samples = [(gen.finvec(R, X1, rng), gen.finvec(R, X2, rng), gen.provec(R, X1, rng), gen.provec(R, X2, rng))]
    rep = monoidal_transformation_check([(F, G)], [(H, K)], samples)
    assert rep.passed
    # dense oracle: transpose of a Kronecker product is the Kronecker product of transposes
    lhs = [[top_dual(ostar_maps(F, G)).entry(b, d) for d in ProductIndex(Y1, Y2)] for b in ProductIndex(X1, X2)]
    assert lhs == kron_mat(transpose(rowmap_dense(F)), transpose(rowmap_dense(G)), 5)


def test_monoidal_check_detects_corrupted_tensor():
    R = GF(5)
    X = index(2)
    F = gen.rowmap(R, X, X, random.Random(1))

    def bad_tensor(F, G):
        good = tensor_colmaps(F, G)
        cols = good.nonzero_columns()
        first = next(iter(good.domain))
        cols[first] = cols.get(first, FinVec(R, good.codomain, {})) + delta(R, good.codomain, next(iter(good.codomain)))
        return type(good)(R, good.domain, good.codomain, cols)

    rep = monoidal_transformation_check([(F, F)], tensor_impl=bad_tensor)
    assert not rep.passed


def test_monoidal_check_detects_corrupted_kron():
    R = GF(3)
    X = index(2)
    def bad_kron(u, v):
        return kron(u, v).scale(2)

    samples = [(delta(R, X, "x0"), delta(R, X, "x1"), provec_from_finvec(delta(R, X, "x0")),
                provec_from_finvec(delta(R, X, "x1")))]
    assert monoidal_transformation_check(element_samples=samples).passed
    assert not monoidal_transformation_check(element_samples=samples, kron_impl=bad_kron).passed


def test_unit_coherence():
    for R in SMALL_RINGS:
        assert unit_coherence_check(R).passed


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_dualization_round_trip_property(data):
    R = data.draw(st.sampled_from([GF(2), GF(3), Zmod(4)]))
    n = data.draw(st.integers(1, 5))
    seed = data.draw(st.integers(0, 10**6))
    _, A = gen.monoid(R, n, random.Random(seed))
    C = top_dual_coalgebra(A)
    assert alg_dual_monoid(C) == A
    assert top_dual_coalgebra(alg_dual_monoid(C)) == C
    assert C.delta == top_dual(A.mu) and alg_dual(C.delta) == A.mu
    assert isinstance(C.epsilon, ProVec)
