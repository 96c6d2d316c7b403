import random

import pytest
from hypothesis import given, settings, strategies as st

from rigidity_dual import generate as gen
from rigidity_dual.duality import (
    DualNotRepresentable,
    alg_dual,
    colmap_transpose,
    contravariance_check,
    diagonal_demo,
    diagonal_functional_support,
    functional_apply,
    functional_from_oracle,
    gamma_nat_check,
    lambda_nat_check,
    sharp,
    top_dual,
)
from rigidity_dual.freemod import (
    ColMap,
    FiniteIndex,
    FinVec,
    IndexMismatch,
    colmap_apply,
    colmap_from_triples,
    delta,
    identity_colmap,
    naturals,
    zero_vec,
)
from rigidity_dual.rings import GF, ZZ, Zmod
from rigidity_dual.topfree import (
    RowMap,
    identity_rowmap,
    ones,
    provec_from_dense,
    provec_from_finvec,
    rowmap_apply,
    rowmap_from_triples,
    zero_rowmap,
)

from helpers import SMALL_RINGS, colmap_dense, colmaps, finvecs, index, modulus, rowmap_dense, rowmaps
from oracles import dot, transpose

AB = FiniteIndex(["a", "b"])
C = FiniteIndex(["c"])


def test_functional_apply_examples():
    f = provec_from_dense(ZZ, AB, [7, -2])
    assert functional_apply(delta(ZZ, AB, "a"), f) == 7
    assert functional_apply(zero_vec(ZZ, AB), f) == 0
    p = FinVec(ZZ, AB, {"a": 2, "b": 1})
    assert functional_apply(p, ones(ZZ, AB)) == dot([2, 1], [1, 1]) == 3
    with pytest.raises(IndexMismatch):
        functional_apply(delta(ZZ, C, "c"), f)


def test_functional_apply_lazy_vector():
    N = naturals()
    f = ones(ZZ, N)
    p = FinVec(ZZ, N, {3: 2, 10**9: 5})
    assert functional_apply(p, f) == 7


def test_functional_from_oracle_examples():
    R = GF(7)
    X = index(4)
    assert functional_from_oracle(lambda v: v("x1"), X, R) == delta(R, X, "x1")
    assert functional_from_oracle(lambda v: 0, X, R) == zero_vec(R, X)
    dense = [3, 0, 6, 5]
    ell = lambda v: dot(dense, v.dense(), 7)  # noqa: E731
    assert functional_from_oracle(ell, X, R).dense() == dense


def test_functional_from_oracle_needs_finite_index():
    with pytest.raises(ValueError, match="rigidity extraction requires finite enumeration"):
        functional_from_oracle(lambda v: 0, naturals(), ZZ)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_rigidity_round_trip(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    X = index(data.draw(st.integers(1, 6)))
    p = data.draw(finvecs(R, X))
    assert functional_from_oracle(lambda f: functional_apply(p, f), X, R) == p


def test_alg_dual_examples():
    R = ZZ
    assert alg_dual(identity_colmap(R, AB)) == identity_rowmap(R, AB)
    F = colmap_from_triples(R, AB, C, [("a", "c", 1), ("b", "c", 1)])
    Fs = alg_dual(F)
    assert (Fs.domain, Fs.codomain) == (C, AB)
    assert rowmap_dense(Fs) == transpose(colmap_dense(F)) == [[1], [1]]
    assert Fs.row("a") == FinVec(R, C, {"c": 1})


def test_alg_dual_double_transpose_z6():
    R = Zmod(6)
    X = index(4)
    F = gen.colmap(R, X, X, random.Random(3))
    M = colmap_dense(F)
    assert rowmap_dense(alg_dual(F)) == transpose(M)
    assert colmap_dense(top_dual(alg_dual(F))) == transpose(transpose(M)) == M


def test_top_dual_examples():
    R = GF(3)
    X = index(4)
    assert top_dual(identity_rowmap(R, X)) == identity_colmap(R, X)
    diag = RowMap(R, X, X, {x: delta(R, X, x) for x in X})
    assert top_dual(diag) == identity_colmap(R, X)
    F = gen.rowmap(R, X, X, random.Random(11))
    assert colmap_dense(top_dual(F)) == transpose(rowmap_dense(F))


def test_duals_on_lazy_indices_stay_lazy():
    N = naturals()
    shift = ColMap(ZZ, N, N, column_oracle=lambda n: delta(ZZ, N, n + 1))
    S = alg_dual(shift)
    # (S f)(n) = f(n + 1)
    assert S.row(4) == delta(ZZ, N, 5)
    f = provec_from_finvec(FinVec(ZZ, N, {7: 3}))
    assert rowmap_apply(S, f)(6) == 3
    assert top_dual(S).column(4) == shift.column(4)


def test_colmap_transpose():
    R = ZZ
    F = colmap_from_triples(R, AB, C, [("a", "c", 2), ("b", "c", 3)])
    T = colmap_transpose(F)
    assert colmap_dense(T) == transpose(colmap_dense(F))
    N = naturals()
    shift = ColMap(R, N, N, column_oracle=lambda n: delta(R, N, n + 1))
    with pytest.raises(DualNotRepresentable, match="dual not representable"):
        colmap_transpose(shift)
    back = colmap_transpose(shift, certificate=lambda y: [y - 1] if y > 0 else [])
    assert back.column(5) == delta(R, N, 4)
    assert back.column(0) == zero_vec(R, N)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_double_dual_identities(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    X, Y = index(data.draw(st.integers(1, 6)), "x"), index(data.draw(st.integers(1, 6)), "y")
    F = data.draw(colmaps(R, X, Y))
    G = data.draw(rowmaps(R, X, Y))
    assert top_dual(alg_dual(F)) == F
    assert alg_dual(top_dual(G)) == G
    assert rowmap_dense(alg_dual(F)) == transpose(colmap_dense(F))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_contravariance(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    X, Y, Z = (index(data.draw(st.integers(1, 4)), p) for p in "xyz")
    F, G = data.draw(colmaps(R, X, Y)), data.draw(colmaps(R, Y, Z))
    assert contravariance_check(G, F).passed


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_pairing_compatibility(data):
    # <F p, l> == <p, F* l> for every vector p and functional l
    R = data.draw(st.sampled_from(SMALL_RINGS))
    X, Y = index(data.draw(st.integers(1, 5)), "x"), index(data.draw(st.integers(1, 5)), "y")
    F = data.draw(colmaps(R, X, Y))
    p = data.draw(finvecs(R, X))
    ell = provec_from_finvec(data.draw(finvecs(R, Y)))
    assert functional_apply(colmap_apply(F, p), ell) == functional_apply(p, rowmap_apply(alg_dual(F), ell))
    m = modulus(R)
    assert functional_apply(p, rowmap_apply(alg_dual(F), ell)) == dot(
        p.dense(), [dot(col, ell.dense(), m) for col in transpose(colmap_dense(F))], m
    )


def _samples(R, X, Y, rng):
    vectors = [gen.finvec(R, X, rng) for _ in range(3)]
    functionals = [gen.provec(R, Y, rng) for _ in range(3)]
    return vectors, functionals


@pytest.mark.parametrize("seed", range(20))
def test_lambda_check_passes(seed):
    rng = random.Random(seed)
    R = GF(5)
    X, Y = index(rng.randint(1, 6), "x"), index(rng.randint(1, 6), "y")
    F = gen.colmap(R, X, Y, rng)
    vectors, functionals = _samples(R, X, Y, rng)
    assert lambda_nat_check(F, vectors, functionals).passed
    assert lambda_nat_check(identity_colmap(R, X)).passed


@pytest.mark.parametrize("seed", range(20))
def test_gamma_check_passes(seed):
    rng = random.Random(1000 + seed)
    R = Zmod(6)
    B, D = index(rng.randint(1, 6), "b"), index(rng.randint(1, 6), "d")
    F = gen.rowmap(R, B, D, rng)
    vectors = [gen.provec(R, B, rng) for _ in range(3)]
    functionals = [gen.finvec(R, D, rng) for _ in range(3)]
    assert gamma_nat_check(F, vectors, functionals).passed
    assert gamma_nat_check(identity_rowmap(R, B)).passed


def _shifted_transpose(F):
    # a plausible-looking bug: rows are shifted by one position
    good = alg_dual(F)
    labels = list(good.codomain)
    rows = {labels[(i + 1) % len(labels)]: good.row(x) for i, x in enumerate(labels)}
    return RowMap(F.ring, good.domain, good.codomain, rows)


def test_corrupted_transpose_is_detected():
    R = GF(5)
    F = colmap_from_triples(R, AB, AB, [("a", "a", 1), ("b", "a", 2)])
    rep = lambda_nat_check(F, alg=_shifted_transpose)
    assert not rep.passed
    assert {c.law for c in rep.failures} >= {"lambda:double-dual", "lambda:transpose-entries"}
    G = rowmap_from_triples(R, AB, AB, [("a", "a", 1), ("b", "a", 2)])
    rep = gamma_nat_check(G, top=lambda F: top_dual(zero_rowmap(R, AB, AB)))
    assert not rep.passed


def test_sharp_examples():
    R = ZZ
    X = index(3)
    assert sharp({x: delta(R, X, x) for x in X}, X, X, R) == identity_rowmap(R, X)
    assert sharp({}, X, AB, R) == zero_rowmap(R, X, AB)
    U = FiniteIndex(["u"])
    f = {"u": FinVec(R, AB, {"a": 1, "b": 1})}
    v = provec_from_dense(R, AB, [3, 4])
    assert rowmap_apply(sharp(f, AB, U, R), v)("u") == dot([1, 1], [3, 4]) == 7


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_sharp_defining_equation(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    B, X = index(data.draw(st.integers(1, 4)), "b"), index(data.draw(st.integers(1, 4)), "x")
    f = {x: data.draw(finvecs(R, B)) for x in X}
    v = provec_from_finvec(data.draw(finvecs(R, B)))
    S = sharp(f, B, X, R)
    for x in X:
        assert rowmap_apply(S, v)(x) == functional_apply(f[x], v)


def _diagonal_support_oracle(n, mod):
    """Direct evaluation: l(delta_x)(x') = delta_x(x')(x') = [x == x'] * 1."""
    hat = [[(1 if x == xx else 0) % mod for xx in range(n)] for x in range(n)]
    return sum(1 for x in range(n) if any(hat[x]))


def test_diagonal_demo_examples():
    assert diagonal_functional_support(1, GF(2))[0] == 1
    rep = diagonal_demo(3, GF(2))
    assert rep.passed and rep.summary["support_size"] == 3
    rep = diagonal_demo(8, Zmod(4))
    assert rep.summary["support_size"] == _diagonal_support_oracle(8, 4) == 8
    assert diagonal_functional_support(5, ZZ) == (5, [1] * 5)


def test_diagonal_demo_rejects_zero():
    with pytest.raises(ValueError):
        diagonal_functional_support(0, GF(2))
