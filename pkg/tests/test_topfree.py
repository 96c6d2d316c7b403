import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rigidity_dual.freemod import FiniteIndex, FinVec, IndexMismatch, delta, kron, naturals, zero_vec
from rigidity_dual.rings import GF, ZZ, EnumerationUnavailable, Zmod
from rigidity_dual.topfree import (
    NotSummable,
    ProVec,
    RowMap,
    basis_change,
    basis_expansion,
    discrete_sum,
    delta_provec,
    identity_rowmap,
    ones,
    ostar_elements,
    ostar_maps,
    provec_from_dense,
    provec_from_finvec,
    rowmap_apply,
    rowmap_compose,
    rowmap_from_triples,
    zero_provec,
    zero_rowmap,
)

from helpers import SMALL_RINGS, finvecs, index, modulus, rowmap_dense, rowmaps
from oracles import matmul, matvec

AB = FiniteIndex(["a", "b"])
ABC = FiniteIndex(["a", "b", "c"])
CD = FiniteIndex(["c", "d"])


def test_provec_from_finvec():
    p = provec_from_finvec(delta(ZZ, AB, "a"))
    assert p("a") == 1 and p("b") == 0
    assert provec_from_finvec(zero_vec(ZZ, AB)) == zero_provec(ZZ, AB)
    v = FinVec(ZZ, AB, {"a": 2, "b": 3})
    assert provec_from_finvec(v).dense() == [2, 3]
    assert provec_from_finvec(v).support_hint == {"a", "b"}


def test_provec_checked_access():
    p = ones(ZZ, AB)
    with pytest.raises(KeyError):
        p("z")


def test_provec_lazy_support_needs_hint():
    N = naturals()
    v = ProVec(ZZ, N, lambda n: n % 2)
    with pytest.raises(EnumerationUnavailable):
        v.support()
    with pytest.raises(EnumerationUnavailable):
        v == v
    assert v.agrees_on(ProVec(ZZ, N, lambda n: n & 1), range(50))
    w = ProVec(ZZ, N, lambda n: 1 if n in (3, 7) else 0, support_hint=[3, 7, 9])
    assert w.support() == {3, 7}


def test_rowmap_apply_examples():
    R = ZZ
    v = provec_from_dense(R, ABC, [2, -1, 5])
    assert rowmap_apply(identity_rowmap(R, ABC), v) == v
    c = {"a": 3, "b": 0, "c": -2}
    diag = RowMap(R, ABC, ABC, {x: FinVec(R, ABC, {x: c[x]}) for x in ABC})
    assert rowmap_apply(diag, v).dense() == [c[x] * v(x) for x in ABC]
    F = rowmap_from_triples(R, ABC, AB, [("a", "b", 2), ("b", "c", 1)])
    assert rowmap_apply(F, zero_provec(R, ABC)) == zero_provec(R, AB)
    with pytest.raises(IndexMismatch):
        rowmap_apply(F, zero_provec(R, AB))


def test_rowmap_apply_propagates_hint():
    R = ZZ
    F = rowmap_from_triples(R, ABC, AB, [("a", "b", 2), ("b", "c", 1)])
    out = rowmap_apply(F, provec_from_finvec(delta(R, ABC, "b")))
    assert out.support_hint == {"a"}
    assert out.dense() == [2, 0]


def test_rowmap_lazy_codomain():
    N = naturals()
    # (Fv)(n) = v(n) + v(n+1) is row-finite even though N is infinite
    F = RowMap(ZZ, N, N, row_oracle=lambda n: FinVec(ZZ, N, {n: 1, n + 1: 1}))
    v = ProVec(ZZ, N, lambda n: n * n)
    out = rowmap_apply(F, v)
    assert [out(n) for n in range(5)] == [n * n + (n + 1) ** 2 for n in range(5)]


def test_rowmap_compose_examples():
    R = GF(3)
    F = rowmap_from_triples(R, ABC, AB, [("a", "b", 2), ("b", "c", 1)])
    assert rowmap_compose(identity_rowmap(R, AB), F) == F
    assert rowmap_compose(zero_rowmap(R, AB, CD), F) == zero_rowmap(R, ABC, CD)
    with pytest.raises(IndexMismatch):
        rowmap_compose(F, F)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_rowmap_compose_matches_dense(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    B, D, E = index(3, "b"), index(data.draw(st.integers(1, 4)), "d"), index(data.draw(st.integers(1, 4)), "e")
    F, G = data.draw(rowmaps(R, B, D)), data.draw(rowmaps(R, D, E))
    m = modulus(R)
    GF_ = rowmap_compose(G, F)
    assert all(isinstance(r, FinVec) for r in GF_.nonzero_rows().values())
    assert rowmap_dense(GF_) == matmul(rowmap_dense(G), rowmap_dense(F), m)
    v = provec_from_finvec(data.draw(finvecs(R, B)))
    assert rowmap_apply(F, v).dense() == matvec(rowmap_dense(F), v.dense(), m)


def test_ostar_elements_examples():
    R = ZZ
    P = ostar_elements(delta_provec(R, AB, "a"), delta_provec(R, CD, "c"))
    assert P.dense() == [1, 0, 0, 0]
    f = provec_from_dense(R, AB, [4, 5])
    assert ostar_elements(f, zero_provec(R, CD)).support() == frozenset()
    all_ones = ostar_elements(ones(R, AB), ones(R, CD))
    assert all_ones == ones(R, all_ones.index)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_ostar_agrees_with_kron(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    X, Y = index(data.draw(st.integers(1, 4)), "x"), index(data.draw(st.integers(1, 3)), "y")
    u, u2, v = data.draw(finvecs(R, X)), data.draw(finvecs(R, X)), data.draw(finvecs(R, Y))
    pu, pu2, pv = map(provec_from_finvec, (u, u2, v))
    assert ostar_elements(pu, pv) == provec_from_finvec(kron(u, v))
    assert ostar_elements(pu + pu2, pv) == ostar_elements(pu, pv) + ostar_elements(pu2, pv)


def test_ostar_maps_examples():
    R = GF(5)
    I = ostar_maps(identity_rowmap(R, AB), identity_rowmap(R, CD))
    assert I == identity_rowmap(R, I.domain)
    F = rowmap_from_triples(R, AB, CD, [("c", "a", 2)])
    Z = ostar_maps(F, zero_rowmap(R, AB, AB))
    assert Z.nonzero_rows() == {}


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_ostar_maps_exchange(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    B1, D1 = index(data.draw(st.integers(1, 3)), "b"), index(2, "d")
    B2, D2 = index(2, "p"), index(data.draw(st.integers(1, 3)), "q")
    F, G = data.draw(rowmaps(R, B1, D1)), data.draw(rowmaps(R, B2, D2))
    u = provec_from_finvec(data.draw(finvecs(R, B1)))
    v = provec_from_finvec(data.draw(finvecs(R, B2)))
    lhs = rowmap_apply(ostar_maps(F, G), ostar_elements(u, v))
    rhs = ostar_elements(rowmap_apply(F, u), rowmap_apply(G, v))
    assert lhs == rhs


def test_discrete_sum_examples():
    R = ZZ
    f = provec_from_dense(R, ABC, [3, 0, -2])
    family = {x: provec_from_finvec(delta(R, ABC, x).scale(f(x))) for x in ABC}
    assert discrete_sum(family, R, ABC) == f
    assert discrete_sum({}, R, ABC) == zero_provec(R, ABC)
    p = provec_from_finvec(FinVec(R, ABC, {"a": 1, "b": 2}))
    q = provec_from_finvec(FinVec(R, ABC, {"b": 5, "c": 7}))
    assert discrete_sum({0: p, 1: q}, R, ABC).dense() == [1 + 0, 2 + 5, 0 + 7]


def test_discrete_sum_lazy_family():
    N = naturals()
    family = {k: provec_from_finvec(delta(ZZ, N, k).scale(k)) for k in range(100)}
    s = discrete_sum(family, ZZ, N, contributors=lambda d: (d,) if d < 100 else ())
    assert [s(n) for n in (0, 5, 99, 150)] == [0, 5, 99, 0]


class _ConstantFamily(dict):
    """Every key maps to the same vector; used to feed an infinite family."""

    def __init__(self, v):
        super().__init__({0: v})
        self._v = v

    def __getitem__(self, k):
        return self._v


def test_discrete_sum_not_summable():
    N = naturals()
    const = ones(ZZ, N)
    family = _ConstantFamily(const)
    s = discrete_sum(family, ZZ, N, contributors=lambda d: itertools.count(), max_terms=1000)
    with pytest.raises(NotSummable, match="not summable"):
        s(0)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_basis_expansion_reconstructs(data):
    R = data.draw(st.sampled_from(SMALL_RINGS))
    X = index(data.draw(st.integers(1, 6)))
    v = provec_from_finvec(data.draw(finvecs(R, X)))
    assert basis_expansion(v) == v


def test_basis_change_examples():
    R = GF(2)
    assert basis_change([(x, x) for x in AB], AB, AB, R) == identity_rowmap(R, AB)
    s = basis_change([("a", "b"), ("b", "a")], AB, AB, R)
    assert rowmap_compose(s, s) == identity_rowmap(R, AB)
    shift = basis_change([("a", "b"), ("b", "c"), ("c", "a")], ABC, ABC, R)
    # row d is delta at the preimage of d: a <- c, b <- a, c <- b
    perm = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert rowmap_dense(shift) == perm
    inv = basis_change([("b", "a"), ("c", "b"), ("a", "c")], ABC, ABC, R)
    assert rowmap_compose(inv, shift) == identity_rowmap(R, ABC)


def test_basis_change_rejects_non_bijection():
    with pytest.raises(ValueError, match="not a bijection"):
        basis_change([("a", "c"), ("b", "c")], AB, CD, ZZ)
    with pytest.raises(ValueError, match="not a bijection"):
        basis_change([("a", "c")], AB, CD, ZZ)


def test_rowmap_rows_must_be_finite():
    with pytest.raises(TypeError):
        RowMap(ZZ, AB, AB, {"a": ones(ZZ, AB)})


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_rowmaps_equal_on_basis_are_equal(data):
    R = data.draw(st.sampled_from([Zmod(4), GF(3), ZZ]))
    B, D = index(3, "b"), index(3, "d")
    F, G = data.draw(rowmaps(R, B, D)), data.draw(rowmaps(R, B, D))
    on_basis = all(rowmap_apply(F, delta_provec(R, B, b)) == rowmap_apply(G, delta_provec(R, B, b)) for b in B)
    assert on_basis == (F == G)
