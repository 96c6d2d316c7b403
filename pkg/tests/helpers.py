"""Hypothesis strategies and dense conversions shared by the test modules."""

from hypothesis import strategies as st

from rigidity_dual.freemod import ColMap, FiniteIndex, FinVec
from rigidity_dual.rings import GF, ZZ, Zmod
from rigidity_dual.topfree import RowMap

SMALL_RINGS = [ZZ, Zmod(4), Zmod(6), GF(2), GF(3), GF(5), GF(7)]


def index(n, prefix="x"):
    return FiniteIndex([f"{prefix}{i}" for i in range(n)])


def modulus(R):
    return None if R == ZZ else R.order


def scalars(R):
    if R == ZZ:
        return st.integers(-5, 5)
    return st.integers(0, R.order - 1)


def finvecs(R, X):
    return st.lists(scalars(R), min_size=len(X), max_size=len(X)).map(
        lambda vals: FinVec(R, X, zip(X, vals))
    )


def colmaps(R, X, Y):
    return st.lists(finvecs(R, Y), min_size=len(X), max_size=len(X)).map(
        lambda cols: ColMap(R, X, Y, dict(zip(X, cols)))
    )


def rowmaps(R, B, D):
    return st.lists(finvecs(R, B), min_size=len(D), max_size=len(D)).map(
        lambda rows: RowMap(R, B, D, dict(zip(D, rows)))
    )


def colmap_dense(F):
    """Matrix with rows indexed by the codomain, columns by the domain."""
    return [[F.entry(y, x) for x in F.domain] for y in F.codomain]


def rowmap_dense(F):
    return [[F.entry(d, b) for b in F.domain] for d in F.codomain]


@st.composite
def ring_and_sizes(draw, rings=SMALL_RINGS, max_size=4, count=2):
    R = draw(st.sampled_from(rings))
    sizes = [draw(st.integers(1, max_size)) for _ in range(count)]
    return R, sizes
