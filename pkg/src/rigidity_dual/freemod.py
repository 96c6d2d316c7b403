"""Free modules R^(X): index sets, finitely-supported vectors, column-finite maps.

Elements of a tensor product R^(X) (x) R^(Y) are stored as vectors over the
product index X*Y, so the canonical isomorphism between the two is the
identity of representation and ``kron`` is the only constructor.
"""

from __future__ import annotations

import itertools
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

from .rings import EnumerationUnavailable, Ring, RingMismatch

Label = Hashable


class IndexMismatch(ValueError):
    pass


class NotInIndex(KeyError):
    pass


# --- index sets -------------------------------------------------------------


class IndexSet:
    is_finite = True

    def __contains__(self, label) -> bool:
        raise NotImplementedError

    def __iter__(self) -> Iterator[Label]:
        raise NotImplementedError

    def __len__(self) -> int:
        raise NotImplementedError

    def sort_key(self, label):
        raise NotImplementedError

    def check(self, label) -> None:
        if label not in self:
            raise NotInIndex(f"label {label!r} is not in the index")

    def sorted(self, labels: Iterable[Label]) -> list:
        return sorted(labels, key=self.sort_key)


class FiniteIndex(IndexSet):
    """An ordered list of distinct labels."""

    __slots__ = ("labels", "_pos")

    def __init__(self, labels: Iterable[Label]):
        labels = tuple(labels)
        pos = {}
        for i, x in enumerate(labels):
            if x in pos:
                raise ValueError(f"duplicate label {x!r}")
            pos[x] = i
        self.labels = labels
        self._pos = pos

    def __contains__(self, label):
        try:
            return label in self._pos
        except TypeError:
            return False

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def sort_key(self, label):
        return self._pos[label]

    def position(self, label) -> int:
        return self._pos[label]

    def __eq__(self, other):
        return isinstance(other, FiniteIndex) and self.labels == other.labels

    def __hash__(self):
        return hash(("finite", self.labels))

    def __repr__(self):
        return f"FiniteIndex({list(self.labels)!r})"


class ProductIndex(IndexSet):
    """X*Y with pair labels (x, y), enumerated lexicographically."""

    __slots__ = ("left", "right")

    def __init__(self, left: IndexSet, right: IndexSet):
        self.left = left
        self.right = right

    @property
    def is_finite(self):
        return self.left.is_finite and self.right.is_finite

    def __contains__(self, label):
        return (
            isinstance(label, tuple)
            and len(label) == 2
            and label[0] in self.left
            and label[1] in self.right
        )

    def __iter__(self):
        return iter(itertools.product(self.left, self.right))

    def __len__(self):
        return len(self.left) * len(self.right)

    def sort_key(self, label):
        return (self.left.sort_key(label[0]), self.right.sort_key(label[1]))

    def __eq__(self, other):
        return (
            isinstance(other, ProductIndex)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash(("product", self.left, self.right))

    def __repr__(self):
        return f"ProductIndex({self.left!r}, {self.right!r})"


class LazyIndex(IndexSet):
    """A countable index given by a membership predicate.

    ``enumerate`` is optional; without it, anything that needs the full
    list of labels raises EnumerationUnavailable.
    """

    is_finite = False

    def __init__(
        self,
        name: str,
        member: Callable[[Any], bool],
        enumerate: Callable[[], Iterator[Label]] | None = None,
        sort_key: Callable[[Any], Any] | None = None,
    ):
        self.name = name
        self._member = member
        self._enumerate = enumerate
        self._sort_key = sort_key or (lambda x: (type(x).__name__, repr(x)))

    def __contains__(self, label):
        try:
            return bool(self._member(label))
        except Exception:
            return False

    def __iter__(self):
        if self._enumerate is None:
            raise EnumerationUnavailable()
        return self._enumerate()

    def __len__(self):
        raise EnumerationUnavailable()

    def sort_key(self, label):
        return self._sort_key(label)

    def __eq__(self, other):
        return isinstance(other, LazyIndex) and self.name == other.name

    def __hash__(self):
        return hash(("lazy", self.name))

    def __repr__(self):
        return f"LazyIndex({self.name!r})"


def naturals() -> LazyIndex:
    return LazyIndex(
        "N",
        lambda n: type(n) is int and n >= 0,
        enumerate=lambda: itertools.count(),
        sort_key=lambda n: n,
    )


def product(X: IndexSet, Y: IndexSet) -> ProductIndex:
    return ProductIndex(X, Y)


UNIT_LABEL = "*"
ONE_POINT = FiniteIndex([UNIT_LABEL])


def require_finite(index: IndexSet, what: str = "enumeration unavailable") -> None:
    if not index.is_finite:
        raise EnumerationUnavailable(what)


# --- finitely-supported vectors -------------------------------------------


class FinVec:
    """A finitely-supported map from an index set to a ring.

    Zero coefficients are never stored.
    """

    __slots__ = ("ring", "index", "_entries", "_hash")

    def __init__(self, ring: Ring, index: IndexSet, entries: Mapping | Iterable = (), *, _trusted=False):
        self.ring = ring
        self.index = index
        if _trusted:
            self._entries = entries
        else:
            if isinstance(entries, Mapping):
                entries = entries.items()
            clean = {}
            for x, c in entries:
                index.check(x)
                c = ring.coerce(c)
                if x in clean:
                    c = ring.add(clean[x], c)
                if ring.is_zero(c):
                    clean.pop(x, None)
                else:
                    clean[x] = c
            self._entries = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, index, entries):
        return cls(ring, index, entries, _trusted=True)

    # mapping-ish access

    def support(self) -> frozenset:
        return frozenset(self._entries)

    def items(self) -> list:
        """Entries sorted in index order."""
        return [(x, self._entries[x]) for x in self.index.sorted(self._entries)]

    def raw_items(self):
        return self._entries.items()

    def __getitem__(self, label):
        self.index.check(label)
        return self._entries.get(label, self.ring.zero)

    def get(self, label):
        return self._entries.get(label, self.ring.zero)

    def __len__(self):
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __bool__(self):
        return bool(self._entries)

    # arithmetic

    def _check_compatible(self, other: "FinVec"):
        if self.ring != other.ring:
            raise RingMismatch()
        if self.index != other.index:
            raise IndexMismatch("vectors live over different index sets")

    def __add__(self, other: "FinVec") -> "FinVec":
        self._check_compatible(other)
        R = self.ring
        out = dict(self._entries)
        for x, c in other._entries.items():
            s = R.add(out[x], c) if x in out else c
            if R.is_zero(s):
                out.pop(x, None)
            else:
                out[x] = s
        return FinVec._raw(R, self.index, out)

    def __neg__(self) -> "FinVec":
        R = self.ring
        return FinVec._raw(R, self.index, {x: R.neg(c) for x, c in self._entries.items()})

    def __sub__(self, other: "FinVec") -> "FinVec":
        return self + (-other)

    def scale(self, c) -> "FinVec":
        R = self.ring
        if not R.is_element(c):
            c = R.coerce(c)
        out = {}
        for x, a in self._entries.items():
            p = R.mul(c, a)
            if not R.is_zero(p):
                out[x] = p
        return FinVec._raw(R, self.index, out)

    def __eq__(self, other):
        if not isinstance(other, FinVec):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.index == other.index
            and self._entries == other._entries
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.index, frozenset(self._entries.items())))
        return self._hash

    def relabel(self, f: Callable[[Label], Label], index: IndexSet) -> "FinVec":
        """Push entries along an injective relabeling into ``index``."""
        return FinVec(self.ring, index, [(f(x), c) for x, c in self._entries.items()])

    def dense(self) -> list:
        require_finite(self.index)
        z = self.ring.zero
        return [self._entries.get(x, z) for x in self.index]

    def __repr__(self):
        body = ", ".join(f"{x!r}: {self.ring.format_scalar(c)}" for x, c in self.items())
        return f"FinVec({{{body}}} over {self.ring.spec})"


def first_difference(u: FinVec, v: FinVec):
    """First label, in index order, where two vectors differ; None if equal."""
    if u.index != v.index:
        return "index"
    for x in u.index.sorted(u.support() | v.support()):
        if u.get(x) != v.get(x):
            return x
    return None


def zero_vec(ring: Ring, index: IndexSet) -> FinVec:
    return FinVec._raw(ring, index, {})


def delta(ring: Ring, index: IndexSet, x: Label) -> FinVec:
    index.check(x)
    return FinVec._raw(ring, index, {x: ring.one})


def coefficient(b: Label, v: FinVec):
    """The coefficient map b* evaluated at v."""
    return v[b]


def from_dense(ring: Ring, index: IndexSet, values: Iterable) -> FinVec:
    return FinVec(ring, index, zip(index, values))


def linear_combination(ring: Ring, index: IndexSet, terms: Iterable) -> FinVec:
    """Sum of c * v over (c, v) pairs."""
    R = ring
    out: dict = {}
    for c, v in terms:
        if R.is_zero(c):
            continue
        for x, a in v.raw_items():
            p = R.mul(c, a)
            s = R.add(out[x], p) if x in out else p
            out[x] = s
    return FinVec._raw(R, index, {x: c for x, c in out.items() if not R.is_zero(c)})


def kron(u: FinVec, v: FinVec) -> FinVec:
    """The image of u (x) v in R^(X*Y): entry (x, y) is u(x) v(y)."""
    if u.ring != v.ring:
        raise RingMismatch()
    R = u.ring
    out = {}
    for x, a in u.raw_items():
        for y, b in v.raw_items():
            p = R.mul(a, b)
            if not R.is_zero(p):
                out[(x, y)] = p
    return FinVec._raw(R, ProductIndex(u.index, v.index), out)


# reindexers for the symmetric monoidal structure


def assoc_label(label):
    (x, y), z = label
    return (x, (y, z))


def assoc_inv_label(label):
    x, (y, z) = label
    return ((x, y), z)


def swap_label(label):
    x, y = label
    return (y, x)


def assoc_index(index: ProductIndex) -> ProductIndex:
    """((X*Y)*Z) -> (X*(Y*Z))."""
    XY, Z = index.left, index.right
    return ProductIndex(XY.left, ProductIndex(XY.right, Z))


def swap_index(index: ProductIndex) -> ProductIndex:
    return ProductIndex(index.right, index.left)


def reassociate(v: FinVec) -> FinVec:
    return v.relabel(assoc_label, assoc_index(v.index))


def swap(v: FinVec) -> FinVec:
    return v.relabel(swap_label, swap_index(v.index))


def drop_left_unit(v: FinVec) -> FinVec:
    """R (x) M -> M on vectors over ONE_POINT*X."""
    if v.index.left != ONE_POINT:
        raise IndexMismatch("left factor is not the one-point index")
    return v.relabel(lambda p: p[1], v.index.right)


def drop_right_unit(v: FinVec) -> FinVec:
    if v.index.right != ONE_POINT:
        raise IndexMismatch("right factor is not the one-point index")
    return v.relabel(lambda p: p[0], v.index.left)


# --- column-finite maps ------------------------------------------------------


class ColMap:
    """A linear map R^(X) -> R^(Y), stored column by column.

    ``columns`` maps x to the image of delta_x; absent columns are zero.
    For a lazy domain a ``column_oracle`` may stand in for the table.
    """

    __slots__ = ("ring", "domain", "codomain", "_columns", "_oracle")

    def __init__(
        self,
        ring: Ring,
        domain: IndexSet,
        codomain: IndexSet,
        columns: Mapping | None = None,
        column_oracle: Callable[[Label], FinVec] | None = None,
    ):
        self.ring = ring
        self.domain = domain
        self.codomain = codomain
        self._oracle = column_oracle
        cols = {}
        for x, col in (columns or {}).items():
            domain.check(x)
            if col.ring != ring:
                raise RingMismatch()
            if col.index != codomain:
                raise IndexMismatch(f"column {x!r} is not over the codomain")
            if col:
                cols[x] = col
        self._columns = cols

    def column(self, x) -> FinVec:
        self.domain.check(x)
        if self._oracle is not None:
            return self._oracle(x)
        col = self._columns.get(x)
        return col if col is not None else zero_vec(self.ring, self.codomain)

    @property
    def is_tabulated(self) -> bool:
        return self._oracle is None

    def nonzero_columns(self) -> dict:
        if self._oracle is not None:
            require_finite(self.domain)
            return {x: c for x in self.domain if (c := self._oracle(x))}
        return dict(self._columns)

    def entry(self, y, x):
        """Coefficient of delta_y in the image of delta_x."""
        return self.column(x)[y]

    def triples(self) -> list:
        """(x, y, c) in domain-then-codomain order."""
        cols = self.nonzero_columns()
        return [(x, y, c) for x in self.domain.sorted(cols) for y, c in cols[x].items()]

    def __eq__(self, other):
        if not isinstance(other, ColMap):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.nonzero_columns() == other.nonzero_columns()
        )

    __hash__ = None

    def __repr__(self):
        return f"ColMap({self.domain!r} -> {self.codomain!r}, {len(self._columns)} columns)"


def identity_colmap(ring: Ring, index: IndexSet) -> ColMap:
    if not index.is_finite:
        return ColMap(ring, index, index, column_oracle=lambda x: delta(ring, index, x))
    return ColMap(ring, index, index, {x: delta(ring, index, x) for x in index})


def zero_colmap(ring: Ring, domain: IndexSet, codomain: IndexSet) -> ColMap:
    return ColMap(ring, domain, codomain, {})


def colmap_from_triples(ring: Ring, domain: IndexSet, codomain: IndexSet, triples: Iterable) -> ColMap:
    cols: dict = {}
    for x, y, c in triples:
        cols.setdefault(x, []).append((y, c))
    return ColMap(ring, domain, codomain, {x: FinVec(ring, codomain, e) for x, e in cols.items()})


def colmap_apply(F: ColMap, v: FinVec) -> FinVec:
    """Sum of v(x) * F(delta_x); reads only the columns in supp(v)."""
    if v.ring != F.ring:
        raise RingMismatch()
    if v.index != F.domain:
        raise IndexMismatch("vector index does not match the map's domain")
    return linear_combination(F.ring, F.codomain, ((c, F.column(x)) for x, c in v.raw_items()))


def colmap_compose(G: ColMap, F: ColMap) -> ColMap:
    """G after F."""
    if F.ring != G.ring:
        raise RingMismatch()
    if F.codomain != G.domain:
        raise IndexMismatch("codomain of F is not the domain of G")
    if not F.is_tabulated:
        return ColMap(F.ring, F.domain, G.codomain, column_oracle=lambda x: colmap_apply(G, F.column(x)))
    return ColMap(
        F.ring,
        F.domain,
        G.codomain,
        {x: colmap_apply(G, col) for x, col in F.nonzero_columns().items()},
    )


def tensor_colmaps(F: ColMap, G: ColMap) -> ColMap:
    """F (x) G on R^(X*X') -> R^(Y*Y'); column (x, x') is kron of the columns."""
    if F.ring != G.ring:
        raise RingMismatch()
    dom = ProductIndex(F.domain, G.domain)
    cod = ProductIndex(F.codomain, G.codomain)
    if not (F.is_tabulated and G.is_tabulated):
        return ColMap(F.ring, dom, cod, column_oracle=lambda p: kron(F.column(p[0]), G.column(p[1])))
    Fc, Gc = F.nonzero_columns(), G.nonzero_columns()
    return ColMap(
        F.ring,
        dom,
        cod,
        {(x, y): kron(a, b) for x, a in Fc.items() for y, b in Gc.items()},
    )


def relabel_colmap(F: ColMap, dom_map=None, domain=None, cod_map=None, codomain=None) -> ColMap:
    """Transport F along label bijections of its domain and/or codomain."""
    domain = domain or F.domain
    codomain = codomain or F.codomain
    cols = {}
    for x, col in F.nonzero_columns().items():
        nx = dom_map(x) if dom_map else x
        cols[nx] = col.relabel(cod_map, codomain) if cod_map else col
    return ColMap(F.ring, domain, codomain, cols)
