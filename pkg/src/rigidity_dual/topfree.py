"""Topologically-free modules R^X over a discrete ring.

A vector of R^X is a total coefficient oracle (``ProVec``).  Continuous
linear maps between such modules are row-finite matrices (``RowMap``):
each coordinate of the output depends on finitely many input coordinates.
Over a discrete ring that is exactly what continuity means, so it is a
representation invariant here rather than something to check.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Mapping

from .freemod import (
    FinVec,
    IndexMismatch,
    IndexSet,
    Label,
    ProductIndex,
    delta,
    kron,
    linear_combination,
    require_finite,
    zero_vec,
)
from .rings import EnumerationUnavailable, Ring, RingMismatch


class NotSummable(ValueError):
    def __init__(self, msg: str = "not summable (discrete)"):
        super().__init__(msg)


class ProVec:
    """A vector of R^X given by a coefficient oracle.

    ``support_hint``, when given, is a finite set outside of which the
    oracle is promised to vanish.
    """

    __slots__ = ("ring", "index", "_oracle", "support_hint")

    def __init__(
        self,
        ring: Ring,
        index: IndexSet,
        oracle: Callable[[Label], object],
        support_hint: Iterable | None = None,
    ):
        self.ring = ring
        self.index = index
        self._oracle = oracle
        self.support_hint = None if support_hint is None else frozenset(support_hint)

    def __call__(self, x):
        self.index.check(x)
        return self._oracle(x)

    def at(self, x):
        """Unchecked coordinate access for hot loops."""
        return self._oracle(x)

    def support(self) -> frozenset:
        R = self.ring
        if self.support_hint is not None:
            return frozenset(x for x in self.support_hint if not R.is_zero(self._oracle(x)))
        if not self.index.is_finite:
            raise EnumerationUnavailable("support of an oracle over a lazy index is not computable")
        return frozenset(x for x in self.index if not R.is_zero(self._oracle(x)))

    def to_finvec(self) -> FinVec:
        return FinVec(self.ring, self.index, [(x, self._oracle(x)) for x in self.support()])

    def dense(self) -> list:
        require_finite(self.index)
        return [self._oracle(x) for x in self.index]

    def agrees_on(self, other: "ProVec", probes: Iterable) -> bool:
        """Probe-based equality, the only kind available over lazy indices."""
        return all(self(x) == other(x) for x in probes)

    def __eq__(self, other):
        if not isinstance(other, ProVec):
            return NotImplemented
        if self.ring != other.ring or self.index != other.index:
            return False
        if self.index.is_finite:
            return all(self._oracle(x) == other._oracle(x) for x in self.index)
        if self.support_hint is not None and other.support_hint is not None:
            keys = self.support_hint | other.support_hint
            return all(self._oracle(x) == other._oracle(x) for x in keys)
        raise EnumerationUnavailable("equality over a lazy index needs probes; use agrees_on")

    __hash__ = None

    def __add__(self, other: "ProVec") -> "ProVec":
        if self.ring != other.ring:
            raise RingMismatch()
        if self.index != other.index:
            raise IndexMismatch("vectors live over different index sets")
        R, f, g = self.ring, self._oracle, other._oracle
        hint = None
        if self.support_hint is not None and other.support_hint is not None:
            hint = self.support_hint | other.support_hint
        return ProVec(R, self.index, lambda x: R.add(f(x), g(x)), hint)

    def scale(self, c) -> "ProVec":
        R, f = self.ring, self._oracle
        c = R.coerce(c) if not R.is_element(c) else c
        return ProVec(R, self.index, lambda x: R.mul(c, f(x)), self.support_hint)

    def __repr__(self):
        if self.index.is_finite and len(self.index) <= 12:
            body = ", ".join(f"{x!r}: {self.ring.format_scalar(self._oracle(x))}" for x in self.index)
            return f"ProVec({{{body}}} over {self.ring.spec})"
        return f"ProVec(oracle over {self.index!r})"


def provec_from_finvec(p: FinVec) -> ProVec:
    """The canonical inclusion R^(X) -> R^X."""
    entries = dict(p.raw_items())
    z = p.ring.zero
    return ProVec(p.ring, p.index, lambda x: entries.get(x, z), entries.keys())


def provec_from_dense(ring: Ring, index: IndexSet, values) -> ProVec:
    table = {x: ring.coerce(c) for x, c in zip(index, values)}
    return ProVec(ring, index, table.__getitem__, [x for x, c in table.items() if not ring.is_zero(c)])


def ones(ring: Ring, index: IndexSet) -> ProVec:
    """The unit of the function algebra, sum of all delta_x."""
    one = ring.one
    hint = list(index) if index.is_finite else None
    return ProVec(ring, index, lambda x: one, hint)


def zero_provec(ring: Ring, index: IndexSet) -> ProVec:
    z = ring.zero
    return ProVec(ring, index, lambda x: z, ())


def delta_provec(ring: Ring, index: IndexSet, x) -> ProVec:
    return provec_from_finvec(delta(ring, index, x))


# --- row-finite maps -------------------------------------------------------


class RowMap:
    """A continuous linear map R^B -> R^D as a row-finite matrix.

    ``rows`` maps d in D to the FinVec over B expressing the d-th output
    coordinate; absent rows are zero.  For a lazy codomain, ``row_oracle``
    may replace the table.
    """

    __slots__ = ("ring", "domain", "codomain", "_rows", "_oracle")

    def __init__(
        self,
        ring: Ring,
        domain: IndexSet,
        codomain: IndexSet,
        rows: Mapping | None = None,
        row_oracle: Callable[[Label], FinVec] | None = None,
    ):
        self.ring = ring
        self.domain = domain
        self.codomain = codomain
        self._oracle = row_oracle
        table = {}
        for d, row in (rows or {}).items():
            codomain.check(d)
            if not isinstance(row, FinVec):
                raise TypeError("rows must be finitely supported (FinVec)")
            if row.ring != ring:
                raise RingMismatch()
            if row.index != domain:
                raise IndexMismatch(f"row {d!r} is not over the domain")
            if row:
                table[d] = row
        self._rows = table

    def row(self, d) -> FinVec:
        self.codomain.check(d)
        if self._oracle is not None:
            return self._oracle(d)
        r = self._rows.get(d)
        return r if r is not None else zero_vec(self.ring, self.domain)

    @property
    def is_tabulated(self) -> bool:
        return self._oracle is None

    def nonzero_rows(self) -> dict:
        if self._oracle is not None:
            require_finite(self.codomain)
            return {d: r for d in self.codomain if (r := self._oracle(d))}
        return dict(self._rows)

    def entry(self, d, b):
        return self.row(d)[b]

    def triples(self) -> list:
        """(d, b, c) grouped by row, rows in codomain order."""
        rows = self.nonzero_rows()
        return [(d, b, c) for d in self.codomain.sorted(rows) for b, c in rows[d].items()]

    def __eq__(self, other):
        if not isinstance(other, RowMap):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.nonzero_rows() == other.nonzero_rows()
        )

    __hash__ = None

    def __repr__(self):
        return f"RowMap({self.domain!r} -> {self.codomain!r}, {len(self._rows)} rows)"


def identity_rowmap(ring: Ring, index: IndexSet) -> RowMap:
    if not index.is_finite:
        return RowMap(ring, index, index, row_oracle=lambda x: delta(ring, index, x))
    return RowMap(ring, index, index, {x: delta(ring, index, x) for x in index})


def zero_rowmap(ring: Ring, domain: IndexSet, codomain: IndexSet) -> RowMap:
    return RowMap(ring, domain, codomain, {})


def rowmap_from_triples(ring: Ring, domain: IndexSet, codomain: IndexSet, triples: Iterable) -> RowMap:
    rows: dict = {}
    for d, b, c in triples:
        rows.setdefault(d, []).append((b, c))
    return RowMap(ring, domain, codomain, {d: FinVec(ring, domain, e) for d, e in rows.items()})


def rowmap_apply(F: RowMap, v: ProVec) -> ProVec:
    """Evaluate F at v, lazily in the output coordinate."""
    if v.ring != F.ring:
        raise RingMismatch()
    if v.index != F.domain:
        raise IndexMismatch("vector index does not match the map's domain")
    R = F.ring
    at = v.at

    def coord(d):
        total = R.zero
        for b, c in F.row(d).raw_items():
            total = R.add(total, R.mul(c, at(b)))
        return total

    hint = None
    if v.support_hint is not None and F.codomain.is_finite:
        vs = v.support_hint
        hint = [d for d, row in F.nonzero_rows().items() if not vs.isdisjoint(row.support())]
    return ProVec(R, F.codomain, coord, hint)


def rowmap_compose(G: RowMap, F: RowMap) -> RowMap:
    """G after F; row d is the finite combination sum_b G[d, b] * F.row(b)."""
    if F.ring != G.ring:
        raise RingMismatch()
    if F.codomain != G.domain:
        raise IndexMismatch("codomain of F is not the domain of G")
    R = F.ring

    def row(d):
        return linear_combination(R, F.domain, ((c, F.row(b)) for b, c in G.row(d).raw_items()))

    if not G.is_tabulated:
        return RowMap(R, F.domain, G.codomain, row_oracle=row)
    return RowMap(R, F.domain, G.codomain, {d: row(d) for d in G.nonzero_rows()})


def ostar_elements(f: ProVec, g: ProVec) -> ProVec:
    """f (*) g in R^(X*Y): coordinate (x, y) is f(x) g(y)."""
    if f.ring != g.ring:
        raise RingMismatch()
    R, fa, ga = f.ring, f.at, g.at
    hint = None
    if f.support_hint is not None and g.support_hint is not None:
        hint = list(itertools.product(f.support_hint, g.support_hint))
    return ProVec(R, ProductIndex(f.index, g.index), lambda p: R.mul(fa(p[0]), ga(p[1])), hint)


def ostar_maps(F: RowMap, G: RowMap) -> RowMap:
    """F (*) G; row (d, e) is the kron of the rows."""
    if F.ring != G.ring:
        raise RingMismatch()
    dom = ProductIndex(F.domain, G.domain)
    cod = ProductIndex(F.codomain, G.codomain)
    if not (F.is_tabulated and G.is_tabulated):
        return RowMap(F.ring, dom, cod, row_oracle=lambda p: kron(F.row(p[0]), G.row(p[1])))
    Fr, Gr = F.nonzero_rows(), G.nonzero_rows()
    return RowMap(F.ring, dom, cod, {(d, e): kron(a, b) for d, a in Fr.items() for e, b in Gr.items()})


def relabel_rowmap(F: RowMap, dom_map=None, domain=None, cod_map=None, codomain=None) -> RowMap:
    domain = domain or F.domain
    codomain = codomain or F.codomain
    rows = {}
    for d, row in F.nonzero_rows().items():
        nd = cod_map(d) if cod_map else d
        rows[nd] = row.relabel(dom_map, domain) if dom_map else row
    return RowMap(F.ring, domain, codomain, rows)


def discrete_sum(
    family: Mapping,
    ring: Ring,
    index: IndexSet,
    contributors: Callable[[Label], Iterable] | None = None,
    max_terms: int = 100_000,
) -> ProVec:
    """Coordinatewise sum of a family of ProVecs in the discrete sense.

    ``contributors(d)`` enumerates the members that may be nonzero at d;
    it defaults to the whole (finite) family.  More than ``max_terms``
    contributors at one coordinate is taken as evidence that the family is
    not summable.
    """
    for v in family.values():
        if v.ring != ring:
            raise RingMismatch()
        if v.index != index:
            raise IndexMismatch("family member over a different index")
    if contributors is None:
        keys = list(family)
        contributors = lambda d: keys  # noqa: E731

    def coord(d):
        total = ring.zero
        nonzero = 0
        for k in itertools.islice(contributors(d), max_terms + 1):
            c = family[k].at(d)
            if not ring.is_zero(c):
                nonzero += 1
                if nonzero > max_terms:
                    raise NotSummable()
                total = ring.add(total, c)
        return total

    hint = None
    if all(v.support_hint is not None for v in family.values()):
        hint = frozenset().union(*(v.support_hint for v in family.values())) if family else ()
    return ProVec(ring, index, coord, hint)


def basis_expansion(v: ProVec) -> ProVec:
    """Rebuild v as the discrete sum of v(x) delta_x over a finite index."""
    R, X = v.ring, v.index
    require_finite(X)
    family = {x: provec_from_finvec(delta(R, X, x).scale(v.at(x))) for x in X}
    return discrete_sum(family, R, X, contributors=lambda d: (d,))


def basis_change(pairs: Iterable, B: IndexSet, D: IndexSet, ring: Ring) -> RowMap:
    """The isomorphism R^B -> R^D extending a bijection B -> D of bases.

    Row d is delta at f^{-1}(d).
    """
    pairs = list(pairs)
    fwd, back = {}, {}
    for b, d in pairs:
        B.check(b)
        D.check(d)
        if b in fwd or d in back:
            raise ValueError("not a bijection")
        fwd[b] = d
        back[d] = b
    if B.is_finite and D.is_finite and (len(fwd) != len(B) or len(back) != len(D)):
        raise ValueError("not a bijection")
    return RowMap(ring, B, D, {d: delta(ring, B, b) for d, b in back.items()})
