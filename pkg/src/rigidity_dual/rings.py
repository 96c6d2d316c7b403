"""Exact commutative unital rings with decidable equality.

Elements are plain Python values in canonical form:

    Z        int
    Q        fractions.Fraction (reduced, positive denominator)
    Z/n      int in range(n)
    GF(p)    int in range(p)
    R1xR2    tuple of component elements

Only the discrete topology is modelled, so a ring carries no topology data.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Sequence

Scalar = Any


class RingError(ValueError):
    pass


class RingMismatch(RingError):
    def __init__(self, msg: str = "ring mismatch"):
        super().__init__(msg)


class EnumerationUnavailable(RingError):
    def __init__(self, msg: str = "enumeration unavailable"):
        super().__init__(msg)


class NotRegular(RingError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Ring:
    """Base class; subclasses fix the element representation."""

    spec: str

    is_field: bool = False
    is_finite: bool = False

    # --- representation -------------------------------------------------

    @property
    def zero(self) -> Scalar:
        raise NotImplementedError

    @property
    def one(self) -> Scalar:
        raise NotImplementedError

    def is_element(self, x: Scalar) -> bool:
        """True iff ``x`` is a canonical element of this ring."""
        raise NotImplementedError

    def coerce(self, x: Scalar) -> Scalar:
        """Map an integer (or canonical element) into canonical form."""
        raise NotImplementedError

    def elements(self) -> Iterator[Scalar]:
        raise EnumerationUnavailable()

    @property
    def order(self) -> int:
        raise EnumerationUnavailable()

    # --- arithmetic (no validation, callers pass canonical values) ------

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x) -> bool:
        return x == self.zero

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def pow(self, x, k: int):
        r = self.one
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def sum(self, xs) -> Scalar:
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def arith(self, op: str, x, y=None):
        """Validated arithmetic: ``op`` is one of add, mul, neg, sub."""
        if not self.is_element(x) or (y is not None and not self.is_element(y)):
            raise RingMismatch()
        if op == "neg":
            return self.neg(x)
        if y is None:
            raise RingError(f"{op} needs two operands")
        if op == "add":
            return self.add(x, y)
        if op == "mul":
            return self.mul(x, y)
        if op == "sub":
            return self.sub(x, y)
        raise RingError(f"unknown operation {op!r}")

    def __call__(self, x) -> "Elem":
        return Elem(self, self.coerce(x))

    # --- serialization --------------------------------------------------

    def format_scalar(self, x):
        return str(x)

    def parse_scalar(self, s):
        if isinstance(s, str):
            s = int(s)
        return self.coerce(s)

    def __str__(self):
        return self.spec


@dataclass(frozen=True)
class Elem:
    """A ring element bundled with its ring; mixing rings raises."""

    ring: Ring
    value: Scalar

    def _other(self, o):
        if isinstance(o, Elem):
            if o.ring != self.ring:
                raise RingMismatch()
            return o.value
        return self.ring.coerce(o)

    def __add__(self, o):
        return Elem(self.ring, self.ring.add(self.value, self._other(o)))

    __radd__ = __add__

    def __mul__(self, o):
        return Elem(self.ring, self.ring.mul(self.value, self._other(o)))

    __rmul__ = __mul__

    def __sub__(self, o):
        return Elem(self.ring, self.ring.sub(self.value, self._other(o)))

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.value))

    def __eq__(self, o):
        if isinstance(o, Elem):
            return self.ring == o.ring and self.value == o.value
        try:
            return self.value == self.ring.coerce(o)
        except (RingError, TypeError):
            return False

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return f"{self.ring.format_scalar(self.value)} in {self.ring.spec}"


@dataclass(frozen=True, eq=True)
class Integers(Ring):
    spec: str = "Z"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def is_element(self, x):
        return type(x) is int

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingMismatch()
        return int(x)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def is_unit(self, x):
        return x in (1, -1)

    def inv(self, x):
        if x in (1, -1):
            return x
        raise ZeroDivisionError(f"{x} is not a unit in Z")


@dataclass(frozen=True, eq=True)
class Rationals(Ring):
    spec: str = "Q"
    is_field: bool = True

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_element(self, x):
        return isinstance(x, Fraction)

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise RingMismatch()
        return Fraction(x)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def is_unit(self, x):
        return x != 0

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / x

    def format_scalar(self, x):
        return str(x)

    def parse_scalar(self, s):
        return Fraction(s)


@dataclass(frozen=True, eq=True)
class IntegersMod(Ring):
    """Z/n; with ``galois=True`` the same ring spelled GF(p), p prime."""

    n: int
    galois: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise RingError("modulus must be at least 2")
        if self.galois and not _is_prime(self.n):
            raise RingError(f"GF({self.n}) needs a prime order")

    @property
    def spec(self):
        return f"GF({self.n})" if self.galois else f"Z/{self.n}"

    @property
    def is_field(self):
        return _is_prime(self.n)

    is_finite = True

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def order(self):
        return self.n

    def is_element(self, x):
        return type(x) is int and 0 <= x < self.n

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingMismatch()
        return x % self.n

    def elements(self):
        return iter(range(self.n))

    def add(self, x, y):
        return (x + y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def is_unit(self, x):
        from math import gcd

        return gcd(x, self.n) == 1

    def inv(self, x):
        try:
            return pow(x, -1, self.n)
        except ValueError:
            raise ZeroDivisionError(f"{x} is not a unit in {self.spec}") from None


@dataclass(frozen=True, eq=True)
class ProductRing(Ring):
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise RingError("product of an empty list of rings")

    @property
    def spec(self):
        return "x".join(f.spec for f in self.factors)

    @property
    def is_field(self):
        return len(self.factors) == 1 and self.factors[0].is_field

    @property
    def is_finite(self):
        return all(f.is_finite for f in self.factors)

    @property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    @property
    def order(self):
        n = 1
        for f in self.factors:
            n *= f.order
        return n

    def is_element(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == len(self.factors)
            and all(f.is_element(c) for f, c in zip(self.factors, x))
        )

    def coerce(self, x):
        if isinstance(x, tuple):
            if len(x) != len(self.factors):
                raise RingMismatch()
            return tuple(f.coerce(c) for f, c in zip(self.factors, x))
        if isinstance(x, int) and not isinstance(x, bool):
            return tuple(f.coerce(x) for f in self.factors)
        raise RingMismatch()

    def elements(self):
        return itertools.product(*(f.elements() for f in self.factors))

    def add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def mul(self, x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def is_unit(self, x):
        return all(f.is_unit(a) for f, a in zip(self.factors, x))

    def inv(self, x):
        return tuple(f.inv(a) for f, a in zip(self.factors, x))

    def format_scalar(self, x):
        return [f.format_scalar(a) for f, a in zip(self.factors, x)]

    def parse_scalar(self, s):
        if isinstance(s, (list, tuple)):
            if len(s) != len(self.factors):
                raise RingMismatch()
            return tuple(f.parse_scalar(a) for f, a in zip(self.factors, s))
        return self.coerce(int(s))


ZZ = Integers()
QQ = Rationals()


def GF(p: int) -> IntegersMod:
    return IntegersMod(p, galois=True)


def Zmod(n: int) -> IntegersMod:
    return IntegersMod(n)


def product_ring(factors: Sequence[Ring]) -> ProductRing:
    factors = tuple(factors)
    if not factors:
        raise RingError("product of an empty list of rings")
    return ProductRing(factors)


_FACTOR = re.compile(r"^(?:Z|Q|Z/(\d+)|GF\((\d+)\))$")


def parse_ring(spec: str) -> Ring:
    """Parse "Z", "Q", "Z/6", "GF(5)" or an x-separated product like "GF(2)xGF(3)"."""
    spec = spec.replace(" ", "")
    parts = spec.split("x")
    rings = []
    for part in parts:
        m = _FACTOR.match(part)
        if not m:
            raise RingError(f"unknown ring spec {spec!r}")
        if part == "Z":
            rings.append(ZZ)
        elif part == "Q":
            rings.append(QQ)
        elif m.group(1):
            rings.append(Zmod(int(m.group(1))))
        else:
            rings.append(GF(int(m.group(2))))
    if len(rings) == 1:
        return rings[0]
    return product_ring(rings)


# --- ring-theoretic predicates -------------------------------------------


def idempotents(R: Ring) -> list:
    """All e with e*e == e, in enumeration order (finite rings only)."""
    if not R.is_finite:
        raise EnumerationUnavailable()
    return [e for e in R.elements() if R.mul(e, e) == e]


def _is_product_of_fields(R: Ring) -> bool:
    if R.is_field:
        return True
    return isinstance(R, ProductRing) and all(_is_product_of_fields(f) for f in R.factors)


def _closed_form_weak_inverse(R: Ring, x):
    if isinstance(R, ProductRing):
        return tuple(_closed_form_weak_inverse(f, a) for f, a in zip(R.factors, x))
    return R.zero if R.is_zero(x) else R.inv(x)


def _is_weak_inverse(R: Ring, x, y) -> bool:
    return R.mul(R.mul(x, y), x) == x and R.mul(R.mul(y, x), y) == y


def weak_inverse(R: Ring, x):
    """The unique y with xyx = x and yxy = y.

    Fields and finite products of fields use the closed form (inverse
    componentwise, 0 maps to 0); other finite rings are searched.
    """
    if not R.is_element(x):
        raise RingMismatch()
    if _is_product_of_fields(R):
        return _closed_form_weak_inverse(R, x)
    if R.is_finite:
        for y in R.elements():
            if R.mul(R.mul(x, y), x) == x:
                # yxy is a weak inverse whenever xyx = x
                return R.mul(R.mul(y, x), y)
        raise NotRegular(f"not von Neumann regular at {R.format_scalar(x)}")
    if R.is_zero(x):
        return R.zero
    if R.is_unit(x):
        return R.inv(x)
    raise NotRegular(f"not von Neumann regular at {R.format_scalar(x)}")


def weak_inverses_brute_force(R: Ring, x) -> list:
    """Every y satisfying both weak-inverse identities (finite rings)."""
    if not R.is_finite:
        raise EnumerationUnavailable()
    return [y for y in R.elements() if _is_weak_inverse(R, x, y)]


def is_von_neumann_regular(R: Ring) -> bool:
    if _is_product_of_fields(R):
        return True
    if isinstance(R, ProductRing):
        return all(is_von_neumann_regular(f) for f in R.factors)
    if R.is_finite:
        return all(
            any(R.mul(R.mul(x, y), x) == x for y in R.elements()) for x in R.elements()
        )
    if isinstance(R, Integers):
        # 2 has no y with 2y2 = 2
        return False
    raise RingError(f"regularity of {R.spec} is undecidable here")


def ring_zoo(max_order: int = 36) -> list:
    """Finite rings used by the law suites, ordered by spec string length then order."""
    zoo: list = []
    for n in range(2, max_order + 1):
        zoo.append(GF(n) if _is_prime(n) else Zmod(n))
    primes = [p for p in range(2, max_order + 1) if _is_prime(p)]
    for k in (2, 3):
        for combo in itertools.combinations_with_replacement(primes, k):
            order = 1
            for p in combo:
                order *= p
            if order <= max_order:
                zoo.append(product_ring([GF(p) for p in combo]))
    return zoo
