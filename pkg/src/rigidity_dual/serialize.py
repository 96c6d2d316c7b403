"""JSON dialect for vectors, maps and (co)algebra structure files.

Pair labels are written as two-element arrays and read back as tuples.
Scalars are decimal strings ("p/q" for rationals, arrays for products).
Writers emit entries in index order so that output is byte-stable.
"""

from __future__ import annotations

import json
from typing import Any

from .freemod import (
    ColMap,
    FinVec,
    FiniteIndex,
    IndexSet,
    ProductIndex,
    colmap_from_triples,
)
from .findual import FiniteAlgebra, algebra_from_table
from .moncat import Coalgebra, TopMonoid
from .rings import Ring, parse_ring
from .topfree import ProVec, RowMap, provec_from_dense, rowmap_from_triples


class FormatError(ValueError):
    pass


def label_to_json(x):
    if isinstance(x, tuple):
        return [label_to_json(a) for a in x]
    return x


def label_from_json(x):
    if isinstance(x, list):
        return tuple(label_from_json(a) for a in x)
    return x


def index_to_json(X: IndexSet):
    if isinstance(X, ProductIndex):
        return {"product": [index_to_json(X.left), index_to_json(X.right)]}
    if isinstance(X, FiniteIndex):
        return [label_to_json(x) for x in X]
    raise FormatError("only finite index sets are serializable")


def index_from_json(obj) -> IndexSet:
    if isinstance(obj, dict) and "product" in obj:
        left, right = obj["product"]
        return ProductIndex(index_from_json(left), index_from_json(right))
    if isinstance(obj, list):
        return FiniteIndex(label_from_json(x) for x in obj)
    raise FormatError(f"bad index {obj!r}")


def finvec_to_json(v: FinVec) -> dict:
    R = v.ring
    return {
        "index": index_to_json(v.index),
        "entries": [[label_to_json(x), R.format_scalar(c)] for x, c in v.items()],
    }


def finvec_from_json(ring: Ring, obj: dict) -> FinVec:
    X = index_from_json(obj["index"])
    return FinVec(ring, X, [(label_from_json(x), ring.parse_scalar(c)) for x, c in obj["entries"]])


def provec_to_json(v: ProVec) -> list:
    return [v.ring.format_scalar(c) for c in v.dense()]


def provec_from_json(ring: Ring, X: IndexSet, obj) -> ProVec:
    if isinstance(obj, dict):
        default = ring.parse_scalar(obj.get("default", "0"))
        table = {label_from_json(x): ring.parse_scalar(c) for x, c in obj["entries"]}
        return provec_from_dense(ring, X, [table.get(x, default) for x in X])
    if len(obj) != len(X):
        raise FormatError("dense vector length does not match the index")
    return provec_from_dense(ring, X, [ring.parse_scalar(c) for c in obj])


def colmap_to_json(F: ColMap) -> list:
    R = F.ring
    return [[label_to_json(x), label_to_json(y), R.format_scalar(c)] for x, y, c in F.triples()]


def rowmap_to_json(F: RowMap) -> list:
    R = F.ring
    return [[label_to_json(d), label_to_json(b), R.format_scalar(c)] for d, b, c in F.triples()]


def _triples(ring: Ring, obj) -> list:
    try:
        return [(label_from_json(a), label_from_json(b), ring.parse_scalar(c)) for a, b, c in obj]
    except (TypeError, ValueError) as e:
        raise FormatError(f"bad sparse triple list: {e}") from None


# --- structure files ------------------------------------------------------


def structure_to_json(S) -> dict:
    X = S.index
    head = {"kind": None, "ring": S.ring.spec, "index": index_to_json(X)}
    if isinstance(S, TopMonoid):
        head["kind"] = "top-monoid"
        head["mu"] = rowmap_to_json(S.mu)
        head["eta"] = provec_to_json(S.eta)
    elif isinstance(S, Coalgebra):
        head["kind"] = "coalgebra"
        head["delta"] = colmap_to_json(S.delta)
        head["epsilon"] = provec_to_json(S.epsilon)
    elif isinstance(S, FiniteAlgebra):
        head["kind"] = "algebra"
        R = S.ring
        head["mul"] = [[label_to_json(p), label_to_json(z), R.format_scalar(c)] for p, z, c in S.mul.triples()]
        head["one"] = [R.format_scalar(c) for c in S.one.dense()]
    else:
        raise TypeError(f"cannot serialize {type(S).__name__}")
    return head


def structure_from_json(obj: Any):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("structure file must be an object with a 'kind'")
    try:
        ring = parse_ring(obj["ring"])
        X = index_from_json(obj["index"])
    except KeyError as e:
        raise FormatError(f"missing field {e}") from None
    XX = ProductIndex(X, X)
    kind = obj["kind"]
    try:
        if kind == "top-monoid":
            mu = rowmap_from_triples(ring, XX, X, _triples(ring, obj["mu"]))
            return TopMonoid(ring, X, mu, provec_from_json(ring, X, obj["eta"]))
        if kind == "coalgebra":
            d = colmap_from_triples(ring, X, XX, _triples(ring, obj["delta"]))
            return Coalgebra(ring, X, d, provec_from_json(ring, X, obj["epsilon"]))
        if kind == "algebra":
            table = [(p[0], p[1], z, c) for p, z, c in _triples(ring, obj["mul"])]
            one = [ring.parse_scalar(c) for c in obj["one"]]
            return algebra_from_table(ring, X, table, one)
    except KeyError as e:
        raise FormatError(f"missing field {e}") from None
    except (TypeError, ValueError) as e:
        raise FormatError(str(e)) from None
    raise FormatError(f"unknown kind {kind!r}")


def dumps(obj) -> str:
    """Canonical text: one top-level key per line, one list element per line."""
    if not isinstance(obj, dict):
        return json.dumps(obj) + "\n"
    lines = []
    for key, value in obj.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            inner = ",\n".join("    " + json.dumps(v) for v in value)
            text = "[\n" + inner + "\n  ]"
        else:
            text = json.dumps(value)
        lines.append(f"  {json.dumps(key)}: {text}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def dump_structure(S) -> str:
    return dumps(structure_to_json(S))


def load_structure(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    return structure_from_json(obj)
