"""Named law suites driven by a SuiteConfig.

Every suite runs seeded random cases and a set of negative controls.  A
control case passes when the checker *detects* the injected corruption;
with ``inject_fault`` a corrupted instance is also run as an ordinary case
so the suite as a whole fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import generate as gen
from .duality import (
    alg_dual,
    contravariance_check,
    functional_apply,
    functional_from_oracle,
    gamma_nat_check,
    lambda_nat_check,
    top_dual,
)
from .findual import (
    DEFAULT_BUDGET,
    algebra_homs_enumerate,
    algebra_laws_check,
    codim_check,
    coreflexivity_check,
    dual_algebra,
    finite_dual,
    function_algebra,
    orthogonal,
    SubspaceBasis,
)
from .freemod import (
    ONE_POINT,
    UNIT_LABEL,
    ColMap,
    FinVec,
    colmap_apply,
    delta,
    first_difference,
    kron,
    reassociate,
    swap,
    tensor_colmaps,
    zero_vec,
)
from .moncat import (
    Coalgebra,
    alg_dual_monoid,
    coalgebra_laws_check,
    faithfulness_check,
    first_column_mismatch,
    grouplike_coalgebra,
    hadamard_monoid,
    is_cocommutative,
    is_commutative,
    monoid_laws_check,
    monoidal_transformation_check,
    structure_difference,
    top_dual_coalgebra,
    ua_multiply,
    unit_coherence_check,
)
from .report import Report
from .rings import Ring, parse_ring
from .topfree import (
    RowMap,
    ostar_elements,
    ostar_maps,
    provec_from_finvec,
    rowmap_apply,
)

SUITES = ("duality", "tensor", "monoid", "coalgebra", "dualization", "coherence", "findual")


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    ring: str
    size: int = 6
    seed: int = 0
    cases: int = 20
    fmt: str = "text"
    budget: int = DEFAULT_BUDGET
    inject_fault: bool = False


class UsageError(ValueError):
    pass


def run_suite(cfg: SuiteConfig) -> Report:
    if cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    if cfg.size < 1 or cfg.cases < 0:
        raise UsageError("size must be positive and cases non-negative")
    ring = parse_ring(cfg.ring)
    rep = Report(cfg.suite, ring.spec, cfg.seed)
    rng = random.Random(f"{cfg.suite}/{ring.spec}/{cfg.seed}")
    _RUNNERS[cfg.suite](ring, cfg, rng, rep)
    return rep


def _sizes(cfg, rng, k=1):
    return [rng.randint(1, cfg.size) for _ in range(k)]


# --- corrupted implementations used as controls ------------------------------


def _bad_alg_dual(F):
    """Transpose that loses the last nonzero column."""
    good = alg_dual(F)
    rows = good.nonzero_rows()
    if rows:
        rows.pop(sorted(rows, key=F.domain.sort_key)[-1])
    return RowMap(F.ring, F.codomain, F.domain, rows)


def _bad_top_dual(F):
    good = top_dual(F)
    cols = good.nonzero_columns()
    if cols:
        cols.pop(sorted(cols, key=F.codomain.sort_key)[-1])
    return ColMap(F.ring, F.codomain, F.domain, cols)


def _bad_kron(u, v):
    """kron that leaks a constant into the first coordinate."""
    good = kron(u, v)
    first = (next(iter(u.index)), next(iter(v.index)))
    return good + FinVec(u.ring, good.index, {first: u.ring.one})


def _bad_ostar_maps(F, G):
    """Swaps the roles of the factors' rows on the diagonal."""
    good = ostar_maps(F, G)
    rows = good.nonzero_rows()
    first = (next(iter(F.codomain)), next(iter(G.codomain)))
    dom = good.domain
    b0 = (next(iter(F.domain)), next(iter(G.domain)))
    rows[first] = rows.get(first, zero_vec(F.ring, dom)) + delta(F.ring, dom, b0)
    return RowMap(F.ring, dom, good.codomain, rows)


def _control(rep, cid, law, detected, witness=None):
    rep.add(f"control:{law}", detected, witness or "corruption not detected", id=cid)


# --- suites -----------------------------------------------------------------


def _suite_duality(R: Ring, cfg, rng, rep: Report):
    for i in range(cfg.cases):
        n, m, l = _sizes(cfg, rng, 3)
        X, Y, Z = gen.labels(n, "x"), gen.labels(m, "y"), gen.labels(l, "z")
        F = gen.colmap(R, X, Y, rng)
        G = gen.colmap(R, Y, Z, rng)
        vecs = [gen.finvec(R, X, rng) for _ in range(2)]
        funs = [gen.provec(R, Y, rng) for _ in range(2)]
        sub = Report("", R.spec)
        lambda_nat_check(F, vecs, funs, report=sub)
        H = gen.rowmap(R, X, Y, rng)
        gamma_nat_check(H, [gen.provec(R, X, rng)], [gen.finvec(R, Y, rng)], report=sub)
        contravariance_check(G, F, report=sub)
        p = gen.finvec(R, X, rng)
        back = functional_from_oracle(lambda f: functional_apply(p, f), X, R)
        sub.add("rigidity:round-trip", back == p, first_difference(back, p))
        _merge(rep, sub, f"{i:03d}")
        if cfg.inject_fault and i == 0:
            bad = lambda_nat_check(_nonzero_colmap(R, F), vecs, funs, alg=_bad_alg_dual)
            _merge(rep, bad, f"{i:03d}:fault")
    # negative controls: a map with a nonzero column so the dropped column matters
    X, Y = gen.labels(2, "x"), gen.labels(2, "y")
    F = gen.colmap(R, X, Y, rng, density=1.0)
    F = _nonzero_colmap(R, F)
    c = lambda_nat_check(F, alg=_bad_alg_dual)
    _control(rep, "ctl:lambda", "lambda", not c.passed, _first_witness(c))
    H = _nonzero_rowmap(R, gen.rowmap(R, X, Y, rng, density=1.0))
    c = gamma_nat_check(H, top=_bad_top_dual)
    _control(rep, "ctl:gamma", "gamma", not c.passed, _first_witness(c))


def _nonzero_colmap(R, F):
    cols = {x: F.column(x) if F.column(x) else delta(R, F.codomain, next(iter(F.codomain))) for x in F.domain}
    return ColMap(R, F.domain, F.codomain, cols)


def _nonzero_rowmap(R, F):
    rows = {d: F.row(d) if F.row(d) else delta(R, F.domain, next(iter(F.domain))) for d in F.codomain}
    return RowMap(R, F.domain, F.codomain, rows)


def _merge(rep, sub, prefix):
    for k, c in enumerate(sub.cases):
        rep.add(c.law, c.passed, c.witness, id=f"{prefix}:{k:02d}")


def _first_witness(r: Report):
    f = r.failures
    return [f[0].law, f[0].witness] if f else None


def _check_equal(rep, law, a, b):
    rep.add(law, a == b, first_difference(a, b))


def _first_label(index, f, g):
    return next((x for x in index if f(x) != g(x)), None)


def tensor_laws(R: Ring, u: FinVec, u2: FinVec, v: FinVec, w: FinVec, c, kron_impl=kron) -> Report:
    """Bilinearity, associator, unitors and symmetry for kron and (*) on one sample."""
    rep = Report("tensor", R.spec)
    _check_equal(rep, "kron:additive-left", kron_impl(u + u2, v), kron_impl(u, v) + kron_impl(u2, v))
    scaled = kron_impl(u, v).scale(c)
    a, b = kron_impl(u.scale(c), v), kron_impl(u, v.scale(c))
    rep.add("kron:homogeneous", a == scaled == b, first_difference(a, scaled) or first_difference(b, scaled))
    z = kron_impl(u, zero_vec(R, v.index))
    rep.add("kron:zero", z.is_zero(), first_difference(z, zero_vec(R, z.index)))
    _check_equal(rep, "kron:associator", reassociate(kron_impl(kron_impl(u, v), w)), kron_impl(u, kron_impl(v, w)))
    one = delta(R, ONE_POINT, UNIT_LABEL)
    left = kron_impl(one, u).relabel(lambda p: p[1], u.index)
    right = kron_impl(u, one).relabel(lambda p: p[0], u.index)
    rep.add("kron:unitors", left == u and right == u, first_difference(left, u) or first_difference(right, u))
    _check_equal(rep, "kron:symmetry", swap(kron_impl(u, v)), kron_impl(v, u))
    pu, pv = provec_from_finvec(u), provec_from_finvec(v)
    lhs, rhs = ostar_elements(pu, pv), provec_from_finvec(kron_impl(u, v))
    rep.add("ostar:agrees-with-kron", lhs == rhs, _first_label(lhs.index, lhs, rhs))
    return rep


def _suite_tensor(R: Ring, cfg, rng, rep: Report):
    for i in range(cfg.cases):
        n, m, l = _sizes(cfg, rng, 3)
        X, Y, Z = gen.labels(n, "x"), gen.labels(m, "y"), gen.labels(l, "z")
        u, u2 = gen.finvec(R, X, rng), gen.finvec(R, X, rng)
        v, w = gen.finvec(R, Y, rng), gen.finvec(R, Z, rng)
        c = gen.scalar(R, rng)
        sub = tensor_laws(R, u, u2, v, w, c)
        F, G = gen.colmap(R, X, Y, rng), gen.colmap(R, Y, Z, rng)
        _check_equal(
            sub,
            "tensor:functorial",
            colmap_apply(tensor_colmaps(F, G), kron(u, v)),
            kron(colmap_apply(F, u), colmap_apply(G, v)),
        )
        A, B = gen.rowmap(R, X, Y, rng), gen.rowmap(R, Y, Z, rng)
        pu, pv = gen.provec(R, X, rng), gen.provec(R, Y, rng)
        lhs = rowmap_apply(ostar_maps(A, B), ostar_elements(pu, pv))
        rhs = ostar_elements(rowmap_apply(A, pu), rowmap_apply(B, pv))
        sub.add("ostar:functorial", lhs == rhs, _first_label(lhs.index, lhs, rhs))
        _merge(rep, sub, f"{i:03d}")
        if cfg.inject_fault and i == 0:
            _merge(rep, tensor_laws(R, u, u2, v, w, c, kron_impl=_bad_kron), f"{i:03d}:fault")
    X = gen.labels(2)
    u = delta(R, X, "x0")
    c = tensor_laws(R, u, u, u, u, R.one, kron_impl=_bad_kron)
    _control(rep, "ctl:kron", "kron", not c.passed, _first_witness(c))


def _suite_monoid(R: Ring, cfg, rng, rep: Report):
    for i in range(cfg.cases):
        (n,) = _sizes(cfg, rng)
        name, A = gen.monoid(R, n, rng)
        _merge(rep, monoid_laws_check(A), f"{i:03d}:{name}")
        if cfg.inject_fault and i == 0:
            _merge(rep, monoid_laws_check(gen.corrupt_unit(A)), f"{i:03d}:fault")
    _, A = gen.monoid(R, min(cfg.size, 3), rng)
    for tag, bad in (("unit", gen.corrupt_unit(A)), ("mult", gen.corrupt_multiplication(A))):
        c = monoid_laws_check(bad)
        _control(rep, f"ctl:{tag}", f"monoid-{tag}", not c.passed, _first_witness(c))


def _corrupt_counit(C: Coalgebra) -> Coalgebra:
    return top_dual_coalgebra(gen.corrupt_unit(alg_dual_monoid(C)))


def _suite_coalgebra(R: Ring, cfg, rng, rep: Report):
    for i in range(cfg.cases):
        (n,) = _sizes(cfg, rng)
        name, A = gen.monoid(R, n, rng)
        C = top_dual_coalgebra(A)
        _merge(rep, coalgebra_laws_check(C), f"{i:03d}:{name}")
        if cfg.inject_fault and i == 0:
            _merge(rep, coalgebra_laws_check(_corrupt_counit(C)), f"{i:03d}:fault")
    G = grouplike_coalgebra(R, gen.labels(min(cfg.size, 3)))
    c = coalgebra_laws_check(_corrupt_counit(G))
    _control(rep, "ctl:counit", "coalgebra-counit", not c.passed, _first_witness(c))
    c = coalgebra_laws_check(top_dual_coalgebra(gen.corrupt_multiplication(alg_dual_monoid(G))))
    _control(rep, "ctl:delta", "coalgebra-delta", not c.passed, _first_witness(c))


def dualization_laws(A, C) -> Report:
    rep = Report("dualization", A.ring.spec)
    CA = top_dual_coalgebra(A)
    AA = alg_dual_monoid(CA)
    CC = top_dual_coalgebra(alg_dual_monoid(C))
    rep.add("dualize:monoid-round-trip", AA == A, structure_difference(AA, A))
    rep.add("dualize:coalgebra-round-trip", CC == C, structure_difference(CC, C))
    flags = [is_commutative(A), is_cocommutative(CA)]
    rep.add("dualize:commutativity-transfer", flags[0] == flags[1], flags)
    flags = [monoid_laws_check(A).passed, coalgebra_laws_check(CA).passed]
    rep.add("dualize:laws-transfer", flags[0] == flags[1], flags)
    rep.add("dualize:faithful", faithfulness_check(A, AA), structure_difference(A, AA))
    return rep


def _suite_dualization(R: Ring, cfg, rng, rep: Report):
    for i in range(cfg.cases):
        (n,) = _sizes(cfg, rng)
        name, A = gen.monoid(R, n, rng, twist=rng.random() < 0.5)
        _, B = gen.monoid(R, n, rng)
        sub = dualization_laws(A, top_dual_coalgebra(B))
        X = gen.labels(n)
        D, G = top_dual_coalgebra(hadamard_monoid(R, X)), grouplike_coalgebra(R, X)
        sub.add("dualize:hadamard-grouplike", D == G, structure_difference(D, G))
        u, v = gen.provec(R, X, rng), gen.provec(R, X, rng)
        prod = ua_multiply(hadamard_monoid(R, X), u, v)
        bad_x = _first_label(X, prod, lambda x: R.mul(u(x), v(x)))
        sub.add("ua:pointwise", bad_x is None, bad_x)
        _merge(rep, sub, f"{i:03d}:{name}")
        if cfg.inject_fault and i == 0:
            bad = Report("", R.spec)
            AA, bad_A = alg_dual_monoid(top_dual_coalgebra(A)), gen.corrupt_unit(A)
            bad.add("dualize:monoid-round-trip", AA == bad_A, structure_difference(AA, bad_A))
            _merge(rep, bad, f"{i:03d}:fault")
    X = gen.labels(2)
    A = hadamard_monoid(R, X)
    broken = Coalgebra(R, X, _bad_top_dual(A.mu), A.eta)
    back = alg_dual_monoid(broken)
    _control(rep, "ctl:dualize", "dualization", back != A, structure_difference(back, A))


def _suite_coherence(R: Ring, cfg, rng, rep: Report):
    for i in range(cfg.cases):
        n, m, l, k = _sizes(cfg, rng, 4)
        X, Y, Z, W = (gen.labels(s, p) for s, p in ((n, "x"), (m, "y"), (l, "z"), (k, "w")))
        rows = [(gen.rowmap(R, X, Y, rng), gen.rowmap(R, Z, W, rng))]
        cols = [(gen.colmap(R, X, Y, rng), gen.colmap(R, Z, W, rng))]
        els = [(gen.finvec(R, X, rng), gen.finvec(R, Y, rng), gen.provec(R, X, rng), gen.provec(R, Y, rng))]
        sub = monoidal_transformation_check(rows, cols, els)
        unit_coherence_check(R, report=sub)
        _merge(rep, sub, f"{i:03d}")
        if cfg.inject_fault and i == 0:
            bad = monoidal_transformation_check(rows, cols, els, kron_impl=_bad_kron, ostar_impl=_bad_ostar_maps)
            _merge(rep, bad, f"{i:03d}:fault")
    X, Y = gen.labels(2, "x"), gen.labels(2, "y")
    rows = [(gen.rowmap(R, X, Y, rng), gen.rowmap(R, X, Y, rng))]
    c = monoidal_transformation_check(rows, ostar_impl=_bad_ostar_maps)
    _control(rep, "ctl:psi", "psi", not c.passed, _first_witness(c))
    p = delta(R, X, "x0")
    u = provec_from_finvec(p)
    c = monoidal_transformation_check(element_samples=[(p, p, u, u)], kron_impl=_bad_kron)
    _control(rep, "ctl:phi", "phi", not c.passed, _first_witness(c))


def _suite_findual(R: Ring, cfg, rng, rep: Report):
    if not (R.is_field and R.is_finite):
        raise UsageError("the findual suite needs a finite field, e.g. GF(2)")
    for n in range(1, cfg.size + 1):
        if R.order**n > cfg.budget:
            break
        X = gen.labels(n)
        _merge(rep, coreflexivity_check(R, X, cfg.budget), f"coreflexive:{n:02d}")
        if n == cfg.size:
            rep.summary = {"hom_count": len(algebra_homs_enumerate(function_algebra(R, X), cfg.budget))}
    for i in range(cfg.cases):
        (n,) = _sizes(cfg, rng)
        X = gen.labels(n)
        W = gen.subspace(R, X, rng)
        sub = codim_check(W)
        name, alg = gen.algebra(R, n, rng)
        C = finite_dual(alg)
        flags = [algebra_laws_check(alg).passed, coalgebra_laws_check(C).passed]
        sub.add("findual:laws-transfer", flags[0] == flags[1], flags)
        back = dual_algebra(C)
        sub.add("findual:involutive", back == alg, first_column_mismatch(back.mul, alg.mul) or ["one"])
        _merge(rep, sub, f"{i:03d}:{name}")
        if cfg.inject_fault and i == 0:
            bad = Report("", R.spec)
            Wd = orthogonal(W)
            bad.add("codim:dagger", len(X) - (Wd.dim + 1) == W.dim, [len(X), W.dim, Wd.dim + 1])
            _merge(rep, bad, f"{i:03d}:fault")
    # control: an orthogonal that drops a basis vector breaks codim(W-dagger) = dim W
    X = gen.labels(3)
    W = SubspaceBasis(R, X, (delta(R, X, "x0"),))
    Wd = orthogonal(W)
    truncated = SubspaceBasis(R, X, Wd.basis[:-1])
    _control(rep, "ctl:codim", "codim", len(X) - truncated.dim != W.dim, [len(X), W.dim, truncated.dim])


_RUNNERS = {
    "duality": _suite_duality,
    "tensor": _suite_tensor,
    "monoid": _suite_monoid,
    "coalgebra": _suite_coalgebra,
    "dualization": _suite_dualization,
    "coherence": _suite_coherence,
    "findual": _suite_findual,
}
