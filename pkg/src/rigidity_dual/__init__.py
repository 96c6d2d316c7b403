"""Exact duality between free and topologically-free modules over discrete rings."""

from .rings import (
    GF,
    QQ,
    ZZ,
    Ring,
    RingError,
    RingMismatch,
    Zmod,
    idempotents,
    is_von_neumann_regular,
    parse_ring,
    product_ring,
    weak_inverse,
)
from .freemod import (
    ColMap,
    FiniteIndex,
    FinVec,
    LazyIndex,
    ProductIndex,
    coefficient,
    colmap_apply,
    colmap_compose,
    delta,
    kron,
    tensor_colmaps,
)
from .topfree import (
    ProVec,
    RowMap,
    basis_change,
    discrete_sum,
    ostar_elements,
    ostar_maps,
    provec_from_finvec,
    rowmap_apply,
    rowmap_compose,
)
from .duality import (
    alg_dual,
    diagonal_demo,
    functional_apply,
    functional_from_oracle,
    gamma_nat_check,
    lambda_nat_check,
    sharp,
    top_dual,
)
from .moncat import (
    Coalgebra,
    TopMonoid,
    alg_dual_monoid,
    coalgebra_laws_check,
    grouplike_coalgebra,
    hadamard_monoid,
    monoid_laws_check,
    monoidal_transformation_check,
    top_dual_coalgebra,
    ua_multiply,
)
from .findual import (
    FiniteAlgebra,
    SubspaceBasis,
    algebra_homs_enumerate,
    codim_check,
    coreflexivity_check,
    finite_dual,
    orthogonal,
    span,
)
from .report import Case, Report

__version__ = "0.1.0"
