"""Exact computations with complete monomial ideals in k[x, y].

Integral closure, Zariski factorization into block ideals, colengths, and the
closed-form polynomial for ℓ(R/I^m J^n), together with a brute-force
lattice-point oracle for independent verification.
"""

from .bhattacharya import (
    BhattacharyaPolynomial,
    HalfInteger,
    MixedMultiplicities,
    bhattacharya_polynomial,
    colength,
    fiber_function,
    general_j_step,
    hilbert_function,
    min_generators,
    mixed_multiplicities,
    s_value,
    verma_polynomial,
    with_maximal_ideal,
)
from .errors import ConsistencyError, DomainError, IncompleteIdealWarning, ParseError
from .factorization import (
    Block,
    BlockFactorization,
    Edge,
    boundary_count,
    boundary_edges,
    compose,
    product_boundary_count,
    zariski_factor,
)
from .ideals import MonomialIdeal, NewtonBoundary, ensure_complete, monomial_str
from .lattice import (
    LatticePoint,
    LatticePolygon,
    as_lattice_point,
    minkowski_sum,
    mixed_area,
    segment_lattice_count,
)
from .oracle import (
    ColengthTable,
    brute_colength,
    brute_monomial_count_between,
    brute_table,
    in_newton_region,
)

__version__ = "0.1.0"

__all__ = [
    "BhattacharyaPolynomial",
    "Block",
    "BlockFactorization",
    "ColengthTable",
    "ConsistencyError",
    "DomainError",
    "Edge",
    "HalfInteger",
    "IncompleteIdealWarning",
    "LatticePoint",
    "LatticePolygon",
    "MixedMultiplicities",
    "MonomialIdeal",
    "NewtonBoundary",
    "ParseError",
    "as_lattice_point",
    "bhattacharya_polynomial",
    "boundary_count",
    "boundary_edges",
    "brute_colength",
    "brute_monomial_count_between",
    "brute_table",
    "colength",
    "compose",
    "ensure_complete",
    "fiber_function",
    "general_j_step",
    "hilbert_function",
    "in_newton_region",
    "min_generators",
    "minkowski_sum",
    "mixed_area",
    "mixed_multiplicities",
    "monomial_str",
    "product_boundary_count",
    "s_value",
    "segment_lattice_count",
    "verma_polynomial",
    "with_maximal_ideal",
    "zariski_factor",
]
