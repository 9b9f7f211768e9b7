"""Exact lattice-triangle geometry and the classification of 2-collinear integers."""

__version__ = "0.1.0"

from .errors import (
    DegenerateInput,
    DegenerateSegment,
    DegenerateTriangle,
    DomainError,
    InvariantError,
    LatticeError,
    RangeError,
    ResourceLimit,
)
from .lattice_core import (
    LatticePoint,
    LatticeTriangle,
    TriangleStats,
    boundary_count,
    collinear,
    gcd,
    interior_count_pick,
    interior_points,
    segment_interior_count,
    stats,
    twice_area,
)
from .unimodular import (
    CanonicalTriangle,
    UnimodularAffineMap,
    apply,
    bezout,
    compose,
    invert,
    normalize,
    shift_reduce,
)
from .totient import (
    Factorization,
    epsilon,
    factorize,
    generalized_totient,
    schemmel,
    schemmel_bruteforce,
)
from .classifier import (
    ClassificationResult,
    DSet,
    SurveyRow,
    badk_witness_check,
    candidate_triangles,
    d_set,
    is_2_collinear_bruteforce,
    is_2_collinear_theorem,
    survey,
)
