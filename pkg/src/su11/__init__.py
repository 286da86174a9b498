"""Holomorphic discrete series of SU(1,1).

Numerical toolkit for the lowest-weight unitary irreducible representations
of SU(1,1) realized on holomorphic functions on the unit disk: group
parametrizations and the invariant measure, matrix elements in two forms,
characters, orthogonality integrals with independent Monte Carlo
cross-checks, and tensor-product decompositions certified through compact
characters.
"""

from .characters import (
    BOUNDARY,
    BOUNDARY_TOL,
    ELLIPTIC,
    HYPERBOLIC,
    CharacterValue,
    abel_trace,
    abel_trace_closed_form,
    abel_trace_limit,
    character,
    character_cartan,
    character_compact,
    damped_trace_sum,
    trace_partial_sum,
)
from .errors import (
    BoundaryConjugacyClass,
    DeterminantViolation,
    InvalidDamping,
    InvalidParams,
    SingularAngle,
    Su11Error,
    UnsupportedClass,
)
from .group import (
    DET_TOL,
    IDENTITY,
    CartanCoords,
    DiskPoint,
    GroupElement,
    compact_element,
    disk_point,
    from_alpha_beta,
    from_cartan,
    haar_density,
    inverse,
    multiply,
    to_cartan,
)
from .halfint import HalfInteger, RepLabel, as_rep_label
from .jacobi import (
    JacobiParams,
    QuadratureRule,
    gauss_jacobi,
    gr_7391,
    jacobi_p,
    jacobi_sequence,
    log_poch_ratio,
    quadrature_order_for_degree,
)
from .orthogonality import (
    MonteCarloEstimate,
    OrthoRequest,
    OrthoResult,
    angular_selection,
    formal_dimension,
    monte_carlo_haar,
    monte_carlo_haar_check,
    orthogonality_integral,
    radial_integral,
)
from .repmatrix import (
    IndexPair,
    MatrixBlock,
    homomorphism_defect,
    matrix_element,
    matrix_element_batch,
    matrix_element_cartan,
    truncated_operator,
    unitarity_defect,
)
from .tensor import (
    Decomposition,
    DecompositionTerm,
    abel_character_sum,
    abel_character_sum_closed_form,
    abel_character_sum_limit,
    character_product,
    decompose,
    multiplicity,
    verify_expansion_identity,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY",
    "BOUNDARY_TOL",
    "BoundaryConjugacyClass",
    "CartanCoords",
    "CharacterValue",
    "DET_TOL",
    "Decomposition",
    "DecompositionTerm",
    "DeterminantViolation",
    "DiskPoint",
    "ELLIPTIC",
    "GroupElement",
    "HYPERBOLIC",
    "HalfInteger",
    "IDENTITY",
    "IndexPair",
    "InvalidDamping",
    "InvalidParams",
    "JacobiParams",
    "MatrixBlock",
    "MonteCarloEstimate",
    "OrthoRequest",
    "OrthoResult",
    "QuadratureRule",
    "RepLabel",
    "SingularAngle",
    "Su11Error",
    "UnsupportedClass",
    "abel_character_sum",
    "abel_character_sum_closed_form",
    "abel_character_sum_limit",
    "abel_trace",
    "abel_trace_closed_form",
    "abel_trace_limit",
    "angular_selection",
    "as_rep_label",
    "character",
    "character_cartan",
    "character_compact",
    "character_product",
    "compact_element",
    "damped_trace_sum",
    "decompose",
    "disk_point",
    "formal_dimension",
    "from_alpha_beta",
    "from_cartan",
    "gauss_jacobi",
    "gr_7391",
    "haar_density",
    "homomorphism_defect",
    "inverse",
    "jacobi_p",
    "jacobi_sequence",
    "log_poch_ratio",
    "matrix_element",
    "matrix_element_batch",
    "matrix_element_cartan",
    "monte_carlo_haar",
    "monte_carlo_haar_check",
    "multiplicity",
    "multiply",
    "orthogonality_integral",
    "quadrature_order_for_degree",
    "radial_integral",
    "to_cartan",
    "trace_partial_sum",
    "truncated_operator",
    "unitarity_defect",
    "verify_expansion_identity",
]
