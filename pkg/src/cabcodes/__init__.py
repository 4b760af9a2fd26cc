"""Fast encoding and unencoding of one-point algebraic-geometry codes on C_ab curves."""

from .bivar import BiPoly, Monomial, WeightedOrder, evaluate_naive, leading_monomial, weighted_degree
from .codec import (
    CabCode,
    encode,
    encode_naive,
    is_maximal_semigrid,
    message_to_poly,
    new_code,
    precompute,
    unencode,
)
from .curve import CabCurve, hasse_weil, hermitian, hermitian_like, norm_trace, rational_points, validate_cab
from .errors import CodeError, CurveError, MissingGroebnerBasisError, NotACodewordError, ParseError
from .field import GF, FieldElement, FieldSpec, enumerate_field
from .geometry import PointSet, is_semi_grid, x_support, y_fiber
from .interp import bivariate_interp, combine
from .mpeval import bivariate_mpe
from .upoly import (
    PartitionTree,
    UniPoly,
    build_partition_tree,
    formal_derivative,
    tree_vanish,
    univariate_interp,
    univariate_mpe,
)
from .vanish import GroebnerBasis, compute_Bhat, reduce, vanishing_gb

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "CabCode",
    "CabCurve",
    "CodeError",
    "CurveError",
    "FieldElement",
    "FieldSpec",
    "GF",
    "GroebnerBasis",
    "MissingGroebnerBasisError",
    "Monomial",
    "NotACodewordError",
    "ParseError",
    "PartitionTree",
    "PointSet",
    "UniPoly",
    "WeightedOrder",
    "bivariate_interp",
    "bivariate_mpe",
    "build_partition_tree",
    "combine",
    "compute_Bhat",
    "encode",
    "encode_naive",
    "enumerate_field",
    "evaluate_naive",
    "formal_derivative",
    "hasse_weil",
    "hermitian",
    "hermitian_like",
    "is_maximal_semigrid",
    "is_semi_grid",
    "leading_monomial",
    "message_to_poly",
    "new_code",
    "norm_trace",
    "precompute",
    "rational_points",
    "reduce",
    "tree_vanish",
    "unencode",
    "univariate_interp",
    "univariate_mpe",
    "validate_cab",
    "vanishing_gb",
    "weighted_degree",
    "x_support",
    "y_fiber",
]
