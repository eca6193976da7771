"""Moore-Penrose and group inverses of dense complex matrices, and checks of
when the inverse of a sum equals the sum of the inverses."""

__version__ = "0.1.0"

from .core import (
    TolerancePolicy,
    as_matrix,
    conj_transpose,
    frobenius_norm,
    inverse_square,
    mat_mul,
    null_basis,
    numerical_rank,
)
from .errors import (
    CertificationError,
    ConstraintError,
    GinvError,
    MatrixParseError,
    NonexistenceError,
    PreconditionError,
    ShapeError,
    SingularMatrixError,
)
from .factorization import FullRankFactorization, full_rank_factorize
from .generators import (
    GeneratedPair,
    PairRecipe,
    border_star_pair,
    enrich_pair,
    gen_sharp_pair_case1,
    gen_sharp_pair_case2,
    gen_star_pair_2x2,
    random_certified_pair,
    random_order_pair,
)
from .groupinv import certify_group, group_exists, group_inverse, verify_group_characterization
from .identities import (
    check_sharp_conditions,
    check_sharp_order,
    check_star_conditions,
    check_star_order,
    star_equiv_bridge,
    verify_mitra,
    verify_prelim_properties,
    verify_prelimgrp_properties,
    verify_sum_identity_group,
    verify_sum_identity_mp,
)
from .matfile import format_matrix, parse_matrix, read_matrix, write_matrix
from .pinv import (
    LeastSquaresResult,
    SolutionCase,
    certify_penrose,
    min_norm_least_squares,
    pseudo_inverse,
    pseudo_inverse_gram,
)
from .reports import ConditionItem, ConditionReport

__all__ = [
    "CertificationError",
    "ConditionItem",
    "ConditionReport",
    "ConstraintError",
    "FullRankFactorization",
    "GeneratedPair",
    "GinvError",
    "LeastSquaresResult",
    "MatrixParseError",
    "NonexistenceError",
    "PairRecipe",
    "PreconditionError",
    "ShapeError",
    "SingularMatrixError",
    "SolutionCase",
    "TolerancePolicy",
    "as_matrix",
    "border_star_pair",
    "certify_group",
    "certify_penrose",
    "check_sharp_conditions",
    "check_sharp_order",
    "check_star_conditions",
    "check_star_order",
    "conj_transpose",
    "enrich_pair",
    "format_matrix",
    "frobenius_norm",
    "full_rank_factorize",
    "gen_sharp_pair_case1",
    "gen_sharp_pair_case2",
    "gen_star_pair_2x2",
    "group_exists",
    "group_inverse",
    "inverse_square",
    "mat_mul",
    "min_norm_least_squares",
    "null_basis",
    "numerical_rank",
    "parse_matrix",
    "pseudo_inverse",
    "pseudo_inverse_gram",
    "random_certified_pair",
    "random_order_pair",
    "read_matrix",
    "star_equiv_bridge",
    "verify_group_characterization",
    "verify_mitra",
    "verify_prelim_properties",
    "verify_prelimgrp_properties",
    "verify_sum_identity_group",
    "verify_sum_identity_mp",
    "write_matrix",
]
