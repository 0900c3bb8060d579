"""Cyclic codes over GF(q) through linearized-polynomial images and check elements."""

from .bridges import (
    Assertion,
    CheckElement,
    EquivalenceReport,
    ImageCodeSpec,
    b_lambda_matrix,
    code_from_lambda,
    coset_dimension_bound,
    ell_from_generator,
    image_code_by_definition,
    image_code_generator_matrix,
    lambda_code_set,
    lambda_constraint_matrix,
    lambda_from_parity_check,
    matrix_code_basis,
    verify_equivalence,
)
from .cyclic import (
    DEFAULT_CAP,
    CapExceededError,
    CodeReport,
    CyclicCode,
    code_from_generator,
    code_from_parity_check,
    codeword_set,
    divisors_of_xn_minus_1,
    encode,
    enumerate_codewords,
    factor_xn_minus_1,
    g1_matrix,
    is_cyclic_set,
    minimum_distance,
    q_cyclotomic_coset,
    report,
    standard_generator_matrix,
    weight_distribution,
    xn_minus_1,
)
from .fields import (
    DEFAULT_DLOG_BOUND,
    ExtensionField,
    Field,
    FieldElement,
    FieldError,
    FieldTower,
    PrimeField,
    build_tower,
)
from .linalg import GFqMatrix, span_vectors
from .normal import NormalBasis, find_normal, is_normal, normal_elements
from .poly import UnivariatePoly, factor_monic, first_irreducible, is_irreducible
from .qpoly import QPolynomial, evaluate, evaluate_in_coords, image_basis, kernel_basis

__all__ = [name for name in dir() if not name.startswith("_")]
