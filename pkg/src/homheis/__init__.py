"""Exact computations for Heisenberg Hom-Lie algebras over Q(i)."""

from .errors import FieldError, HomLieError, ShapeError, ValidationError
from .exactla import Matrix, Scalar, SubspaceBasis, as_scalar
from .homlie import HomLieAlgebra, validate_hom_lie, is_heisenberg_type, adjoint_rep
from .symplectic import darboux_basis, is_lambda_symplectic, symplectic_multiplier
from .heisenberg import (
    HeisenbergAlgebra,
    block_diagonal_heisenberg,
    build_heisenberg,
    decompose,
    normal_form_dim3,
    split_heisenberg_abelian,
)
from .derivations import der_block_check, der_dim_predict, der_space, meta_heisenberg
from .representations import Representation, check_representation, is_faithful, minimal_faithful, trivial_rep
from .cohomology import adjoint_b2_verify, coboundary, cohomology_report, faithful_h1_hom_report, hom_cochain_space

__version__ = "0.1.0"

__all__ = [
    "FieldError",
    "HomLieError",
    "ShapeError",
    "ValidationError",
    "Matrix",
    "Scalar",
    "SubspaceBasis",
    "as_scalar",
    "HomLieAlgebra",
    "validate_hom_lie",
    "is_heisenberg_type",
    "adjoint_rep",
    "darboux_basis",
    "is_lambda_symplectic",
    "symplectic_multiplier",
    "HeisenbergAlgebra",
    "block_diagonal_heisenberg",
    "build_heisenberg",
    "decompose",
    "normal_form_dim3",
    "split_heisenberg_abelian",
    "der_block_check",
    "der_dim_predict",
    "der_space",
    "meta_heisenberg",
    "Representation",
    "check_representation",
    "is_faithful",
    "minimal_faithful",
    "trivial_rep",
    "adjoint_b2_verify",
    "coboundary",
    "cohomology_report",
    "faithful_h1_hom_report",
    "hom_cochain_space",
]
