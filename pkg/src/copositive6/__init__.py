"""Structure of the 6x6 copositive cone: case-13 extreme matrices, minimal zeros,
essential components, and the K^(1) counterexample."""

from .core_types import AngleVector, ExtendedSupport, Permutation, Zero, apply_permutation, symmetric
from .errors import ConstraintViolation, InvariantViolation, NotCopositiveEvidence
from .generator import (
    Case13Variant, RegimeFlags, build_case13, c_coeffs, classify_regime, closed_form_zeros,
    expected_extended_supports, sample_main_regime, scale_dad,
)
from .zeros import ZeroTolerances, check_ZE_membership, esupp_set, extended_support, find_minimal_zeros
from .copositivity import Outcome, certify, sample_falsify
from .components import catalog, closure_candidate, essential_set, table3
from .parrilo import (
    K1Certificate, K1Outcome, build_R, build_system, counterexample_matrix, m_closed_form,
    membership_case13_1, solve_certificate,
)

__version__ = "0.1.0"
