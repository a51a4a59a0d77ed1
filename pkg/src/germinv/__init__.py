"""Exact local invariants of complex analytic germs defined by polynomials.

Local standard bases (Mora normal form), Milnor numbers of hypersurfaces and
ICIS, intersection multiplicities, relative polar curves, the local Euler
obstruction, Brasselet numbers, and checkers for the identities relating them.
"""

from .errors import (
    AdmissibilityError,
    DimensionMismatchError,
    GenericityError,
    GermError,
    InconsistencyError,
    NonIsolatedSingularityError,
    NotICISError,
    ParseError,
    PreconditionError,
    UnsupportedCaseError,
)
from .geometry import GenericityConfig, GermVariety, LinearForm, polar_ideal
from .invariants import (
    StratumDatum,
    VerificationReport,
    brasselet_number,
    chi_milnor_fibre_isolated,
    euler_obstruction,
    euler_obstruction_of_function,
    evaluate_stratified_chi,
    intersection_multiplicity,
    milnor_hypersurface,
    milnor_icis,
    verify_icis_le_greuel,
    verify_int_numb_isolated,
    verify_le_greuel,
    verify_teissier_smooth,
)
from .parser import parse_polynomial
from .ring import Polynomial
from .standard_basis import INFINITE, Ideal, local_quotient_dim, standard_basis

__version__ = "0.1.0"

__all__ = [
    "GenericityConfig",
    "GermVariety",
    "LinearForm",
    "polar_ideal",
    "AdmissibilityError",
    "DimensionMismatchError",
    "GenericityError",
    "GermError",
    "INFINITE",
    "Ideal",
    "InconsistencyError",
    "NonIsolatedSingularityError",
    "NotICISError",
    "ParseError",
    "Polynomial",
    "PreconditionError",
    "StratumDatum",
    "UnsupportedCaseError",
    "VerificationReport",
    "brasselet_number",
    "chi_milnor_fibre_isolated",
    "euler_obstruction",
    "euler_obstruction_of_function",
    "evaluate_stratified_chi",
    "intersection_multiplicity",
    "local_quotient_dim",
    "milnor_hypersurface",
    "milnor_icis",
    "parse_polynomial",
    "standard_basis",
    "verify_icis_le_greuel",
    "verify_int_numb_isolated",
    "verify_le_greuel",
    "verify_teissier_smooth",
]
