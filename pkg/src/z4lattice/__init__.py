"""Weight enumerators of Z4-linear codes, Construction A4 theta series and secrecy gains."""

from z4lattice.z4core import Z4Code, standard_form, enumerate_codewords, lee_weight, min_lee_distance
from z4lattice.f2core import F2Code, reed_muller, schur_closed, weight_enumerator, joint_weight_enumerator
from z4lattice.enumerators import (
    SwePolynomial,
    WePolynomial,
    JwePolynomial,
    swe_from_code,
    macwilliams_swe,
    is_formally_self_dual,
)
from z4lattice.errors import CapacityError, ClosureError, DomainError, ParseError
from z4lattice.secrecy import SecrecyProfile, secrecy_function, secrecy_gain, h_eval, tau_to_t

__all__ = [
    "Z4Code",
    "standard_form",
    "enumerate_codewords",
    "lee_weight",
    "min_lee_distance",
    "F2Code",
    "reed_muller",
    "schur_closed",
    "weight_enumerator",
    "joint_weight_enumerator",
    "SwePolynomial",
    "WePolynomial",
    "JwePolynomial",
    "swe_from_code",
    "macwilliams_swe",
    "is_formally_self_dual",
    "CapacityError",
    "ClosureError",
    "DomainError",
    "ParseError",
    "SecrecyProfile",
    "secrecy_function",
    "secrecy_gain",
    "h_eval",
    "tau_to_t",
]
