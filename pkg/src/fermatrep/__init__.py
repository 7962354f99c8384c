"""Exact constructions of the prime representations X^2 + Y^2 and X^2 + 3Y^2.

For p = 1 (mod 4) (Theorem A) and p = 1 (mod 3) (Theorem B) the library
builds a congruence witness, an order-2 or order-3 matrix fixing an explicit
point of the upper half plane, reduces that point into the fundamental domain
of the modular group with a tracked matrix, and reads the representation off
the result.  Every run yields a certificate that replays independently, and a
brute-force oracle provides ground truth.
"""

from .errors import NotIntegral, ReductionFailure, WrongResidueClass
from .halfplane import HalfPlanePoint, Invert, ReductionResult, Shift
from .modarith import MAX_PRIME, Prime, Witness, WitnessKind, cube_witness, is_prime, powmod, sqrt_minus_one
from .oracle import RepresentationSet, all_representations, reduced_equivalents
from .psl2z import (
    IDENTITY,
    EllipticElement,
    EllipticVariant,
    UnimodularMatrix,
    fixed_point,
    make_elliptic,
)
from .theorems import (
    Certificate,
    Representation,
    certificate_failure,
    one_three,
    parity_convert,
    two_squares,
    verify_certificate,
    verify_conjugation,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_PRIME",
    "IDENTITY",
    "Certificate",
    "EllipticElement",
    "EllipticVariant",
    "HalfPlanePoint",
    "Invert",
    "NotIntegral",
    "Prime",
    "ReductionFailure",
    "ReductionResult",
    "Representation",
    "RepresentationSet",
    "Shift",
    "UnimodularMatrix",
    "Witness",
    "WitnessKind",
    "WrongResidueClass",
    "all_representations",
    "certificate_failure",
    "cube_witness",
    "fixed_point",
    "is_prime",
    "make_elliptic",
    "one_three",
    "parity_convert",
    "powmod",
    "reduced_equivalents",
    "sqrt_minus_one",
    "two_squares",
    "verify_certificate",
    "verify_conjugation",
]
