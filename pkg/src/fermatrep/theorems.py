"""End-to-end constructions of p = X^2 + Y^2 and p = X^2 + 3Y^2.

Each pipeline builds a congruence witness, turns it into an elliptic element
with lower-left entry p, reduces the element's fixed point to the standard
one (i, respectively (1 + sqrt(-3))/2), and reads the representation off the
bottom row of T = U^-1.  The returned certificate carries every intermediate
object so an independent checker can replay the whole construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotIntegral, ReductionFailure
from .halfplane import HalfPlanePoint, ReductionResult, apply, reduce, replay
from .modarith import Prime, Witness, WitnessKind, cube_witness, powmod, sqrt_minus_one
from .psl2z import (
    EllipticVariant,
    EllipticElement,
    UnimodularMatrix,
    compose,
    fixed_point,
    inverse,
    make_elliptic,
)

#: The unique reduced point of each discriminant class: i and (1 + sqrt(-3))/2.
STANDARD_POINT = {1: HalfPlanePoint(0, 1, 1), 3: HalfPlanePoint(1, 2, 3)}


@dataclass(frozen=True)
class Representation:
    """X^2 + k*Y^2 = p with X >= 0 and Y > 0, and X <= Y when k = 1."""

    X: int
    Y: int
    k: int
    p: Prime


@dataclass(frozen=True)
class Certificate:
    """Replayable record of one pipeline run; validated by verify_certificate."""

    p: Prime
    witness: Witness
    elliptic: EllipticElement
    reduction: ReductionResult
    T: UnimodularMatrix
    extracted_c: int
    extracted_d: int
    representation: Representation


def _as_prime(p: int | Prime) -> Prime:
    return p if isinstance(p, Prime) else Prime(p)


def two_squares(p: int | Prime) -> Certificate:
    """Write a prime p = 1 (mod 4) as X^2 + Y^2.

    The order-two element with parameters (m, p) fixes (m + i)/p; reducing
    that point to i with tracked matrix U makes T = U^-1 carry i back, and
    comparing imaginary parts forces c^2 + d^2 = p on T's bottom row.
    """
    prime = _as_prime(p)
    witness = sqrt_minus_one(prime)
    element = make_elliptic(EllipticVariant.ORDER_TWO, witness.m, prime.value)
    result = reduce(fixed_point(element))
    if result.reduced != STANDARD_POINT[1]:
        raise ReductionFailure(f"reduction for p={prime.value} missed the standard point i")
    t = inverse(result.U)
    c, d = t.c, t.d
    x, y = sorted((abs(c), abs(d)))
    rep = Representation(X=x, Y=y, k=1, p=prime)
    return Certificate(prime, witness, element, result, t, c, d, rep)


def one_three(p: int | Prime) -> Certificate:
    """Write a prime p = 1 (mod 3) as X^2 + 3Y^2.

    Same shape as two_squares, with the order-three element fixing
    (2m+1 + sqrt(-3))/(2p); the bottom row of T satisfies c^2 + cd + d^2 = p,
    which parity_convert turns into the target form.
    """
    prime = _as_prime(p)
    witness = cube_witness(prime)
    element = make_elliptic(EllipticVariant.ORDER_THREE, witness.m, prime.value)
    result = reduce(fixed_point(element))
    if result.reduced != STANDARD_POINT[3]:
        raise ReductionFailure(f"reduction for p={prime.value} missed the standard order-3 point")
    t = inverse(result.U)
    c, d = t.c, t.d
    x, y = parity_convert(c, d)
    rep = Representation(X=x, Y=y, k=3, p=prime)
    return Certificate(prime, witness, element, result, t, c, d, rep)


def parity_convert(c: int, d: int) -> tuple[int, int]:
    """Turn the value c^2 + cd + d^2 into (X, Y) with X^2 + 3Y^2 equal to it.

    If c is even, (d + c/2)^2 + 3(c/2)^2 works; symmetrically for even d; and
    with both odd, ([d-c]/2)^2 + 3([d+c]/2)^2.  Results are returned as
    absolute values.
    """
    if c % 2 == 0:
        x, y = d + c // 2, c // 2
    elif d % 2 == 0:
        x, y = c + d // 2, d // 2
    else:
        x, y = (d - c) // 2, (d + c) // 2
    return abs(x), abs(y)


def verify_conjugation(cert: Certificate) -> bool:
    """Check U * E * U^-1 is exactly the s=1, m=0 element of the same variant.

    This is the arithmetic-group route to the representation, run as an
    independent cross-check of the imaginary-part extraction: there is a
    single conjugacy class per variant, with [[0,-1],[1,0]] respectively
    [[1,-1],[1,0]] as the distinguished representatives.
    """
    u = cert.reduction.U
    conjugated = compose(compose(u, cert.elliptic.matrix), inverse(u))
    standard = make_elliptic(cert.elliptic.variant, 0, 1)
    return conjugated == standard.matrix


def certificate_failure(cert: Certificate) -> str | None:
    """The reason code of the first broken certificate invariant, or None.

    Checks, in order: witness congruence and construction, elliptic element
    integrality and parameters, word replay, transport of the fixed point to
    the standard point, T = U^-1, the bottom-row extraction identity, the
    representation identity and canonical form, and the conjugation
    cross-check.
    """
    p = cert.p.value
    w = cert.witness
    k = cert.representation.k
    if k == 1:
        if p % 4 != 1 or w.kind is not WitnessKind.SQRT_MINUS_ONE:
            return "witness-kind"
        if not 0 < w.m < p or (w.m * w.m + 1) % p != 0:
            return "witness-congruence"
        other_root = p - w.m
        expected_variant = EllipticVariant.ORDER_TWO
    elif k == 3:
        if p % 3 != 1 or w.kind is not WitnessKind.CUBE_ROOT_NONTRIVIAL:
            return "witness-kind"
        if not 0 < w.m < p or w.m == 1 or (w.m * w.m + w.m + 1) % p != 0:
            return "witness-congruence"
        other_root = p - 1 - w.m
        expected_variant = EllipticVariant.ORDER_THREE
    else:
        return "form-kind"
    if powmod(w.base, w.exponent, p) not in (w.m, other_root):
        return "witness-construction"

    e = cert.elliptic
    if e.variant is not expected_variant or e.m != w.m or e.s != p:
        return "elliptic-parameters"
    try:
        rebuilt = make_elliptic(e.variant, e.m, e.s)
    except (NotIntegral, ValueError):
        return "elliptic-form"
    if rebuilt != e:
        return "elliptic-form"

    red = cert.reduction
    if replay(red.word) != red.U:
        return "word-replay"
    if red.step_count != len(red.word):
        return "step-count"
    if apply(red.U, fixed_point(e)) != red.reduced:
        return "reduction-transport"
    if red.reduced != STANDARD_POINT[k]:
        return "reduction-target"
    if cert.T != inverse(red.U):
        return "inverse-mismatch"

    c, d = cert.extracted_c, cert.extracted_d
    if (c, d) != (cert.T.c, cert.T.d):
        return "extraction-row"
    value = c * c + d * d if k == 1 else c * c + c * d + d * d
    if value != p:
        return "extraction-identity"

    rep = cert.representation
    if rep.p != cert.p or rep.X < 0 or rep.Y <= 0 or (k == 1 and rep.X > rep.Y):
        return "representation-canonical"
    if rep.X * rep.X + k * rep.Y * rep.Y != p:
        return "representation-identity"
    expected_xy = tuple(sorted((abs(c), abs(d)))) if k == 1 else parity_convert(c, d)
    if (rep.X, rep.Y) != expected_xy:
        return "representation-extraction"

    if not verify_conjugation(cert):
        return "conjugation"
    return None


def verify_certificate(cert: Certificate) -> bool:
    """True iff every certificate invariant replays exactly."""
    return certificate_failure(cert) is None
