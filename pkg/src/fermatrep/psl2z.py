"""Determinant-1 integer matrices with A and -A identified, and their finite-order elements.

Matrices are stored through a fixed sign rule so that equality of values is
equality in the quotient group.  The elliptic (finite-order) elements come in
three parametrized families: order two with r*s = 1 + m^2, and an order-three
pair with r*s = 1 + m + m^2 that are each other's inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .errors import NotIntegral

if TYPE_CHECKING:
    from .halfplane import HalfPlanePoint


@dataclass(frozen=True)
class UnimodularMatrix:
    """[[a, b], [c, d]] with ad - bc = 1, canonicalized to c > 0, or c = 0 and d > 0."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant must be 1: {(self.a, self.b, self.c, self.d)}")
        if self.c < 0 or (self.c == 0 and self.d < 0):
            for name in ("a", "b", "c", "d"):
                object.__setattr__(self, name, -getattr(self, name))

    @property
    def trace(self) -> int:
        return self.a + self.d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: UnimodularMatrix) -> UnimodularMatrix:
        return compose(self, other)


IDENTITY = UnimodularMatrix(1, 0, 0, 1)


def compose(first: UnimodularMatrix, second: UnimodularMatrix) -> UnimodularMatrix:
    """The product first * second, canonicalized."""
    return UnimodularMatrix(
        first.a * second.a + first.b * second.c,
        first.a * second.b + first.b * second.d,
        first.c * second.a + first.d * second.c,
        first.c * second.b + first.d * second.d,
    )


def inverse(matrix: UnimodularMatrix) -> UnimodularMatrix:
    """The adjugate [[d, -b], [-c, a]], canonicalized."""
    return UnimodularMatrix(matrix.d, -matrix.b, -matrix.c, matrix.a)


class EllipticVariant(Enum):
    ORDER_TWO = "order2"
    ORDER_THREE = "order3"
    ORDER_THREE_INVERSE = "order3inv"


@dataclass(frozen=True)
class EllipticElement:
    """A finite-order element together with the parameters it was built from."""

    variant: EllipticVariant
    m: int
    s: int
    r: int
    matrix: UnimodularMatrix

    @property
    def order(self) -> int:
        return 2 if self.variant is EllipticVariant.ORDER_TWO else 3


def make_elliptic(variant: EllipticVariant, m: int, s: int) -> EllipticElement:
    """Build the finite-order element with lower-left entry s and parameter m.

    Order two needs s | 1 + m^2 and gives [[m, -r], [s, -m]]; order three needs
    s | 1 + m + m^2 and gives [[1+m, -r], [s, -m]], whose inverse variant is
    [[m, -r], [s, -(1+m)]].  In each case r is the complementary cofactor.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    norm = 1 + m * m if variant is EllipticVariant.ORDER_TWO else 1 + m + m * m
    r, remainder = divmod(norm, s)
    if remainder:
        raise NotIntegral(f"{s} does not divide {norm}, so there is no integral element for m={m}")
    if variant is EllipticVariant.ORDER_TWO:
        matrix = UnimodularMatrix(m, -r, s, -m)
    elif variant is EllipticVariant.ORDER_THREE:
        matrix = UnimodularMatrix(1 + m, -r, s, -m)
    else:
        matrix = UnimodularMatrix(m, -r, s, -(1 + m))
    return EllipticElement(variant=variant, m=m, s=s, r=r, matrix=matrix)


def fixed_point(element: EllipticElement) -> HalfPlanePoint:
    """The unique upper-half-plane point the element leaves in place.

    (m + sqrt(-1))/s for order two; (2m+1 + sqrt(-3))/(2s) for both
    order-three variants.
    """
    from .halfplane import HalfPlanePoint

    if element.variant is EllipticVariant.ORDER_TWO:
        return HalfPlanePoint(element.m, element.s, 1)
    return HalfPlanePoint(2 * element.m + 1, 2 * element.s, 3)
