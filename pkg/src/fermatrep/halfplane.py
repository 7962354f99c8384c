"""Exact points (P + sqrt(-D))/Q and their reduction into the fundamental domain.

Everything here is integer arithmetic; the points i and (1 + sqrt(-3))/2 that
the theorem pipelines target must be recognized by exact equality, never by
floating-point proximity.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import ReductionFailure
from .psl2z import IDENTITY, UnimodularMatrix, compose


@dataclass(frozen=True)
class HalfPlanePoint:
    """The point (P + sqrt(-D))/Q with D in {1, 3}.

    Q must divide P^2 + D; that keeps the family closed under the whole
    matrix action, so every image below stays exactly representable.
    """

    P: int
    Q: int
    D: int

    def __post_init__(self) -> None:
        if self.D not in (1, 3):
            raise ValueError(f"D must be 1 or 3, got {self.D}")
        if self.Q <= 0:
            raise ValueError(f"Q must be positive, got {self.Q}")
        if (self.P * self.P + self.D) % self.Q != 0:
            raise ValueError(f"Q={self.Q} does not divide P^2 + D = {self.P * self.P + self.D}")


@dataclass(frozen=True)
class Shift:
    """The translation z -> z + n."""

    n: int


@dataclass(frozen=True)
class Invert:
    """The inversion z -> -1/z."""


INVERT = Invert()

Step = Shift | Invert


def step_matrix(step: Step) -> UnimodularMatrix:
    if isinstance(step, Shift):
        return UnimodularMatrix(1, step.n, 0, 1)
    return UnimodularMatrix(0, -1, 1, 0)


def apply(matrix: UnimodularMatrix, z: HalfPlanePoint) -> HalfPlanePoint:
    """The exact fractional-linear image of z.

    Writing t = (P^2 + D)/Q, the image has
        P' = a*c*t + (a*d + b*c)*P + b*d*Q
        Q' = c^2*t + 2*c*d*P + d^2*Q
    both integers, with Q' > 0 because the point stays off the real line.
    """
    a, b, c, d = matrix.a, matrix.b, matrix.c, matrix.d
    t = (z.P * z.P + z.D) // z.Q
    new_p = a * c * t + (a * d + b * c) * z.P + b * d * z.Q
    new_q = c * c * t + 2 * c * d * z.P + d * d * z.Q
    return HalfPlanePoint(new_p, new_q, z.D)


def is_reduced(z: HalfPlanePoint) -> bool:
    """Fundamental-set membership: Re(z) in (-1/2, 1/2] and |z| >= 1 with Re(z) >= 0 on the arc."""
    norm = z.P * z.P + z.D
    qq = z.Q * z.Q
    in_strip = abs(2 * z.P) < z.Q or 2 * z.P == z.Q
    outside_circle = norm > qq or (norm == qq and z.P >= 0)
    return in_strip and outside_circle


@dataclass(frozen=True)
class ReductionResult:
    """Reduced point plus the matrix U and generator word that produced it."""

    reduced: HalfPlanePoint
    U: UnimodularMatrix
    word: tuple[Step, ...]
    step_count: int


def reduce(z0: HalfPlanePoint) -> ReductionResult:
    """Drive z0 into the fundamental set, recording every generator applied.

    Loop: translate Re(z) into (-1/2, 1/2] (nearest integer, ties kept on the
    right edge), then invert unless the point is already reduced.  An
    inversion strictly shrinks Q except when |z| = 1 with Re(z) < 0, where it
    mirrors the point onto the kept half of the arc and the loop ends.  The
    step budget of 4*bitlength(Q) + 8 is generous; exceeding it means a bug,
    not a hard input.
    """
    max_steps = 4 * z0.Q.bit_length() + 8
    word: list[Step] = []
    u = IDENTITY
    z = z0
    while True:
        r = z.P % z.Q
        if 2 * r > z.Q:
            r -= z.Q
        if r != z.P:
            n = (r - z.P) // z.Q
            mat = UnimodularMatrix(1, n, 0, 1)
            word.append(Shift(n))
            u = compose(mat, u)
            z = apply(mat, z)
        if is_reduced(z):
            break
        mat = UnimodularMatrix(0, -1, 1, 0)
        word.append(INVERT)
        u = compose(mat, u)
        z = apply(mat, z)
        if len(word) > max_steps:
            raise ReductionFailure(f"reduction of {z0} exceeded {max_steps} steps")
    return ReductionResult(reduced=z, U=u, word=tuple(word), step_count=len(word))


def replay(word: Sequence[Step]) -> UnimodularMatrix:
    """Recompose the tracked matrix from a word given in application order."""
    u = IDENTITY
    for step in word:
        u = compose(step_matrix(step), u)
    return u
