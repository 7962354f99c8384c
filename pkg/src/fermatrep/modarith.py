"""Modular arithmetic: deterministic primality and the unit-group witnesses.

The two theorem pipelines each need one congruence witness modulo p: a square
root of -1 when p = 4N + 1, and a nontrivial cube root of 1 (equivalently a
root of m^2 + m + 1) when p = 3N + 1.  Both come out of Fermat's little
theorem by powering a suitable base a to the exponent N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import WrongResidueClass

#: Exclusive upper bound on accepted primes.
MAX_PRIME = 1 << 40

# Strong-pseudoprime bases; Miller-Rabin with all of them is exact for
# n < 3.3e24, far beyond MAX_PRIME.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def powmod(base: int, exp: int, modulus: int) -> int:
    """base**exp reduced into [0, modulus)."""
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be nonnegative, got {exp}")
    return pow(base, exp, modulus)


def is_prime(n: int) -> bool:
    """Deterministic, exact primality test for every n this package accepts."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Prime:
    """A validated prime in (2, 2**40); the only modulus the pipelines accept."""

    value: int
    residue_class: int = field(init=False)

    def __post_init__(self) -> None:
        if not 2 < self.value < MAX_PRIME:
            raise ValueError(f"prime must lie in (2, 2**40), got {self.value}")
        if not is_prime(self.value):
            raise ValueError(f"{self.value} is not prime")
        object.__setattr__(self, "residue_class", self.value % 12)


class WitnessKind(Enum):
    SQRT_MINUS_ONE = "sqrt-minus-one"
    CUBE_ROOT_NONTRIVIAL = "cube-root-nontrivial"


@dataclass(frozen=True)
class Witness:
    """m = base**exponent mod p, normalized to the smaller of the two valid roots."""

    m: int
    kind: WitnessKind
    base: int
    exponent: int


def sqrt_minus_one(p: Prime) -> Witness:
    """A witness m with m^2 = -1 (mod p), for p = 4N + 1.

    Deterministic: a is the smallest base >= 2 with a^((p-1)/2) = -1, i.e. the
    smallest quadratic non-residue, and m = a^N is replaced by p - m when that
    is smaller.
    """
    if p.value % 4 != 1:
        raise WrongResidueClass(
            f"{p.value} = {p.value % 4} (mod 4); a square root of -1 needs p = 1 (mod 4)"
        )
    n = (p.value - 1) // 4
    a = 2
    while pow(a, 2 * n, p.value) != p.value - 1:
        a += 1
    m = pow(a, n, p.value)
    return Witness(m=min(m, p.value - m), kind=WitnessKind.SQRT_MINUS_ONE, base=a, exponent=n)


def cube_witness(p: Prime) -> Witness:
    """A witness m with m^2 + m + 1 = 0 (mod p) and m != 1, for p = 3N + 1.

    Deterministic: a is the smallest base >= 2 whose N-th power is not 1; that
    power has multiplicative order 3, and the two roots m, p - 1 - m are
    normalized to the smaller one.
    """
    if p.value % 3 != 1:
        raise WrongResidueClass(
            f"{p.value} = {p.value % 3} (mod 3); a cube-root witness needs p = 1 (mod 3)"
        )
    n = (p.value - 1) // 3
    a = 2
    while pow(a, n, p.value) == 1:
        a += 1
    m = pow(a, n, p.value)
    return Witness(
        m=min(m, p.value - 1 - m), kind=WitnessKind.CUBE_ROOT_NONTRIVIAL, base=a, exponent=n
    )
