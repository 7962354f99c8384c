"""Brute-force ground truth, algorithmically separate from the pipelines.

Nothing here shares code with the witness construction or the reduction loop:
representations come from an exhaustive scan, and reduced equivalents from
enumerating bounded matrices.  Slow is fine; wrong is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .halfplane import HalfPlanePoint, is_reduced

#: Largest matrix-entry bound the exhaustive search accepts.
MAX_BOUND = 64

# Keeps every int64 intermediate in reduced_equivalents far from overflow.
_MAX_POINT_SIZE = 10**6


@dataclass(frozen=True)
class RepresentationSet:
    """All canonical (X, Y) with X^2 + k*Y^2 = p."""

    p: int
    k: int
    pairs: frozenset[tuple[int, int]]


def all_representations(n: int, k: int) -> RepresentationSet:
    """Exhaustively scan X = 0..isqrt(n) for X^2 + k*Y^2 = n with Y > 0.

    Pairs are canonical: X >= 0, Y > 0, and X <= Y when k = 1 (the mirrored
    pair would repeat the same representation).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k not in (1, 3):
        raise ValueError(f"k must be 1 or 3, got {k}")
    pairs = set()
    for x in range(isqrt(n) + 1):
        rest = n - x * x
        if rest <= 0:
            continue
        if k == 1:
            y_squared = rest
        else:
            y_squared, remainder = divmod(rest, k)
            if remainder:
                continue
        y = isqrt(y_squared)
        if y * y != y_squared:
            continue
        if k == 1 and x > y:
            continue
        pairs.add((x, y))
    return RepresentationSet(p=n, k=k, pairs=frozenset(pairs))


def _bezout_top_row(c: int, d: int) -> tuple[int, int]:
    """Some (a, b) with a*d - b*c = 1, for coprime (c, d)."""
    old_r, r = c, d
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_u, old_v = -old_u, -old_v
    # now old_u*c + old_v*d = 1
    return old_v, -old_u


@lru_cache(maxsize=None)
def _row_table(bound: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Every canonical coprime bottom row (c, d) with one Bezout top row.

    Rows (c, d) and (-c, -d) act identically on the half plane, so only the
    canonical sign is listed.
    """
    rows = []
    for c in range(bound + 1):
        for d in range(-bound, bound + 1):
            if c == 0:
                if d == 1:
                    rows.append((1, 0, 0, 1))
                continue
            if gcd(c, d) != 1:
                continue
            a0, b0 = _bezout_top_row(c, d)
            rows.append((a0, b0, c, d))
    table = np.array(rows, dtype=np.int64).T
    return table[0], table[1], table[2], table[3]


def reduced_equivalents(z: HalfPlanePoint, bound: int) -> set[HalfPlanePoint]:
    """Distinct reduced images of z under every matrix with entries in [-bound, bound].

    For a fixed bottom row (c, d) the images of the whole top-row family are
    the translates P0 + t*Q0 of one particular image, so only the one or two
    translates with real part in [-1/2, 1/2] can possibly be reduced; those
    are computed for every row at once and the survivors re-checked exactly.
    """
    if not 1 <= bound <= MAX_BOUND:
        raise ValueError(f"bound must be in [1, {MAX_BOUND}], got {bound}")
    if max(abs(z.P), z.Q) > _MAX_POINT_SIZE:
        raise ValueError(f"point too large for the exhaustive search: {z}")
    a0, b0, c, d = _row_table(bound)
    t = (z.P * z.P + z.D) // z.Q
    q_img = c * c * t + 2 * c * d * z.P + d * d * z.Q
    p_img = a0 * c * t + (a0 * d + b0 * c) * z.P + b0 * d * z.Q
    base = p_img % q_img
    found: set[HalfPlanePoint] = set()
    for candidate in (base, base - q_img):
        shift = (candidate - p_img) // q_img
        a = a0 + shift * c
        b = b0 + shift * d
        mask = (
            (np.abs(a) <= bound)
            & (np.abs(b) <= bound)
            & ((np.abs(2 * candidate) < q_img) | (2 * candidate == q_img))
            # a reduced point needs P^2 + D >= Q^2 with |2P| <= Q, forcing Q <= 2
            & (q_img <= 2)
        )
        for p_val, q_val in zip(candidate[mask].tolist(), q_img[mask].tolist()):
            point = HalfPlanePoint(int(p_val), int(q_val), z.D)
            if is_reduced(point):
                found.add(point)
    return found
