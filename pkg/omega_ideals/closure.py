"""Integral closure of monomial ideals in two variables.

A monomial lies in the closure iff its exponent vector lies on or above the lower convex
hull of the staircase of I (the Newton polygon), so the closure is read off column by column.
"""
import math
from fractions import Fraction

from omega_ideals.algebra.decomposition import staircase
from omega_ideals.algebra.monomial import MonomialIdeal, factor_out_gcd, minimalize
from omega_ideals.errors import PreconditionError
from omega_ideals.logging_config import get_logger

logger = get_logger(__name__)

Point = tuple[int, int]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _lower_hull(points: list[Point]) -> list[Point]:
    lower: list[Point] = []
    for p in sorted(set(points)):
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    return lower


def _least_height(hull: list[Point], p: int) -> int:
    """Smallest integer q with (p, q) on or above the hull over column p."""
    for (x0, y0), (x1, y1) in zip(hull, hull[1:]):
        if x0 <= p <= x1:
            return math.ceil(y0 + Fraction(y1 - y0, x1 - x0) * (p - x0))
    return hull[-1][1]


def integral_closure_2d(ideal: MonomialIdeal) -> MonomialIdeal:
    ring = ideal.ring
    if ring.n != 2:
        raise PreconditionError(f"Integral closure is only available in two variables, {ring} has {ring.n}")
    if ideal.is_zero:
        raise PreconditionError("The zero ideal has no Newton polygon")
    h, gcd_free = factor_out_gcd(ideal)
    if gcd_free.is_unit:
        return ideal
    # gcd-free in two variables means (x,y)-primary: the staircase runs from (0, b_r) to (a_1, 0)
    hull = _lower_hull([(a, b) for a, b in staircase(gcd_free)])
    width = hull[-1][0]
    gens = [ring.monomial((p, _least_height(hull, p))) * h for p in range(width + 1)]
    closure = minimalize(gens, ring)
    logger.debug(f"closure of {ideal} is {closure} over hull {hull}")
    return closure


def is_integrally_closed_2d(ideal: MonomialIdeal) -> bool:
    return integral_closure_2d(ideal) == ideal
