"""Deterministic enumerations of small ideal families."""
from itertools import combinations, product

from omega_ideals.algebra.decomposition import IrreducibleComponent
from omega_ideals.algebra.monomial import MonomialIdeal, Ring


def staircase_ideals(max_exponent: int) -> list[MonomialIdeal]:
    """Every proper nonzero ideal of k[x,y] whose minimal generators have exponents <= max_exponent.

    A staircase is a strictly decreasing run of x-exponents paired with a strictly increasing
    run of y-exponents, so each one comes from two subsets of equal size.
    """
    ring = Ring.default(2)
    values = range(max_exponent + 1)
    family = []
    for k in range(1, max_exponent + 2):
        for xs, ys in product(combinations(values, k), repeat=2):
            if xs == ys == (0,):
                continue
            family.append(ring.ideal(zip(reversed(xs), ys)))
    return family


def irreducible_family(n: int, max_exponent: int) -> list[IrreducibleComponent]:
    ring = Ring.default(n)
    return [IrreducibleComponent(ring, powers)
            for powers in product(range(max_exponent + 1), repeat=n) if any(powers)]
