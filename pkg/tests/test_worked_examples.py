"""Hand-computed values the engine has to reproduce exactly."""
from omega_ideals.algebra.decomposition import (
    PrimaryComponent,
    canonical_primary_decomposition,
    standard_decomposition,
)
from omega_ideals.algebra.monomial import factor_out_gcd, intersect, product
from omega_ideals.closure import integral_closure_2d
from omega_ideals.engine.dispatcher import omega
from omega_ideals.engine.noether import noether_exponent_primary
from omega_ideals.engine.result import Bounds, Rule
from omega_ideals.linear import is_omega_linear_2d


def test_primary_ideal_in_three_variables(ideal):
    i = ideal("x^4, y^3, z^2, x*y, y^2*z")
    assert {c.powers for c in standard_decomposition(i)} == {(1, 3, 1), (1, 2, 2), (4, 1, 2)}
    assert omega(i).exact == 5


def test_ideal_with_common_factor(ideal):
    i = ideal("x^3*y^4, x^2*y^5, x^4*y^3*z^2, x^5*y^3*z, x^2*y^4*z^2")
    h, j = factor_out_gcd(i)
    assert str(h) == "x^2*y^3"
    assert j == ideal("x*y, y^2, x^2*z^2, x^3*z, y*z^2")
    components = [c.ideal for c in canonical_primary_decomposition(j)]
    assert components == [ideal("x^2, y"), ideal("y, z"), ideal("x^3, y^2, z^2, x*y")]
    assert noether_exponent_primary(PrimaryComponent.from_ideal(components[-1])) == 4
    result = omega(i)
    assert result.exact == 9
    assert result.method[0] is Rule.GCD_FACTOR


def test_staircase_ideal(ideal):
    assert omega(ideal("x^11*y^4, x^8*y^5, x^7*y^9, x^4*y^10, x^2*y^16", "x,y")).exact == 19


def test_sum_and_intersection_can_reverse_order(ideal):
    i = ideal("x^2, x*y, y^2, x*z^2")
    j = ideal("x^2, x*y, y^2, y*z^3")
    assert omega(i).exact == 3
    assert omega(j).exact == 4
    assert omega(intersect(i, j)).exact == 2
    assert omega(i + j).exact == 4


def test_intersection_of_different_primes(ideal):
    i, j = ideal("x, y"), ideal("y, z^2")
    assert (omega(i).exact, omega(j).exact) == (1, 2)
    assert omega(intersect(i, j)).exact == 3


def test_product_and_intersection_pair(ideal):
    i = ideal("x^3, x*y, y^2", "x,y")
    j = ideal("x^2, x*y, y^3", "x,y")
    assert omega(product(i, j)).exact == 5
    assert omega(intersect(i, j)).exact == 3


def test_linear_ideal_that_is_not_closed(ideal):
    i = ideal("x^3, x*y^2, y^4", "x,y")
    assert omega(i).exact == 4
    assert is_omega_linear_2d(i)
    x2y = i.ring.monomial((2, 1))
    assert x2y not in i
    assert x2y in integral_closure_2d(i)


def test_general_poset_only_gets_bounds(ideal):
    i = ideal("x^2*z, x^2*w, y*z, y*w, x*z^2", "x,y,z,w")
    assert [sorted(p) for p in standard_decomposition(i).primes] == [[0, 1], [2, 3], [0, 1, 2]]
    result = omega(i)
    assert isinstance(result.value, Bounds)
    assert result.lo <= result.hi
    assert (result.lo, result.hi) == (3, 4)
