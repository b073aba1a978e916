import pytest
from hypothesis import given, settings
from strategies import ideals

from omega_ideals.algebra.monomial import is_subideal
from omega_ideals.closure import integral_closure_2d, is_integrally_closed_2d
from omega_ideals.errors import PreconditionError
from omega_ideals.oracle import brute_closure_membership


def test_closure_of_pure_powers(ideal):
    assert integral_closure_2d(ideal("x^2, y^2", "x,y")) == ideal("x^2, x*y, y^2", "x,y")


def test_closure_fills_the_newton_polygon(ideal):
    closure = integral_closure_2d(ideal("x^3, x*y^2, y^4", "x,y"))
    assert closure == ideal("x^3, x^2*y, x*y^2, y^4", "x,y")


def test_closure_keeps_the_gcd(ideal):
    assert integral_closure_2d(ideal("x^3, x*y^2", "x,y")) == ideal("x^3, x^2*y, x*y^2", "x,y")
    assert integral_closure_2d(ideal("x^2*y", "x,y")) == ideal("x^2*y", "x,y")


def test_closed_ideals(ideal):
    assert is_integrally_closed_2d(ideal("x, y", "x,y"))
    assert is_integrally_closed_2d(ideal("x^2, x*y, y^2", "x,y"))
    assert not is_integrally_closed_2d(ideal("x^2, y^2", "x,y"))


def test_closure_needs_two_variables(ideal, ring2):
    with pytest.raises(PreconditionError):
        integral_closure_2d(ideal("x^2, y^2"))
    with pytest.raises(PreconditionError):
        integral_closure_2d(ring2.zero_ideal())


@given(ideals(n=2, max_exponent=5, max_generators=4))
@settings(max_examples=100)
def test_closure_is_an_idempotent_extension(i):
    closure = integral_closure_2d(i)
    assert is_subideal(i, closure)
    assert integral_closure_2d(closure) == closure


@given(ideals(n=2, max_exponent=3, max_generators=3))
@settings(max_examples=30, deadline=None)
def test_brute_membership_implies_closure_membership(i):
    closure = integral_closure_2d(i)
    ring = i.ring
    for a in range(i.max_degree + 1):
        for b in range(i.max_degree + 1 - a):
            u = ring.monomial((a, b))
            if brute_closure_membership(i, u, k_max=3):
                assert u in closure
