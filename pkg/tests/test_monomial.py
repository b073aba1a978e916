import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import ideals

from omega_ideals.algebra.monomial import (
    Ring,
    colon,
    factor_out_gcd,
    gcd,
    intersect,
    is_primary,
    is_squarefree,
    is_subideal,
    lcm,
    minimalize,
    power,
    product,
    quotient,
    radical,
)
from omega_ideals.algebra.polynomial import SparsePolynomial, contains_poly, reduced_product
from omega_ideals.errors import PreconditionError, RingMismatchError


def test_generators_are_minimal_and_canonically_ordered(ring3):
    i = ring3.ideal([(3, 0, 0), (2, 0, 0), (1, 1, 0), (2, 1, 0)])
    assert i.exponents == ((2, 0, 0), (1, 1, 0))


def test_zero_and_unit_ideal(ring3):
    assert ring3.zero_ideal().is_zero
    assert str(ring3.zero_ideal()) == "(0)"
    assert ring3.unit_ideal().is_unit
    assert str(ring3.unit_ideal()) == "(1)"
    assert ring3.ideal([(0, 0, 0), (1, 2, 3)]).is_unit


def test_monomial_operations(ring3):
    a = ring3.monomial((2, 1, 0))
    b = ring3.monomial((1, 3, 1))
    assert lcm(a, b).exps == (2, 3, 1)
    assert gcd(a, b).exps == (1, 1, 0)
    assert quotient(a, ring3.monomial((1, 1, 0))).exps == (1, 0, 0)
    with pytest.raises(PreconditionError):
        quotient(a, b)


def test_colon_radical_and_gcd(ideal):
    assert colon(ideal("x^2, x*y"), ideal("x")) == ideal("x, y")
    assert radical(ideal("x^3, y^2*z")) == ideal("x, y*z")
    h, rest = factor_out_gcd(ideal("x^2*y, x*y^2"))
    assert h.exps == (1, 1, 0)
    assert rest == ideal("x, y")


def test_intersection_and_power(ideal):
    assert intersect(ideal("x"), ideal("y")) == ideal("x*y")
    assert power(ideal("x, y"), 2) == ideal("x^2, x*y, y^2")
    with pytest.raises(PreconditionError):
        power(ideal("x"), 0)


def test_primary_and_squarefree(ideal):
    assert is_primary(ideal("x^3, x*y, y^2"))
    assert not is_primary(ideal("x^2, x*y"))
    assert is_squarefree(ideal("x*y, y*z"))
    assert not is_squarefree(ideal("x^2, y"))


def test_ring_mismatch_is_rejected(ring2, ring3):
    with pytest.raises(RingMismatchError):
        intersect(ring2.ideal([(1, 0)]), ring3.ideal([(1, 0, 0)]))
    with pytest.raises(RingMismatchError):
        minimalize([ring2.variable(0), ring3.variable(0)])


def test_default_ring_names():
    assert Ring.default(2).names == ("x", "y")
    assert Ring.default(5).names == ("x1", "x2", "x3", "x4", "x5")
    with pytest.raises(PreconditionError):
        Ring(("x", "x"))


def test_polynomial_membership_is_support_wise(ring2):
    x, y = SparsePolynomial.variable(ring2, 0), SparsePolynomial.variable(ring2, 1)
    target = ring2.ideal([(2, 0), (0, 2)])
    assert contains_poly(target, x * x + y * y)
    assert not contains_poly(target, x * x + x * y)
    assert reduced_product([x, y, x + y], target).is_zero
    assert str(x * (x + y)) == "x^2 + x*y"


@given(ideals(), ideals())
@settings(max_examples=100)
def test_sum_and_intersection_commute(i, j):
    assert i + j == j + i
    assert i & j == j & i


@given(ideals(), ideals())
@settings(max_examples=100)
def test_containment_chain(i, j):
    meet = intersect(i, j)
    assert is_subideal(product(i, j), meet)
    assert is_subideal(meet, i) and is_subideal(meet, j)
    assert is_subideal(i, i + j)


@given(ideals(proper=False))
@settings(max_examples=100)
def test_minimalize_is_idempotent(i):
    assert minimalize(i.gens, i.ring) == i


@given(ideals(), st.integers(1, 3))
@settings(max_examples=100)
def test_radical_is_idempotent_and_ignores_powers(i, m):
    root = radical(i)
    assert radical(root) == root
    assert radical(power(i, m)) == root


@given(ideals(), ideals())
@settings(max_examples=100)
def test_product_colon_contains_the_ideal(i, j):
    assert is_subideal(i, colon(product(i, j), j))


@given(ideals(max_generators=3), ideals(max_generators=3), ideals(max_generators=3))
@settings(max_examples=100)
def test_operations_are_associative(i, j, k):
    assert (i + j) + k == i + (j + k)
    assert (i * j) * k == i * (j * k)
    assert (i & j) & k == i & (j & k)


@given(ideals(max_generators=3), ideals(max_generators=3), ideals(max_generators=3))
@settings(max_examples=100)
def test_operations_distribute(i, j, k):
    assert i * (j + k) == i * j + i * k
    assert i & (j + k) == (i & j) + (i & k)
    assert i + (j & k) == (i + j) & (i + k)
