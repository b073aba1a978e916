import pytest
from hypothesis import given, settings
from strategies import ideals

from omega_ideals.algebra.monomial import Ring, render_ideal
from omega_ideals.algebra.parser import infer_ring, parse_ideal, parse_monomial, parse_ring
from omega_ideals.errors import IdealParseError, UnknownVariableError
from omega_ideals.models import ideal_from_json, ideal_to_json


def test_parse_example_ideal(ring3):
    i = parse_ideal("x^4, y^3, z^2, x*y, y^2*z", ring3)
    assert len(i.gens) == 5
    assert i.contains_exponents((1, 1, 0))
    assert i.max_degree == 4


def test_constants_and_zero_exponents(ring3):
    assert parse_ideal("1", ring3).is_unit
    assert parse_ideal("x^0", ring3).is_unit
    assert parse_ideal("0", ring3).is_zero
    assert parse_ideal("x*x^2", ring3) == parse_ideal("x^3", ring3)


def test_ring_inference():
    assert parse_ideal("x*y").ring == Ring(("x", "y", "z"))
    assert parse_ideal("x1*x3").ring == Ring(("x1", "x2", "x3"))
    assert infer_ring(["z"]) == Ring(("x", "y", "z"))
    with pytest.raises(UnknownVariableError):
        parse_ideal("a*b")


def test_declared_ring():
    ring = parse_ring("a, b")
    assert ring == Ring(("a", "b"))
    assert parse_ideal("a^2*b", ring).exponents == ((2, 1),)
    assert parse_monomial("a*b^3", ring).exps == (1, 3)


def test_declared_ring_rejects_repeated_or_missing_names():
    with pytest.raises(IdealParseError) as info:
        parse_ring("x, y, x")
    assert info.value.position == 6
    assert info.value.pointer().endswith("      ^")
    with pytest.raises(IdealParseError):
        parse_ring(" , ")


@pytest.mark.parametrize("text", ["x^-1", "x^", "2*x", "x^2 y", "", "x,,y", "x*"])
def test_syntax_errors(ring3, text):
    with pytest.raises(IdealParseError):
        parse_ideal(text, ring3)


def test_error_carries_position(ring3):
    with pytest.raises(UnknownVariableError) as info:
        parse_ideal("x, w", ring3)
    assert info.value.position == 3
    assert info.value.pointer().endswith("   ^")


def test_json_form(ring2):
    i = parse_ideal("x^2, y", ring2)
    assert ideal_to_json(i) == '{"ring":["x","y"],"gens":[[0,1],[2,0]]}'
    assert ideal_from_json(ideal_to_json(i)) == i


@given(ideals(proper=False))
@settings(max_examples=100)
def test_render_round_trip(i):
    assert parse_ideal(render_ideal(i), i.ring) == i
    assert ideal_from_json(ideal_to_json(i)) == i
