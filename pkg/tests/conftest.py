import pytest

from omega_ideals.algebra.monomial import Ring
from omega_ideals.algebra.parser import parse_ideal


@pytest.fixture
def ring2() -> Ring:
    return Ring.default(2)


@pytest.fixture
def ring3() -> Ring:
    return Ring.default(3)


@pytest.fixture
def ring4() -> Ring:
    return Ring.of("x", "y", "z", "w")


@pytest.fixture
def ideal():
    """parse_ideal bound to a ring given by its variable names."""
    def build(text: str, names: str = "x,y,z"):
        return parse_ideal(text, Ring(tuple(names.split(","))))
    return build
