from functools import reduce
from operator import mul

import pytest
from hypothesis import given, settings
from strategies import ideals

from omega_ideals.algebra.decomposition import IrreducibleComponent
from omega_ideals.algebra.monomial import Ring
from omega_ideals.algebra.polynomial import SparsePolynomial, contains_poly
from omega_ideals.engine.dispatcher import omega
from omega_ideals.engine.result import WitnessCertificate
from omega_ideals.errors import PreconditionError
from omega_ideals.oracle import (
    binomial_absorbing_search,
    brute_noether,
    brute_power_decomposition_check,
    monomial_absorbing_lower_bound,
    random_corpus,
    sweep,
    verify_certificate,
)


def test_brute_noether(ideal):
    assert brute_noether(ideal("x^4, y^3, z^2")) == 7
    assert brute_noether(ideal("x^3, y^2, z^2, x*y")) == 4
    with pytest.raises(PreconditionError):
        brute_noether(ideal("1"))


def test_absorbing_search_exhausts_small_ideals(ideal):
    search = monomial_absorbing_lower_bound(ideal("x*y"), 3)
    assert (search.t, search.exhausted) == (2, True)
    assert verify_certificate(search.certificate)
    assert monomial_absorbing_lower_bound(ideal("x, y"), 3).t == 1


def test_absorbing_search_stops_at_t_max(ideal):
    search = monomial_absorbing_lower_bound(ideal("x^4, y^3, z^2, x*y, y^2*z"), 4)
    assert (search.t, search.exhausted) == (4, False)
    assert [str(f) for f in search.certificate.factors] == ["x", "x", "x", "x"]
    assert verify_certificate(search.certificate)
    with pytest.raises(PreconditionError):
        monomial_absorbing_lower_bound(ideal("x"), 0)


def test_binomial_search(ideal):
    for i in (ideal("x*y, y*z, x*z"), ideal("x^2, y^2", "x,y")):
        certificate = binomial_absorbing_search(i, 3)
        assert certificate is not None
        assert len(certificate) == 3
        assert verify_certificate(certificate)
    assert len(binomial_absorbing_search(ideal("x^2"), 1)) == 1
    with pytest.raises(PreconditionError):
        binomial_absorbing_search(ideal("x"), 0)


@pytest.mark.parametrize("powers, m", [((1, 1), 2), ((2, 3), 3), ((2, 1, 1), 2)])
def test_power_of_irreducible_decomposes(powers, m):
    assert brute_power_decomposition_check(IrreducibleComponent(Ring.default(len(powers)), powers), m)


def test_random_corpus_is_seeded():
    first = random_corpus(3, 3, 4, 20, seed=7)
    assert first == random_corpus(3, 3, 4, 20, seed=7)
    assert len(first) == len(set(first)) == 20
    assert all(i.is_proper for i in first)


@pytest.mark.sweep
def test_seeded_sweep():
    report = sweep(random_corpus(3, 3, 4, 200, seed=0))
    assert report.checked == 200
    assert report.ok, report.model_dump_json()


@pytest.mark.sweep
def test_sweep_over_three_variable_corpus():
    report = sweep(random_corpus(3, 4, 5, 5000, seed=7))
    assert report.checked == 5000
    assert report.bounds == 0
    assert report.noether_mismatches == []
    assert report.sandwich_violations == []
    assert report.certificate_failures == []


@pytest.mark.sweep
@pytest.mark.parametrize("variables, max_exponent, max_generators, count", [(2, 6, 5, 500), (4, 3, 4, 300)])
def test_sweep_in_other_rings(variables, max_exponent, max_generators, count):
    report = sweep(random_corpus(variables, max_exponent, max_generators, count, seed=7))
    assert report.checked == count
    assert report.ok, report.model_dump_json()


def test_certificate_check_agrees_with_expanded_products(ring2):
    x, y = SparsePolynomial.variable(ring2, 0), SparsePolynomial.variable(ring2, 1)
    difference = x + SparsePolynomial.from_terms(ring2, {(0, 1): -1})
    target = ring2.ideal([(2, 0), (0, 2)])
    assert contains_poly(target, (x + y) * difference)
    assert verify_certificate(WitnessCertificate((x + y, difference), target))
    assert not contains_poly(target, (x + y) * (x + y))
    assert not verify_certificate(WitnessCertificate((x + y, x + y), target))
    # x^2 is already in the target, so leaving out y keeps the product inside
    assert not verify_certificate(WitnessCertificate((x, x, y), target))
    assert not verify_certificate(WitnessCertificate((), target))


@given(ideals(max_exponent=2, max_generators=3))
@settings(max_examples=60, deadline=None)
def test_emitted_certificates_hold_without_reduction(i):
    certificate = omega(i).certificate
    factors = certificate.factors
    assert contains_poly(i, reduce(mul, factors))
    for k in range(len(factors)):
        rest = factors[:k] + factors[k + 1:]
        if rest:
            assert not contains_poly(i, reduce(mul, rest))
