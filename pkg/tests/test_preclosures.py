#!/usr/bin/env python
# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

import pytest

from idealclose import core
from idealclose import monomial
from idealclose.closures import framework
from idealclose.closures import preclosures
from idealclose.groebner import Ideal
from idealclose.poly import PolynomialRing


def test_preclosure_rejects_unknown_axiom():
    with pytest.raises(ValueError) as excinfo:
        preclosures.Preclosure('bad', lambda ideal, budget: ideal, 'symmetry')
    assert('expected_failure' in str(excinfo.value))


def test_certificates_required():
    with pytest.raises(ValueError):
        preclosures.zero_map().verify_certificates()


def test_suite_certificates_hold():
    suite = preclosures.preclosure_suite(max_degree=4, n_max=3)
    names = [str(p) for p in suite]

    assert(names[1:] == ['unmixed', 'ratliffrush', 'zero'])

    for preclosure in suite:
        assert(preclosure.certificates)

        report = preclosure.verify_certificates()
        assert(report['status'] == 'pass')
        assert(report['details']['expected_failure'] == preclosure.expected_failure)


def test_colon_fails_idempotence_on_cubic():
    R = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    by_x = preclosures.colon_operation(['x'])
    I = Ideal(R, ['x^2'])

    assert(by_x.close(I) == Ideal(R, ['x']))
    assert(by_x.close(by_x.close(I)).is_unit())

    # a nested family so order preservation is compared on real pairs
    family = [Ideal(R, []), I, Ideal(R, ['x'])]
    report = framework.check_axioms(by_x, family)
    assert(report['details']['axioms'] == {
        'extension': 'pass', 'idempotence': 'fail', 'order-preservation': 'pass'})
    assert(report['details']['family_size'] == 3)


def test_unmixed_part():
    R = PolynomialRing(['x', 'y'])
    unmixed = preclosures.unmixed_part()

    assert(unmixed.close(Ideal(R, ['x^2', 'x*y'])) == Ideal(R, ['x']))
    assert(unmixed.close(Ideal(R, ['x^2', 'x*y', 'y^2'])) == Ideal(R, ['x^2', 'x*y', 'y^2']))

    report = framework.check_axioms(
        unmixed, [Ideal(R, ['x^2', 'x*y']), Ideal(R, ['x^2', 'x*y', 'y^2'])])
    assert(report['details']['axioms']['order-preservation'] == 'fail')

    with pytest.raises(core.ClosureUnavailable):
        unmixed.close(Ideal(R, ['x + y^2']))


def test_ratliff_rush_stage_contains_mixed_monomial():
    R = PolynomialRing(['x', 'y'])
    I = Ideal(R, ['x^4', 'x^3*y', 'x*y^3', 'y^4'])

    assert(not I.contains('x^2*y^2'))
    assert(preclosures.ratliff_rush_stage().close(I).contains('x^2*y^2'))
    assert(preclosures.ratliff_rush(1).close(I).contains('x^2*y^2'))


def test_ratliff_rush_exponents_of_powers_of_m():
    # powers of the maximal ideal are Ratliff-Rush closed
    gens = monomial.power([(1, 0), (0, 1)], 3, 2)

    assert(preclosures.ratliff_rush_exponents(gens, 2, 4) == gens)


def test_ratliff_rush_never_reports_false_out():
    R = PolynomialRing(['x', 'y'])
    I = Ideal(R, ['y^8', 'x*y^6', 'x^5*y', 'x^7'])

    short = preclosures.ratliff_rush(1)
    verdict = short.contains(I, 'x^3*y^5')
    assert(verdict.is_unknown)
    assert(verdict.reason == core.REASON_BUDGET)

    with pytest.raises(core.ClosureUnavailable) as excinfo:
        short.close(I)
    assert(excinfo.value.reason == core.REASON_BUDGET)

    assert(preclosures.ratliff_rush(8).contains(I, 'x^3*y^5').is_in)

    # outside the integral closure is a certified Out
    assert(short.contains(I, 'x^2*y^2').is_out)


def test_ratliff_rush_certified_closures():
    R = PolynomialRing(['x', 'y'])
    rr = preclosures.ratliff_rush(2)

    # pure powers form a regular sequence
    I = Ideal(R, ['x^2', 'y^2'])
    assert(rr.close(I) == I)
    assert(rr.contains(I, 'x*y').is_out)

    lower, upper = preclosures.ratliff_rush_bounds([(2, 0), (0, 2)], 2, 2)
    assert(lower == upper == [(0, 2), (2, 0)])

    J = Ideal(R, ['x^4', 'x^3*y', 'x*y^3', 'y^4'])
    assert(rr.contains(J, 'x').is_out)

    with pytest.raises(core.ClosureUnavailable):
        rr.close(Ideal(R, ['x + y^2']))
    assert(rr.contains(Ideal(R, ['x + y^2']), 'x').is_unknown)


def test_ratliff_rush_search_finds_certified_witness():
    witness = preclosures.search_ratliff_rush_witness(max_degree=4, n_max=3)
    assert(witness is not None)

    small, large = witness
    assert(monomial.issubset(small, large))

    closures = []
    for gens in (small, large):
        lower, upper = preclosures.ratliff_rush_bounds(gens, 2, 3)
        assert(monomial.issubset(upper, lower))
        closures.append(lower)

    assert(not monomial.issubset(closures[0], closures[1]))


def test_zero_map_fails_extension_only():
    R = PolynomialRing(['x', 'y'])
    report = framework.check_axioms(preclosures.zero_map(), [Ideal(R, ['x']), Ideal(R, ['x', 'y'])])

    assert(report['details']['axioms'] == {
        'extension': 'fail', 'idempotence': 'pass', 'order-preservation': 'pass'})
