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
from idealclose import finite
from idealclose.closures import framework
from idealclose.closures import standard
from idealclose.closures.preclosures import colon_operation
from idealclose.groebner import Ideal
from idealclose.groebner import RingMap
from idealclose.poly import PolynomialRing


def square_zero():
    return PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'x*y', 'y^2'])


def plane():
    return PolynomialRing(['x', 'y'])


def test_verdicts():
    assert(framework.IN.is_in)
    assert(str(framework.unknown(core.REASON_BUDGET)) == 'unknown(budget-exhausted)')

    with pytest.raises(ValueError):
        framework.Verdict('unknown')

    with pytest.raises(ValueError):
        framework.Verdict('maybe')


def test_closure_operation_needs_an_engine():
    with pytest.raises(ValueError) as excinfo:
        framework.ClosureOperation('empty')
    assert('needs a closure or a membership engine' in str(excinfo.value))


def test_membership_only_closure_on_finite_ring():
    R = square_zero()

    def _membership(ideal, f, budget):
        return framework.IN if f.is_zero() or ideal.contains(f) else framework.OUT

    cl = framework.ClosureOperation('members', membership=_membership)
    I = Ideal(R, ['x'])

    assert(cl.close(I) == I)


def test_membership_only_closure_outside_finite_rings():
    cl = framework.ClosureOperation('members', membership=lambda ideal, f, budget: framework.OUT)

    with pytest.raises(core.ClosureUnavailable) as excinfo:
        cl.close(Ideal(plane(), ['x']))
    assert(excinfo.value.reason == core.REASON_NOT_IMPLEMENTED)


def test_extension_enforced():
    R = plane()
    cl = framework.ClosureOperation('shrink', closure=lambda ideal, budget: Ideal(R, []))

    with pytest.raises(ValueError) as excinfo:
        cl.close(Ideal(R, ['x']))
    assert('not extensive' in str(excinfo.value))


def test_bind_ideal():
    R = plane()

    assert(framework.bind_ideal('m', R) == Ideal(R, ['x', 'y']))
    assert(framework.bind_ideal(['x'], R) == Ideal(R, ['x']))

    with pytest.raises(ValueError):
        framework.bind_ideal(Ideal(square_zero(), ['x']), R)


def test_axioms_for_radical_on_square_zero():
    family = finite.lattice_of(square_zero()).ideals()
    report = framework.check_axioms(standard.radical(), family)

    assert(report['status'] == 'pass')
    assert(report['details']['axioms'] == {
        'extension': 'pass', 'idempotence': 'pass', 'order-preservation': 'pass'})


def test_axioms_catch_colon_idempotence():
    R = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    report = framework.check_axioms(colon_operation(['x']), [Ideal(R, ['x^2'])])

    assert(report['status'] == 'fail')
    assert(report['details']['axioms']['idempotence'] == 'fail')
    assert(report['details']['axioms']['extension'] == 'pass')
    assert(report['witnesses'][0]['axiom'] == 'idempotence')


def test_basics_pass_for_saturation():
    R = plane()
    family = [Ideal(R, g) for g in (['x^2*y'], ['x*y'], ['y'], ['x', 'y'], ['x^2', 'y^2'])]
    report = framework.check_basics(standard.saturation(['x']), family)

    assert(report['status'] == 'pass')
    assert(set(report['details']['items']) == set([
        'closed-intersections', 'intersection-of-closures', 'closure-as-meet', 'sum-identity']))


def test_semiprime_violation_for_v():
    R = square_zero()
    m = Ideal(R, ['x', 'y'])
    report = framework.semiprime_check(standard.v_operation(), [(m, m)])

    assert(report['status'] == 'fail')
    assert(report['witnesses'][0]['ideals'] == ['(x, y)', '(x, y)'])
    assert(report['details']['equivalent_form'] == 'fail')


def test_compare_radical_and_saturation():
    R = plane()
    family = [Ideal(R, ['x^2*y'])]
    comparison = framework.compare(standard.radical(), standard.saturation(['x']), family)

    # rad = (xy) lies inside sat = (y)
    assert(comparison['relation'] == '<=')
    assert(comparison['class'] == 'Comparison')


def test_compare_reports_incomparable():
    R = plane()
    family = [Ideal(R, ['x^2*y']), Ideal(R, ['x^2'])]
    comparison = framework.compare(standard.saturation(['x']), standard.saturation(['y']), family)

    assert(comparison['relation'] == 'incomparable')


def test_module_closures():
    R = square_zero()
    m = Ideal(R, ['x', 'y'])
    bf = framework.construct_from_module('ideal', 'm')
    quotient = framework.construct_from_module('quotient', ['x'])

    assert(bf.close(Ideal(R, [])) == m)
    assert(quotient.close(Ideal(R, ['y'])) == m)

    with pytest.raises(ValueError):
        framework.construct_from_module('module', 'm')


def test_indiscrete_from_zero_module():
    R = plane()

    assert(standard.indiscrete().close(Ideal(R, ['x'])).is_unit())


def test_meet_and_union():
    R = plane()
    I = Ideal(R, ['x^2*y'])
    meet = framework.construct_intersection([standard.radical(), standard.saturation(['x'])])
    union = framework.construct_directed_union([standard.radical(), standard.saturation(['x'])])

    assert(meet.close(I) == Ideal(R, ['x*y']))
    assert(union.close(I) == Ideal(R, ['y']))
    assert(str(meet) == 'meet(radical, sat((x)))')

    with pytest.raises(ValueError):
        framework.construct_intersection([])


def test_directed_check():
    R = plane()
    family = [Ideal(R, ['x^2*y']), Ideal(R, ['x*y^2'])]
    closures = [standard.identity(), standard.radical()]

    assert(framework.check_directed(closures, family)['status'] == 'pass')


def test_saturation_is_hull_of_colon():
    R = PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'y^2'])
    lattice = finite.lattice_of(R)
    hull = framework.idempotent_hull(colon_operation(['x']))
    sat = standard.saturation(['x'])

    for I in lattice.ideals():
        assert(hull.close(I) == sat.close(I))


def test_hull_preconditions():
    R = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    family = finite.lattice_of(R).ideals()
    report = framework.hull_precondition_check(colon_operation(['x']), family)

    assert(report['status'] == 'pass')
    assert('idempotence' not in report['details']['axioms'])


def test_hull_budget():
    R = plane()
    hull = framework.idempotent_hull(colon_operation(['x']))
    budget = {'e_max': 6, 'n_max': 2, 'word_max': 4, 'monomial_budget': 200000, 'class': 'Budget'}

    with pytest.raises(core.ClosureUnavailable) as excinfo:
        hull.close(Ideal(R, ['x^5']), budget)
    assert(excinfo.value.reason == core.REASON_BUDGET)


def test_contraction_along_quotient():
    P = PolynomialRing(['x'], characteristic=2)
    Q = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    q = RingMap(P, Q, ['x'])
    contracted = framework.construct_contraction(q, standard.radical())

    assert(contracted.close(Ideal(P, ['x^2'])) == Ideal(P, ['x']))
    assert(contracted.contains(Ideal(P, ['x^2']), 'x').is_in)


def test_star_and_hash():
    R = plane()
    I = Ideal(R, ['x^2', 'y'])
    cl = standard.identity()

    assert(framework.star_check(cl, I, 'x')['status'] == 'pass')
    assert(framework.hash_property_check(cl, I, 'x')['status'] == 'pass')
    assert(framework.star_from_hash_check(cl, I, 'x')['status'] == 'pass')


def test_star_requires_nonzerodivisor():
    R = square_zero()

    with pytest.raises(ValueError) as excinfo:
        framework.star_check(standard.identity(), Ideal(R, ['x']), 'x')
    assert('non-zerodivisor' in str(excinfo.value))


def test_radical_is_not_star():
    R = plane()
    report = framework.star_check(standard.radical(), Ideal(R, ['y']), 'x')

    assert(report['status'] == 'pass')

    report = framework.star_check(standard.radical(), Ideal(R, ['x^2']), 'y')
    assert(report['status'] == 'pass')

    report = framework.star_from_hash_check(standard.radical(), Ideal(R, ['y']), 'x^2')
    # rad(x^2 y) = (xy) differs from x^2 * rad(y), and (x^2) is not radical
    assert(report['details']['star'] == 'fail')
    assert(report['details']['principal_closed'] is False)
    assert(report['status'] == 'pass')


def test_prdec_for_radical():
    R = square_zero()
    lattice = finite.lattice_of(R)
    report = framework.prdec_check(standard.radical(), lattice.ideals(), lattice)

    assert(report['status'] == 'pass')
    assert(report['details']['maximal_closed'] == ['(x, y)'])


def test_prime_check_skips_zero_divisors():
    R = square_zero()
    family = finite.lattice_of(R).ideals()
    report = framework.prime_check(standard.radical(), family, ['x', '1'])

    assert(report['details']['nonzerodivisors'] == 1)
    assert(report['status'] == 'pass')


def test_finite_type_and_cw():
    R = square_zero()
    lattice = finite.lattice_of(R)
    v = standard.v_operation()
    cf = framework.finite_type_cf(v)
    w = framework.construct_cw(v, lattice)

    assert(cf.finite_type)
    for I in lattice.ideals():
        assert(cf.close(I) == v.close(I))
        assert(I.issubset(w.close(I)))

    details = w.details(R)
    assert(details['element_sets_are_ideals'])


def test_closure_from_closed_family():
    R = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    lattice = finite.lattice_of(R)
    family = [Ideal(R, ['x'])]
    cl = framework.closure_from_closed_family(lattice, family)

    assert(cl.close(Ideal(R, [])) == Ideal(R, ['x']))
    assert(cl.close(Ideal(R, ['1'])).is_unit())
    assert(framework.check_axioms(cl, lattice.ideals())['status'] == 'pass')
