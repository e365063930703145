#!/usr/bin/env python
# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

import pytest

import numpy as np

from idealclose import core
from idealclose import finite
from idealclose import lab
from idealclose import utils
from idealclose.closures import framework
from idealclose.closures import standard
from idealclose.closures.preclosures import colon_operation
from idealclose.groebner import Ideal
from idealclose.groebner import RingMap
from idealclose.poly import PolynomialRing


def small_rings():
    return [
        PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'x*y', 'y^2']),
        PolynomialRing(['x'], characteristic=2, relations=['x^3']),
        PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'y^2']),
    ]


def monomial_family(size, seed):
    state = np.random.RandomState(seed)
    R = PolynomialRing(['x', 'y'])
    family = []

    for _ in range(size):
        gens = [tuple(int(e) for e in state.randint(0, 4, size=2)) for _ in range(2)]
        family.append(Ideal(R, [R.from_exponents(g) for g in gens]))

    return family


def test_resolve_lattice():
    R = small_rings()[1]
    lattice = finite.lattice_of(R)

    assert(lab.resolve_lattice(lattice) is lattice)
    assert(len(lab.resolve_lattice(R)) == 4)
    assert(len(lab.resolve_lattice(finite.finite_ring_of(R))) == 4)


def test_exhaustive_radical():
    report = lab.exhaustive_check(small_rings()[0], standard.radical())

    assert(report['status'] == 'pass')
    assert(report['check'] == 'exhaustive')
    assert(report['details']['ideals'] == 6)
    assert(report['details']['axioms']['status'] == 'pass')


def test_exhaustive_v_reports_semiprime():
    report = lab.exhaustive_check(small_rings()[0], standard.v_operation())

    assert(report['status'] == 'fail')
    assert(report['details']['axioms']['status'] == 'pass')
    assert(report['details']['semiprime']['status'] == 'fail')
    assert(set(w['check'] for w in report['witnesses']) == set(['semiprime']))


def test_census_of_v():
    report = lab.closed_census(small_rings()[0], standard.v_operation())
    details = report['details']

    assert(report['status'] == 'pass')
    assert(details['closed_count'] == 5)
    assert(details['zero_closed'])
    assert(not details['all_closed'])
    assert(sorted(details['maximal_closed']) == sorted(['(x)', '(y)', '(x + y)']))
    assert(not details['maximal_closed_prime'])


def test_census_of_identity():
    details = lab.closed_census(small_rings()[2], standard.identity())['details']

    assert(details['all_closed'])
    assert(details['closed_count'] == 7)
    assert(details['maximal_closed'] == ['(x, y)'])


def test_axioms_hold_on_small_lattices():
    closures = [
        standard.identity(),
        standard.radical(),
        standard.frobenius(),
        standard.basically_full(),
        standard.v_operation(),
        standard.indiscrete(),
        standard.saturation(['x']),
        standard.delta(['m']),
        framework.construct_intersection([standard.radical(), standard.basically_full()]),
    ]

    for ring in small_rings():
        family = finite.lattice_of(ring).ideals()
        for cl in closures:
            assert(framework.check_axioms(cl, family)['status'] == 'pass')
            assert(framework.check_basics(cl, family)['status'] == 'pass')

            if cl.semiprime:
                assert(framework.semiprime_check(cl, family)['status'] == 'pass')


def test_constructions_agree_on_small_lattices():
    for ring in small_rings():
        lattice = finite.lattice_of(ring)
        hull = framework.idempotent_hull(colon_operation(['x']))
        sat = standard.saturation(['x'])
        bf = standard.basically_full()
        module = framework.construct_from_module('ideal', 'm')
        system = standard.DeltaSystem([['x']])
        union = framework.construct_directed_union(system.stages(ring))
        delta = standard.delta(system)

        for I in lattice.ideals():
            assert(hull.close(I) == sat.close(I))
            assert(bf.close(I) == module.close(I))
            assert(union.close(I) == delta.close(I))


def test_axioms_hold_on_monomial_ideals():
    family = monomial_family(20, 3)
    closures = [
        standard.identity(),
        standard.radical(),
        standard.integral_closure(),
        standard.saturation(['x']),
    ]

    for cl in closures:
        assert(framework.check_axioms(cl, family)['status'] == 'pass')
        assert(framework.check_basics(cl, family)['status'] == 'pass')

    for cl in closures[:2]:
        assert(framework.semiprime_check(cl, family[:8])['status'] == 'pass')

    # (I m : m) is the module closure of m, so it is a closure over QQ as well
    bf = standard.basically_full()
    assert(framework.check_axioms(bf, family)['status'] == 'pass')

    # Frobenius closure needs positive characteristic
    with pytest.raises(ValueError):
        framework.check_axioms(standard.frobenius(), family)


def test_delta_on_monomial_ideals_is_undecided_within_budget():
    family = monomial_family(20, 3)
    budget = utils.default_budget(word_max=2)
    delta = standard.delta(['m'])

    # the products m^n never repeat in a polynomial ring
    report = framework.check_axioms(delta, family, budget)
    assert(report['status'] == 'unknown')
    assert(set(u['reason'] for u in report['details']['unknown']) == set([core.REASON_BUDGET]))

    for I in family:
        assert(not delta.contains(I, 'x^3*y^3', budget).is_out)
        if I.contains('x^3*y^3'):
            assert(delta.contains(I, 'x^3*y^3', budget).is_in)


def test_persistence_of_bf_fails():
    A = PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'x*y'])
    B = PolynomialRing(['x', 'y', 'z'], characteristic=2, relations=['x^2', 'x*y', 'z^2'])
    f = RingMap(A, B, {'x': 'x', 'y': 'y'})

    report = lab.persistence_check(f, standard.basically_full(), family=[Ideal(A, ['y'])])

    assert(report['status'] == 'fail')
    assert(report['witnesses'][0]['ideals'] == ['(y)'])
    assert(report['witnesses'][0]['missing'] == ['x'])


def test_persistence_of_radical():
    C = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    D = PolynomialRing(['x'], characteristic=2, relations=['x^2'])
    q = RingMap(C, D, ['x'])

    report = lab.persistence_check(q, standard.radical())

    assert(report['status'] == 'pass')
    assert(report['details']['family_size'] == 4)


def test_persistence_rejects_foreign_ideals():
    C = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    D = PolynomialRing(['x'], characteristic=2, relations=['x^2'])
    q = RingMap(C, D, ['x'])

    with pytest.raises(ValueError):
        lab.persistence_check(q, standard.radical(), family=[Ideal(D, ['x'])])


def test_verify_lattice():
    for ring in small_rings():
        assert(lab.verify_lattice(ring)['status'] == 'pass')


def test_analyze():
    result = lab.analyze(small_rings()[0], standard.frobenius())

    assert(result['class'] == 'Analysis')
    assert(result['exhaustive']['status'] == 'pass')
    assert(result['nakayama']['status'] == 'pass')
    assert(result['reductions']['spread'] == 0)
