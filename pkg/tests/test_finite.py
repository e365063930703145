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
from idealclose.groebner import Ideal
from idealclose.poly import PolynomialRing


def square_zero():
    return PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'x*y', 'y^2'])


def test_row_reduce_is_canonical():
    a = finite.row_reduce([[1, 1, 0], [0, 1, 1]], 2, 3)
    b = finite.row_reduce([[1, 0, 1], [1, 1, 0]], 2, 3)

    assert(a == b)
    assert(finite.row_reduce([[0, 0, 0]], 2, 3) == ())


def test_residue_field():
    R = finite.build_finite_ring(PolynomialRing(['x'], characteristic=2, relations=['x']))

    assert(R.dim == 1)
    assert(R.size == 2)
    assert(len(finite.lattice_of(R.ring)) == 2)


def test_square_zero_lattice():
    ring = square_zero()
    lattice = finite.lattice_of(ring)
    names = sorted(str(I) for I in lattice.ideals())

    assert(len(lattice) == 6)
    assert(names == sorted(['(0)', '(x)', '(y)', '(x + y)', '(x, y)', '(1)']))
    assert(lattice.ring.is_local)
    assert(lattice.maximal_ideals() == [lattice.ring.maximal])


def test_chain_lattice():
    ring = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    lattice = finite.lattice_of(ring)

    assert([str(I) for I in lattice.ideals()] == ['(0)', '(x^2)', '(x)', '(1)'])


def test_complete_intersection_lattice():
    ring = PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'y^2'])
    lattice = finite.lattice_of(ring)

    assert(len(lattice) == 7)


def test_ideal_arithmetic_on_labels():
    R = finite.finite_ring_of(square_zero())
    x = R.label(Ideal(R.ring, ['x']))
    y = R.label(Ideal(R.ring, ['y']))

    assert(R.sum(x, y) == R.maximal)
    assert(R.intersection(x, y) == R.zero_label)
    assert(R.product(R.maximal, R.maximal) == R.zero_label)
    assert(R.colon(R.zero_label, R.maximal) == R.maximal)
    assert(R.radical(R.zero_label) == R.maximal)
    assert(R.mu(R.maximal) == 2)
    assert(R.unit_count == 4)


def test_frobenius_closure_on_square_zero():
    R = finite.finite_ring_of(square_zero())

    assert(R.frobenius_closure(R.zero_label) == R.maximal)
    assert(R.frobenius_closure(R.unit_label) == R.unit_label)
    assert(R.frobenius_special_part(R.maximal) == R.maximal)


def test_locality_from_non_units():
    field = finite.finite_ring_of(PolynomialRing(['x'], characteristic=2, relations=['x^2 + x + 1']))

    assert(field.is_local)
    assert(field.maximal == field.zero_label)
    assert(field.unit_count == 3)

    split = finite.finite_ring_of(PolynomialRing(['x'], characteristic=2, relations=['x^2 + x']))
    assert(not split.is_local)
    assert(split.maximal is None)

    with pytest.raises(ValueError):
        split.mu(split.unit_label)


def test_vectors_round_trip():
    R = finite.finite_ring_of(square_zero())
    f = R.ring.parse('1 + x')

    np.testing.assert_equal(R.vector(R.polynomial(R.vector(f))), R.vector(f))
    assert(R.is_unit(R.vector(f)))


def test_infinite_ring_rejected():
    ring = PolynomialRing(['x', 'y'], characteristic=2, relations=['x^2', 'x*y'])

    assert(finite.finite_ring_of(ring) is None)
    with pytest.raises(ValueError):
        finite.lattice_of(ring)

    with pytest.raises(ValueError):
        finite.build_finite_ring(PolynomialRing(['x'], relations=['x^2']))


def test_element_cap():
    ring = PolynomialRing(['x', 'y'], characteristic=3, relations=['x^3', 'y^3'])

    with pytest.raises(core.ResourceBudgetError):
        finite.build_finite_ring(ring, max_elements=256)
