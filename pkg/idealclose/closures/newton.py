# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Python native imports
import itertools
import logging

# Third-party imports
from sympy import Matrix
from sympy.solvers.simplex import InfeasibleLPError
from sympy.solvers.simplex import linprog

# Project imports
from idealclose import core
from idealclose import monomial
from idealclose.closures.framework import IN
from idealclose.closures.framework import OUT
from idealclose.closures.framework import Verdict
from idealclose.closures.framework import unknown
from idealclose.groebner import Ideal
from idealclose.groebner import ideal_power
from idealclose.groebner import ideal_product
from idealclose.groebner import maximal_ideal

logger = logging.getLogger(__name__)


_MEMBERSHIP_CACHE = {}


def in_newton_polyhedron(exps, gens):
    """
    Decides whether a lattice point lies in conv(gens) + R_{>=0}^n, the
    Newton polyhedron of a monomial ideal, with an exact rational linear
    program: find lambda >= 0 summing to 1 with sum(lambda_i * a_i) <= u.

    Parameters
    ----------
    exps : tuple
        The point u.
    gens : list
        Exponent tuples a_i of the generators.

    Returns
    -------
    bool : inside
    """
    gens = monomial.minimalize(gens)
    exps = tuple(exps)

    if not gens:
        return False

    if monomial.contains(gens, exps):
        return True

    key = (exps, tuple(gens))
    if key in _MEMBERSHIP_CACHE:
        return _MEMBERSHIP_CACHE[key]

    n = len(exps)
    k = len(gens)
    A = Matrix(n, k, lambda j, i: gens[i][j])
    b = Matrix(n, 1, lambda j, _: exps[j])
    A_eq = Matrix(1, k, lambda _, i: 1)
    b_eq = Matrix([1])
    c = Matrix(1, k, lambda _, i: 1)

    try:
        linprog(c, A, b, A_eq, b_eq)
        inside = True
    except InfeasibleLPError:
        inside = False

    _MEMBERSHIP_CACHE[key] = inside
    return inside


def integral_closure_exponents(gens, nvars):
    """
    Minimal generators of the integral closure of a monomial ideal: the
    lattice points of its Newton polyhedron, enumerated inside the box
    bounded by the largest generator exponents.

    Parameters
    ----------
    gens : list
        Exponent tuples.
    nvars : int

    Returns
    -------
    list : generators
        Minimal exponent tuples.
    """
    gens = monomial.minimalize(gens)
    if not gens or not any(gens[0]):
        return gens

    bounds = [max(g[j] for g in gens) for j in range(nvars)]
    points = sorted(
        itertools.product(*[range(b + 1) for b in bounds]),
        key=lambda u: (sum(u), u))

    found = []
    for u in points:
        if monomial.contains(found, u):
            continue

        if in_newton_polyhedron(u, gens):
            found.append(u)

    return monomial.minimalize(found)


def _monomial_exponents(ideal):
    if not ideal.ring.is_free:
        return None

    return ideal.monomial_exponents()


def integral_closure_monomial(ideal):
    """
    The integral closure of a monomial ideal of a polynomial ring.

    Raises
    ------
    ValueError
        If the ideal is not monomial.
    """
    exponents = _monomial_exponents(ideal)
    if exponents is None:
        raise ValueError('integral_closure_monomial expects a monomial ideal!')

    closure = integral_closure_exponents(exponents, ideal.ring.nvars)
    return Ideal(ideal.ring, [ideal.ring.from_exponents(e) for e in closure])


def integral_closure(ideal, budget=None):
    """
    Closure engine for the integral closure; generators are only produced
    for monomial ideals.
    """
    if _monomial_exponents(ideal) is None:
        raise core.ClosureUnavailable(
            core.REASON_NOT_IMPLEMENTED,
            'integral closure generators need a monomial ideal')

    return integral_closure_monomial(ideal)


def integral_membership(ideal, f, budget):
    """
    Membership in the integral closure. Monomial ideals use the Newton
    polyhedron; otherwise f^n in I^n for some n <= n_max certifies
    membership and the search ends Unknown.
    """
    exponents = _monomial_exponents(ideal)

    if exponents is not None:
        closure = integral_closure_exponents(exponents, ideal.ring.nvars)
        # monomial ideals have monomial closures: test every term
        if all(monomial.contains(closure, e) for e in f.terms):
            return IN

        return OUT

    power = f
    ideal_n = ideal
    for n in range(1, budget['n_max'] + 1):
        if ideal_n.contains(power):
            return Verdict('in', certificate='power {}'.format(n))

        power = power * f
        ideal_n = ideal_product(ideal_n, ideal)

    return unknown(core.REASON_BUDGET)


def integral_special_part_contains(ideal, f, budget):
    """
    Membership in the integral special part of a monomial ideal: a
    monomial f lies in it when f^n is integral over m * I^n for some
    n <= n_max. Failing the search yields Unknown.
    """
    exponents = _monomial_exponents(ideal)
    if exponents is None or not f.is_monomial():
        return unknown(core.REASON_NOT_IMPLEMENTED)

    u = f.lm
    m = maximal_ideal(ideal.ring)

    for n in range(1, budget['n_max'] + 1):
        target = ideal_product(m, ideal_power(ideal, n)).monomial_exponents()
        if in_newton_polyhedron(tuple(n * e for e in u), target):
            return Verdict('in', certificate='power {}'.format(n))

    return unknown(core.REASON_BUDGET)