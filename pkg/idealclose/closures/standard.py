# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Python native imports
import logging

# Project imports
from idealclose import core
from idealclose import finite
from idealclose import monomial
from idealclose.closures import newton
from idealclose.closures.framework import ClosureOperation
from idealclose.closures.framework import IN
from idealclose.closures.framework import OUT
from idealclose.closures.framework import Verdict
from idealclose.closures.framework import bind_ideal
from idealclose.closures.framework import construct_from_module
from idealclose.closures.framework import construct_cw
from idealclose.closures.framework import finite_type_cf
from idealclose.closures.framework import unknown
from idealclose.groebner import Ideal
from idealclose.groebner import bracket_power
from idealclose.groebner import colon
from idealclose.groebner import ideal_product
from idealclose.groebner import ideal_sum
from idealclose.groebner import intersection
from idealclose.groebner import radical_membership
from idealclose.groebner import saturation as saturate
from idealclose.groebner import unit_ideal
from idealclose.groebner import zero_ideal
from idealclose.poly import frobenius_power

logger = logging.getLogger(__name__)


def identity():
    return ClosureOperation('identity', closure=lambda ideal, budget: ideal, semiprime=True)


def indiscrete():
    """
    I -> R, realised as the closure induced by the zero ideal:
    (I * 0 : 0) = R.
    """
    operation = construct_from_module('ideal', zero_ideal)
    operation.name = 'indiscrete'
    return operation


def _from_exponents(ring, exponents):
    return Ideal(ring, [ring.from_exponents(e) for e in exponents])


def _radical_closure(ideal, budget):
    exponents = ideal.monomial_exponents()
    if exponents is not None:
        return _from_exponents(ideal.ring, monomial.radical(exponents))

    R = finite.finite_ring_of(ideal.ring)
    if R is not None:
        return R.ideal(R.radical(R.label(ideal)))

    raise core.ClosureUnavailable(
        core.REASON_NOT_IMPLEMENTED,
        'radical generators need a monomial ideal or a finite ring')


def _radical_membership(ideal, f, budget):
    return IN if radical_membership(f, ideal) else OUT


def radical():
    """
    The radical. Membership is decided for every ideal by the Rabinowitsch
    trick; generators come from the squarefree parts of a monomial
    preimage or from the finite ring.
    """
    return ClosureOperation(
        'radical', closure=_radical_closure, membership=_radical_membership, semiprime=True)


def radical_by_primes(lattice):
    """
    The radical of a finite ring as the intersection over primes p of the
    closures I -> p when I lies in p and R otherwise.
    """
    R = lattice.ring
    primes = [P for P in lattice if P != lattice.top and lattice.is_prime(P)]

    def _closure(ideal, budget):
        I = R.label(ideal)
        result = lattice.top
        for P in primes:
            if R.issubset(I, P):
                result = R.intersection(result, P)

        return R.ideal(result)

    return ClosureOperation('radical-by-primes', closure=_closure, semiprime=True)


def saturation(spec):
    """
    I -> (I : a^infinity).
    """
    def _closure(ideal, budget):
        return saturate(ideal, bind_ideal(spec, ideal.ring))

    return ClosureOperation('sat({})'.format(_name(spec)), closure=_closure, semiprime=True)


def saturation_by_generators(spec):
    """
    I -> intersection over generators g of a of (I : g^infinity).
    """
    def _closure(ideal, budget):
        a = bind_ideal(spec, ideal.ring)
        if not a.generators:
            return unit_ideal(ideal.ring)

        result = None
        for g in a.generators:
            part = saturate(ideal, Ideal(ideal.ring, [g]))
            result = part if result is None else intersection(result, part)

        return result

    return ClosureOperation('satgens({})'.format(_name(spec)), closure=_closure, semiprime=True)


def _name(spec):
    if isinstance(spec, Ideal):
        return str(spec)

    if core.is_array_like(spec):
        return '({})'.format(', '.join(str(s) for s in spec))

    return getattr(spec, 'name', str(spec))


def _require_characteristic(ideal):
    if ideal.ring.characteristic == 0:
        raise ValueError('Frobenius closures need a ring of prime characteristic!')


def frobenius(e_max=None):
    """
    The Frobenius closure: f with f^q in I^[q] for some q = p^e.

    Membership searches e <= e_max. Finite rings are decided exactly, and
    polynomial rings without relations are regular so I^F = I there.
    Otherwise a failed search is Unknown, never Out.
    """
    def _bound(budget):
        return e_max if e_max is not None else budget['e_max']

    def _closure(ideal, budget):
        _require_characteristic(ideal)
        R = finite.finite_ring_of(ideal.ring)
        if R is not None:
            return R.ideal(R.frobenius_closure(R.label(ideal)))

        if ideal.ring.is_free:
            return ideal

        raise core.ClosureUnavailable(
            core.REASON_BUDGET,
            'Frobenius closure generators are only exact on finite or regular rings')

    def _membership(ideal, f, budget):
        _require_characteristic(ideal)

        for e in range(_bound(budget) + 1):
            if bracket_power(ideal, e).contains(frobenius_power(f, e)):
                return Verdict('in', certificate='e={}'.format(e))

        R = finite.finite_ring_of(ideal.ring)
        if R is not None:
            closed = R.frobenius_closure(R.label(ideal))
            if R.contains(closed, R.vector(f)):
                return Verdict('in', certificate='finite-ring')

            return Verdict('out', certificate='finite-ring')

        if ideal.ring.is_free:
            return Verdict('out', certificate='regular-ring')

        logger.warning('Frobenius search for %s in %s stopped at e=%d', f, ideal, _bound(budget))
        return unknown(core.REASON_BUDGET)

    name = 'frob' if e_max is None else 'frob({})'.format(e_max)
    return ClosureOperation(name, closure=_closure, membership=_membership, semiprime=True)


def frobenius_stage(e):
    """
    The stage F_e: f with f^(p^e) in I^[p^e]. Each stage is decided
    exactly by a single membership test.
    """
    def _closure(ideal, budget):
        _require_characteristic(ideal)
        R = finite.finite_ring_of(ideal.ring)
        if R is not None:
            return R.ideal(R.frobenius_stage(R.label(ideal), e))

        if ideal.ring.is_free:
            return ideal

        raise core.ClosureUnavailable(
            core.REASON_NOT_IMPLEMENTED,
            'Frobenius stage generators need a finite or regular ring')

    def _membership(ideal, f, budget):
        _require_characteristic(ideal)
        if bracket_power(ideal, e).contains(frobenius_power(f, e)):
            return IN

        return OUT

    return ClosureOperation('frobstage({})'.format(e), closure=_closure, membership=_membership)


def integral_closure():
    """
    Integral closure: Newton polyhedra for monomial ideals, otherwise the
    power oracle with Unknown on a failed search.
    """
    return ClosureOperation(
        'intclosure',
        closure=newton.integral_closure,
        membership=newton.integral_membership,
        semiprime=True)


def basically_full(spec='m'):
    """
    The basically full closure I -> (I * m : m).
    """
    def _closure(ideal, budget):
        m = bind_ideal(spec, ideal.ring)
        return colon(ideal_product(ideal, m), m)

    name = 'bf' if spec == 'm' else 'bf({})'.format(_name(spec))
    return ClosureOperation(name, closure=_closure, semiprime=True)


class DeltaSystem(object):
    """
    The multiplicative system of ideals generated by a list of ideals,
    including the unit ideal as the empty product.

    Parameters
    ----------
    generators : list
        Ideal specifications, bound to the ring of each input.
    word_max : int, default None
        Overrides the budget's word_max. Without it, finite rings use
        every product and other rings stop at the budget's word_max. A
        system cut off by the bound is reported as not exhausted.
    """

    def __init__(self, generators, word_max=None):
        if not generators:
            raise ValueError('DeltaSystem needs at least one generating ideal!')

        if word_max is not None and not core.is_positive_int(word_max):
            raise ValueError('DeltaSystem word_max must be a positive int!')

        self.generators = list(generators)
        self.word_max = word_max
        self._products = {}

    def __str__(self):
        return '[{}]'.format(', '.join(_name(g) for g in self.generators))

    def bound(self, budget):
        return self.word_max if self.word_max is not None else budget['word_max']

    def products(self, ring, budget):
        """
        Distinct products of words in the generators.

        Returns
        -------
        tuple : (products, complete)
            The product ideals and whether the multiplicative system is
            exhausted.
        """
        exhaustive = self.word_max is None and finite.finite_ring_of(ring) is not None
        bound = self.bound(budget)
        key = (ring, None if exhaustive else bound)

        if key not in self._products:
            gens = [bind_ideal(g, ring) for g in self.generators]
            found = [unit_ideal(ring)]
            level = list(found)
            length = 0
            complete = False

            while True:
                if not exhaustive and length >= bound:
                    break

                following = []
                for ideal in level:
                    for g in gens:
                        product = ideal_product(ideal, g)
                        if product not in found and product not in following:
                            following.append(product)

                length += 1
                if not following:
                    complete = True
                    break

                found.extend(following)
                level = following

            logger.debug('delta system %s has %d products on %s', self, len(found), ring)
            self._products[key] = (found, complete)

        return self._products[key]

    def stages(self, ring, budget=None):
        """
        The closures I -> (I*K : K) for every product K.
        """
        products, _ = self.products(ring, core.valid_budget(budget))
        return [construct_from_module('ideal', K) for K in products]


def delta(generators, word_max=None):
    """
    The Delta closure: the union over products K of the system of
    (I * K : K).
    """
    system = generators if isinstance(generators, DeltaSystem) else DeltaSystem(generators, word_max)

    def _closure(ideal, budget):
        products, complete = system.products(ideal.ring, budget)
        if not complete:
            raise core.ClosureUnavailable(
                core.REASON_BUDGET,
                'Delta system {} not exhausted within {} factors'.format(system, system.bound(budget)))

        result = ideal
        for K in products:
            result = ideal_sum(result, colon(ideal_product(ideal, K), K))

        return result

    def _membership(ideal, f, budget):
        products, complete = system.products(ideal.ring, budget)
        for K in products:
            if colon(ideal_product(ideal, K), K).contains(f):
                return IN

        if complete:
            return OUT

        return unknown(core.REASON_BUDGET)

    operation = ClosureOperation(
        'delta{}'.format(system), closure=_closure, membership=_membership, semiprime=True)
    operation.system = system
    return operation


def _principal_labels(R):
    labels = []
    for v in R.elements:
        label = R.principal(v)
        if label not in labels:
            labels.append(label)

    return labels


def v_operation():
    """
    The v-operation on a finite ring: the intersection of the principal
    ideals containing I.
    """
    cache = {}

    def _closure(ideal, budget):
        R = finite.finite_ring_of(ideal.ring)
        if R is None:
            raise core.ClosureUnavailable(
                core.REASON_NOT_IMPLEMENTED, 'the v-operation is only computed on finite rings')

        if ideal.ring not in cache:
            cache[ideal.ring] = _principal_labels(R)

        I = R.label(ideal)
        result = R.unit_label
        for P in cache[ideal.ring]:
            if R.issubset(I, P):
                result = R.intersection(result, P)

        return R.ideal(result)

    return ClosureOperation('vop', closure=_closure)


def t_operation():
    """
    t = v_f, which agrees with v on noetherian rings.
    """
    operation = finite_type_cf(v_operation())
    operation.name = 'top'
    return operation


def w_operation(lattice=None):
    operation = construct_cw(v_operation(), lattice)
    operation.name = 'wop'
    return operation
