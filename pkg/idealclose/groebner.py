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
from idealclose import monomial
from idealclose.poly import Polynomial
from idealclose.poly import PolynomialRing
from idealclose.poly import divide_exact
from idealclose.poly import frobenius_power
from idealclose.poly import monomial_div
from idealclose.poly import monomial_divides
from idealclose.poly import monomial_lcm
from idealclose.poly import reduce_terms

logger = logging.getLogger(__name__)


DEFAULT_MONOMIAL_BUDGET = 200000

_settings = {'monomial_budget': DEFAULT_MONOMIAL_BUDGET}


def set_monomial_budget(budget):
    """
    Sets the number of term operations a single Groebner basis computation
    may spend before ResourceBudgetError is raised.

    Parameters
    ----------
    budget : int
        A positive int.

    Returns
    -------
    int : previous
        The budget that was in effect before the call.
    """
    if not core.is_positive_int(budget):
        raise ValueError('monomial budget must be a positive int!')

    previous = _settings['monomial_budget']
    _settings['monomial_budget'] = budget
    return previous


def get_monomial_budget():
    return _settings['monomial_budget']


class _Meter(object):

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, amount):
        self.used += amount
        if self.used > self.limit:
            raise core.ResourceBudgetError(
                'Groebner basis computation exceeded the monomial budget of {}'.format(self.limit))


def s_polynomial(f, g):
    """
    The S-polynomial of two polynomials of a free ring.
    """
    field = f.ring.field
    lcm = monomial_lcm(f.lm, g.lm)
    left = f.mul_term(monomial_div(lcm, f.lm), field.inv(f.lc))
    right = g.mul_term(monomial_div(lcm, g.lm), field.inv(g.lc))
    return left - right


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _chain_criterion(i, j, basis, pairs):
    lcm = monomial_lcm(basis[i].lm, basis[j].lm)

    for k in range(len(basis)):
        if k == i or k == j:
            continue

        if not monomial_divides(basis[k].lm, lcm):
            continue

        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue

        return True

    return False


def _reduce_basis(basis, ring, meter):
    minimal = []
    for index, g in enumerate(basis):
        redundant = False
        for other_index, h in enumerate(basis):
            if other_index == index or not monomial_divides(h.lm, g.lm):
                continue

            # equal leading monomials keep the earliest polynomial
            if h.lm != g.lm or other_index < index:
                redundant = True
                break

        if not redundant:
            minimal.append(g)

    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        tail = dict((e, c) for e, c in g.terms.items() if e != g.lm)
        tail = reduce_terms(tail, others, ring, meter)
        tail[g.lm] = g.lc
        reduced.append(Polynomial(ring, tail, normalized=True).monic())

    reduced.sort(key=lambda p: ring.key(p.lm), reverse=True)
    return reduced


def buchberger(polynomials, ring):
    """
    Reduced Groebner basis of the ideal generated by polynomials in a free
    ring, using Buchberger's algorithm with the coprime and chain criteria.

    Parameters
    ----------
    polynomials : list
        Polynomials of the free ring.
    ring : PolynomialRing
        A free ring (no relations).

    Returns
    -------
    list : basis
        The monic reduced Groebner basis sorted by descending leading
        monomial; empty for the zero ideal.

    Raises
    ------
    ResourceBudgetError
        If the computation spends more than the monomial budget.
    """
    if not ring.is_free:
        raise ValueError('buchberger expects a free polynomial ring!')

    meter = _Meter(get_monomial_budget())
    basis = [f.monic() for f in polynomials if not f.is_zero()]

    if not basis:
        return []

    for f in basis:
        if f.is_constant():
            return [ring.one()]

    pairs = set((i, j) for j in range(len(basis)) for i in range(j))

    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (ring.key(monomial_lcm(basis[ij[0]].lm, basis[ij[1]].lm)), ij))
        pairs.remove((i, j))

        if _coprime(basis[i].lm, basis[j].lm):
            continue

        if _chain_criterion(i, j, basis, pairs):
            continue

        s = s_polynomial(basis[i], basis[j])
        remainder = reduce_terms(s.terms, basis, ring, meter)

        if not remainder:
            continue

        r = Polynomial(ring, remainder, normalized=True).monic()
        if r.is_constant():
            return [ring.one()]

        k = len(basis)
        basis.append(r)
        pairs.update((a, k) for a in range(k))

    result = _reduce_basis(basis, ring, meter)
    logger.debug('groebner basis of %d polynomials has %d elements (%d term operations)',
                 len(polynomials), len(result), meter.used)
    return result


def _term_key(polys):
    return tuple(p.sorted_terms() for p in polys)


class Ideal(object):
    """
    An ideal of a (quotient) polynomial ring given by generators.

    The reduced Groebner basis of the preimage in the free cover ring
    (generators plus quotient relations) is computed lazily and cached;
    equality and hashing go through it.
    """

    def __init__(self, ring, generators=None):
        if not isinstance(ring, PolynomialRing):
            raise ValueError('Ideal expects a PolynomialRing!')

        gens = []
        for g in generators or []:
            if isinstance(g, Polynomial) and g.ring != ring:
                raise ValueError('Ideal generator {} is not an element of {}'.format(g, ring))

            g = ring.coerce(g)
            if not g.is_zero():
                gens.append(g)

        self.ring = ring
        self.generators = tuple(gens)
        self._basis = None
        self._hash = None

    def basis(self):
        """
        Reduced Groebner basis of the preimage of the ideal in the cover.
        """
        if self._basis is None:
            lifted = [g.lift() for g in self.generators]
            self._basis = tuple(buchberger(lifted + list(self.ring.quotient_basis), self.ring.cover))

        return self._basis

    def reduced_generators(self):
        """
        Images of the Groebner basis elements that are nonzero in the ring.
        """
        gens = []
        for b in self.basis():
            image = self.ring.from_cover(b)
            if not image.is_zero():
                gens.append(image)

        return gens

    def monomial_exponents(self):
        """
        Exponent tuples of the preimage when it is a monomial ideal of the
        cover ring, otherwise None.
        """
        basis = self.basis()
        if all(b.is_monomial() for b in basis):
            return [b.lm for b in basis]

        return None

    def is_monomial(self):
        return self.ring.is_free and self.monomial_exponents() is not None

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        basis = self.basis()
        return len(basis) == 1 and basis[0].is_constant()

    def contains(self, f):
        f = self.ring.coerce(f)
        return not reduce_terms(f.lift().terms, self.basis(), self.ring.cover)

    def issubset(self, other):
        if other.ring != self.ring:
            raise ValueError('Ideal inclusion expects ideals of the same ring!')

        return all(other.contains(g) for g in self.generators)

    def __le__(self, other):
        return self.issubset(other)

    def __ge__(self, other):
        return other.issubset(self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented

        return self.ring == other.ring and _term_key(self.basis()) == _term_key(other.basis())

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, _term_key(self.basis())))

        return self._hash

    def __str__(self):
        if self.is_unit():
            return '(1)'

        gens = self.reduced_generators()
        if not gens:
            return '(0)'

        return '({})'.format(', '.join(str(g) for g in gens))

    __repr__ = __str__


def zero_ideal(ring):
    return Ideal(ring, [])


def unit_ideal(ring):
    return Ideal(ring, [ring.one()])


def maximal_ideal(ring):
    """
    The ideal generated by the variables.
    """
    return Ideal(ring, ring.gens())


def _same_ring(*ideals):
    ring = ideals[0].ring
    for ideal in ideals[1:]:
        if ideal.ring != ring:
            raise ValueError('ideal_ops expects ideals over the same ring!')

    return ring


def _from_exponents(ring, exponents):
    return Ideal(ring, [ring.from_exponents(e) for e in exponents])


def membership(f, ideal):
    """
    Decides f in ideal by reduction modulo the Groebner basis.
    """
    if isinstance(f, Polynomial) and f.ring != ideal.ring:
        raise ValueError('membership expects f in the ring of the ideal!')

    return ideal.contains(f)


def ideal_sum(a, b):
    ring = _same_ring(a, b)
    return Ideal(ring, a.generators + b.generators)


def ideal_product(a, b):
    ring = _same_ring(a, b)
    return Ideal(ring, [f * g for f in a.generators for g in b.generators])


def ideal_power(ideal, n):
    """
    The n-th power of an ideal, with I^0 the unit ideal.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError('ideal_power expects a non-negative integer!')

    result = unit_ideal(ideal.ring)
    for _ in range(n):
        result = ideal_product(result, ideal)

    return result


def _eliminate_first(polynomials, extended, count):
    """
    Groebner basis elements free of the first count variables, with those
    coordinates dropped.
    """
    basis = buchberger(polynomials, extended)
    kept = []
    for g in basis:
        if any(g.lm[:count]):
            continue

        kept.append(dict((exps[count:], c) for exps, c in g.terms.items()))

    return kept


def _embed(extended, f, count):
    pad = (0,) * count
    return extended.from_terms(dict((pad + exps, c) for exps, c in f.terms.items()), normalized=True)


def eliminate(ideal, names):
    """
    The elimination ideal: elements of the ideal's preimage free of the
    named variables, returned as an ideal of the same ring.

    Parameters
    ----------
    ideal : Ideal
    names : list
        Variables to eliminate.

    Returns
    -------
    Ideal : eliminated
    """
    ring = ideal.ring
    cover = ring.cover

    for name in names:
        if name not in ring.variables:
            raise ValueError('eliminate: {} is not a variable of {}'.format(name, ring))

    order = [ring.variables.index(n) for n in names]
    rest = [i for i in range(ring.nvars) if i not in order]
    permutation = order + rest

    extended = PolynomialRing(
        tuple(ring.variables[i] for i in permutation),
        ring.characteristic,
        ('block', len(order), cover.order))

    polys = [
        extended.from_terms(
            dict((tuple(exps[i] for i in permutation), c) for exps, c in b.terms.items()),
            normalized=True)
        for b in ideal.basis()
    ]

    inverse = [permutation.index(i) for i in range(ring.nvars)]
    result = []
    for g in buchberger(polys, extended):
        if any(g.lm[:len(order)]):
            continue

        result.append(ring.from_terms(
            dict((tuple(exps[j] for j in inverse), c) for exps, c in g.terms.items())))

    return Ideal(ring, result)


def _intersect_preimages(a_basis, b_basis, cover):
    extended = cover.extension(['t'])
    t = extended.variable(0)
    one = extended.one()

    gens = [t * _embed(extended, f, 1) for f in a_basis]
    gens += [(one - t) * _embed(extended, f, 1) for f in b_basis]

    return [cover.from_terms(terms, normalized=True) for terms in _eliminate_first(gens, extended, 1)]


def intersection(a, b, method='auto'):
    """
    Intersection of two ideals.

    Parameters
    ----------
    a : Ideal
    b : Ideal
    method : str, default 'auto'
        'auto' uses lcm arithmetic when both preimages are monomial,
        'elimination' always eliminates t from t*a + (1-t)*b.

    Returns
    -------
    Ideal : intersection
    """
    ring = _same_ring(a, b)

    if method not in ('auto', 'elimination'):
        raise ValueError('intersection method must be auto or elimination')

    if method == 'auto':
        left = a.monomial_exponents()
        right = b.monomial_exponents()
        if left is not None and right is not None:
            return _from_exponents(ring, monomial.intersection(left, right))

    polys = _intersect_preimages(a.basis(), b.basis(), ring.cover)
    return Ideal(ring, [ring.from_cover(f) for f in polys])


def _colon_element(ideal, g, method):
    ring = ideal.ring
    cover = ring.cover
    lifted = g.lift()

    if method == 'auto':
        exponents = ideal.monomial_exponents()
        if exponents is not None and lifted.is_monomial():
            return _from_exponents(ring, monomial.colon_monomial(exponents, lifted.lm))

    polys = _intersect_preimages(ideal.basis(), [lifted], cover)
    return Ideal(ring, [ring.from_cover(divide_exact(f, lifted)) for f in polys])


def colon(a, b, method='auto'):
    """
    The colon ideal (a : b) = {r : r*b in a}; (a : 0) is the unit ideal.

    Parameters
    ----------
    a : Ideal
    b : Ideal
    method : str, default 'auto'

    Returns
    -------
    Ideal : quotient
    """
    ring = _same_ring(a, b)

    if not b.generators:
        return unit_ideal(ring)

    result = None
    for g in b.generators:
        part = _colon_element(a, g, method)
        result = part if result is None else intersection(result, part, method)

    return result


def saturation(a, b, max_steps=None):
    """
    The saturation (a : b^infinity), computed by iterating colons until
    the ideal stabilizes.
    """
    current = a
    steps = 0

    while True:
        following = colon(current, b)
        steps += 1
        if following == current:
            return current

        current = following
        if max_steps is not None and steps >= max_steps:
            raise core.ResourceBudgetError(
                'saturation did not stabilize within {} steps'.format(max_steps))


def bracket_power(ideal, e):
    """
    The Frobenius power I^[p^e], generated by the p^e-th powers of the
    generators.
    """
    if ideal.ring.characteristic == 0:
        raise ValueError('bracket_power requires positive characteristic!')

    return Ideal(ideal.ring, [frobenius_power(g, e) for g in ideal.generators])


def radical_membership(f, ideal):
    """
    Decides whether f lies in the radical of the ideal: 1 lies in the
    preimage plus (1 - t*f) in one more variable.
    """
    if isinstance(f, Polynomial) and f.ring != ideal.ring:
        raise ValueError('radical_membership expects f in the ring of the ideal!')

    ring = ideal.ring
    f = ring.coerce(f)
    extended = ring.cover.extension(['t'])
    t = extended.variable(0)

    gens = [_embed(extended, b, 1) for b in ideal.basis()]
    gens.append(extended.one() - t * _embed(extended, f.lift(), 1))

    basis = buchberger(gens, extended)
    return len(basis) == 1 and basis[0].is_constant()


class RingMap(object):
    """
    A ring homomorphism given by the images of the source variables.
    Every quotient relation of the source must map to zero.
    """

    def __init__(self, source, target, images):
        if isinstance(images, dict):
            missing = [v for v in source.variables if v not in images]
            if missing:
                raise ValueError('RingMap is missing images for {}'.format(', '.join(missing)))

            images = [images[v] for v in source.variables]

        if len(images) != source.nvars:
            raise ValueError('RingMap expects one image per source variable!')

        if source.characteristic != target.characteristic:
            raise ValueError('RingMap expects rings of the same characteristic!')

        self.source = source
        self.target = target
        self.images = tuple(target.coerce(i) for i in images)

        for relation in source.quotient_basis:
            if not self._apply_terms(relation.terms).is_zero():
                raise ValueError('RingMap does not respect the relation {} of {}'.format(relation, source))

    def _apply_terms(self, terms):
        result = self.target.zero()
        for exps, c in terms.items():
            term = self.target.constant(c)
            for image, e in zip(self.images, exps):
                if e:
                    term = term * image ** e

            result = result + term

        return result

    def __call__(self, f):
        if f.ring != self.source:
            raise ValueError('RingMap applied to an element outside its source!')

        return self._apply_terms(f.terms)

    def is_quotient_surjection(self):
        """
        True when source and target share a cover and every variable maps
        to itself, so the target is a quotient of the source.
        """
        if self.source.cover != self.target.cover:
            return False

        return all(image == self.target.variable(i) for i, image in enumerate(self.images))

    def __str__(self):
        pairs = ', '.join('{} -> {}'.format(v, i) for v, i in zip(self.source.variables, self.images))
        return '[{}]'.format(pairs)

    __repr__ = __str__


def extend_ideal(ideal, ring_map):
    """
    The extension phi(I)S of an ideal along a ring map.
    """
    if ideal.ring != ring_map.source:
        raise ValueError('extend_ideal expects an ideal of the map source!')

    return Ideal(ring_map.target, [ring_map(g) for g in ideal.generators])


def contract_ideal(ideal, ring_map):
    """
    The preimage of an ideal of the target along a quotient surjection.
    """
    if ideal.ring != ring_map.target:
        raise ValueError('contract_ideal expects an ideal of the map target!')

    if not ring_map.is_quotient_surjection():
        raise ValueError('contract_ideal is only available for quotient surjections!')

    source = ring_map.source
    return Ideal(source, [source.from_cover(b) for b in ideal.basis()])


def ideal_ops(a, b, op, method='auto'):
    """
    Dispatches the binary ideal operations by name: sum, product,
    intersection, colon.
    """
    if op == 'sum':
        return ideal_sum(a, b)

    if op == 'product':
        return ideal_product(a, b)

    if op == 'intersection':
        return intersection(a, b, method)

    if op == 'colon':
        return colon(a, b, method)

    raise ValueError('ideal_ops op must be one of sum, product, intersection, colon')
