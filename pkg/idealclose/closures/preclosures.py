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

# Project imports
from idealclose import core
from idealclose import monomial
from idealclose import utils
from idealclose.closures.framework import ClosureOperation
from idealclose.closures.framework import IN
from idealclose.closures.framework import OUT
from idealclose.closures.framework import bind_ideal
from idealclose.closures.framework import check_axioms
from idealclose.closures.framework import unknown
from idealclose.closures.newton import integral_closure_exponents
from idealclose.groebner import Ideal
from idealclose.groebner import colon
from idealclose.groebner import zero_ideal
from idealclose.poly import PolynomialRing

logger = logging.getLogger(__name__)


AXIOMS = ('extension', 'idempotence', 'order-preservation')


class Preclosure(ClosureOperation):
    """
    An operation on ideals that is expected to violate exactly one closure
    axiom, with certificates naming a family where the violation shows.
    """

    def __init__(self, name, closure, expected_failure, **kwargs):
        if expected_failure not in AXIOMS:
            raise ValueError('Preclosure expected_failure must be one of {}'.format(', '.join(AXIOMS)))

        kwargs.setdefault('enforce_extension', False)
        super(Preclosure, self).__init__(name, closure=closure, **kwargs)
        self.expected_failure = expected_failure
        self.certificates = []

    def add_certificate(self, family, note=None):
        self.certificates.append({'family': list(family), 'note': note})

    def verify_certificates(self, budget=None):
        """
        Re-runs the axiom checker on every certificate family. A certificate
        holds when the expected axiom fails and the other two pass.

        Returns
        -------
        dict : report
        """
        if not self.certificates:
            raise ValueError('{} has no certificates to verify'.format(self.name))

        report = utils.empty_report()
        report['check'] = 'preclosure-certificates'
        report['closure'] = self.name
        report['ring'] = str(self.certificates[0]['family'][0].ring)

        violations = []
        outcomes = []
        unknowns = []

        for certificate in self.certificates:
            result = check_axioms(self, certificate['family'], budget)
            axioms = result['details']['axioms']
            outcomes.append(axioms)
            unknowns.extend(result['details'].get('unknown', []))

            holds = axioms[self.expected_failure] == 'fail' and all(
                axioms[a] == 'pass' for a in AXIOMS if a != self.expected_failure)

            if not holds:
                violations.append({
                    'ideals': [str(I) for I in certificate['family']],
                    'axioms': axioms,
                })

        report['details']['expected_failure'] = self.expected_failure
        report['details']['outcomes'] = outcomes
        return utils.finish_report(report, violations, unknowns)


def colon_operation(spec):
    """
    I -> (I : a): extensive and order-preserving but not idempotent.
    """
    def _closure(ideal, budget):
        return colon(ideal, bind_ideal(spec, ideal.ring))

    name = 'colon({})'.format(spec if not core.is_array_like(spec) else ', '.join(str(s) for s in spec))
    return Preclosure(name, _closure, 'idempotence', enforce_extension=True)


def _monomial_exponents(ideal, caller):
    exponents = ideal.monomial_exponents() if ideal.ring.is_free else None
    if exponents is None:
        raise core.ClosureUnavailable(
            core.REASON_NOT_IMPLEMENTED, '{} needs a monomial ideal of a polynomial ring'.format(caller))

    return exponents


def _from_exponents(ring, exponents):
    return Ideal(ring, [ring.from_exponents(e) for e in exponents])


def unmixed_part():
    """
    The unmixed part: intersection of the primary components of minimal
    codimension. Extensive and idempotent but not order-preserving.
    """
    def _closure(ideal, budget):
        exponents = _monomial_exponents(ideal, 'unmixed')
        return _from_exponents(ideal.ring, monomial.unmixed_part(exponents, ideal.ring.nvars))

    return Preclosure('unmixed', _closure, 'order-preservation', enforce_extension=True)


def ratliff_rush_exponents(gens, nvars, n_max):
    """
    Union of the stages (I^(n+1) : I^n) for n <= n_max of a monomial
    ideal.
    """
    result = list(gens)
    current = list(gens)

    for _ in range(n_max):
        following = monomial.product(current, gens)
        result = monomial.ideal_sum(result, monomial.colon(following, current, nvars))
        current = following

    return monomial.minimalize(result)


def _disjoint_supports(gens):
    seen = set()
    for g in gens:
        positions = set(monomial.support(g))
        if positions & seen:
            return False

        seen |= positions

    return True


def ratliff_rush_bounds(gens, nvars, n_max):
    """
    Lower and upper bounds for the Ratliff-Rush closure of a nonzero
    monomial ideal of a polynomial ring.

    The lower bound is the union of the first n_max stages. The upper
    bound is the ideal itself when its generators have disjoint supports
    (a regular sequence, all of whose powers are Ratliff-Rush closed) and
    the integral closure otherwise.

    Returns
    -------
    tuple : (lower, upper)
        Minimal exponent lists; the closure is certified when upper lies
        inside lower.
    """
    gens = monomial.minimalize(gens)
    if not gens or _disjoint_supports(gens):
        return gens, gens

    lower = ratliff_rush_exponents(gens, nvars, n_max)
    upper = integral_closure_exponents(gens, nvars)
    return lower, upper


def ratliff_rush(n_max=None):
    """
    The Ratliff-Rush operation on monomial ideals, searched through n_max
    stages.

    Generators are only returned once the stages reach a certified upper
    bound; otherwise membership is In for elements of a stage, Out for
    elements outside the upper bound and Unknown in between.
    """
    def _bounds(ideal, budget):
        exponents = _monomial_exponents(ideal, 'ratliffrush')
        bound = n_max if n_max is not None else budget['n_max']
        return ratliff_rush_bounds(exponents, ideal.ring.nvars, bound)

    def _closure(ideal, budget):
        lower, upper = _bounds(ideal, budget)
        if not monomial.issubset(upper, lower):
            raise core.ClosureUnavailable(
                core.REASON_BUDGET, 'Ratliff-Rush stages of {} not stable within the budget'.format(ideal))

        return _from_exponents(ideal.ring, lower)

    def _membership(ideal, f, budget):
        try:
            lower, upper = _bounds(ideal, budget)
        except core.ClosureUnavailable as e:
            return unknown(e.reason)

        if _from_exponents(ideal.ring, lower).contains(f):
            return IN

        if not _from_exponents(ideal.ring, upper).contains(f):
            return OUT

        return unknown(core.REASON_BUDGET)

    return Preclosure('ratliffrush', _closure, 'order-preservation', membership=_membership,
                      enforce_extension=True)


def ratliff_rush_stage():
    """
    I -> (I^2 : I), the first Ratliff-Rush stage.
    """
    def _closure(ideal, budget):
        exponents = _monomial_exponents(ideal, 'ratliffrush-stage')
        square = monomial.product(exponents, exponents)
        return _from_exponents(ideal.ring, monomial.colon(square, exponents, ideal.ring.nvars))

    return Preclosure('ratliffrush-stage', _closure, 'idempotence', enforce_extension=True)


def zero_map():
    """
    I -> 0: idempotent and order-preserving but not extensive.
    """
    return Preclosure('zero', lambda ideal, budget: zero_ideal(ideal.ring), 'extension')


def _candidate_ideals(max_degree):
    pure = [(a, b) for a in range(1, max_degree + 1) for b in range(1, max_degree + 1)]
    mixed = [(i, j) for i in range(1, max_degree) for j in range(1, max_degree) if i + j <= max_degree]

    candidates = []
    for a, b in pure:
        for count in (0, 1, 2):
            for extra in itertools.combinations(mixed, count):
                gens = monomial.minimalize([(a, 0), (0, b)] + list(extra))
                if gens not in candidates:
                    candidates.append(gens)

    return candidates


def search_ratliff_rush_witness(max_degree=4, n_max=4):
    """
    Searches monomial ideals J inside I of k[x, y], both containing pure
    powers of degree at most max_degree, for a pair whose Ratliff-Rush
    closures are certified within n_max stages and are not nested.

    Returns
    -------
    tuple, None : witness
        (J, I) exponent lists, or None when the search finds nothing.
    """
    candidates = _candidate_ideals(max_degree)
    stages = dict((tuple(c), ratliff_rush_exponents(c, 2, n_max)) for c in candidates)
    certified = {}

    def _certified(gens):
        key = tuple(gens)
        if key not in certified:
            lower, upper = ratliff_rush_bounds(gens, 2, n_max)
            certified[key] = monomial.issubset(upper, lower)

        return certified[key]

    for small in candidates:
        for large in candidates:
            if small == large or not monomial.issubset(small, large):
                continue

            if monomial.issubset(stages[tuple(small)], stages[tuple(large)]):
                continue

            if _certified(small) and _certified(large):
                return small, large

    logger.warning('no Ratliff-Rush order witness among %d candidates', len(candidates))
    return None


def preclosure_suite(max_degree=4, n_max=4):
    """
    The preclosures with certificates: colon by x on F2[x]/(x^3),
    unmixed part and Ratliff-Rush on QQ[x, y], and the zero map. Each
    certificate family exhibits the single failing axiom.

    Returns
    -------
    list : preclosures
    """
    cubic = PolynomialRing(['x'], characteristic=2, relations=['x^3'])
    plane = PolynomialRing(['x', 'y'])

    by_x = colon_operation(['x'])
    by_x.add_certificate([Ideal(cubic, []), Ideal(cubic, ['x^2']), Ideal(cubic, ['x'])])

    unmixed = unmixed_part()
    unmixed.add_certificate([Ideal(plane, ['x^2', 'x*y']), Ideal(plane, ['x^2', 'x*y', 'y^2'])])

    rr = ratliff_rush(n_max)
    witness = search_ratliff_rush_witness(max_degree, n_max)
    if witness is not None:
        rr.add_certificate([_from_exponents(plane, w) for w in witness], note='search')
    else:
        rr.search_outcome = 'no witness with pure powers up to degree {}'.format(max_degree)

    zero = zero_map()
    zero.add_certificate([Ideal(plane, ['x'])])

    return [by_x, unmixed, rr, zero]
