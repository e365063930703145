# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Python native imports
import logging

# Third-party imports
import numpy as np

# Project imports
from idealclose import core
from idealclose import finite
from idealclose import utils
from idealclose.groebner import Ideal
from idealclose.groebner import colon
from idealclose.groebner import contract_ideal
from idealclose.groebner import extend_ideal
from idealclose.groebner import ideal_product
from idealclose.groebner import ideal_sum
from idealclose.groebner import intersection
from idealclose.groebner import maximal_ideal
from idealclose.groebner import zero_ideal

logger = logging.getLogger(__name__)


class Verdict(object):
    """
    Outcome of a closure membership test: in, out or unknown. Unknown
    carries a reason, in and out may carry a certificate.
    """

    def __init__(self, kind, reason=None, certificate=None):
        if kind not in ('in', 'out', 'unknown'):
            raise ValueError('Verdict kind must be in, out or unknown')

        if kind == 'unknown' and reason not in (core.REASON_BUDGET, core.REASON_NOT_IMPLEMENTED):
            raise ValueError('Unknown verdicts need a reason')

        self.kind = kind
        self.reason = reason
        self.certificate = certificate

    @property
    def is_in(self):
        return self.kind == 'in'

    @property
    def is_out(self):
        return self.kind == 'out'

    @property
    def is_unknown(self):
        return self.kind == 'unknown'

    def __eq__(self, other):
        if not isinstance(other, Verdict):
            return NotImplemented

        return self.kind == other.kind and self.reason == other.reason

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.reason))

    def __str__(self):
        if self.kind == 'unknown':
            return 'unknown({})'.format(self.reason)

        if self.certificate:
            return '{}({})'.format(self.kind, self.certificate)

        return self.kind

    __repr__ = __str__


IN = Verdict('in')
OUT = Verdict('out')


def unknown(reason):
    return Verdict('unknown', reason)


def bind_ideal(spec, ring):
    """
    Resolves an ideal specification against a ring: an Ideal of that ring,
    a callable taking the ring, the string 'm' for the ideal of the
    variables, or a list of generators.

    Raises
    ------
    ValueError
        If an Ideal of another ring is given.
    """
    if isinstance(spec, Ideal):
        if spec.ring != ring:
            raise ValueError('ideal {} does not belong to {}'.format(spec, ring))

        return spec

    if callable(spec):
        return spec(ring)

    if spec == 'm':
        return maximal_ideal(ring)

    if core.is_array_like(spec):
        return Ideal(ring, list(spec))

    raise ValueError('Cannot interpret {!r} as an ideal'.format(spec))


class ClosureOperation(object):
    """
    A closure operation on the ideals of a ring, given by a generator
    engine, a membership engine, or both.

    Parameters
    ----------
    name : str
        Name used in reports.
    closure : function, default None
        closure(ideal, budget) returning an Ideal, or raising
        ClosureUnavailable.
    membership : function, default None
        membership(ideal, f, budget) returning a Verdict.
    semiprime : bool, default False
        Claimed semiprime flag; never trusted by the checks.
    finite_type : bool, default False
    enforce_extension : bool, default True
        Reject engine results that do not contain the input ideal.
    """

    def __init__(self, name, closure=None, membership=None, semiprime=False,
                 finite_type=False, enforce_extension=True):
        if closure is None and membership is None:
            raise ValueError('ClosureOperation needs a closure or a membership engine!')

        self.name = name
        self._closure = closure
        self._membership = membership
        self.semiprime = semiprime
        self.finite_type = finite_type
        self.enforce_extension = enforce_extension
        self._cache = {}

    def __str__(self):
        return self.name

    __repr__ = __str__

    @property
    def has_closure(self):
        return self._closure is not None

    def _membership_closure(self, ideal, budget):
        R = finite.finite_ring_of(ideal.ring)
        if R is None:
            raise core.ClosureUnavailable(
                core.REASON_NOT_IMPLEMENTED,
                '{} only decides membership outside finite rings'.format(self.name))

        members = []
        for v in R.elements:
            verdict = self._membership(ideal, R.polynomial(v), budget)
            if verdict.is_unknown:
                raise core.ClosureUnavailable(verdict.reason)

            if verdict.is_in:
                members.append(v)

        return R.ideal(R.ideal_of(members))

    def evaluate(self, ideal, budget=None):
        """
        Raw engine result for an ideal, cached per ideal and budget.

        Raises
        ------
        ClosureUnavailable
            If no generators can be produced.
        """
        budget = core.valid_budget(budget)
        key = (ideal, core.budget_key(budget))

        if key not in self._cache:
            if self._closure is not None:
                result = self._closure(ideal, budget)
            else:
                result = self._membership_closure(ideal, budget)

            if result.ring != ideal.ring:
                raise ValueError('{} returned an ideal of another ring'.format(self.name))

            self._cache[key] = result

        return self._cache[key]

    def close(self, ideal, budget=None):
        """
        The closure of an ideal.

        Raises
        ------
        ClosureUnavailable
            If no generators can be produced.
        ValueError
            If extension is enforced and the result misses the ideal.
        """
        result = self.evaluate(ideal, budget)
        if self.enforce_extension and not ideal.issubset(result):
            raise ValueError('{} is not extensive on {}: got {}'.format(self.name, ideal, result))

        return result

    def contains(self, ideal, f, budget=None):
        """
        Membership of f in the closure of the ideal as a Verdict.
        """
        f = ideal.ring.coerce(f)

        if ideal.contains(f) and self.enforce_extension:
            return IN

        if self._membership is not None:
            return self._membership(ideal, f, core.valid_budget(budget))

        try:
            closed = self.close(ideal, budget)
        except core.ClosureUnavailable as e:
            return unknown(e.reason)

        return IN if closed.contains(f) else OUT


def _describe(ideal):
    return str(ideal)


def _family_ring(family):
    if not family:
        raise ValueError('checks need a non-empty family of ideals!')

    ring = family[0].ring
    for ideal in family:
        if ideal.ring != ring:
            raise ValueError('checks expect every ideal in the same ring!')

    return ring


def _new_report(check, closure, ring):
    report = utils.empty_report()
    report['check'] = check
    report['closure'] = str(closure)
    report['ring'] = str(ring)
    return report


def _closures(cl, family, budget, unknowns):
    closed = {}
    for ideal in family:
        if ideal in closed:
            continue

        try:
            closed[ideal] = cl.evaluate(ideal, budget)
        except core.ClosureUnavailable as e:
            unknowns.append({'ideal': _describe(ideal), 'reason': e.reason})

    return closed


def _safe_close(cl, ideal, budget, unknowns):
    try:
        return cl.evaluate(ideal, budget)
    except core.ClosureUnavailable as e:
        unknowns.append({'ideal': _describe(ideal), 'reason': e.reason})
        return None


def check_axioms(cl, family, budget=None):
    """
    Checks extension, idempotence and order preservation of a closure on a
    finite family of ideals.

    Parameters
    ----------
    cl : ClosureOperation
    family : list
        Ideals of one ring.
    budget : dict, default None

    Returns
    -------
    dict : report
        A CheckReport; witnesses name the violated axiom and the ideals
        involved, details carry a status per axiom.
    """
    ring = _family_ring(family)
    report = _new_report('axioms', cl, ring)
    violations = []
    unknowns = []
    failed = set()

    closed = _closures(cl, family, budget, unknowns)

    for ideal, result in closed.items():
        if not ideal.issubset(result):
            failed.add('extension')
            violations.append({
                'axiom': 'extension',
                'ideals': [_describe(ideal)],
                'closure': _describe(result),
            })

    for ideal, result in closed.items():
        again = _safe_close(cl, result, budget, unknowns)
        if again is not None and again != result:
            failed.add('idempotence')
            violations.append({
                'axiom': 'idempotence',
                'ideals': [_describe(ideal)],
                'closure': _describe(result),
                'closure_of_closure': _describe(again),
            })

    members = list(closed)
    for small in members:
        for large in members:
            if small is large or small == large or not small.issubset(large):
                continue

            if not closed[small].issubset(closed[large]):
                failed.add('order-preservation')
                violations.append({
                    'axiom': 'order-preservation',
                    'ideals': [_describe(small), _describe(large)],
                    'closures': [_describe(closed[small]), _describe(closed[large])],
                })

    report['details']['axioms'] = dict(
        (axiom, 'fail' if axiom in failed else 'pass')
        for axiom in ('extension', 'idempotence', 'order-preservation'))
    report['details']['family_size'] = len(members)

    return utils.finish_report(report, violations, unknowns)


def _pairs(family):
    for i in range(len(family)):
        for j in range(i, len(family)):
            yield family[i], family[j]


def check_basics(cl, family, budget=None):
    """
    Checks the four basic consequences of the closure axioms on a family:
    closed ideals are closed under intersection, intersections of closures
    are closed, the closure lies in every closed family member containing
    the ideal (relative to the family), and cl(cl(I) + cl(J)) = cl(I + J).

    Returns
    -------
    dict : report
        A CheckReport with the outcome of each item in details.
    """
    ring = _family_ring(family)
    report = _new_report('basics', cl, ring)
    violations = []
    unknowns = []
    failed = set()

    closed = _closures(cl, family, budget, unknowns)
    members = [I for I in family if I in closed]
    fixed = [I for I in members if closed[I] == I]

    for a, b in _pairs(fixed):
        meet = intersection(a, b)
        result = _safe_close(cl, meet, budget, unknowns)
        if result is not None and result != meet:
            failed.add('closed-intersections')
            violations.append({
                'item': 'closed-intersections',
                'ideals': [_describe(a), _describe(b)],
                'closure': _describe(result),
            })

    for a, b in _pairs(members):
        meet = intersection(closed[a], closed[b])
        result = _safe_close(cl, meet, budget, unknowns)
        if result is not None and result != meet:
            failed.add('intersection-of-closures')
            violations.append({
                'item': 'intersection-of-closures',
                'ideals': [_describe(a), _describe(b)],
                'closure': _describe(result),
            })

    for ideal in members:
        above = [C for C in fixed if ideal.issubset(C)]
        if not above:
            continue

        meet = above[0]
        for C in above[1:]:
            meet = intersection(meet, C)

        if not closed[ideal].issubset(meet):
            failed.add('closure-as-meet')
            violations.append({
                'item': 'closure-as-meet',
                'ideals': [_describe(ideal)],
                'closure': _describe(closed[ideal]),
                'meet': _describe(meet),
            })

    for a, b in _pairs(members):
        left = _safe_close(cl, ideal_sum(closed[a], closed[b]), budget, unknowns)
        right = _safe_close(cl, ideal_sum(a, b), budget, unknowns)
        if left is not None and right is not None and left != right:
            failed.add('sum-identity')
            violations.append({
                'item': 'sum-identity',
                'ideals': [_describe(a), _describe(b)],
                'closures': [_describe(left), _describe(right)],
            })

    report['details']['items'] = dict(
        (item, 'fail' if item in failed else 'pass')
        for item in ('closed-intersections', 'intersection-of-closures',
                     'closure-as-meet', 'sum-identity'))
    report['details']['closure-as-meet'] = 'relative to the family'

    return utils.finish_report(report, violations, unknowns)


def _family_pairs(family):
    pairs = []
    for a in family:
        for b in family:
            pairs.append((a, b))

    return pairs


def semiprime_check(cl, pairs, budget=None):
    """
    Checks I * cl(J) inside cl(I * J) for the given pairs, and records the
    equivalent form cl(cl(I) * cl(J)) = cl(I * J) separately.

    Parameters
    ----------
    cl : ClosureOperation
    pairs : list
        (I, J) tuples, or a flat list of ideals meaning all ordered pairs.

    Returns
    -------
    dict : report
    """
    if pairs and isinstance(pairs[0], Ideal):
        pairs = _family_pairs(pairs)

    if not pairs:
        raise ValueError('semiprime_check needs at least one pair!')

    ring = _family_ring([p[0] for p in pairs] + [p[1] for p in pairs])
    report = _new_report('semiprime', cl, ring)
    violations = []
    unknowns = []
    equivalent_failures = []

    for a, b in pairs:
        closed_b = _safe_close(cl, b, budget, unknowns)
        closed_ab = _safe_close(cl, ideal_product(a, b), budget, unknowns)
        if closed_b is None or closed_ab is None:
            continue

        if not ideal_product(a, closed_b).issubset(closed_ab):
            violations.append({
                'ideals': [_describe(a), _describe(b)],
                'product_with_closure': _describe(ideal_product(a, closed_b)),
                'closure_of_product': _describe(closed_ab),
            })

        closed_a = _safe_close(cl, a, budget, unknowns)
        if closed_a is None:
            continue

        both = _safe_close(cl, ideal_product(closed_a, closed_b), budget, unknowns)
        if both is not None and both != closed_ab:
            equivalent_failures.append({
                'ideals': [_describe(a), _describe(b)],
                'closure_of_closures': _describe(both),
                'closure_of_product': _describe(closed_ab),
            })

    report['details']['claimed'] = bool(cl.semiprime)
    report['details']['equivalent_form'] = 'fail' if equivalent_failures else 'pass'
    report['details']['equivalent_form_witnesses'] = equivalent_failures
    report['details']['pairs'] = len(pairs)

    return utils.finish_report(report, violations, unknowns)


def is_nonzerodivisor(x):
    """
    x is a non-zerodivisor of its ring when (0 : x) = 0.
    """
    ring = x.ring
    return colon(zero_ideal(ring), Ideal(ring, [x])).is_zero()


def _require_nonzerodivisor(x, caller):
    if x.is_zero() or not is_nonzerodivisor(x):
        raise ValueError('{} expects x to be a non-zerodivisor!'.format(caller))


def star_check(cl, ideal, x, budget=None):
    """
    Checks the star-operation identity cl(x * I) = x * cl(I) for a
    non-zerodivisor x.

    Raises
    ------
    ValueError
        If x is a zero divisor.
    """
    x = ideal.ring.coerce(x)
    _require_nonzerodivisor(x, 'star_check')

    report = _new_report('star', cl, ideal.ring)
    principal = Ideal(ideal.ring, [x])
    unknowns = []
    violations = []

    left = _safe_close(cl, ideal_product(principal, ideal), budget, unknowns)
    closed = _safe_close(cl, ideal, budget, unknowns)

    if left is not None and closed is not None:
        right = ideal_product(principal, closed)
        if left != right:
            violations.append({
                'ideals': [_describe(ideal)],
                'element': str(x),
                'closure_of_product': _describe(left),
                'product_with_closure': _describe(right),
            })

    return utils.finish_report(report, violations, unknowns)


def hash_property_check(cl, ideal, x, budget=None):
    """
    Checks cl(I) = (cl(x * I) : x) for a non-zerodivisor x.

    Raises
    ------
    ValueError
        If x is a zero divisor.
    """
    x = ideal.ring.coerce(x)
    _require_nonzerodivisor(x, 'hash_property_check')

    report = _new_report('hash-property', cl, ideal.ring)
    principal = Ideal(ideal.ring, [x])
    unknowns = []
    violations = []

    closed = _safe_close(cl, ideal, budget, unknowns)
    scaled = _safe_close(cl, ideal_product(principal, ideal), budget, unknowns)

    if closed is not None and scaled is not None:
        quotient = colon(scaled, principal)
        if quotient != closed:
            violations.append({
                'ideals': [_describe(ideal)],
                'element': str(x),
                'closure': _describe(closed),
                'colon': _describe(quotient),
            })

    return utils.finish_report(report, violations, unknowns)


def star_from_hash_check(cl, ideal, x, budget=None):
    """
    Checks that the star identity for (I, x) holds exactly when the hash
    property holds and the principal ideal (x) is closed.
    """
    x = ideal.ring.coerce(x)
    hashed = hash_property_check(cl, ideal, x, budget)
    starred = star_check(cl, ideal, x, budget)

    report = _new_report('star-from-hash', cl, ideal.ring)
    unknowns = []
    violations = []

    principal = Ideal(ideal.ring, [x])
    closed_principal = _safe_close(cl, principal, budget, unknowns)

    report['details']['hash'] = hashed['status']
    report['details']['star'] = starred['status']

    statuses = (hashed['status'], starred['status'])
    if 'unknown' in statuses or closed_principal is None:
        unknowns.append({'ideal': _describe(ideal), 'reason': core.REASON_BUDGET})
        return utils.finish_report(report, violations, unknowns)

    principal_closed = closed_principal == principal
    report['details']['principal_closed'] = principal_closed

    expected = hashed['status'] == 'pass' and principal_closed
    if expected != (starred['status'] == 'pass'):
        violations.append({
            'ideals': [_describe(ideal)],
            'element': str(x),
            'hash': hashed['status'],
            'principal_closed': principal_closed,
            'star': starred['status'],
        })

    return utils.finish_report(report, violations, unknowns)


def compare(cl1, cl2, family, budget=None):
    """
    Compares two closures pointwise on a family.

    Returns
    -------
    dict : comparison
        relation is one of '=', '<=', '>=', 'incomparable' or 'unknown';
        witnesses list the ideals where each inclusion fails.
    """
    _family_ring(family)
    below = []
    above = []
    undecided = []

    for ideal in family:
        try:
            a = cl1.evaluate(ideal, budget)
            b = cl2.evaluate(ideal, budget)
        except core.ClosureUnavailable as e:
            undecided.append({'ideal': _describe(ideal), 'reason': e.reason})
            continue

        if not a.issubset(b):
            below.append({'ideal': _describe(ideal), 'closures': [_describe(a), _describe(b)]})

        if not b.issubset(a):
            above.append({'ideal': _describe(ideal), 'closures': [_describe(a), _describe(b)]})

    if below and above:
        relation = 'incomparable'
    elif undecided:
        relation = 'unknown'
    elif below:
        relation = '>='
    elif above:
        relation = '<='
    else:
        relation = '='

    return {
        'relation': relation,
        'closures': [str(cl1), str(cl2)],
        'witnesses': {'not_below': below, 'not_above': above},
        'unknown': undecided,
        'class': 'Comparison',
    }


def construct_from_module(kind, spec):
    """
    Closure induced by an ideal: for kind 'ideal', I -> (I*K : K); for kind
    'quotient', I -> I + a. The ideal may be given unbound and is resolved
    against the ring of each input.

    Parameters
    ----------
    kind : str
        'ideal' or 'quotient'.
    spec : Ideal, list, str
        The inducing ideal, see bind_ideal.

    Returns
    -------
    ClosureOperation : closure
    """
    if kind == 'ideal':
        def _closure(ideal, budget):
            K = bind_ideal(spec, ideal.ring)
            return colon(ideal_product(ideal, K), K)

        name = 'modclosure({})'.format(_spec_name(spec))
    elif kind == 'quotient':
        def _closure(ideal, budget):
            return ideal_sum(ideal, bind_ideal(spec, ideal.ring))

        name = 'quotient({})'.format(_spec_name(spec))
    else:
        raise ValueError('construct_from_module kind must be ideal or quotient')

    return ClosureOperation(name, closure=_closure, semiprime=True)


def _spec_name(spec):
    if isinstance(spec, Ideal):
        return str(spec)

    if core.is_array_like(spec):
        return '({})'.format(', '.join(str(s) for s in spec))

    return getattr(spec, 'name', str(spec))


def construct_contraction(ring_map, cl):
    """
    Contraction of a closure on the target along a ring map:
    f in I^c iff phi(f) in cl(phi(I) S).

    Generators are available for quotient surjections (preimage of the
    target closure) and for finite sources (enumeration); otherwise only
    membership is offered.
    """
    def _membership(ideal, f, budget):
        _check_source(ideal)
        return cl.contains(extend_ideal(ideal, ring_map), ring_map(f), budget)

    def _check_source(ideal):
        if ideal.ring != ring_map.source:
            raise ValueError('contracted closure applied outside the map source')

    closure = None
    if ring_map.is_quotient_surjection():
        def closure(ideal, budget):
            _check_source(ideal)
            return contract_ideal(cl.close(extend_ideal(ideal, ring_map), budget), ring_map)

    return ClosureOperation(
        'contract({}, {})'.format(ring_map, cl),
        closure=closure,
        membership=_membership,
        semiprime=False)


def construct_intersection(closures):
    """
    Pointwise intersection of a non-empty list of closures.
    """
    if not closures:
        raise ValueError('construct_intersection needs at least one closure!')

    def _closure(ideal, budget):
        result = None
        for cl in closures:
            closed = cl.close(ideal, budget)
            result = closed if result is None else intersection(result, closed)

        return result

    def _membership(ideal, f, budget):
        verdicts = [cl.contains(ideal, f, budget) for cl in closures]
        if any(v.is_out for v in verdicts):
            return OUT

        for v in verdicts:
            if v.is_unknown:
                return v

        return IN

    return ClosureOperation(
        'meet({})'.format(', '.join(str(cl) for cl in closures)),
        closure=_closure,
        membership=_membership,
        semiprime=all(cl.semiprime for cl in closures))


def construct_directed_union(closures):
    """
    Pointwise union of a directed list of closures; with finitely many
    members the union is their sum.
    """
    if not closures:
        raise ValueError('construct_directed_union needs at least one closure!')

    def _closure(ideal, budget):
        result = ideal
        for cl in closures:
            result = ideal_sum(result, cl.close(ideal, budget))

        return result

    def _membership(ideal, f, budget):
        verdicts = [cl.contains(ideal, f, budget) for cl in closures]
        if any(v.is_in for v in verdicts):
            return IN

        for v in verdicts:
            if v.is_unknown:
                return v

        return OUT

    return ClosureOperation(
        'union({})'.format(', '.join(str(cl) for cl in closures)),
        closure=_closure,
        membership=_membership,
        semiprime=all(cl.semiprime for cl in closures))


def check_directed(closures, family, budget=None):
    """
    Checks that every pair of closures has an upper bound in the list on
    the family.
    """
    ring = _family_ring(family)
    report = _new_report('directed', 'union({})'.format(', '.join(str(c) for c in closures)), ring)
    violations = []
    unknowns = []

    table = []
    for cl in closures:
        table.append([_safe_close(cl, ideal, budget, unknowns) for ideal in family])

    def _below(i, k):
        return all(
            a is None or b is None or a.issubset(b)
            for a, b in zip(table[i], table[k]))

    for i in range(len(closures)):
        for j in range(i + 1, len(closures)):
            if not any(_below(i, k) and _below(j, k) for k in range(len(closures))):
                violations.append({'closures': [str(closures[i]), str(closures[j])]})

    return utils.finish_report(report, violations, unknowns)


def idempotent_hull(d, name=None):
    """
    The smallest closure above an extensive, order-preserving operation,
    obtained by iterating d to a fixpoint within n_max steps.
    """
    def _closure(ideal, budget):
        current = ideal
        for _ in range(budget['n_max']):
            following = d.evaluate(current, budget)
            if not current.issubset(following):
                raise ValueError('idempotent_hull needs an extensive operation, {} is not'.format(d))

            if following == current:
                return current

            current = following

        raise core.ClosureUnavailable(
            core.REASON_BUDGET,
            'hull of {} did not stabilize within {} steps'.format(d, budget['n_max']))

    return ClosureOperation(name or 'hull({})'.format(d), closure=_closure)


def hull_precondition_check(d, family, budget=None):
    """
    Checks that an operation is extensive and order-preserving on the
    family, the hypotheses under which its idempotent hull is a closure.
    """
    report = check_axioms(d, family, budget)
    report['check'] = 'hull-preconditions'

    kept = [w for w in report['witnesses'] if w['axiom'] != 'idempotence']
    report['details']['axioms'].pop('idempotence', None)
    return utils.finish_report(report, kept, report['details'].pop('unknown', None))


def finite_type_cf(cl):
    """
    The finite-type closure cl_f. Ideals of noetherian rings are finitely
    generated, so cl_f agrees with cl and only the flag changes.
    """
    return ClosureOperation(
        'cf({})'.format(cl),
        closure=cl.evaluate if cl.has_closure else None,
        membership=None if cl.has_closure else cl.contains,
        semiprime=cl.semiprime,
        finite_type=True)


def construct_cw(cl, lattice=None):
    """
    The closure cl_w on a finite ring: f lies in cl_w(I) when for every
    maximal proper cl_f-closed ideal P some d outside P has d*f in I.

    Parameters
    ----------
    cl : ClosureOperation
    lattice : IdealLattice, default None
        Resolved from the ring of each input ideal when None.

    Returns
    -------
    ClosureOperation : cw
        Carries details() with the maximal closed ideals, their primality
        and whether the element set was already an ideal.
    """
    cf = finite_type_cf(cl)
    state = {}

    def _context(ring):
        if ring not in state:
            L = lattice if lattice is not None and lattice.ring.ring == ring else finite.lattice_of(ring)
            R = L.ring
            proper = [
                label for label in L
                if label != L.top and R.label(cf.close(R.ideal(label))) == label
            ]
            maximal = [
                P for P in proper
                if not any(Q != P and R.issubset(P, Q) for Q in proper)
            ]
            state[ring] = {
                'lattice': L,
                'maximal': maximal,
                'maximal_prime': dict((P, L.is_prime(P)) for P in maximal),
                'element_sets_are_ideals': True,
            }

        return state[ring]

    def _closure(ideal, budget):
        context = _context(ideal.ring)
        R = context['lattice'].ring
        I = R.label(ideal)
        elements = R.elements
        mask = np.ones(len(elements), dtype=bool)

        for P in context['maximal']:
            outside = elements[~R.contains_many(P, elements)]
            hits = np.zeros(len(elements), dtype=bool)
            for d in outside:
                hits |= R.contains_many(I, R.mul_many(elements, d))

            mask &= hits

        members = elements[mask]
        label = R.ideal_of(members)
        if len(R.elements_of(label)) != len(members):
            context['element_sets_are_ideals'] = False

        return R.ideal(label)

    operation = ClosureOperation('cw({})'.format(cl), closure=_closure, semiprime=cl.semiprime)

    def details(ring):
        context = _context(ring)
        R = context['lattice'].ring
        return {
            'maximal_closed': [str(R.ideal(P)) for P in context['maximal']],
            'maximal_closed_prime': all(context['maximal_prime'].values()),
            'element_sets_are_ideals': context['element_sets_are_ideals'],
        }

    operation.details = details
    return operation


def prdec_check(cl, family, lattice=None, budget=None):
    """
    Checks the colon consequences of semiprimality on pairs of the family:
    cl(I : J) inside (cl(I) : J) and (cl(I) : J) closed. With a lattice the
    maximal proper closed ideals are also tested for primality.

    Parameters
    ----------
    cl : ClosureOperation
    family : list
        Ideals of one ring.
    lattice : IdealLattice, default None
    budget : dict, default None

    Returns
    -------
    dict : report
    """
    ring = _family_ring(family)
    report = _new_report('prdec', cl, ring)
    violations = []
    unknowns = []

    for a in family:
        closed_a = _safe_close(cl, a, budget, unknowns)
        if closed_a is None:
            continue

        for b in family:
            quotient = colon(closed_a, b)
            closed_colon = _safe_close(cl, colon(a, b), budget, unknowns)
            if closed_colon is not None and not closed_colon.issubset(quotient):
                violations.append({
                    'item': 'colon-inclusion',
                    'ideals': [_describe(a), _describe(b)],
                    'closure_of_colon': _describe(closed_colon),
                    'colon_of_closure': _describe(quotient),
                })

            again = _safe_close(cl, quotient, budget, unknowns)
            if again is not None and again != quotient:
                violations.append({
                    'item': 'colon-closed',
                    'ideals': [_describe(a), _describe(b)],
                    'colon_of_closure': _describe(quotient),
                    'closure': _describe(again),
                })

    if lattice is not None:
        R = lattice.ring
        closed = []
        for label in lattice:
            if label == lattice.top:
                continue

            result = _safe_close(cl, R.ideal(label), budget, unknowns)
            if result is not None and R.label(result) == label:
                closed.append(label)

        maximal = [P for P in closed if not any(Q != P and R.issubset(P, Q) for Q in closed)]
        report['details']['maximal_closed'] = [str(R.ideal(P)) for P in maximal]

        for P in maximal:
            if not lattice.is_prime(P):
                violations.append({'item': 'maximal-closed-prime', 'ideals': [str(R.ideal(P))]})

    report['details']['claimed_semiprime'] = bool(cl.semiprime)
    return utils.finish_report(report, violations, unknowns)


def prime_check(cl, family, elements=None, budget=None):
    """
    Checks semiprimality on all pairs of the family together with the star
    identity for every given non-zerodivisor; zero divisors are skipped.
    """
    ring = _family_ring(family)
    report = _new_report('prime', cl, ring)

    semiprime = semiprime_check(cl, family, budget)
    violations = [dict(w, item='semiprime') for w in semiprime['witnesses']]
    unknowns = list(semiprime['details'].get('unknown', []))

    checked = 0
    for x in elements or []:
        x = ring.coerce(x)
        if x.is_zero() or not is_nonzerodivisor(x):
            continue

        checked += 1
        for ideal in family:
            starred = star_check(cl, ideal, x, budget)
            violations.extend(dict(w, item='star') for w in starred['witnesses'])
            unknowns.extend(starred['details'].get('unknown', []))

    report['details']['nonzerodivisors'] = checked
    return utils.finish_report(report, violations, unknowns)


def closure_from_closed_family(lattice, family, name='closed-family'):
    """
    The closure on a finite ring whose closed ideals are the given family
    plus the unit ideal: cl(I) is the meet of the family members above I.

    Parameters
    ----------
    lattice : IdealLattice
    family : list
        Ideals (or labels) of the finite ring; must be closed under
        intersection for the result to have exactly this fixed-point set.
    """
    R = lattice.ring
    labels = [R.label(I) if isinstance(I, Ideal) else I for I in family]
    if lattice.top not in labels:
        labels.append(lattice.top)

    def _closure(ideal, budget):
        I = R.label(ideal)
        result = lattice.top
        for C in labels:
            if R.issubset(I, C):
                result = R.intersection(result, C)

        return R.ideal(result)

    return ClosureOperation(name, closure=_closure)
