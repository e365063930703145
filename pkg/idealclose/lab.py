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
from idealclose import utils
from idealclose.closures.framework import check_axioms
from idealclose.closures.framework import check_basics
from idealclose.closures.framework import semiprime_check
from idealclose.groebner import extend_ideal

logger = logging.getLogger(__name__)


def resolve_lattice(target):
    """
    Accepts an IdealLattice, a FiniteRing or a finite PolynomialRing and
    returns the IdealLattice.
    """
    if isinstance(target, finite.IdealLattice):
        return target

    if isinstance(target, finite.FiniteRing):
        return finite.lattice_of(target.ring)

    return finite.lattice_of(target)


def closure_table(lattice, cl, budget=None):
    """
    Label of the closure of every lattice ideal.

    Returns
    -------
    tuple : (table, unknowns)
        table maps labels to closure labels; unknowns lists the ideals whose
        closure could not be computed.
    """
    R = lattice.ring
    table = {}
    unknowns = []

    for label, ideal in zip(lattice.labels, lattice.ideals()):
        try:
            table[label] = R.label(cl.evaluate(ideal, budget))
        except core.ClosureUnavailable as e:
            unknowns.append({'ideal': str(ideal), 'reason': e.reason})

    return table, unknowns


def exhaustive_check(target, cl, budget=None):
    """
    Runs the axiom, basics and semiprime checks on every ideal of a finite
    ring.

    Parameters
    ----------
    target : IdealLattice, FiniteRing, PolynomialRing
    cl : ClosureOperation
    budget : dict, default None

    Returns
    -------
    dict : report
        A CheckReport whose details hold the three sub-reports.
    """
    lattice = resolve_lattice(target)
    family = lattice.ideals()

    axioms = check_axioms(cl, family, budget)
    basics = check_basics(cl, family, budget)
    semiprime = semiprime_check(cl, family, budget)

    report = utils.empty_report()
    report['check'] = 'exhaustive'
    report['ring'] = str(lattice.ring)
    report['closure'] = str(cl)
    report['details'] = {
        'ideals': len(lattice),
        'axioms': axioms,
        'basics': basics,
        'semiprime': semiprime,
    }

    violations = []
    unknowns = []
    for name, sub in (('axioms', axioms), ('basics', basics), ('semiprime', semiprime)):
        violations.extend(dict(w, check=name) for w in sub['witnesses'])
        if sub['status'] == 'unknown':
            unknowns.append({'check': name, 'reason': core.REASON_BUDGET})

    return utils.finish_report(report, violations, unknowns)


def closed_census(target, cl, budget=None):
    """
    The closed ideals of a finite ring together with the lattice facts
    every closure must satisfy: the fixed points are closed under
    intersection and every proper closed ideal lies in a maximal proper
    closed one. Flags record whether (0) is closed and whether every ideal
    is closed.

    Returns
    -------
    dict : report
    """
    lattice = resolve_lattice(target)
    R = lattice.ring
    table, unknowns = closure_table(lattice, cl, budget)

    closed = [L for L in lattice if table.get(L) == L]
    proper = [L for L in closed if L != lattice.top]
    maximal = [P for P in proper if not any(Q != P and R.issubset(P, Q) for Q in proper)]

    violations = []
    for a in closed:
        for b in closed:
            meet = R.intersection(a, b)
            if meet not in closed:
                violations.append({
                    'item': 'intersection-closed',
                    'ideals': [str(R.ideal(a)), str(R.ideal(b))],
                })

    for L in proper:
        if not any(R.issubset(L, P) for P in maximal):
            violations.append({'item': 'below-maximal', 'ideals': [str(R.ideal(L))]})

    semiprime_prime = all(lattice.is_prime(P) for P in maximal)
    if cl.semiprime and not semiprime_prime:
        for P in maximal:
            if not lattice.is_prime(P):
                violations.append({'item': 'maximal-closed-prime', 'ideals': [str(R.ideal(P))]})

    report = utils.empty_report()
    report['check'] = 'census'
    report['ring'] = str(R)
    report['closure'] = str(cl)
    report['details'] = {
        'ideals': len(lattice),
        'closed': [str(R.ideal(L)) for L in closed],
        'closed_count': len(closed),
        'zero_closed': table.get(lattice.bottom) == lattice.bottom,
        'all_closed': len(closed) == len(lattice),
        'maximal_closed': [str(R.ideal(P)) for P in maximal],
        'maximal_closed_prime': semiprime_prime,
    }

    return utils.finish_report(report, violations, unknowns)


def persistence_check(ring_map, cl, family=None, budget=None):
    """
    Checks phi(cl(I)) S inside cl(phi(I) S) for ideals of the source. With
    no family the source must be finite and every ideal is tested.

    Returns
    -------
    dict : report
        Witnesses carry the image generators missing from the right side.
    """
    if family is None:
        family = finite.lattice_of(ring_map.source).ideals()

    for ideal in family:
        if ideal.ring != ring_map.source:
            raise ValueError('persistence_check expects ideals of the map source!')

    report = utils.empty_report()
    report['check'] = 'persistence'
    report['ring'] = '{} -> {}'.format(ring_map.source, ring_map.target)
    report['closure'] = str(cl)

    violations = []
    unknowns = []

    for ideal in family:
        try:
            image_of_closure = extend_ideal(cl.evaluate(ideal, budget), ring_map)
            closure_of_image = cl.evaluate(extend_ideal(ideal, ring_map), budget)
        except core.ClosureUnavailable as e:
            unknowns.append({'ideal': str(ideal), 'reason': e.reason})
            continue

        missing = [g for g in image_of_closure.generators if not closure_of_image.contains(g)]
        if missing:
            violations.append({
                'ideals': [str(ideal)],
                'missing': [str(g) for g in missing],
                'closure_of_image': str(closure_of_image),
            })

    report['details']['family_size'] = len(family)
    return utils.finish_report(report, violations, unknowns)


def verify_lattice(target):
    """
    Sanity checks on an enumerated lattice: it contains (0) and R and is
    closed under sum, intersection and product.
    """
    lattice = resolve_lattice(target)
    R = lattice.ring

    report = utils.empty_report()
    report['check'] = 'lattice'
    report['ring'] = str(R)
    violations = []

    for needed in (lattice.bottom, lattice.top):
        if needed not in lattice:
            violations.append({'item': 'bounds', 'ideals': [str(R.ideal(needed))]})

    for a in lattice:
        for b in lattice:
            for name, result in (('sum', R.sum(a, b)),
                                 ('intersection', R.intersection(a, b)),
                                 ('product', R.product(a, b))):
                if result not in lattice:
                    violations.append({'item': name, 'ideals': [str(R.ideal(a)), str(R.ideal(b))]})

    report['details']['ideals'] = len(lattice)
    return utils.finish_report(report, violations)


def analyze(ring, cl, budget=None):
    """
    Runs the finite-lab battery on one closure: exhaustive check, census,
    Nakayama check and, on local rings, reductions of the maximal ideal.

    Parameters
    ----------
    ring : PolynomialRing
        A finite local quotient ring.
    cl : ClosureOperation
    budget : dict, default None

    Returns
    -------
    dict : analysis
    """
    from idealclose import reductions

    lattice = resolve_lattice(ring)
    result = {
        'ring': str(lattice.ring),
        'closure': str(cl),
        'exhaustive': exhaustive_check(lattice, cl, budget),
        'census': closed_census(lattice, cl, budget),
        'class': 'Analysis',
    }

    if lattice.ring.is_local:
        result['nakayama'] = reductions.nakayama_check(lattice, cl, budget)
        result['reductions'] = reductions.spread_and_core(
            lattice, cl, lattice.ring.ideal(lattice.ring.maximal), budget)

    logger.info('analyzed %s on %s', cl, lattice.ring)
    return result
