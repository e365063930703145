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
from idealclose import utils
from idealclose.lab import closure_table
from idealclose.lab import resolve_lattice

logger = logging.getLogger(__name__)


def _require_local(lattice):
    if not lattice.ring.is_local:
        raise ValueError('reductions need a local finite ring with a designated maximal ideal!')


def _label(lattice, ideal):
    R = lattice.ring
    return ideal if isinstance(ideal, tuple) else R.label(ideal)


def _name(lattice, label):
    return str(lattice.ring.ideal(label))


def _table(lattice, cl, budget):
    table, unknowns = closure_table(lattice, cl, budget)
    if unknowns:
        raise core.ClosureUnavailable(
            core.REASON_BUDGET, '{} is not computable on every ideal of {}'.format(cl, lattice.ring))

    return table


def nakayama_check(target, cl, budget=None):
    """
    Checks the Nakayama property of a closure on a finite local ring: for
    all J inside I with I inside cl(J + mI), cl(J) = cl(I).

    Parameters
    ----------
    target : IdealLattice, FiniteRing, PolynomialRing
    cl : ClosureOperation
    budget : dict, default None

    Returns
    -------
    dict : report
        A CheckReport listing every violating pair.
    """
    lattice = resolve_lattice(target)
    _require_local(lattice)
    R = lattice.ring

    report = utils.empty_report()
    report['check'] = 'nakayama'
    report['ring'] = str(R)
    report['closure'] = str(cl)

    table, unknowns = closure_table(lattice, cl, budget)
    if unknowns:
        return utils.finish_report(report, [], unknowns)

    violations = []
    for I in lattice:
        mI = R.product(R.maximal, I)
        for J in lattice:
            if not R.issubset(J, I):
                continue

            if R.issubset(I, table[R.sum(J, mI)]) and table[J] != table[I]:
                violations.append({'ideals': [_name(lattice, J), _name(lattice, I)]})

    report['details']['pairs'] = sum(1 for I in lattice for J in lattice if R.issubset(J, I))
    return utils.finish_report(report, violations)


def _minimal(R, labels):
    return [J for J in labels if not any(K != J and R.issubset(K, J) for K in labels)]


def _lemma_check(lattice, reductions, minimal):
    """
    Every reduction contains a minimal one K whose minimal generators
    extend to minimal generators of the reduction:
    dim(K + mJ) - dim(mJ) = dim K - dim mK.
    """
    R = lattice.ring
    failures = []

    for J in reductions:
        below = [K for K in minimal if R.issubset(K, J)]
        if not below:
            failures.append({'reduction': _name(lattice, J), 'item': 'no-minimal-below'})
            continue

        mJ = R.product(R.maximal, J)
        extends = any(
            len(R.sum(K, mJ)) - len(mJ) == len(K) - len(R.product(R.maximal, K))
            for K in below)

        if not extends:
            failures.append({'reduction': _name(lattice, J), 'item': 'basis-extension'})

    return failures


def minimal_reductions(target, cl, ideal, budget=None):
    """
    The minimal cl-reductions of an ideal: subideals J with cl(J) = cl(I)
    and no smaller lattice ideal with the same closure.

    Returns
    -------
    dict : report
        A ReductionReport with each minimal reduction and its mu, plus the
        basis extension check in 'lemma'.
    """
    report, _ = _reductions(target, cl, ideal, budget)
    return report


def _reductions(target, cl, ideal, budget):
    lattice = resolve_lattice(target)
    _require_local(lattice)
    R = lattice.ring
    table = _table(lattice, cl, budget)
    I = _label(lattice, ideal)

    reductions = [J for J in lattice if R.issubset(J, I) and table[J] == table[I]]
    minimal = _minimal(R, reductions)

    nakayama = nakayama_check(lattice, cl, budget)
    failures = _lemma_check(lattice, reductions, minimal)

    report = utils.empty_reduction_report()
    report['closure'] = str(cl)
    report['ring'] = str(R)
    report['ideal'] = _name(lattice, I)
    report['minimal_reductions'] = [
        {'ideal': _name(lattice, J), 'mu': R.mu(J)} for J in minimal
    ]
    report['nakayama'] = nakayama['status']
    report['lemma'] = {
        'asserted': nakayama['status'] == 'pass',
        'holds': not failures,
        'witnesses': failures,
    }

    if failures and nakayama['status'] == 'pass':
        logger.warning('minimal reduction basis extension failed for Nakayama closure %s', cl)

    return report, minimal


def spread_and_core(target, cl, ideal, budget=None):
    """
    The spread (common mu of the minimal reductions, or 'ill-defined' with
    two witnesses) and the core (intersection of the minimal reductions).

    Returns
    -------
    dict : report
        A ReductionReport.
    """
    lattice = resolve_lattice(target)
    R = lattice.ring
    report, minimal = _reductions(lattice, cl, ideal, budget)

    counts = [R.mu(J) for J in minimal]
    if len(set(counts)) == 1:
        report['spread'] = counts[0]
    else:
        report['spread'] = 'ill-defined'
        first = minimal[0]
        other = next(J for J in minimal if R.mu(J) != R.mu(first))
        report['spread_witnesses'] = [_name(lattice, first), _name(lattice, other)]

    core_label = lattice.top
    for J in minimal:
        core_label = R.intersection(core_label, J)

    report['core'] = _name(lattice, core_label)
    return report


class SpecialPartOp(object):
    """
    A special part candidate with its engine on finite rings and the
    recorded outcome of each defining property.

    Parameters
    ----------
    name : str
    engine : function
        engine(finite_ring, label) returning a label.
    """

    PROPERTIES = ('trapped', 'depends-on-closure', 'order-preserving', 'special-nakayama')

    def __init__(self, name, engine):
        self.name = name
        self.engine = engine
        self.flags = {}

    def __str__(self):
        return self.name

    __repr__ = __str__

    def __call__(self, finite_ring, label):
        return self.engine(finite_ring, label)

    def reverify(self, target, cl, budget=None):
        """
        Re-runs the property checks and reports whether the recorded flags
        still hold.
        """
        if not self.flags:
            raise ValueError('{} has no recorded flags'.format(self.name))

        recorded = dict((k, v['holds']) for k, v in self.flags.items())
        special_part_axioms(self, target, cl, budget)
        current = dict((k, v['holds']) for k, v in self.flags.items())
        return recorded == current


def special_part_frobenius(target, ideal):
    """
    The Frobenius special part {f : f^q in m I^[q] for some q} on a finite
    local ring of prime characteristic.

    Returns
    -------
    Ideal : special_part
    """
    lattice = resolve_lattice(target)
    _require_local(lattice)
    R = lattice.ring
    return R.ideal(R.frobenius_special_part(_label(lattice, ideal)))


def frobenius_special_part():
    return SpecialPartOp('Fsp', lambda R, label: R.frobenius_special_part(label))


def trivial_special_part():
    return SpecialPartOp('mI', lambda R, label: R.product(R.maximal, label))


def _sp_table(lattice, sp):
    return dict((L, sp(lattice.ring, L)) for L in lattice)


def special_part_axioms(sp, target, cl, budget=None):
    """
    Checks the four properties of a special part on every ideal of a finite
    local ring: trapped (mI inside sp(I) inside cl(I)), depends only on the
    closure, order-preserving, and special Nakayama (J inside I inside
    cl(J + sp(I)) forces I inside cl(J)). Outcomes are stored on sp.flags.

    Returns
    -------
    dict : report
    """
    lattice = resolve_lattice(target)
    _require_local(lattice)
    R = lattice.ring
    table = _table(lattice, cl, budget)
    parts = _sp_table(lattice, sp)

    witnesses = dict((name, []) for name in SpecialPartOp.PROPERTIES)

    for I in lattice:
        mI = R.product(R.maximal, I)
        if not (R.issubset(mI, parts[I]) and R.issubset(parts[I], table[I])):
            witnesses['trapped'].append([_name(lattice, I)])

        if parts[table[I]] != parts[I]:
            witnesses['depends-on-closure'].append([_name(lattice, I)])

        for J in lattice:
            if not R.issubset(J, I):
                continue

            if not R.issubset(parts[J], parts[I]):
                witnesses['order-preserving'].append([_name(lattice, J), _name(lattice, I)])

            if R.issubset(I, table[R.sum(J, parts[I])]) and not R.issubset(I, table[J]):
                witnesses['special-nakayama'].append([_name(lattice, J), _name(lattice, I)])

    sp.flags = dict(
        (name, {'holds': not found, 'witnesses': found})
        for name, found in witnesses.items())

    report = utils.empty_report()
    report['check'] = 'special-part'
    report['ring'] = str(R)
    report['closure'] = '{} for {}'.format(sp, cl)
    report['details']['flags'] = dict((name, not found) for name, found in witnesses.items())

    violations = [
        {'property': name, 'ideals': ideals}
        for name in SpecialPartOp.PROPERTIES
        for ideals in witnesses[name]
    ]
    return utils.finish_report(report, violations)


def special_decomposition_check(target, cl, sp, budget=None):
    """
    Checks cl(I) = I + sp(I) for every ideal of a finite local ring with
    residue field F_p; when it holds the spread of every ideal must be well
    defined.

    Returns
    -------
    dict : report
    """
    lattice = resolve_lattice(target)
    _require_local(lattice)
    R = lattice.ring
    table = _table(lattice, cl, budget)

    violations = []
    for I in lattice:
        combined = R.sum(I, sp(R, I))
        if combined != table[I]:
            violations.append({
                'item': 'decomposition',
                'ideals': [_name(lattice, I)],
                'closure': _name(lattice, table[I]),
                'sum': _name(lattice, combined),
            })

    spreads = {}
    if not violations:
        for I, ideal in zip(lattice.labels, lattice.ideals()):
            reduction = spread_and_core(lattice, cl, I, budget)
            spreads[str(ideal)] = reduction['spread']
            if reduction['spread'] == 'ill-defined':
                violations.append({
                    'item': 'spread',
                    'ideals': [str(ideal)],
                    'witnesses': reduction['spread_witnesses'],
                })

    report = utils.empty_report()
    report['check'] = 'decomposition'
    report['ring'] = str(R)
    report['closure'] = '{} with {}'.format(cl, sp)
    report['details']['spreads'] = spreads

    return utils.finish_report(report, violations)
