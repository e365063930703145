# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

from idealclose import core


def default_budget(**overrides):
    """
    Utility function that provides the default Budget data structure used
    by bounded searches (Frobenius exponents, Ratliff-Rush stages, words of
    a Delta system, Groebner monomial budget).

    Parameters
    ----------
    overrides : dict
        Any of e_max, n_max, word_max or monomial_budget.

    Returns
    -------
    dict : budget
        A Budget data structure.

    Raises
    ------
    ValueError
        If an unknown key is given.
        If a value is not a positive int.

    """
    budget = {
        'e_max': 6,
        'n_max': 8,
        'word_max': 4,
        'monomial_budget': 200000,
        'class': 'Budget',
    }

    for key, value in overrides.items():
        if key not in core.BUDGET_KEYS:
            raise ValueError('default_budget got an unknown key {}!'.format(key))

        if not core.is_positive_int(value):
            raise ValueError('budget {} must be a positive int!'.format(key))

        budget[key] = value

    return budget


def parse_budget(text):
    """
    Parses the command line budget syntax ``e_max=6,n_max=8``.

    Parameters
    ----------
    text : str
        Comma separated key=value pairs.

    Returns
    -------
    dict : budget
        A Budget data structure.

    Raises
    ------
    ValueError
        If a pair is malformed or a value is not an integer.
    """
    overrides = {}
    for piece in text.split(','):
        piece = piece.strip()
        if not piece:
            continue

        if '=' not in piece:
            raise ValueError('budget entries look like key=value, got {}'.format(piece))

        key, value = piece.split('=', 1)
        try:
            overrides[key.strip()] = int(value.strip())
        except ValueError:
            raise ValueError('budget {} expects an integer value'.format(key.strip()))

    return default_budget(**overrides)


def empty_report():
    """
    Utility function that provides an empty CheckReport data structure.

    Returns
    -------
    dict : report
        An empty CheckReport data structure.

    """
    return {
        'check': None,
        'ring': None,
        'closure': None,
        'status': None,
        'witnesses': [],
        'details': {},
        'class': 'CheckReport',
    }


def empty_reduction_report():
    """
    Utility function that provides an empty ReductionReport data structure.

    Returns
    -------
    dict : report
        An empty ReductionReport data structure.

    """
    return {
        'closure': None,
        'ring': None,
        'ideal': None,
        'minimal_reductions': [],
        'spread': None,
        'spread_witnesses': [],
        'core': None,
        'nakayama': None,
        'lemma': {},
        'class': 'ReductionReport',
    }


def finish_report(report, violations, unknowns=None):
    """
    Sets the status of a CheckReport from its violations and unknown
    verdicts. Unknown never counts as a pass.

    Parameters
    ----------
    report : dict
        The CheckReport to finish.
    violations : list
        Violation records; any entry makes the report fail.
    unknowns : list, default None
        Records of checks that could not be decided.

    Returns
    -------
    dict : report
        The same report with status and witnesses populated.
    """
    unknowns = unknowns or []
    report['witnesses'] = list(violations)

    if violations:
        report['status'] = 'fail'
    elif unknowns:
        report['status'] = 'unknown'
    else:
        report['status'] = 'pass'

    if unknowns:
        report['details']['unknown'] = list(unknowns)

    return report
