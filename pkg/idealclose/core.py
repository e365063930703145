# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

import logging

logger = logging.getLogger(__name__)


REASON_BUDGET = 'budget-exhausted'
REASON_NOT_IMPLEMENTED = 'not-implemented'

BUDGET_KEYS = ('e_max', 'n_max', 'word_max', 'monomial_budget')


class ResourceBudgetError(RuntimeError):
    """
    Raised when a computation exceeds a configured resource budget, for
    example the monomial budget of a Groebner basis run or the element cap
    of a finite ring.
    """


class ClosureUnavailable(RuntimeError):
    """
    Raised when a closure engine cannot produce generators for an ideal.
    The reason is either budget-exhausted or not-implemented.
    """

    def __init__(self, reason, message=None):
        if reason not in (REASON_BUDGET, REASON_NOT_IMPLEMENTED):
            raise ValueError('Unknown ClosureUnavailable reason {}'.format(reason))

        self.reason = reason
        super(ClosureUnavailable, self).__init__(message or reason)


class PolynomialSyntaxError(ValueError):
    """
    Syntax error in the textual polynomial grammar. The column is 1-based
    and relative to the text handed to the tokenizer.
    """

    def __init__(self, message, line=1, column=1):
        self.message = message
        self.line = line
        self.column = column
        super(PolynomialSyntaxError, self).__init__(
            '{}:{}: {}'.format(line, column, message))


class SessionError(ValueError):
    """
    Diagnostic raised while parsing or resolving a session file.
    """

    def __init__(self, message, line=0, column=0):
        self.message = message
        self.line = line
        self.column = column
        super(SessionError, self).__init__(
            'line {}, column {}: {}'.format(line, column, message))


def is_array_like(a):
    """
    Helper function to determine if a value is array like.

    Parameters
    ----------
    a : obj
        Object to test.

    Returns
    -------
    True or false respectively.
    """
    return isinstance(a, (list, tuple))


def is_positive_int(value):
    """
    Helper function to determine if a value is a strictly positive integer.
    Booleans are rejected even though they subclass int.
    """
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def is_budget_obj(obj):
    """
    Helper function to determine if an object is a Budget data structure.

    Parameters
    ----------
    obj : object
        Object to test.

    Returns
    -------
    True or false respectively.
    """
    return isinstance(obj, dict) and obj.get('class') == 'Budget'


def is_report_obj(obj):
    """
    Helper function to determine if an object is a CheckReport data
    structure.
    """
    return isinstance(obj, dict) and obj.get('class') == 'CheckReport'


def is_reduction_report_obj(obj):
    """
    Helper function to determine if an object is a ReductionReport data
    structure.
    """
    return isinstance(obj, dict) and obj.get('class') == 'ReductionReport'


def valid_budget(budget):
    """
    Validates a Budget data structure, filling in defaults when None is
    given.

    Parameters
    ----------
    budget : dict, None
        A Budget data structure or None.

    Returns
    -------
    dict : budget
        A validated Budget data structure.

    Raises
    ------
    ValueError
        If the budget is not a Budget data structure.
        If any budget value is not a positive integer.
    """
    from idealclose.utils import default_budget

    if budget is None:
        return default_budget()

    if not is_budget_obj(budget):
        raise ValueError('budget must be a Budget data structure!')

    for key in BUDGET_KEYS:
        if not is_positive_int(budget.get(key)):
            raise ValueError('budget {} must be a positive int!'.format(key))

    return budget


def budget_key(budget):
    """
    Hashable form of a budget, used to key closure caches.
    """
    return tuple(budget[key] for key in BUDGET_KEYS)


def is_prime(n):
    """
    Trial division primality test; only used for field characteristics
    below 2^16.
    """
    if n < 2:
        return False

    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1

    return True
