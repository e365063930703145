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
from idealclose import utils


def test_is_array_like_invalid():
    assert(core.is_array_like(1) == False)
    assert(core.is_array_like('adf') == False)
    assert(core.is_array_like({'a': 1}) == False)
    assert(core.is_array_like(set([1, 2, 3])) == False)


def test_is_array_like_valid():
    assert(core.is_array_like([1, ]) == True)
    assert(core.is_array_like((1, 2,)) == True)


def test_is_positive_int():
    assert(core.is_positive_int(3))
    assert(not core.is_positive_int(0))
    assert(not core.is_positive_int(True))
    assert(not core.is_positive_int(2.0))
    assert(not core.is_positive_int(np.float64(2)))


def test_report_objects():
    assert(core.is_report_obj(utils.empty_report()))
    assert(not core.is_report_obj(utils.empty_reduction_report()))
    assert(core.is_reduction_report_obj(utils.empty_reduction_report()))
    assert(core.is_budget_obj(utils.default_budget()))
    assert(not core.is_budget_obj({'e_max': 6}))


def test_valid_budget():
    assert(core.valid_budget(None) == utils.default_budget())

    budget = utils.default_budget(e_max=2)
    assert(core.valid_budget(budget) is budget)

    with pytest.raises(ValueError):
        core.valid_budget({'e_max': 6})

    broken = utils.default_budget()
    broken['n_max'] = 0
    with pytest.raises(ValueError):
        core.valid_budget(broken)


def test_budget_key():
    assert(core.budget_key(utils.default_budget()) == (6, 8, 4, 200000))


def test_closure_unavailable_reasons():
    error = core.ClosureUnavailable(core.REASON_BUDGET)
    assert(error.reason == 'budget-exhausted')
    assert(str(error) == 'budget-exhausted')

    with pytest.raises(ValueError):
        core.ClosureUnavailable('tired')


def test_error_positions():
    error = core.PolynomialSyntaxError('unexpected token', 2, 7)
    assert(str(error) == '2:7: unexpected token')

    error = core.SessionError('unknown ring S', 4, 13)
    assert((error.line, error.column) == (4, 13))
    assert('line 4, column 13' in str(error))


def test_is_prime():
    assert([n for n in range(20) if core.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19])
