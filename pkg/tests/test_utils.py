#!/usr/bin/env python
# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

import pytest

from idealclose import utils


def test_empty_report():
    keys = ['check', 'ring', 'closure', 'status', 'witnesses', 'details', 'class']
    empty = utils.empty_report()

    for key in keys:
        assert(key in empty)

    assert(empty['class'] == 'CheckReport')


def test_empty_reduction_report():
    empty = utils.empty_reduction_report()

    for key in ['minimal_reductions', 'spread', 'core', 'nakayama', 'lemma']:
        assert(key in empty)

    assert(empty['class'] == 'ReductionReport')


def test_default_budget():
    budget = utils.default_budget()

    assert(budget['e_max'] == 6)
    assert(budget['n_max'] == 8)
    assert(budget['word_max'] == 4)
    assert(utils.default_budget(n_max=3)['n_max'] == 3)

    with pytest.raises(ValueError):
        utils.default_budget(depth=3)

    with pytest.raises(ValueError):
        utils.default_budget(e_max=0)


def test_parse_budget():
    budget = utils.parse_budget('e_max=3, n_max=5')

    assert(budget['e_max'] == 3)
    assert(budget['n_max'] == 5)
    assert(budget['word_max'] == 4)
    assert(utils.parse_budget('') == utils.default_budget())

    with pytest.raises(ValueError):
        utils.parse_budget('e_max')

    with pytest.raises(ValueError) as excinfo:
        utils.parse_budget('e_max=six')
    assert('integer' in str(excinfo.value))


def test_finish_report():
    report = utils.finish_report(utils.empty_report(), [])
    assert(report['status'] == 'pass')

    report = utils.finish_report(utils.empty_report(), [], [{'reason': 'budget-exhausted'}])
    assert(report['status'] == 'unknown')
    assert(report['details']['unknown'] == [{'reason': 'budget-exhausted'}])

    report = utils.finish_report(utils.empty_report(), [{'ideals': ['(x)']}], [{'reason': 'x'}])
    assert(report['status'] == 'fail')
    assert(report['witnesses'] == [{'ideals': ['(x)']}])
