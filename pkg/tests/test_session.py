#!/usr/bin/env python
# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

import io
import os
import tempfile

import pytest

from idealclose import cli
from idealclose import core
from idealclose import utils
from idealclose import session as ics
from idealclose.io import from_jsonl


VOP = """
# square-zero maximal ideal
ring R = poly(F2; x, y | x^2, x*y, y^2)
ideal m = (x, y) in R
closure v = vop

compute v(m)
check semiprime v on lattice(R) expect violation
"""


def run(text, **kwargs):
    stream = io.StringIO()
    code, records = ics.run_session(ics.parse_session(text), stream=stream, **kwargs)
    return code, records, stream.getvalue()


def session_error(text):
    with pytest.raises(core.SessionError) as excinfo:
        ics.parse_session(text)

    return excinfo.value


def test_parse_declarations():
    session = ics.parse_session(VOP)

    assert(sorted(session.rings) == ['R'])
    assert(sorted(session.ideals) == ['m'])
    assert(sorted(session.closures) == ['v'])
    assert([s.kind for s in session.commands] == ['compute', 'check'])
    assert(session.commands[1].expect_violation)
    assert(session.rings['R'].characteristic == 2)


def test_canonical_text():
    session = ics.parse_session(
        'ring  P=poly( QQ ;x,y )  order lex\n'
        'ideal I=( -x^2 ,x*y+1 ) in P\n'
        'map f:P->P=[x->y,y->x]\n'
        'closure c=meet( radical,sat( ( x ) ) )\n')

    assert(str(session).splitlines() == [
        'ring P = poly(QQ; x, y) order lex',
        'ideal I = (-x^2, x*y + 1) in P',
        'map f : P -> P = [x -> y, y -> x]',
        'closure c = meet(radical, sat((x)))',
    ])
    assert(str(session.closures['c']) == 'meet(radical, sat((x)))')


def test_round_trip_of_bundled_sessions():
    for path in cli.bundled_sessions():
        with io.open(path, encoding='utf-8') as fh:
            session = ics.parse_session(fh.read())

        printed = str(session)
        again = ics.parse_session(printed)

        assert(again == session)
        assert(str(again) == printed)


def test_unknown_names_report_position():
    error = session_error('ring R = poly(F2; x)\nideal I = (x) in S\n')
    assert(error.line == 2)
    assert(error.column == 18)
    assert('unknown ring S' in str(error))

    error = session_error('ring R = poly(F2; x)\nideal I = (x) in R\ncheck axioms foo on [I]\n')
    assert((error.line, error.column) == (3, 14))


def test_syntax_errors():
    error = session_error('ring R = poly(F2; x)\nideal I = (x + ) in R\n')
    assert(error.line == 2)

    error = session_error('ring R = poly(F7x; x)\n')
    assert('unknown field' in str(error))

    error = session_error('frobnicate R\n')
    assert((error.line, error.column) == (1, 1))

    error = session_error('ring R = poly(F2; x)\nring R = poly(F3; x)\n')
    assert('duplicate' in str(error))

    error = session_error('ring R = poly(F2; x) order revlex\n')
    assert('monomial order' in str(error))


def test_arity_mismatch():
    base = 'ring R = poly(F2; x)\nideal I = (x) in R\n'

    assert('arity mismatch' in str(session_error(base + 'closure c = sat\n')))
    assert('arity mismatch' in str(session_error(base + 'closure c = radical(I)\n')))
    assert('arity mismatch' in str(session_error(base + 'closure c = hull(radical, radical)\n')))


def test_closure_names_cannot_shadow_builtins():
    error = session_error('closure radical = identity\n')
    assert('shadows' in str(error))


def test_lattice_checks_need_lattice_targets():
    error = session_error(
        'ring R = poly(F2; x | x^3)\nideal I = (x) in R\ncheck census radical on [I]\n')
    assert('lattice' in str(error))


def test_delta_expression():
    session = ics.parse_session(
        'ring R = poly(F2; x, y | x^2, x*y, y^2)\n'
        'ideal m = (x, y) in R\n'
        'closure d = delta[(x, y); 3]\n'
        'closure short = delta[(x, y); 1]\n'
        'compute d(m)\n'
        'compute short(m)\n')

    code, records, _ = run(str(session))
    assert(code == ics.EXIT_OK)
    assert(records[0]['witnesses'] == ['(1)'])

    # one factor leaves the system unexhausted
    assert(records[1]['status'] == 'unknown')
    assert(records[1]['details']['unknown'][0]['reason'] == core.REASON_BUDGET)


def test_expected_violation_exits_zero():
    code, records, table = run(VOP)

    assert(code == ics.EXIT_OK)
    assert(records[0]['status'] == 'info')
    assert(records[0]['witnesses'] == ['(1)'])
    assert(records[1]['status'] == 'expected-violation')
    assert(records[1]['command'] == 'check semiprime v on lattice(R) expect violation')
    assert('expected-violation' in table)


def test_missing_expectation_fails():
    code, records, _ = run(VOP.replace(' expect violation', ''))

    assert(code == ics.EXIT_FAILED)
    assert(records[1]['status'] == 'fail')
    assert(['(x, y)', '(x, y)'] in [w['ideals'] for w in records[1]['witnesses']])


def test_missing_violation_fails():
    code, records, _ = run(
        'ring R = poly(F2; x | x^3)\n'
        'check axioms radical on lattice(R) expect violation\n')

    assert(code == ics.EXIT_FAILED)
    assert(records[0]['status'] == 'missing-violation')


def test_unknown_is_fatal_only_when_strict():
    text = (
        'ring R = poly(F2; x, y | x^2*y)\n'
        'ideal I = (y^2) in R\n'
        'member x in frob(I)\n')
    budget = utils.default_budget(e_max=2)

    code, records, _ = run(text, budget=budget)
    assert(code == ics.EXIT_OK)
    assert(records[0]['status'] == 'unknown')

    code, _, _ = run(text, budget=budget, strict=True)
    assert(code == ics.EXIT_FAILED)


def test_unknown_expected_violation_is_unmet():
    text = (
        'ring R = poly(F2; x, y | x^2*y)\n'
        'ideal I = (y^2) in R\n'
        'check axioms frob on [I] expect violation\n')

    code, records, _ = run(text, budget=utils.default_budget(e_max=2))
    assert(code == ics.EXIT_FAILED)
    assert(records[0]['status'] == 'unknown')
    assert(records[0]['details']['expectation'] == 'unmet')


def test_runtime_error_exits_two():
    code, records, _ = run(
        'ring P = poly(QQ; x)\n'
        'ideal I = (x) in P\n'
        'check axioms frob on [I]\n'
        'compute radical(I)\n')

    assert(code == ics.EXIT_ERROR)
    assert(len(records) == 1)
    assert(records[0]['status'] == 'error')


def test_budget_abort_exits_three():
    budget = utils.default_budget(monomial_budget=1)
    code, records, _ = run(
        'ring P = poly(QQ; x, y, z)\n'
        'ideal I = (x^2 - y, x^3 - z) in P\n'
        'member y*z - x in radical(I)\n', budget=budget)

    assert(code == ics.EXIT_BUDGET)
    assert(records[-1]['status'] == 'error')


def test_json_records_are_deterministic():
    first = os.path.join(tempfile.gettempdir(), 'idealclose-first.jsonl')
    second = os.path.join(tempfile.gettempdir(), 'idealclose-second.jsonl')

    run(VOP, json_path=first)
    run(VOP, json_path=second)

    with io.open(first, encoding='utf-8') as a, io.open(second, encoding='utf-8') as b:
        text = a.read()
        assert(text == b.read())

    records = from_jsonl(text)
    assert([r['line'] for r in records] == [7, 8])
