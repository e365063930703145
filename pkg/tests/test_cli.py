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
from idealclose import io as icio


def session_path(name):
    return os.path.join(cli.SESSIONS_DIR, name)


def test_bundled_sessions():
    names = [os.path.basename(p) for p in cli.bundled_sessions()]

    assert(names == sorted(names))
    assert('vop_semiprime.ics' in names)
    assert('bf_persistence.ics' in names)


def test_run_bundled_session(capsys):
    code = cli.main(['run', session_path('bf_persistence.ics')])
    out = capsys.readouterr().out

    assert(code == 0)
    assert('expected-violation' in out)


def test_run_writes_json():
    out = os.path.join(tempfile.gettempdir(), 'idealclose-cli.jsonl')
    code = cli.main(['run', session_path('vop_semiprime.ics'), '--json', out])

    assert(code == 0)
    records = icio.from_disk(out)
    assert(records[-1]['status'] == 'expected-violation')
    assert(records[-1]['check'] == 'semiprime')


def test_run_with_budget():
    code = cli.main(['run', session_path('preclosures.ics'), '--budget', 'e_max=2,n_max=3'])

    assert(code == 0)


def test_bad_budget_exits():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(['run', session_path('integral.ics'), '--budget', 'e_max=two'])
    assert(excinfo.value.code == 2)


def test_bad_session_file(capsys):
    path = os.path.join(tempfile.gettempdir(), 'idealclose-broken.ics')
    with io.open(path, 'w', encoding='utf-8') as fh:
        fh.write('ring R = poly(F2; x)\nideal I = (x) in S\n')

    code = cli.main(['run', path])

    assert(code == 2)
    assert('line 2, column 18' in capsys.readouterr().err)


def test_no_command():
    assert(cli.main([]) == 2)


def test_selftest(capsys):
    code = cli.main(['selftest'])
    out = capsys.readouterr().out

    assert(code == 0)
    assert('selftest passed' in out)
