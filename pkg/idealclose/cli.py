# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Python native imports
import argparse
import glob
import io
import logging
import os
import sys

# Project imports
from idealclose import core
from idealclose import utils
from idealclose.session import EXIT_ERROR
from idealclose.session import EXIT_OK
from idealclose.session import parse_session
from idealclose.session import run_session
from idealclose.version import __version__

logger = logging.getLogger(__name__)


SESSIONS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'sessions')


def bundled_sessions():
    """
    Paths of the session files shipped with the package, sorted by name.
    """
    return sorted(glob.glob(os.path.join(SESSIONS_DIR, '*.ics')))


def run_file(path, budget=None, strict=False, json_path=None, stream=None):
    """
    Parses and runs one session file.

    Returns
    -------
    int : exit_code
    """
    with io.open(path, 'r', encoding='utf-8') as fh:
        text = fh.read()

    try:
        session = parse_session(text)
    except core.SessionError as e:
        print('{}: {}'.format(path, e), file=sys.stderr)
        return EXIT_ERROR

    code, _ = run_session(session, budget, strict, json_path, stream)
    return code


def selftest(budget=None, stream=None):
    """
    Runs every bundled session; all of them are expected to succeed.

    Returns
    -------
    int : exit_code
    """
    stream = stream if stream is not None else sys.stdout
    failures = []

    for path in bundled_sessions():
        name = os.path.basename(path)
        print('== {}'.format(name), file=stream)
        code = run_file(path, budget, stream=stream)
        if code != EXIT_OK:
            failures.append(name)

    if failures:
        print('selftest failed: {}'.format(', '.join(failures)), file=stream)
        return 1

    print('selftest passed', file=stream)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='idealclose',
        description='Exact experiments with closure operations on ideals.')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='INFO logging with -v, DEBUG with -vv')

    commands = parser.add_subparsers(dest='command')

    run = commands.add_parser('run', help='run a session file')
    run.add_argument('file', help='session file')
    run.add_argument('--budget', default=None,
                     help='budget overrides such as e_max=6,n_max=8')
    run.add_argument('--json', dest='json_path', default=None,
                     help='write one JSON record per command to this file')
    run.add_argument('--strict', action='store_true',
                     help='treat Unknown outcomes as failures')

    test = commands.add_parser('selftest', help='run the bundled sessions')
    test.add_argument('--budget', default=None)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG

    logging.basicConfig(level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s')

    if args.command is None:
        parser.print_help()
        return EXIT_ERROR

    try:
        budget = utils.parse_budget(args.budget) if args.budget else None
    except ValueError as e:
        parser.error(str(e))

    if args.command == 'selftest':
        return selftest(budget)

    return run_file(args.file, budget, args.strict, args.json_path)


if __name__ == '__main__':
    sys.exit(main())
