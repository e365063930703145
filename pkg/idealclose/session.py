# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Python native imports
import logging
import re
import sys

# Project imports
from idealclose import core
from idealclose import io
from idealclose import lab
from idealclose import reductions
from idealclose import utils
from idealclose.closures import framework
from idealclose.closures import preclosures
from idealclose.closures import standard
from idealclose.finite import lattice_of
from idealclose.groebner import Ideal
from idealclose.groebner import RingMap
from idealclose.groebner import get_monomial_budget
from idealclose.groebner import set_monomial_budget
from idealclose.poly import ORDERS
from idealclose.poly import PolynomialParser
from idealclose.poly import PolynomialRing
from idealclose.poly import Token
from idealclose.poly import tokenize

logger = logging.getLogger(__name__)


FIELD_RE = re.compile(r'^F(\d+)$')

STATEMENTS = ('ring', 'ideal', 'map', 'closure', 'check', 'compute', 'member', 'report')

LATTICE_CHECKS = ('exhaustive', 'census', 'nakayama', 'specialpart', 'decomposition')
FAMILY_CHECKS = ('axioms', 'basics', 'semiprime', 'prdec')
CHECKS = LATTICE_CHECKS + FAMILY_CHECKS + ('persistence',)
REPORTS = ('spread', 'reductions', 'core')

OK_STATUSES = ('pass', 'expected-violation', 'info')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2
EXIT_BUDGET = 3


def _builtin_table():
    return {
        'identity': (0, [], standard.identity),
        'indiscrete': (0, [], standard.indiscrete),
        'radical': (0, [], standard.radical),
        'sat': (1, ['ideal'], standard.saturation),
        'satgens': (1, ['ideal'], standard.saturation_by_generators),
        'frob': (0, ['int'], standard.frobenius),
        'frobstage': (1, ['int'], standard.frobenius_stage),
        'intclosure': (0, [], standard.integral_closure),
        'bf': (0, ['ideal'], standard.basically_full),
        'vop': (0, [], standard.v_operation),
        'top': (0, [], standard.t_operation),
        'wop': (0, [], standard.w_operation),
        'modclosure': (1, ['ideal'], lambda K: framework.construct_from_module('ideal', K)),
        'quotient': (1, ['ideal'], lambda a: framework.construct_from_module('quotient', a)),
        'meet': (1, ['closure*'], lambda *cls: framework.construct_intersection(list(cls))),
        'union': (1, ['closure*'], lambda *cls: framework.construct_directed_union(list(cls))),
        'hull': (1, ['closure'], framework.idempotent_hull),
        'cf': (1, ['closure'], framework.finite_type_cf),
        'cw': (1, ['closure'], framework.construct_cw),
        'contract': (2, ['map', 'closure'], framework.construct_contraction),
        'colon': (1, ['ideal'], preclosures.colon_operation),
        'unmixed': (0, [], preclosures.unmixed_part),
        'ratliffrush': (0, ['int'], preclosures.ratliff_rush),
        'rrstage': (0, [], preclosures.ratliff_rush_stage),
        'zero': (0, [], preclosures.zero_map),
    }


BUILTINS = _builtin_table()

KEYWORDS = ('in', 'on', 'along', 'order', 'violation', 'strict')
OPENERS = ('(', '[', ',', '=', '->', '|', ';', '^', '*')


def join_tokens(tokens):
    """
    Canonical text of a token list: single spaces except around
    punctuation that binds tightly.
    """
    text = ''
    before = None
    previous = None

    for token in tokens:
        value = token.value
        if previous is not None:
            applied = previous.kind == 'IDENT' and previous.value not in KEYWORDS
            unary = previous.value in ('+', '-') and (before is None or before.value in OPENERS)
            tight = (
                unary
                or previous.value in ('(', '[', '^', '*')
                or value in (')', ']', ',', ';', '^', '*')
                or (value in ('(', '[') and (applied or previous.value in (')', ']')))
            )
            if not tight:
                text += ' '

        text += value
        before = previous
        previous = token

    return text


class Statement(object):
    """
    One parsed line of a session.
    """

    def __init__(self, kind, line, tokens, **payload):
        self.kind = kind
        self.line = line
        self.tokens = tokens
        self.text = join_tokens(tokens)
        self.payload = payload

    def __getattr__(self, name):
        payload = self.__dict__.get('payload', {})
        if name in payload:
            return payload[name]

        raise AttributeError(name)

    def __str__(self):
        return self.text


class Session(object):
    """
    Named rings, ideals, maps and closures plus the ordered commands of a
    session file.
    """

    def __init__(self):
        self.rings = {}
        self.ideals = {}
        self.maps = {}
        self.closures = {}
        self.statements = []

    @property
    def commands(self):
        return [s for s in self.statements if s.kind in ('check', 'compute', 'member', 'report')]

    def __str__(self):
        return format_session(self)

    def __eq__(self, other):
        if not isinstance(other, Session):
            return NotImplemented

        return (
            [s.text for s in self.statements] == [s.text for s in other.statements]
            and sorted(self.rings) == sorted(other.rings)
            and sorted(self.ideals) == sorted(other.ideals)
            and sorted(self.maps) == sorted(other.maps)
            and sorted(self.closures) == sorted(other.closures)
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result


def format_session(session):
    """
    Prints a session in canonical form; parsing the output yields an
    equivalent session.
    """
    if not session.statements:
        return ''

    return '\n'.join(s.text for s in session.statements) + '\n'


class _Cursor(object):

    def __init__(self, tokens, line):
        self.tokens = tokens
        self.line = line
        self.position = 0

    def peek(self, offset=0):
        index = self.position + offset
        if index < len(self.tokens):
            return self.tokens[index]

        return None

    def at_end(self):
        return self.position >= len(self.tokens)

    def error(self, message, token=None):
        token = token or self.peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else None
            column = last.column + len(last.value) if last else 1
            raise core.SessionError(message, self.line, column)

        raise core.SessionError(message, token.line, token.column)

    def next(self):
        token = self.peek()
        if token is None:
            self.error('unexpected end of line')

        self.position += 1
        return token

    def accept(self, value):
        token = self.peek()
        if token is not None and token.value == value:
            self.position += 1
            return True

        return False

    def expect(self, value):
        token = self.peek()
        if token is None or token.value != value:
            self.error('expected {!r}'.format(value), token)

        self.position += 1
        return token

    def ident(self, what='name'):
        token = self.peek()
        if token is None or token.kind != 'IDENT':
            self.error('expected {}'.format(what), token)

        self.position += 1
        return token

    def integer(self):
        token = self.peek()
        if token is None or token.kind != 'NUMBER' or '/' in token.value:
            self.error('expected an integer', token)

        self.position += 1
        return int(token.value)

    def finish(self):
        if not self.at_end():
            self.error('unexpected {!r}'.format(self.peek().value))


class _Parser(object):

    def __init__(self, session):
        self.session = session

    def _lookup(self, table, token, what):
        if token.value not in table:
            raise core.SessionError('unknown {} {}'.format(what, token.value), token.line, token.column)

        return table[token.value]

    def _declare(self, table, token, what):
        if token.value in table:
            raise core.SessionError(
                'duplicate {} name {}'.format(what, token.value), token.line, token.column)

    def _polynomial(self, cursor, ring):
        parser = PolynomialParser(ring, cursor.tokens, cursor.position)
        try:
            result = parser.parse()
        except core.PolynomialSyntaxError as e:
            raise core.SessionError(e.message, e.line, e.column)

        cursor.position = parser.position
        return result

    def _polynomials(self, cursor, ring, closing):
        polys = []
        if cursor.accept(closing):
            return polys

        while True:
            polys.append(self._polynomial(cursor, ring))
            if cursor.accept(closing):
                return polys

            cursor.expect(',')

    def statement(self, tokens, line):
        cursor = _Cursor(tokens, line)
        keyword = cursor.next()

        if keyword.value not in STATEMENTS:
            cursor.error('unknown statement {!r}'.format(keyword.value), keyword)

        handler = getattr(self, '_' + keyword.value)
        statement = handler(cursor)
        self.session.statements.append(statement)
        return statement

    def _ring(self, cursor):
        name = cursor.ident('ring name')
        self._declare(self.session.rings, name, 'ring')
        cursor.expect('=')
        cursor.expect('poly')
        cursor.expect('(')

        field = cursor.ident('field')
        if field.value == 'QQ':
            characteristic = 0
        else:
            match = FIELD_RE.match(field.value)
            if not match:
                cursor.error('unknown field {}'.format(field.value), field)

            characteristic = int(match.group(1))

        cursor.expect(';')
        variables = [cursor.ident('variable').value]
        while cursor.accept(','):
            variables.append(cursor.ident('variable').value)

        try:
            cover = PolynomialRing(variables, characteristic)
        except ValueError as e:
            cursor.error(str(e), field)

        relations = []
        if cursor.accept('|'):
            relations = self._polynomials(cursor, cover, ')')
        else:
            cursor.expect(')')

        order = 'grevlex'
        if cursor.accept('order'):
            token = cursor.ident('monomial order')
            if token.value not in ORDERS:
                cursor.error('unknown monomial order {}'.format(token.value), token)

            order = token.value

        cursor.finish()

        try:
            ring = PolynomialRing(variables, characteristic, order, relations)
        except (ValueError, core.ResourceBudgetError) as e:
            cursor.error(str(e), name)

        self.session.rings[name.value] = ring
        return Statement('ring', cursor.line, cursor.tokens, name=name.value)

    def _ideal(self, cursor):
        name = cursor.ident('ideal name')
        self._declare(self.session.ideals, name, 'ideal')
        cursor.expect('=')

        tokens = cursor.tokens
        if len(tokens) < 4 or tokens[-2].value != 'in' or tokens[-1].kind != 'IDENT':
            cursor.error('ideal statements end with "in RING"')

        ring = self._lookup(self.session.rings, tokens[-1], 'ring')
        body = _Cursor(tokens[:-2], cursor.line)
        body.position = cursor.position
        body.expect('(')
        gens = self._polynomials(body, ring, ')')
        body.finish()

        self.session.ideals[name.value] = Ideal(ring, gens)
        return Statement('ideal', cursor.line, tokens, name=name.value)

    def _map(self, cursor):
        name = cursor.ident('map name')
        self._declare(self.session.maps, name, 'map')
        cursor.expect(':')
        source = self._lookup(self.session.rings, cursor.ident('ring'), 'ring')
        cursor.expect('->')
        target = self._lookup(self.session.rings, cursor.ident('ring'), 'ring')
        cursor.expect('=')
        cursor.expect('[')

        images = {}
        if not cursor.accept(']'):
            while True:
                variable = cursor.ident('variable')
                if variable.value not in source.variables:
                    cursor.error('{} is not a variable of the source'.format(variable.value), variable)

                cursor.expect('->')
                images[variable.value] = self._polynomial(cursor, target)
                if cursor.accept(']'):
                    break

                cursor.expect(',')

        cursor.finish()

        try:
            ring_map = RingMap(source, target, images)
        except ValueError as e:
            cursor.error(str(e), name)

        self.session.maps[name.value] = ring_map
        return Statement('map', cursor.line, cursor.tokens, name=name.value)

    def _closure(self, cursor):
        name = cursor.ident('closure name')
        self._declare(self.session.closures, name, 'closure')
        if name.value in BUILTINS or name.value == 'delta':
            cursor.error('closure name {} shadows a built-in'.format(name.value), name)

        cursor.expect('=')
        operation = self.closure_expression(cursor)
        cursor.finish()

        self.session.closures[name.value] = operation
        return Statement('closure', cursor.line, cursor.tokens, name=name.value)

    def _ideal_argument(self, cursor):
        token = cursor.peek()
        if token is not None and token.value == '(':
            start = cursor.position
            depth = 0
            while True:
                t = cursor.next()
                if t.value == '(':
                    depth += 1
                elif t.value == ')':
                    depth -= 1
                    if depth == 0:
                        break

            literal = cursor.tokens[start + 1:cursor.position - 1]
            return _IdealLiteral(literal, cursor.line)

        return self._lookup(self.session.ideals, cursor.ident('ideal'), 'ideal')

    def _argument(self, cursor, kind):
        kind = kind.rstrip('*')
        if kind == 'ideal':
            return self._ideal_argument(cursor)

        if kind == 'int':
            return cursor.integer()

        if kind == 'map':
            return self._lookup(self.session.maps, cursor.ident('map'), 'map')

        return self.closure_expression(cursor)

    def closure_expression(self, cursor):
        """
        Parses a closure expression and returns the ClosureOperation, named
        by its canonical text.
        """
        start = cursor.position
        head = cursor.ident('closure')

        if head.value == 'delta':
            operation = self._delta(cursor)
        elif head.value in self.session.closures:
            operation = self.session.closures[head.value]
        elif head.value in BUILTINS:
            operation = self._builtin(cursor, head)
        else:
            cursor.error('unknown closure {}'.format(head.value), head)

        if head.value not in self.session.closures:
            operation.name = join_tokens(cursor.tokens[start:cursor.position])

        return operation

    def _builtin(self, cursor, head):
        required, kinds, builder = BUILTINS[head.value]
        args = []

        if cursor.accept('('):
            if not cursor.accept(')'):
                while True:
                    if not kinds or (len(args) >= len(kinds) and not kinds[-1].endswith('*')):
                        cursor.error('arity mismatch for {}'.format(head.value), head)

                    kind = kinds[min(len(args), len(kinds) - 1)]
                    args.append(self._argument(cursor, kind))
                    if cursor.accept(')'):
                        break

                    cursor.expect(',')

        if len(args) < required:
            cursor.error('arity mismatch for {}: expected at least {} arguments'.format(
                head.value, required), head)

        return builder(*args)

    def _delta(self, cursor):
        cursor.expect('[')
        gens = [self._ideal_argument(cursor)]
        while cursor.accept(','):
            gens.append(self._ideal_argument(cursor))

        word_max = None
        if cursor.accept(';'):
            word_max = cursor.integer()

        cursor.expect(']')
        return standard.delta(gens, word_max)

    def _target(self, cursor):
        if cursor.accept('lattice'):
            cursor.expect('(')
            ring = self._lookup(self.session.rings, cursor.ident('ring'), 'ring')
            cursor.expect(')')
            return ('lattice', ring)

        cursor.expect('[')
        family = [self._lookup(self.session.ideals, cursor.ident('ideal'), 'ideal')]
        while cursor.accept(','):
            family.append(self._lookup(self.session.ideals, cursor.ident('ideal'), 'ideal'))

        cursor.expect(']')
        return ('family', family)

    def _check(self, cursor):
        kind = cursor.ident('check kind')
        if kind.value not in CHECKS:
            cursor.error('unknown check {}'.format(kind.value), kind)

        operation = self.closure_expression(cursor)
        ring_map = None
        target = None

        if kind.value == 'persistence':
            cursor.expect('along')
            ring_map = self._lookup(self.session.maps, cursor.ident('map'), 'map')
            if cursor.accept('on'):
                target = self._target(cursor)
        else:
            cursor.expect('on')
            target = self._target(cursor)
            if kind.value in LATTICE_CHECKS and target[0] != 'lattice':
                cursor.error('{} checks run on lattice(RING)'.format(kind.value), kind)

        expect = False
        strict = False
        while not cursor.at_end():
            if cursor.accept('expect'):
                cursor.expect('violation')
                expect = True
            elif cursor.accept('strict'):
                strict = True
            else:
                cursor.error('unexpected {!r}'.format(cursor.peek().value))

        return Statement(
            'check', cursor.line, cursor.tokens, check=kind.value, closure=operation,
            target=target, ring_map=ring_map, expect_violation=expect, strict=strict)

    def _trailing_ideal(self, cursor):
        tokens = cursor.tokens
        if len(tokens) < 4 or tokens[-3].value != '(' or tokens[-1].value != ')' or tokens[-2].kind != 'IDENT':
            cursor.error('expected a closure applied to a named ideal, like c(I)')

        return self._lookup(self.session.ideals, tokens[-2], 'ideal')

    def _compute(self, cursor):
        ideal = self._trailing_ideal(cursor)
        body = _Cursor(cursor.tokens[:-3], cursor.line)
        body.position = cursor.position
        operation = self.closure_expression(body)
        body.finish()

        return Statement('compute', cursor.line, cursor.tokens, closure=operation, ideal=ideal)

    def _member(self, cursor):
        ideal = self._trailing_ideal(cursor)
        body = _Cursor(cursor.tokens[:-3], cursor.line)
        body.position = cursor.position
        element = self._polynomial(body, ideal.ring)
        body.expect('in')
        operation = self.closure_expression(body)
        body.finish()

        return Statement(
            'member', cursor.line, cursor.tokens, closure=operation, ideal=ideal, element=element)

    def _report(self, cursor):
        kind = cursor.ident('report kind')
        if kind.value not in REPORTS:
            cursor.error('unknown report {}'.format(kind.value), kind)

        tokens = cursor.tokens
        if len(tokens) < 6 or tokens[-2].value != 'in':
            cursor.error('report statements end with "IDEAL in RING"')

        ring = self._lookup(self.session.rings, tokens[-1], 'ring')
        ideal = self._lookup(self.session.ideals, tokens[-3], 'ideal')
        if ideal.ring != ring:
            cursor.error('ideal {} is not an ideal of {}'.format(tokens[-3].value, tokens[-1].value), tokens[-3])

        body = _Cursor(tokens[:-3], cursor.line)
        body.position = cursor.position
        operation = self.closure_expression(body)
        body.finish()

        return Statement(
            'report', cursor.line, tokens, report=kind.value, closure=operation, ideal=ideal, ring=ring)


class _IdealLiteral(object):
    """
    An ideal written inline, bound to the ring of each input when used.
    """

    def __init__(self, tokens, line):
        self.tokens = tokens
        self.line = line
        self.name = '({})'.format(join_tokens(tokens))

    def __call__(self, ring):
        cursor = _Cursor(list(self.tokens) + [_closing(self.tokens, self.line)], self.line)
        return Ideal(ring, _Parser(None)._polynomials(cursor, ring, ')'))

    def __str__(self):
        return self.name


def _closing(tokens, line):
    column = tokens[-1].column + len(tokens[-1].value) if tokens else 1
    return Token('OP', ')', line, column)


def parse_session(text):
    """
    Parses session text into a Session.

    Parameters
    ----------
    text : str
        One statement per line; '#' starts a comment.

    Returns
    -------
    Session : session

    Raises
    ------
    SessionError
        On a syntax error, an unknown name or an arity mismatch, with the
        line and column of the offending token.
    """
    session = Session()
    parser = _Parser(session)

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0]
        try:
            tokens = tokenize(content, line=number)
        except core.PolynomialSyntaxError as e:
            raise core.SessionError(e.message, e.line, e.column)

        if not tokens:
            continue

        parser.statement(tokens, number)

    logger.debug('parsed session with %d statements', len(session.statements))
    return session


def _record(statement, report):
    record = dict(report)
    record['line'] = statement.line
    record['command'] = statement.text
    return record


def _family(target):
    kind, value = target
    if kind == 'lattice':
        return lattice_of(value).ideals()

    return value


def _run_check(statement, budget):
    cl = statement.closure
    kind = statement.check

    if kind == 'persistence':
        family = _family(statement.target) if statement.target else None
        return lab.persistence_check(statement.ring_map, cl, family, budget)

    if kind in LATTICE_CHECKS:
        lattice = lattice_of(statement.target[1])
        if kind == 'exhaustive':
            return lab.exhaustive_check(lattice, cl, budget)

        if kind == 'census':
            return lab.closed_census(lattice, cl, budget)

        if kind == 'nakayama':
            return reductions.nakayama_check(lattice, cl, budget)

        if kind == 'specialpart':
            return reductions.special_part_axioms(reductions.frobenius_special_part(), lattice, cl, budget)

        return reductions.special_decomposition_check(
            lattice, cl, reductions.frobenius_special_part(), budget)

    family = _family(statement.target)
    if kind == 'axioms':
        return framework.check_axioms(cl, family, budget)

    if kind == 'basics':
        return framework.check_basics(cl, family, budget)

    if kind == 'semiprime':
        return framework.semiprime_check(cl, family, budget)

    lattice = lattice_of(statement.target[1]) if statement.target[0] == 'lattice' else None
    return framework.prdec_check(cl, family, lattice, budget)


def _info(statement, check, ring, witnesses, status='info'):
    report = utils.empty_report()
    report['check'] = check
    report['ring'] = str(ring)
    report['closure'] = str(statement.closure)
    report['status'] = status
    report['witnesses'] = witnesses
    return report


def execute(statement, budget, strict=False):
    """
    Executes one command and returns its record.
    """
    logger.info('line %d: %s', statement.line, statement.text)

    if statement.kind == 'check':
        report = _run_check(statement, budget)
        status = report['status']
        report['strict'] = bool(strict or statement.strict)
        if statement.expect_violation:
            if status == 'fail':
                status = 'expected-violation'
            elif status == 'pass':
                status = 'missing-violation'
            else:
                # an undecided check cannot confirm the expected violation
                logger.warning('line %d: expected violation left unknown', statement.line)
                report['details']['expectation'] = 'unmet'
                report['strict'] = True

        report['status'] = status
        return _record(statement, report)

    if statement.kind == 'compute':
        try:
            closed = statement.closure.close(statement.ideal, budget)
        except core.ClosureUnavailable as e:
            report = _info(statement, 'compute', statement.ideal.ring, [], 'unknown')
            report['details']['unknown'] = [{'ideal': str(statement.ideal), 'reason': e.reason}]
            report['strict'] = bool(strict)
            return _record(statement, report)

        return _record(statement, _info(statement, 'compute', statement.ideal.ring, [str(closed)]))

    if statement.kind == 'member':
        verdict = statement.closure.contains(statement.ideal, statement.element, budget)
        report = _info(statement, 'member', statement.ideal.ring, [str(verdict)])
        if verdict.is_unknown:
            report['status'] = 'unknown'
            report['strict'] = bool(strict)

        return _record(statement, report)

    reduction = reductions.spread_and_core(
        lattice_of(statement.ring), statement.closure, statement.ideal, budget)
    if statement.report == 'spread':
        witnesses = [str(reduction['spread'])]
    elif statement.report == 'core':
        witnesses = [reduction['core']]
    else:
        witnesses = [r['ideal'] for r in reduction['minimal_reductions']]

    report = _info(statement, statement.report, statement.ring, witnesses)
    report['details']['reduction'] = reduction
    return _record(statement, report)


def _is_ok(record):
    if record['status'] in OK_STATUSES:
        return True

    return record['status'] == 'unknown' and not record.get('strict')


def summary_table(records):
    """
    Human readable table of command outcomes.
    """
    lines = ['{:<6} {:<20} {:<14} {}'.format('line', 'status', 'check', 'closure')]
    for record in records:
        lines.append('{:<6} {:<20} {:<14} {}'.format(
            record['line'], record['status'], record['check'], record['closure']))

    return '\n'.join(lines)


def run_session(session, budget=None, strict=False, json_path=None, stream=None):
    """
    Executes the commands of a session in order.

    Parameters
    ----------
    session : Session
    budget : dict, default None
        Budget data structure; its monomial_budget sets the Groebner
        guardrail for the run.
    strict : bool, default False
        Treat every Unknown outcome as a failure.
    json_path : str, default None
        Write the records as JSON lines to this file.
    stream : file, default None
        Where the summary table goes; defaults to stdout.

    Returns
    -------
    tuple : (exit_code, records)
        0 when every command is fine, 1 when a check failed, 2 on a runtime
        error and 3 when a resource budget aborted the run.
    """
    budget = core.valid_budget(budget)
    stream = stream if stream is not None else sys.stdout
    previous = get_monomial_budget()
    set_monomial_budget(budget['monomial_budget'])

    records = []
    code = EXIT_OK

    try:
        for statement in session.commands:
            try:
                record = execute(statement, budget, strict)
            except core.ResourceBudgetError as e:
                logger.warning('line %d aborted: %s', statement.line, e)
                report = _info(statement, statement.kind, '', [str(e)], 'error')
                records.append(_record(statement, report))
                code = EXIT_BUDGET
                break
            except (ValueError, core.ClosureUnavailable) as e:
                logger.warning('line %d failed: %s', statement.line, e)
                report = _info(statement, statement.kind, '', [str(e)], 'error')
                records.append(_record(statement, report))
                code = EXIT_ERROR
                break

            records.append(record)
            if not _is_ok(record):
                code = EXIT_FAILED
    finally:
        set_monomial_budget(previous)

    if json_path is not None:
        with open(json_path, 'w') as out:
            out.write(io.to_jsonl(records))

    if records:
        print(summary_table(records), file=stream)

    return code, records
