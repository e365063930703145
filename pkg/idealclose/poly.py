# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Python native imports
import collections
import logging
import re
from fractions import Fraction

# Project imports
from idealclose import core

logger = logging.getLogger(__name__)


IDENTIFIER_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')

TOKEN_RE = re.compile(r'''
    (?P<NUMBER>\d+(?:/\d+)?)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<ARROW>->)
  | (?P<OP>[\^\*\+\-\(\)\[\],;|=:])
  | (?P<SKIP>[ \t\r]+)
  | (?P<MISMATCH>.)
''', re.VERBOSE)

Token = collections.namedtuple('Token', ['kind', 'value', 'line', 'column'])

ORDERS = ('grevlex', 'lex')


class PrimeField(object):
    """
    The prime field F_p with elements stored as ints in [0, p).
    """

    def __init__(self, p):
        if not core.is_positive_int(p) or p >= 2 ** 16 or not core.is_prime(p):
            raise ValueError('PrimeField expects a prime p < 2^16, got {}'.format(p))

        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def convert(self, value):
        if isinstance(value, Fraction):
            denominator = value.denominator % self.p
            if denominator == 0:
                raise ZeroDivisionError(
                    '{} has no image in F{}'.format(value, self.p))

            return value.numerator * pow(denominator, self.p - 2, self.p) % self.p

        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError('0 has no inverse in F{}'.format(self.p))

        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n):
        return pow(a, n, self.p)

    def is_negative(self, a):
        return False

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('F', self.p))

    def __str__(self):
        return 'F{}'.format(self.p)

    __repr__ = __str__


class RationalField(object):
    """
    The rational numbers with exact Fraction arithmetic.
    """

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, value):
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError('0 has no inverse in QQ')

        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def power(self, a, n):
        return a ** n

    def is_negative(self, a):
        return a < 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash('QQ')

    def __str__(self):
        return 'QQ'

    __repr__ = __str__


def make_field(characteristic):
    """
    Returns QQ for characteristic 0, otherwise F_p.
    """
    if characteristic == 0:
        return RationalField()

    return PrimeField(characteristic)


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a, b):
    """
    True when the monomial a divides the monomial b.
    """
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def lex_key(exps):
    return tuple(exps)


def grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


def monomial_key(order):
    """
    Returns the sort key realising a monomial order. Larger keys are larger
    monomials.

    Parameters
    ----------
    order : str, tuple
        'grevlex', 'lex' or ('block', k, base) where the first k variables
        form an elimination block compared by grevlex and ties are broken by
        the base order on the remaining variables.

    Returns
    -------
    function : key

    Raises
    ------
    ValueError
        If the order is not recognized.
    """
    if order == 'lex':
        return lex_key

    if order == 'grevlex':
        return grevlex_key

    if isinstance(order, tuple) and len(order) == 3 and order[0] == 'block':
        k = order[1]
        rest = monomial_key(order[2])
        return lambda exps: (grevlex_key(exps[:k]), rest(exps[k:]))

    raise ValueError('Unknown monomial order {}'.format(order))


def order_name(order):
    if isinstance(order, tuple):
        return 'block({},{})'.format(order[1], order_name(order[2]))

    return order


def tokenize(text, line=1, column=1):
    """
    Splits text into Token tuples. The grammar covers polynomials and the
    session language; whitespace is dropped.

    Parameters
    ----------
    text : str
        The text to split.
    line : int, default 1
        Line number recorded on every token.
    column : int, default 1
        Column of the first character of text.

    Returns
    -------
    list : tokens

    Raises
    ------
    PolynomialSyntaxError
        On a character outside the grammar.
    """
    tokens = []
    for match in TOKEN_RE.finditer(text):
        kind = match.lastgroup
        value = match.group()
        col = column + match.start()

        if kind == 'SKIP':
            continue

        if kind == 'MISMATCH':
            raise core.PolynomialSyntaxError(
                'unexpected character {!r}'.format(value), line, col)

        tokens.append(Token(kind, value, line, col))

    return tokens


class PolynomialParser(object):
    """
    Recursive descent parser for polynomials such as ``3/2*x^2*y - y + 1``.

    The parser works on a token list so that the session language can embed
    polynomials. Parsing stops at the first token that cannot continue the
    expression; implicit multiplication only applies to numbers, ring
    variables and parenthesized groups.
    """

    def __init__(self, ring, tokens, position=0):
        self.ring = ring
        self.tokens = tokens
        self.position = position

    def _peek(self):
        if self.position < len(self.tokens):
            return self.tokens[self.position]

        return None

    def _error(self, message, token=None):
        token = token or self._peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else Token('EOF', '', 1, 1)
            raise core.PolynomialSyntaxError(
                message, last.line, last.column + len(last.value))

        raise core.PolynomialSyntaxError(message, token.line, token.column)

    def _advance(self):
        token = self._peek()
        self.position += 1
        return token

    def parse(self):
        """
        Parses one polynomial starting at the current position.

        Returns
        -------
        Polynomial : poly
        """
        token = self._peek()
        negate = False

        if token is not None and token.value in ('+', '-'):
            negate = token.value == '-'
            self._advance()

        result = self._term()
        if negate:
            result = -result

        while True:
            token = self._peek()
            if token is None or token.value not in ('+', '-'):
                break

            self._advance()
            term = self._term()
            result = result + term if token.value == '+' else result - term

        return result

    def _starts_factor(self, token):
        if token is None:
            return False

        if token.kind == 'NUMBER' or token.value == '(':
            return True

        return token.kind == 'IDENT' and token.value in self.ring.variables

    def _term(self):
        result = self._power()

        while True:
            token = self._peek()
            if token is not None and token.value == '*':
                self._advance()
                result = result * self._power()
            elif self._starts_factor(token):
                result = result * self._power()
            else:
                break

        return result

    def _power(self):
        base = self._atom()
        token = self._peek()

        if token is not None and token.value == '^':
            self._advance()
            exponent = self._advance()
            if exponent is None or exponent.kind != 'NUMBER' or '/' in exponent.value:
                self._error('expected a non-negative integer exponent', exponent)

            base = base ** int(exponent.value)

        return base

    def _atom(self):
        token = self._advance()

        if token is None:
            self._error('unexpected end of polynomial')

        if token.kind == 'NUMBER':
            try:
                return self.ring.constant(Fraction(token.value))
            except ZeroDivisionError as e:
                self._error(str(e), token)

        if token.kind == 'IDENT':
            if token.value not in self.ring.variables:
                self._error('unknown variable {}'.format(token.value), token)

            return self.ring.variable(token.value)

        if token.value == '(':
            inner = self.parse()
            closing = self._advance()
            if closing is None or closing.value != ')':
                self._error('expected )', closing)

            return inner

        self._error('unexpected token {!r}'.format(token.value), token)


def parse_polynomial(ring, text):
    """
    Parses a complete polynomial string over the ring.

    Parameters
    ----------
    ring : PolynomialRing
        The ring the polynomial lives in.
    text : str
        Polynomial text, e.g. ``x^2*y - 3/2*y + 1``.

    Returns
    -------
    Polynomial : poly

    Raises
    ------
    PolynomialSyntaxError
        On malformed text or unknown variables.
    """
    tokens = tokenize(text)
    if not tokens:
        raise core.PolynomialSyntaxError('empty polynomial', 1, 1)

    parser = PolynomialParser(ring, tokens)
    result = parser.parse()

    if parser.position != len(tokens):
        token = tokens[parser.position]
        raise core.PolynomialSyntaxError(
            'unexpected token {!r}'.format(token.value), token.line, token.column)

    return result


def reduce_terms(terms, basis, ring, meter=None):
    """
    Full reduction of a term dictionary by a list of polynomials with
    cached leading data. The result has no term divisible by a leading
    monomial of the basis.

    Parameters
    ----------
    terms : dict
        Exponent tuple to coefficient.
    basis : list
        Polynomials of the cover ring.
    ring : PolynomialRing
        Supplies the monomial order and coefficient field.
    meter : object, default None
        Optional object with a spend(n) method charged per term touched.

    Returns
    -------
    dict : remainder
    """
    key = ring.key
    field = ring.field
    pending = dict(terms)
    remainder = {}

    while pending:
        lead = max(pending, key=key)
        coefficient = pending.pop(lead)

        for g in basis:
            if not monomial_divides(g.lm, lead):
                continue

            shift = monomial_div(lead, g.lm)
            factor = field.div(coefficient, g.lc)

            if meter is not None:
                meter.spend(len(g.terms))

            for exps, c in g.terms.items():
                if exps == g.lm:
                    continue

                target = monomial_mul(exps, shift)
                value = field.sub(pending.get(target, field.zero), field.mul(factor, c))

                if value:
                    pending[target] = value
                else:
                    pending.pop(target, None)

            break
        else:
            remainder[lead] = coefficient

    return remainder


class PolynomialRing(object):
    """
    A polynomial ring over QQ or F_p, optionally modulo an ideal of
    relations. Quotient elements are kept in normal form with respect to
    the reduced Groebner basis of the relations in the free cover ring.
    """

    def __init__(self, variables, characteristic=0, order='grevlex', relations=None):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(',') if v.strip()]

        if not core.is_array_like(variables):
            raise ValueError('PolynomialRing expects a list of variable names!')

        variables = tuple(variables)
        for name in variables:
            if not IDENTIFIER_RE.match(name):
                raise ValueError('{} is not a valid variable name'.format(name))

        if len(set(variables)) != len(variables):
            raise ValueError('PolynomialRing variable names must be distinct!')

        monomial_key(order)

        self.variables = variables
        self.nvars = len(variables)
        self.field = make_field(characteristic)
        self.characteristic = characteristic
        self.order = order
        self.key = monomial_key(order)
        self.quotient_basis = ()

        if relations:
            self.cover = PolynomialRing(variables, characteristic, order)
            self._set_relations(relations)
        else:
            self.cover = self

        self._hash = None

    def _set_relations(self, relations):
        from idealclose.groebner import buchberger

        polys = [self.cover.coerce(r) for r in relations]
        basis = buchberger(polys, self.cover)

        if len(basis) == 1 and basis[0].is_constant():
            raise ValueError('PolynomialRing relations generate the unit ideal!')

        self.quotient_basis = tuple(basis)
        logger.debug('quotient basis for %s: %s', self, [str(b) for b in basis])

    @property
    def is_free(self):
        return not self.quotient_basis

    @property
    def zero_exponents(self):
        return (0,) * self.nvars

    def description(self):
        """
        Canonical tuple identifying the ring: characteristic, variables,
        order and quotient basis.
        """
        return (
            self.characteristic,
            self.variables,
            order_name(self.order),
            tuple(b.sorted_terms() for b in self.quotient_basis),
        )

    def __eq__(self, other):
        if self is other:
            return True

        return isinstance(other, PolynomialRing) and self.description() == other.description()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.description())

        return self._hash

    def __str__(self):
        head = '{}[{}]'.format(self.field, ', '.join(self.variables))
        if self.quotient_basis:
            head += '/({})'.format(', '.join(str(b) for b in self.quotient_basis))

        return head

    __repr__ = __str__

    def from_terms(self, terms, normalized=False):
        return Polynomial(self, terms, normalized=normalized)

    def from_exponents(self, exps, coefficient=1):
        return Polynomial(self, {tuple(exps): coefficient})

    def constant(self, value):
        return Polynomial(self, {self.zero_exponents: value})

    def zero(self):
        return Polynomial(self, {}, normalized=True)

    def one(self):
        return self.constant(1)

    def variable(self, name):
        """
        Returns the variable with the given name or index.
        """
        if isinstance(name, int):
            index = name
        else:
            if name not in self.variables:
                raise ValueError('{} is not a variable of {}'.format(name, self))

            index = self.variables.index(name)

        exps = [0] * self.nvars
        exps[index] = 1
        return self.from_exponents(exps)

    def gens(self):
        return [self.variable(i) for i in range(self.nvars)]

    def parse(self, text):
        return parse_polynomial(self, text)

    def coerce(self, value):
        """
        Converts strings, numbers, and polynomials over a ring with the same
        variables and characteristic into this ring.
        """
        if isinstance(value, Polynomial):
            if value.ring is self:
                return value

            other = value.ring
            if other.variables != self.variables or other.characteristic != self.characteristic:
                raise ValueError('Cannot coerce {} from {} into {}'.format(value, other, self))

            return Polynomial(self, value.terms)

        if isinstance(value, str):
            return self.parse(value)

        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return self.constant(value)

        raise ValueError('Cannot coerce {!r} into {}'.format(value, self))

    def from_cover(self, f):
        """
        Image of a cover ring polynomial in this ring.
        """
        if f.ring != self.cover:
            raise ValueError('from_cover expects a polynomial of {}'.format(self.cover))

        return Polynomial(self, f.terms)

    def normal_form(self, terms, meter=None):
        if not self.quotient_basis:
            return terms

        return reduce_terms(terms, self.quotient_basis, self.cover, meter)

    def extension(self, names, order=None):
        """
        Free ring with fresh variables prepended to the cover variables and
        an elimination order for the fresh block.

        Parameters
        ----------
        names : list
            Names for the new variables; clashes with existing names are
            resolved by appending digits.
        order : tuple, str, default None
            Defaults to the block order eliminating the new variables.

        Returns
        -------
        PolynomialRing : extended
        """
        fresh = []
        for base in names:
            name = base
            suffix = 0
            while name in self.variables or name in fresh:
                name = '{}{}'.format(base, suffix)
                suffix += 1

            fresh.append(name)

        if order is None:
            order = ('block', len(fresh), self.order)

        return PolynomialRing(tuple(fresh) + self.variables, self.characteristic, order)


class Polynomial(object):
    """
    Immutable polynomial with a dictionary of exponent tuples to nonzero
    coefficients. Elements of quotient rings are stored in normal form.
    """

    def __init__(self, ring, terms=None, normalized=False):
        self.ring = ring
        field = ring.field
        clean = {}

        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise ValueError('Polynomial exponent {} does not fit {}'.format(exps, ring))

            if any(e < 0 for e in exps):
                raise ValueError('Polynomial exponents must be non-negative!')

            c = field.convert(c)
            if c:
                clean[exps] = c

        if not normalized and ring.quotient_basis:
            clean = ring.normal_form(clean)

        self.terms = clean
        if clean:
            self.lm = max(clean, key=ring.key)
            self.lc = clean[self.lm]
        else:
            self.lm = None
            self.lc = None

        self._hash = None

    def sorted_terms(self):
        """
        Terms as (exponents, coefficient) pairs in descending monomial order.
        """
        return tuple(sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True))

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or list(self.terms) == [self.ring.zero_exponents]

    def is_monomial(self):
        return len(self.terms) == 1

    def degree(self):
        if not self.terms:
            return -1

        return max(sum(exps) for exps in self.terms)

    def lift(self):
        """
        The normal form representative in the free cover ring.
        """
        if self.ring.cover is self.ring:
            return self

        return Polynomial(self.ring.cover, self.terms, normalized=True)

    def monic(self):
        if not self.terms:
            return self

        field = self.ring.field
        inverse = field.inv(self.lc)
        return Polynomial(
            self.ring,
            dict((exps, field.mul(c, inverse)) for exps, c in self.terms.items()),
            normalized=True)

    def mul_term(self, exps, coefficient):
        """
        Product with the single term coefficient * x^exps.
        """
        field = self.ring.field
        coefficient = field.convert(coefficient)
        terms = dict(
            (monomial_mul(e, exps), field.mul(c, coefficient))
            for e, c in self.terms.items())

        return Polynomial(self.ring, terms, normalized=self.ring.is_free)

    def _check_ring(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError('poly_arith expects polynomials over the same ring!')

            return other

        return self.ring.coerce(other)

    def __add__(self, other):
        other = self._check_ring(other)
        field = self.ring.field
        terms = dict(self.terms)

        for exps, c in other.terms.items():
            value = field.add(terms.get(exps, field.zero), c)
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)

        return Polynomial(self.ring, terms, normalized=True)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Polynomial(
            self.ring,
            dict((exps, field.neg(c)) for exps, c in self.terms.items()),
            normalized=True)

    def __sub__(self, other):
        return self + (-self._check_ring(other))

    def __rsub__(self, other):
        return self._check_ring(other) - self

    def __mul__(self, other):
        other = self._check_ring(other)
        field = self.ring.field
        terms = {}

        for a, c in self.terms.items():
            for b, d in other.terms.items():
                exps = monomial_mul(a, b)
                value = field.add(terms.get(exps, field.zero), field.mul(c, d))
                if value:
                    terms[exps] = value
                else:
                    terms.pop(exps, None)

        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        return poly_power(self, n)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms

        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.ring.constant(other)

        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.sorted_terms()))

        return self._hash

    def __str__(self):
        if not self.terms:
            return '0'

        field = self.ring.field
        pieces = []

        for exps, c in self.sorted_terms():
            negative = field.is_negative(c)
            magnitude = -c if negative else c
            monomial = '*'.join(
                name if e == 1 else '{}^{}'.format(name, e)
                for name, e in zip(self.ring.variables, exps) if e)

            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = '{}*{}'.format(magnitude, monomial)

            pieces.append((negative, body))

        text = ('-' if pieces[0][0] else '') + pieces[0][1]
        for negative, body in pieces[1:]:
            text += (' - ' if negative else ' + ') + body

        return text

    __repr__ = __str__


def poly_arith(a, b, op):
    """
    Ring arithmetic on two polynomials of the same ring.

    Parameters
    ----------
    a : Polynomial
    b : Polynomial
    op : str
        One of '+', '-', '*'.

    Returns
    -------
    Polynomial : result

    Raises
    ------
    ValueError
        If the polynomials live in different rings or op is unknown.
    """
    if not isinstance(a, Polynomial) or not isinstance(b, Polynomial):
        raise ValueError('poly_arith expects two polynomials!')

    if a.ring != b.ring:
        raise ValueError('poly_arith expects polynomials over the same ring!')

    if op == '+':
        return a + b

    if op == '-':
        return a - b

    if op == '*':
        return a * b

    raise ValueError('poly_arith op must be one of +, -, *')


def poly_power(f, n):
    """
    f^n by repeated squaring, with f^0 = 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError('poly_power expects a non-negative integer exponent!')

    result = f.ring.one()
    base = f

    while n:
        if n & 1:
            result = result * base

        n >>= 1
        if n:
            base = base * base

    return result


def frobenius_power(f, e):
    """
    f^(p^e) computed term by term, valid in characteristic p where the
    Frobenius map is additive and fixes F_p.

    Raises
    ------
    ValueError
        In characteristic zero or for a negative exponent.
    """
    p = f.ring.characteristic
    if p == 0:
        raise ValueError('frobenius_power requires positive characteristic!')

    if not isinstance(e, int) or e < 0:
        raise ValueError('frobenius_power expects a non-negative integer e!')

    q = p ** e
    terms = {}
    for exps, c in f.terms.items():
        terms[tuple(x * q for x in exps)] = c

    return Polynomial(f.ring, terms)


def divide_exact(f, g):
    """
    Exact quotient f / g in a free polynomial ring.

    Raises
    ------
    ValueError
        If g does not divide f or g is zero.
    """
    if g.is_zero():
        raise ValueError('divide_exact by zero polynomial!')

    ring = f.ring
    field = ring.field
    pending = dict(f.terms)
    quotient = {}

    while pending:
        lead = max(pending, key=ring.key)
        if not monomial_divides(g.lm, lead):
            raise ValueError('{} is not divisible by {}'.format(f, g))

        shift = monomial_div(lead, g.lm)
        factor = field.div(pending[lead], g.lc)
        quotient[shift] = factor

        for exps, c in g.terms.items():
            target = monomial_mul(exps, shift)
            value = field.sub(pending.get(target, field.zero), field.mul(factor, c))
            if value:
                pending[target] = value
            else:
                pending.pop(target, None)

    return Polynomial(ring, quotient, normalized=True)
