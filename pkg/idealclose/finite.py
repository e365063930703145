# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Python native imports
import itertools
import logging

# Third-party imports
import numpy as np

# Project imports
from idealclose import core
from idealclose.groebner import Ideal
from idealclose.poly import monomial_divides

logger = logging.getLogger(__name__)


DEFAULT_MAX_ELEMENTS = 256
DEFAULT_MAX_IDEALS = 100000


def row_reduce(rows, p, width):
    """
    Reduced row echelon form over F_p.

    Parameters
    ----------
    rows : array_like
        Row vectors of length width.
    p : int
        The characteristic.
    width : int
        Number of columns; needed when rows is empty.

    Returns
    -------
    tuple : label
        The nonzero RREF rows as tuples of ints. Equal spans give equal
        labels.
    """
    M = np.array(rows, dtype=np.int64).reshape(-1, width) % p
    nrows = M.shape[0]
    r = 0

    for c in range(width):
        if r == nrows:
            break

        nonzero = np.nonzero(M[r:, c])[0]
        if len(nonzero) == 0:
            continue

        pivot = r + nonzero[0]
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]

        M[r] = (M[r] * pow(int(M[r, c]), p - 2, p)) % p

        for i in range(nrows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % p

        r += 1

    return tuple(tuple(int(x) for x in row) for row in M[:r])


def _pivot(row):
    for index, value in enumerate(row):
        if value:
            return index

    return None


class FiniteRing(object):
    """
    A finite ring F_p[x]/J presented by its standard monomials and the
    structure constants of multiplication.

    Ideals of the finite ring are F_p-subspaces closed under
    multiplication and are labelled by the rows of their reduced row
    echelon basis; labels are canonical so they can be compared and
    hashed directly.
    """

    def __init__(self, ring, max_elements=DEFAULT_MAX_ELEMENTS):
        if ring.characteristic == 0:
            raise ValueError('FiniteRing requires a prime characteristic!')

        if ring.is_free and ring.nvars:
            raise ValueError('FiniteRing requires a quotient with finitely many standard monomials!')

        leading = [b.lm for b in ring.quotient_basis]
        bounds = []
        for i in range(ring.nvars):
            powers = [lm[i] for lm in leading if lm[i] and sum(lm) == lm[i]]
            if not powers:
                raise ValueError('{} is not a finite ring: no pure power of {} is a leading monomial'.format(
                    ring, ring.variables[i]))

            bounds.append(min(powers))

        monomials = [
            exps for exps in itertools.product(*[range(b) for b in bounds])
            if not any(monomial_divides(lm, exps) for lm in leading)
        ]
        monomials.sort(key=ring.key)

        self.ring = ring
        self.p = ring.characteristic
        self.dim = len(monomials)

        if self.p ** self.dim > max_elements:
            raise core.ResourceBudgetError(
                '{} has {}^{} elements, more than the cap of {}'.format(ring, self.p, self.dim, max_elements))

        self.monomials = tuple(monomials)
        self.index = dict((m, i) for i, m in enumerate(monomials))

        table = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for i, a in enumerate(monomials):
            for j, b in enumerate(monomials):
                product = ring.from_exponents(tuple(x + y for x, y in zip(a, b)))
                table[i, j] = self.vector(product)

        self.table = table
        self._elements = None
        self._principal = {}
        self._frobenius = None

        self.zero_label = ()
        self.unit_label = self.span(np.eye(self.dim, dtype=np.int64))
        self.maximal = self._maximal_label()

        logger.debug('finite ring %s: dimension %d, local %s', ring, self.dim, self.maximal is not None)

    def __str__(self):
        return str(self.ring)

    def _maximal_label(self):
        # local exactly when the non-units are closed under addition
        if not self.dim:
            return None

        nonunits = [v for v in self.elements if not self.is_unit(v)]
        label = self.span(nonunits)
        if self.p ** len(label) != len(nonunits):
            return None

        return label

    @property
    def is_local(self):
        return self.maximal is not None

    @property
    def size(self):
        return self.p ** self.dim

    @property
    def unit_count(self):
        return sum(1 for v in self.elements if self.is_unit(v))

    @property
    def elements(self):
        """
        Every element of the ring as rows of an (p^dim, dim) array.
        """
        if self._elements is None:
            self._elements = self.elements_of(self.unit_label)

        return self._elements

    def vector(self, f):
        """
        Coordinates of a ring element in the standard monomial basis.
        """
        if f.ring != self.ring:
            raise ValueError('FiniteRing.vector expects an element of {}'.format(self.ring))

        v = np.zeros(self.dim, dtype=np.int64)
        for exps, c in f.terms.items():
            v[self.index[exps]] = int(c)

        return v

    def polynomial(self, v):
        terms = dict((self.monomials[i], int(c)) for i, c in enumerate(v) if c)
        return self.ring.from_terms(terms, normalized=True)

    def mul(self, u, v):
        return np.einsum('i,j,ijk->k', u, v, self.table) % self.p

    def mul_many(self, U, v):
        """
        Products of every row of U with the element v.
        """
        return np.einsum('ai,j,ijk->ak', U, v, self.table) % self.p

    def mul_rows(self, U, V):
        """
        Row-wise products of two stacks of elements.
        """
        return np.einsum('ai,aj,ijk->ak', U, V, self.table) % self.p

    def power(self, v, n):
        result = np.zeros(self.dim, dtype=np.int64)
        result[self.index[self.ring.zero_exponents]] = 1
        base = np.array(v, dtype=np.int64)

        while n:
            if n & 1:
                result = self.mul(result, base)

            n >>= 1
            if n:
                base = self.mul(base, base)

        return result

    def power_rows(self, U, n):
        result = np.zeros_like(U)
        result[:, self.index[self.ring.zero_exponents]] = 1
        base = np.array(U, dtype=np.int64)

        while n:
            if n & 1:
                result = self.mul_rows(result, base)

            n >>= 1
            if n:
                base = self.mul_rows(base, base)

        return result

    def span(self, vectors):
        return row_reduce(vectors, self.p, self.dim)

    def ideal_of(self, vectors):
        """
        Label of the ideal generated by the given elements.
        """
        vectors = np.array(vectors, dtype=np.int64).reshape(-1, self.dim)
        if not len(vectors):
            return self.zero_label

        multiples = np.einsum('ai,ijk->ajk', vectors, self.table) % self.p
        return self.span(multiples.reshape(-1, self.dim))

    def principal(self, v):
        key = tuple(int(x) for x in v)
        if key not in self._principal:
            self._principal[key] = self.ideal_of([v])

        return self._principal[key]

    def contains_many(self, label, U):
        """
        Boolean mask of the rows of U lying in the labelled ideal.
        """
        U = np.array(U, dtype=np.int64).reshape(-1, self.dim) % self.p
        for row in label:
            c = _pivot(row)
            U = (U - np.outer(U[:, c], row)) % self.p

        return ~U.any(axis=1)

    def contains(self, label, v):
        return bool(self.contains_many(label, [v])[0])

    def issubset(self, a, b):
        if not a:
            return True

        return bool(self.contains_many(b, a).all())

    def elements_of(self, label):
        """
        Every element of the labelled ideal.
        """
        if not label:
            return np.zeros((1, self.dim), dtype=np.int64)

        rows = np.array(label, dtype=np.int64)
        coefficients = np.array(list(itertools.product(range(self.p), repeat=len(label))), dtype=np.int64)
        return coefficients.dot(rows) % self.p

    def sum(self, a, b):
        return self.span(list(a) + list(b))

    def intersection(self, a, b):
        members = self.elements_of(a)
        return self.span(members[self.contains_many(b, members)])

    def product(self, a, b):
        if not a or not b:
            return self.zero_label

        products = [self.mul(np.array(u), np.array(v)) for u in a for v in b]
        return self.ideal_of(products)

    def colon(self, a, b):
        """
        (a : b) by testing every ring element against the rows of b.
        """
        elements = self.elements
        mask = np.ones(len(elements), dtype=bool)

        for row in b:
            mask &= self.contains_many(a, self.mul_many(elements, np.array(row)))

        return self.span(elements[mask])

    def ideal_power(self, label, n):
        result = self.unit_label
        for _ in range(n):
            result = self.product(result, label)

        return result

    def radical(self, label):
        """
        Elements with f^dim in the ideal; nilpotency index is at most dim.
        """
        elements = self.elements
        powers = self.power_rows(elements, max(self.dim, 1))
        return self.ideal_of(elements[self.contains_many(label, powers)])

    def is_unit(self, v):
        multiples = np.einsum('i,ijk->jk', v, self.table) % self.p
        return len(self.span(multiples)) == self.dim

    def mu(self, label):
        """
        Minimal number of generators of an ideal of a local ring,
        dim I - dim mI.
        """
        if self.maximal is None:
            raise ValueError('mu is only defined over a local finite ring!')

        return len(label) - len(self.product(self.maximal, label))

    def label(self, ideal):
        """
        Label of an Ideal of the underlying polynomial ring.
        """
        if ideal.ring != self.ring:
            raise ValueError('FiniteRing.label expects an ideal of {}'.format(self.ring))

        return self.ideal_of([self.vector(g) for g in ideal.generators])

    def ideal(self, label):
        return Ideal(self.ring, [self.polynomial(row) for row in label])

    def frobenius_matrix(self):
        """
        Matrix of the p-th power map on the standard monomial basis; the
        map is F_p-linear.
        """
        if self._frobenius is None:
            self._frobenius = np.array(
                [self.power(row, self.p) for row in np.eye(self.dim, dtype=np.int64)],
                dtype=np.int64).reshape(self.dim, self.dim)

        return self._frobenius

    def frobenius_stages(self):
        """
        Matrices of phi^e for e = 0, 1, ... until the sequence repeats.
        """
        F = self.frobenius_matrix()
        current = np.eye(self.dim, dtype=np.int64)
        seen = set()
        stages = []

        while True:
            key = current.tobytes()
            if key in seen:
                return stages

            seen.add(key)
            stages.append(current)
            current = current.dot(F) % self.p

    def bracket_power(self, label, stage):
        rows = np.array(label, dtype=np.int64).reshape(-1, self.dim)
        return self.ideal_of(rows.dot(stage) % self.p)

    def frobenius_closure(self, label):
        """
        Exact Frobenius closure: elements f with f^q in I^[q] for some q,
        scanning every distinct power of the Frobenius matrix.
        """
        elements = self.elements
        mask = np.zeros(len(elements), dtype=bool)

        for stage in self.frobenius_stages():
            bracket = self.bracket_power(label, stage)
            mask |= self.contains_many(bracket, elements.dot(stage) % self.p)

        return self.span(elements[mask])

    def frobenius_stage(self, label, e):
        stage = np.eye(self.dim, dtype=np.int64)
        for _ in range(e):
            stage = stage.dot(self.frobenius_matrix()) % self.p

        elements = self.elements
        bracket = self.bracket_power(label, stage)
        return self.span(elements[self.contains_many(bracket, elements.dot(stage) % self.p)])

    def frobenius_special_part(self, label):
        """
        Elements f with f^q in m*I^[q] for some q.
        """
        if self.maximal is None:
            raise ValueError('special parts need a local finite ring!')

        elements = self.elements
        mask = np.zeros(len(elements), dtype=bool)

        for stage in self.frobenius_stages():
            target = self.product(self.maximal, self.bracket_power(label, stage))
            mask |= self.contains_many(target, elements.dot(stage) % self.p)

        return self.span(elements[mask])


class IdealLattice(object):
    """
    Every ideal of a finite ring, sorted by dimension then label.
    """

    def __init__(self, finite_ring, labels):
        self.ring = finite_ring
        self.labels = sorted(labels, key=lambda L: (len(L), L))
        self.position = dict((L, i) for i, L in enumerate(self.labels))
        self._ideals = None

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.position

    @property
    def bottom(self):
        return self.ring.zero_label

    @property
    def top(self):
        return self.ring.unit_label

    def ideals(self):
        """
        The lattice members as Ideal objects, in lattice order.
        """
        if self._ideals is None:
            self._ideals = [self.ring.ideal(L) for L in self.labels]

        return self._ideals

    def leq(self, a, b):
        return self.ring.issubset(a, b)

    def maximal_ideals(self):
        proper = [L for L in self.labels if L != self.top]
        return [
            L for L in proper
            if not any(M != L and self.leq(L, M) for M in proper)
        ]

    def is_prime(self, label):
        """
        Primes of a finite ring are its maximal ideals.
        """
        return label in self.maximal_ideals()


def enumerate_ideals(finite_ring, max_ideals=DEFAULT_MAX_IDEALS):
    """
    Every ideal of a finite ring, found by breadth-first search over
    I + (r) starting from the zero ideal.

    Parameters
    ----------
    finite_ring : FiniteRing
    max_ideals : int, default 100000
        Cap on the number of ideals.

    Returns
    -------
    IdealLattice : lattice

    Raises
    ------
    ResourceBudgetError
        If more than max_ideals ideals are found.
    """
    R = finite_ring
    principals = []
    for v in R.elements:
        label = R.principal(v)
        if label not in principals:
            principals.append(label)

    seen = set([R.zero_label])
    queue = [R.zero_label]

    while queue:
        current = queue.pop(0)
        for principal in principals:
            if R.issubset(principal, current):
                continue

            following = R.sum(current, principal)
            if following in seen:
                continue

            seen.add(following)
            queue.append(following)

            if len(seen) > max_ideals:
                raise core.ResourceBudgetError(
                    '{} has more than {} ideals'.format(R, max_ideals))

    logger.debug('%s has %d ideals', R, len(seen))
    return IdealLattice(R, seen)


_FINITE_RINGS = {}
_LATTICES = {}


def finite_ring_of(ring, max_elements=DEFAULT_MAX_ELEMENTS):
    """
    The cached FiniteRing of a polynomial ring, or None when the ring is
    not a finite ring within the element cap.
    """
    key = (ring, max_elements)
    if key not in _FINITE_RINGS:
        try:
            _FINITE_RINGS[key] = FiniteRing(ring, max_elements)
        except (ValueError, core.ResourceBudgetError):
            _FINITE_RINGS[key] = None

    return _FINITE_RINGS[key]


def lattice_of(ring, max_elements=DEFAULT_MAX_ELEMENTS, max_ideals=DEFAULT_MAX_IDEALS):
    """
    The cached IdealLattice of a finite polynomial quotient ring.

    Raises
    ------
    ValueError
        If the ring is not finite.
    ResourceBudgetError
        If the ring exceeds the element cap or the ideal cap.
    """
    key = (ring, max_elements, max_ideals)
    if key not in _LATTICES:
        R = finite_ring_of(ring, max_elements)
        if R is None:
            # rebuild to surface the reason the ring is not finite
            R = FiniteRing(ring, max_elements)

        _LATTICES[key] = enumerate_ideals(R, max_ideals)

    return _LATTICES[key]


def build_finite_ring(ring, max_elements=DEFAULT_MAX_ELEMENTS):
    """
    Materializes a zero-dimensional quotient over F_p as a FiniteRing.

    Parameters
    ----------
    ring : PolynomialRing
        A quotient ring whose relations contain a power of each variable.
    max_elements : int, default 256
        Cap on p^dim.

    Returns
    -------
    FiniteRing : finite_ring

    Raises
    ------
    ValueError
        If the ring is not finite.
    ResourceBudgetError
        If the ring has more than max_elements elements.
    """
    return FiniteRing(ring, max_elements)
