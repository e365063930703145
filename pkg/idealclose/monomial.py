# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

# Monomial ideals are lists of exponent tuples: [] is the zero ideal and
# [(0, ..., 0)] the unit ideal.

import logging

logger = logging.getLogger(__name__)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def minimalize(gens):
    """
    Sorted minimal generators: duplicates and multiples of other
    generators are dropped.
    """
    unique = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    minimal = []

    for g in unique:
        if not any(divides(h, g) for h in minimal):
            minimal.append(g)

    return sorted(minimal)


def contains(gens, exps):
    """
    True when the monomial x^exps lies in the monomial ideal.
    """
    return any(divides(g, exps) for g in gens)


def issubset(a, b):
    return all(contains(b, g) for g in a)


def ideal_sum(a, b):
    return minimalize(list(a) + list(b))


def product(a, b):
    return minimalize([tuple(x + y for x, y in zip(g, h)) for g in a for h in b])


def power(gens, n, nvars):
    result = [(0,) * nvars]
    for _ in range(n):
        result = product(result, gens)

    return result


def intersection(a, b):
    return minimalize([lcm(g, h) for g in a for h in b])


def colon_monomial(gens, exps):
    """
    (I : x^exps) for a monomial ideal I.
    """
    return minimalize([tuple(max(x - y, 0) for x, y in zip(g, exps)) for g in gens])


def colon(a, b, nvars):
    """
    (a : b) for monomial ideals; (a : 0) is the unit ideal.
    """
    if not b:
        return [(0,) * nvars]

    result = None
    for h in b:
        part = colon_monomial(a, h)
        result = part if result is None else intersection(result, part)

    return result


def radical(gens):
    """
    The radical of a monomial ideal: squarefree parts of the generators.
    """
    return minimalize([tuple(min(e, 1) for e in g) for g in gens])


def support(exps):
    return tuple(i for i, e in enumerate(exps) if e)


def _irreducible_components(gens):
    gens = minimalize(gens)

    for g in gens:
        positions = support(g)
        if len(positions) < 2:
            continue

        i = positions[0]
        pure = tuple(g[i] if j == i else 0 for j in range(len(g)))
        rest = tuple(0 if j == i else g[j] for j in range(len(g)))

        return _irreducible_components(gens + [pure]) + _irreducible_components(gens + [rest])

    return [gens]


def primary_decomposition(gens, nvars):
    """
    Minimal primary decomposition of a monomial ideal.

    The ideal is split into irreducible components (x_i^a ideals) by
    breaking a mixed generator x_i^a * h into x_i^a and h; components that
    contain another are dropped and components with the same radical are
    intersected.

    Parameters
    ----------
    gens : list
        Exponent tuples generating the ideal.
    nvars : int
        Number of variables.

    Returns
    -------
    list : components
        Pairs (prime, primary) where prime is the sorted tuple of variable
        indices of the radical; ordered by codimension then prime.
    """
    gens = minimalize(gens)
    if gens and not any(gens[0]):
        return []

    irreducible = []
    for component in _irreducible_components(gens):
        if component not in irreducible:
            irreducible.append(component)

    irredundant = [
        c for c in irreducible
        if not any(other != c and issubset(other, c) for other in irreducible)
    ]

    merged = {}
    for component in irredundant:
        prime = tuple(sorted(set(i for g in component for i in support(g))))
        if prime in merged:
            merged[prime] = intersection(merged[prime], component)
        else:
            merged[prime] = component

    components = sorted(merged.items(), key=lambda item: (len(item[0]), item[0]))
    logger.debug('monomial ideal %s has %d primary components', gens, len(components))
    return components


def unmixed_part(gens, nvars):
    """
    Intersection of the primary components of minimal codimension.
    """
    components = primary_decomposition(gens, nvars)
    if not components:
        return [(0,) * nvars]

    codimension = min(len(prime) for prime, _ in components)
    result = None
    for prime, primary in components:
        if len(prime) != codimension:
            continue

        result = primary if result is None else intersection(result, primary)

    return result
