"""Independent brute-force oracles.

These evaluate the definitions directly over full enumerations, sharing no
code with the package beyond plain data types.
"""

import itertools


def subsets(ground, k=None):
    sizes = range(ground + 1) if k is None else [k]
    return [frozenset(c) for r in sizes for c in itertools.combinations(range(ground), r)]


def cell(ground, shape):
    return list(itertools.product(*(subsets(ground, k) for k in shape)))


def leq(x, y):
    return all(a <= b for a, b in zip(x, y))


def F(X, ground, l):
    return {y for y in cell(ground, l) if any(leq(x, y) for x in X)}


def G(X, ground, k, l):
    FX = F(X, ground, l)
    return {x for x in cell(ground, k) if all(y in FX for y in cell(ground, l) if leq(x, y))}


def H(X, ground, k, l):
    return G(X, ground, k, l) - set(X)


def colex(ground, k):
    return sorted(subsets(ground, k), key=lambda s: sorted(s, reverse=True))


def pair(m, n):
    # Cantor pairing, as in the package's open-question resolution
    return (m + n) * (m + n + 1) // 2 + n


PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
