import itertools
import random

from germinv.geometry import GermVariety
from germinv.invariants import milnor_hypersurface
from germinv.parser import parse_polynomial
from germinv.ring import Polynomial, linear_change
from germinv.standard_basis import Ideal, is_finite

NAMES = {1: ["x"], 2: ["x", "y"], 3: ["x", "y", "z"], 4: ["x", "y", "z", "w"]}


def P(text, n):
    return parse_polynomial(text, NAMES[n])


def ideal(texts, n):
    return Ideal(tuple(P(t, n) for t in texts), n)


def germ(texts, n, dim):
    return GermVariety(ideal(texts, n), dim)


def staircase_count(lms, nvars, box):
    """Brute-force count of monomials in [0, box)^n outside the monomial ideal."""
    count = 0
    for e in itertools.product(range(box), repeat=nvars):
        if not any(all(a >= b for a, b in zip(e, m)) for m in lms):
            count += 1
    return count


def random_isolated_germ(rng, n, maxdeg=4):
    """Random f with f(0) = 0, df(0) = 0, degree <= maxdeg and finite Milnor number."""
    mons = [e for d in range(2, maxdeg + 1)
            for e in itertools.product(range(d + 1), repeat=n) if sum(e) == d]
    while True:
        terms = {}
        for e in rng.sample(mons, min(len(mons), rng.randint(3, 6))):
            c = rng.randint(-5, 5)
            if c:
                terms[e] = c
        f = Polynomial(n, terms)
        if f and is_finite(milnor_hypersurface(f)):
            return f


def random_unimodular(rng, n):
    """Seeded integer matrix with determinant 1 (product of elementary matrices)."""
    if n == 1:
        return [[rng.choice([-1, 1])]]
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for row in A:
            row[j] += c * row[i]
    return A


def transform(p, A):
    return linear_change(p, A)


def transform_germ(X, A):
    gens = tuple(transform(g, A) for g in X.generators)
    return GermVariety(Ideal(gens, X.nvars), X.dim)


def seeded(seed):
    return random.Random(seed)
