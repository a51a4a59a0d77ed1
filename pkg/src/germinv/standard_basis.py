"""Standard bases in local and mixed monomial orders.

The reduction engine is Mora's tangent-cone normal form: the reducer with
the smallest ecart is used, and the current remainder joins the reducer set
whenever the chosen reducer has a larger ecart.  Internally polynomials are
kept fraction-free (primitive integer coefficients); since every quantity
computed here is determined by leading monomials up to units, scaling by
nonzero constants is harmless.

For a local degree order, once the leading ideal contains a pure power of
every variable, all monomials above the highest-corner degree lie in the
ideal, so terms beyond that degree are discarded and tails can be fully
reduced.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm
from operator import add, sub
from typing import Iterable, Sequence

from .ring import LOCAL, MonomialOrder, Polynomial, block_order
from .errors import RingMismatchError, SaturationLimitError


class Infinite:
    """Marker for an infinite-dimensional quotient."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    __str__ = __repr__

    def __reduce__(self):
        return (Infinite, ())


INFINITE = Infinite()


def is_finite(value) -> bool:
    return value is not INFINITE


@dataclass(frozen=True)
class Ideal:
    """Finitely generated ideal of the local (or mixed) ring in ``nvars`` variables."""

    generators: tuple
    nvars: int
    order: MonomialOrder = LOCAL
    is_standard: bool = field(default=False, compare=False)

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.nvars != self.nvars:
                raise RingMismatchError(
                    f"generator in {g.nvars} variables, ideal in {self.nvars}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, generators: Iterable[Polynomial], nvars: int | None = None,
           order: MonomialOrder = LOCAL) -> "Ideal":
        gens = tuple(generators)
        if nvars is None:
            if not gens:
                raise ValueError("nvars required for an empty generator list")
            nvars = gens[0].nvars
        return cls(gens, nvars, order)

    @classmethod
    def unit(cls, nvars: int) -> "Ideal":
        return cls((Polynomial.constant(nvars, 1),), nvars, LOCAL, True)

    @classmethod
    def maximal(cls, nvars: int) -> "Ideal":
        return cls(tuple(Polynomial.variable(nvars, i) for i in range(nvars)), nvars, LOCAL, True)

    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.generators + tuple(extra), self.nvars, self.order)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in standard_basis(self).generators]

    def is_unit(self) -> bool:
        zero = (0,) * self.nvars
        return zero in self.leading_monomials()

    def contains(self, p: Polynomial) -> bool:
        return ideal_contains(self, Ideal((p,), self.nvars, self.order))

    def __len__(self):
        return len(self.generators)


# ---------------------------------------------------------------- engine


class _Elem:
    __slots__ = ("terms", "lm", "lc", "deg", "ecart", "alive")

    def __init__(self, terms, lm, deg):
        self.terms = terms
        self.lm = lm
        self.lc = terms[lm]
        self.deg = deg
        self.ecart = deg - sum(lm)
        self.alive = True


class _KeyCache(dict):
    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def __missing__(self, exp):
        v = self[exp] = self.fn(exp)
        return v


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _int_terms(p: Polynomial) -> dict:
    den = lcm(*(c.denominator for c in p.terms.values())) if p else 1
    return {e: int(c * den) for e, c in p.terms.items()}


class _Engine:
    def __init__(self, order: MonomialOrder, nvars: int):
        self.order = order
        self.nvars = nvars
        self.key = _KeyCache(order.key)
        # highest-corner truncation is only sound for local degree orders
        self.truncating = order.is_local
        self.corner = None
        self.pure = [None] * nvars

    # element construction

    def make(self, terms: dict):
        if self.corner is not None:
            # local degree order: every term has degree >= that of the leading
            # monomial, and all of m^(corner+1) lies in the ideal
            c = self.corner
            terms = {e: v for e, v in terms.items() if sum(e) <= c}
        if not terms:
            return None
        return self._elem(terms)

    def _elem(self, terms):
        g = gcd(*terms.values())
        lm = max(terms, key=self.key.__getitem__)
        if terms[lm] < 0:
            g = -g
        if g != 1:
            terms = {e: v // g for e, v in terms.items()}
        return _Elem(terms, lm, max(sum(e) for e in terms))

    def truncated(self, el):
        """Drop non-leading terms above the corner; keeps basis elements alive."""
        c = self.corner
        if c is None or el.deg <= c:
            return el
        return self._elem({e: v for e, v in el.terms.items() if sum(e) <= c or e == el.lm})

    def from_poly(self, p: Polynomial):
        return self.make(_int_terms(p)) if p else None

    def to_poly(self, el) -> Polynomial:
        return Polynomial(self.nvars, el.terms)

    # arithmetic

    def combine(self, h, hmul, g, gmul, shift):
        """hmul*h - gmul*x^shift*g as raw terms."""
        if hmul == 1:
            terms = dict(h.terms)
        else:
            terms = {e: hmul * v for e, v in h.terms.items()}
        get = terms.get
        for e, v in g.terms.items():
            e2 = tuple([a + b for a, b in zip(e, shift)]) if any(shift) else e
            s = get(e2, 0) - gmul * v
            if s:
                terms[e2] = s
            else:
                del terms[e2]
        return terms

    def reduce(self, h, g, exp=None):
        """Cancel the term of h at ``exp`` (default: its leading monomial) using g."""
        if exp is None:
            exp = h.lm
        a = h.terms[exp]
        b = g.lc
        d = gcd(a, b)
        shift = tuple([x - y for x, y in zip(exp, g.lm)])
        return self.make(self.combine(h, b // d, g, a // d, shift))

    def nf(self, h, reducers):
        """Mora weak normal form: leading monomial not divisible by any reducer."""
        T = [g for g in reducers if g.alive]
        while h is not None:
            best = None
            lm = h.lm
            for g in T:
                if _divides(g.lm, lm) and (best is None or g.ecart < best.ecart):
                    best = g
                    if best.ecart == 0:
                        break
            if best is None:
                return h
            if best.ecart > h.ecart:
                T.append(h)
            h = self.reduce(h, best)
        return None

    def tail_reduce(self, h, reducers):
        """Fully reduce all terms; only terminates with a corner bound in place."""
        if self.corner is None or h is None:
            return h
        T = [g for g in reducers if g.alive]
        key = self.key.__getitem__
        while True:
            target = None
            for e in sorted(h.terms, key=key, reverse=True):
                if e == h.lm:
                    continue
                for g in T:
                    if _divides(g.lm, e):
                        target = (e, g)
                        break
                if target:
                    break
            if target is None:
                return h
            h = self.reduce(h, target[1], target[0])

    # highest corner

    def note_leading(self, lm):
        """Record a new leading monomial; True when the corner bound shrank."""
        if not self.truncating:
            return False
        support = [i for i, k in enumerate(lm) if k]
        if len(support) != 1:
            return False
        i = support[0]
        if self.pure[i] is None or lm[i] < self.pure[i]:
            self.pure[i] = lm[i]
            if all(p is not None for p in self.pure):
                bound = sum(p - 1 for p in self.pure)
                if self.corner is None or bound < self.corner:
                    self.corner = bound
                    return True
        return False


class _Homogenizing:
    """Standard bases by homogenization.

    The generators are homogenized with an extra variable t (stored last)
    and a Buchberger run is done for the order that compares total degree
    first and breaks ties with the target order on the x-part.  This is a
    well-order, reductions never leave a homogeneous degree, and setting
    t = 1 in the result gives a standard basis for the target order, local,
    global or mixed.

    For local degree orders the highest corner D is tracked: once every
    variable has a pure power among the leading x-parts, m^(D+1) lies in
    the ideal and all terms of x-degree > D are dropped.
    """

    def __init__(self, order: MonomialOrder, nvars: int):
        self.order = order
        self.n = nvars
        self.key = _KeyCache(lambda e: order.key(e[:nvars]))
        self.local = order.is_local
        self.pure = [None] * nvars
        self.corner = None

    def xdeg(self, e):
        return sum(e) - e[-1]

    def make(self, terms):
        if self.corner is not None:
            c = self.corner
            terms = {e: v for e, v in terms.items() if self.xdeg(e) <= c}
        if not terms:
            return None
        g = gcd(*terms.values())
        lm = max(terms, key=self.key.__getitem__)
        if terms[lm] < 0:
            g = -g
        if g != 1:
            terms = {e: v // g for e, v in terms.items()}
        return _Elem(terms, lm, sum(lm))

    def homogenize(self, p: Polynomial):
        terms = _int_terms(p)
        d = max(sum(e) for e in terms)
        return self.make({e + (d - sum(e),): c for e, c in terms.items()})

    def reducer(self, e, G):
        best = None
        for g in G:
            if _divides(g.lm, e) and (best is None or len(g.terms) < len(best.terms)):
                best = g
        return best

    def nf(self, h, G):
        """Full reduction of a homogeneous element."""
        key = self.key.__getitem__
        rest = dict(h.terms)
        done = {}
        c = self.corner
        while rest:
            e = max(rest, key=key)
            g = self.reducer(e, G)
            if g is None:
                done[e] = rest.pop(e)
                continue
            a, b = rest[e], g.lc
            d = gcd(a, b)
            a, b = a // d, b // d
            if b != 1:
                rest = {m: b * v for m, v in rest.items()}
                done = {m: b * v for m, v in done.items()}
            shift = tuple(map(sub, e, g.lm))
            get = rest.get
            for m, v in g.terms.items():
                m2 = tuple(map(add, m, shift))
                if c is not None and sum(m2) - m2[-1] > c:
                    continue
                s = get(m2, 0) - a * v
                if s:
                    rest[m2] = s
                else:
                    del rest[m2]
            rest.pop(e, None)
            if rest and done:
                k = gcd(gcd(*rest.values()), gcd(*done.values()))
                if k > 1:
                    rest = {m: v // k for m, v in rest.items()}
                    done = {m: v // k for m, v in done.items()}
        return self.make(done) if done else None

    def spoly(self, f, g):
        m = tuple(map(max, f.lm, g.lm))
        sf = tuple([x - y for x, y in zip(m, f.lm)])
        sg = tuple([x - y for x, y in zip(m, g.lm)])
        d = gcd(f.lc, g.lc)
        a, b = g.lc // d, f.lc // d
        terms = {tuple([x + y for x, y in zip(e, sf)]): a * v for e, v in f.terms.items()}
        for e, v in g.terms.items():
            e2 = tuple([x + y for x, y in zip(e, sg)])
            s = terms.get(e2, 0) - b * v
            if s:
                terms[e2] = s
            else:
                del terms[e2]
        terms.pop(m, None)
        return self.make(terms) if terms else None

    def note_leading(self, lm) -> bool:
        """Record a leading monomial; True when the corner bound shrank."""
        if not self.local:
            return False
        x = lm[:self.n]
        support = [i for i, k in enumerate(x) if k]
        if len(support) != 1:
            return False
        i = support[0]
        if self.pure[i] is None or x[i] < self.pure[i]:
            self.pure[i] = x[i]
            if all(p is not None for p in self.pure):
                bound = sum(p - 1 for p in self.pure)
                if self.corner is None or bound < self.corner:
                    self.corner = bound
                    return True
        return False

    def basis(self, gens):
        G = []
        alive = []
        heap = []
        pairs = set()
        counter = 0
        for p in gens:
            el = self.homogenize(p)
            if el is not None:
                counter += 1
                heapq.heappush(heap, (el.deg, counter, el, None))

        def retruncate():
            c = self.corner
            for k, g in enumerate(G):
                if not alive[k]:
                    continue
                if self.xdeg(g.lm) > c:
                    alive[k] = False
                elif any(self.xdeg(e) > c for e in g.terms):
                    G[k] = self.make(g.terms)

        def add(h):
            nonlocal counter
            k = len(G)
            G.append(h)
            alive.append(True)
            if self.note_leading(h.lm):
                retruncate()
                if not alive[k]:
                    return
                h = G[k]
            # Gebauer-Moeller: drop pairs (i, j) made redundant by h
            for (i, j) in list(pairs):
                lij = tuple(map(max, G[i].lm, G[j].lm))
                if (_divides(h.lm, lij) and tuple(map(max, G[i].lm, h.lm)) != lij
                        and tuple(map(max, G[j].lm, h.lm)) != lij):
                    pairs.discard((i, j))
            new = []
            for i in range(k):
                if not alive[i]:
                    continue
                l = tuple(map(max, G[i].lm, h.lm))
                # product criterion
                if all(not (a and b) for a, b in zip(G[i].lm, h.lm)):
                    continue
                new.append((sum(l), l, i))
            # chain criterion among the new pairs: keep one per lcm, and
            # drop those whose lcm is a proper multiple of another new lcm
            new.sort()
            kept = []
            for deg, l, i in new:
                if any(_divides(l2, l) for _, l2, _ in kept):
                    continue
                kept.append((deg, l, i))
            for deg, l, i in kept:
                pairs.add((i, k))
                counter += 1
                heapq.heappush(heap, (deg, counter, None, (i, k)))

        while heap:
            _, _, el, pair = heapq.heappop(heap)
            if pair is not None:
                if pair not in pairs:
                    continue
                pairs.discard(pair)
                i, j = pair
                if not (alive[i] and alive[j]):
                    continue
                el = self.spoly(G[i], G[j])
            elif self.corner is not None:
                el = self.make(el.terms)
            if el is None:
                continue
            live = [g for g, a in zip(G, alive) if a]
            h = self.nf(el, live)
            if h is None:
                continue
            if not any(h.lm[:self.n]):
                return None
            add(h)
        return [g for g, a in zip(G, alive) if a]

    def corner_powers(self) -> list:
        """x_i^(D+1) for every i: they lie in the ideal once the corner is known."""
        if self.corner is None:
            return []
        k = self.corner + 1
        return [Polynomial.monomial(tuple(k * (j == i) for j in range(self.n)))
                for i in range(self.n)]

    def dehomogenize(self, el) -> Polynomial:
        terms = {}
        for e, v in el.terms.items():
            x = e[:self.n]
            terms[x] = terms.get(x, 0) + v
        return Polynomial(self.n, terms)


# ---------------------------------------------------------------- public API


@lru_cache(maxsize=4096)
def _cached_basis(gens: tuple, nvars: int, order: MonomialOrder) -> tuple:
    eng = _Homogenizing(order, nvars)
    basis = eng.basis([g for g in gens if not g.is_zero()])
    if basis is None:
        return (Polynomial.constant(nvars, 1),)
    polys = [eng.dehomogenize(el) for el in basis] + eng.corner_powers()
    key = order.key
    lms = [max(p.terms, key=key) for p in polys]
    keep = []
    for i, m in enumerate(lms):
        if any(j != i and _divides(lms[j], m) and (lms[j] != m or j < i)
               for j in range(len(lms))):
            continue
        keep.append(polys[i])
    keep.sort(key=lambda p: (sum(max(p.terms, key=key)), len(p.terms)))
    return tuple(keep)


def standard_basis(I: Ideal) -> Ideal:
    """Standard basis of ``I`` for its order; idempotent."""
    if I.is_standard:
        return I
    gens = _cached_basis(I.generators, I.nvars, I.order)
    return Ideal(gens, I.nvars, I.order, True)


def mora_normal_form(p: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = LOCAL) -> Polynomial:
    """Mora normal form of ``p`` with respect to ``G``.

    The result ``r`` satisfies ``u*p = (combination of G) + c*r`` for a unit
    ``u`` and a nonzero constant ``c``; its leading monomial is not divisible
    by any leading monomial of ``G``.  When the leading monomials of ``G``
    contain a pure power of every variable (local order), every term of ``r``
    is reduced.  ``r`` is returned with leading coefficient 1.
    """
    if p.is_zero():
        return p
    n = p.nvars
    eng = _Engine(order, n)
    reducers = [eng.from_poly(g) for g in G if g]
    for g in reducers:
        eng.note_leading(g.lm)
    reducers = [eng.truncated(g) for g in reducers]
    h = eng.nf(eng.from_poly(p), reducers)
    h = eng.tail_reduce(h, reducers)
    if h is None:
        return Polynomial.zero(n)
    r = eng.to_poly(h)
    return r.scale(Fraction(1) / r.terms[h.lm])


def mora_division(p: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = LOCAL):
    """Division with remainder in the localization.

    Returns ``(u, quotients, r)`` with ``u*p == sum(q*g) + r`` exactly, ``u`` a
    unit (leading monomial 1 in a local order) and ``r`` a weak normal form.
    """
    n = p.nvars
    one = Polynomial.constant(n, 1)
    zero = Polynomial.zero(n)
    m = len(G)
    # each entry: (poly, u, a) with poly == u*p - sum(a_i * G_i)
    T = []
    for i, g in enumerate(G):
        if g:
            a = [zero] * m
            a[i] = -one
            T.append((g, zero, a))
    h = (p, one, [zero] * m)

    def ecart(q):
        return q.degree() - sum(q.leading_monomial(order))

    while not h[0].is_zero():
        lm, lc = h[0].leading_term(order)
        cands = [t for t in T if _divides(t[0].leading_monomial(order), lm)]
        if not cands:
            break
        t = min(cands, key=lambda t: ecart(t[0]))
        if ecart(t[0]) > ecart(h[0]):
            T.append(h)
        tlm, tlc = t[0].leading_term(order)
        shift = tuple(x - y for x, y in zip(lm, tlm))
        c = Fraction(lc) / tlc
        h = (h[0] - t[0].mul_term(shift, c),
             h[1] - t[1].mul_term(shift, c),
             [ah - at.mul_term(shift, c) for ah, at in zip(h[2], t[2])])
    return h[1], h[2], h[0]


def _standard_monomial_count(lms: list, nvars: int):
    if any(not any(e) for e in lms):
        return 0
    pure = [None] * nvars
    for e in lms:
        support = [i for i, k in enumerate(e) if k]
        if len(support) == 1:
            i = support[0]
            if pure[i] is None or e[i] < pure[i]:
                pure[i] = e[i]
    if any(p is None for p in pure):
        return INFINITE
    count = 0
    seen = {(0,) * nvars}
    stack = [(0,) * nvars]
    while stack:
        e = stack.pop()
        if any(_divides(m, e) for m in lms):
            continue
        count += 1
        for i in range(nvars):
            f = e[:i] + (e[i] + 1,) + e[i + 1:]
            if f not in seen:
                seen.add(f)
                stack.append(f)
    return count


def local_quotient_dim(I: Ideal):
    """dim_C of O_{C^N,0}/I, or ``INFINITE``."""
    if not I.order.is_local:
        raise ValueError("local_quotient_dim needs a local order")
    if I.nvars == 0:
        return 0 if I.generators else 1
    lms = standard_basis(I).leading_monomials() if I.generators else []
    return _standard_monomial_count(lms, I.nvars)


def standard_monomials(I: Ideal) -> list:
    """The monomials outside the leading ideal (finite case only)."""
    lms = standard_basis(I).leading_monomials()
    if _standard_monomial_count(lms, I.nvars) is INFINITE:
        raise ValueError("infinitely many standard monomials")
    out = []
    seen = {(0,) * I.nvars}
    stack = [(0,) * I.nvars]
    while stack:
        e = stack.pop()
        if any(_divides(m, e) for m in lms):
            continue
        out.append(e)
        for i in range(I.nvars):
            f = e[:i] + (e[i] + 1,) + e[i + 1:]
            if f not in seen:
                seen.add(f)
                stack.append(f)
    return sorted(out, key=I.order.key, reverse=True)


def monomial_krull_dim(lms: list, nvars: int) -> int:
    """Krull dimension of K[x]/(lms): the largest variable set containing the
    support of no generator.  -1 for the unit ideal."""
    if any(not any(e) for e in lms):
        return -1
    supports = [frozenset(i for i, k in enumerate(e) if k) for e in lms]
    for size in range(nvars, -1, -1):
        for U in combinations(range(nvars), size):
            U = set(U)
            if not any(s <= U for s in supports):
                return size
    return 0


def leading_ideal_krull_dim(I: Ideal) -> int:
    lms = standard_basis(I).leading_monomials() if I.generators else []
    return monomial_krull_dim(lms, I.nvars)


# ---------------------------------------------------------------- ideal operations


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.nvars != J.nvars:
        raise RingMismatchError("ideals in different rings")
    return Ideal(I.generators + J.generators, I.nvars, I.order)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.nvars != J.nvars:
        raise RingMismatchError("ideals in different rings")
    return Ideal(tuple(f * g for f in I.generators for g in J.generators), I.nvars, I.order)


def _extend(p: Polynomial, extra: int = 1) -> Polynomial:
    """Embed p into a ring with ``extra`` more variables appended."""
    return Polynomial(p.nvars + extra, {e + (0,) * extra: c for e, c in p.terms.items()})


def _drop_last(p: Polynomial, count: int = 1) -> Polynomial:
    return Polynomial(p.nvars - count, {e[:-count]: c for e, c in p.terms.items()})


def eliminate(I: Ideal, variables: Iterable[int]) -> Ideal:
    """Generators of I intersected with the subring without ``variables``.

    ``I.order`` must be a block order whose global block is exactly
    ``variables``.  The result lives in the remaining variables (indices
    renumbered in order) with the local order.
    """
    variables = tuple(sorted(set(variables)))
    order = I.order
    if order.kind != "block" or not set(variables) <= set(order.global_vars):
        raise ValueError(f"variables {variables} are not in the global block of {order}")
    if set(variables) != set(order.global_vars):
        raise ValueError("the global block must consist of exactly the eliminated variables")
    keep = [i for i in range(I.nvars) if i not in variables]
    gens = []
    for g in standard_basis(I).generators:
        if all(not any(e[i] for i in variables) for e in g.terms):
            gens.append(Polynomial(len(keep), {tuple(e[i] for i in keep): c
                                               for e, c in g.terms.items()}))
    return Ideal(tuple(gens), len(keep), LOCAL)


def _aux_order(n: int) -> MonomialOrder:
    return block_order((n,), range(n))


def intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via t*I + (1-t)*J and elimination of t."""
    n = I.nvars
    if J.nvars != n:
        raise RingMismatchError("ideals in different rings")
    if not I.generators or not J.generators:
        return Ideal((), n)
    t = Polynomial.variable(n + 1, n)
    one_minus_t = Polynomial.constant(n + 1, 1) - t
    gens = [t * _extend(f) for f in I.generators] + [one_minus_t * _extend(g) for g in J.generators]
    return eliminate(Ideal(tuple(gens), n + 1, _aux_order(n)), [n])


def quotient_by_element(I: Ideal, h: Polynomial) -> Ideal:
    """(I : h) = {p : p*h in I}, computed as (I ∩ (h)) / h in the local ring."""
    n = I.nvars
    if h.is_zero():
        return Ideal.unit(n)
    meet = intersection(I, Ideal((h,), n))
    gens = []
    for q in meet.generators:
        u, quots, r = mora_division(q, [h], LOCAL)
        if not r.is_zero():
            raise ArithmeticError("intersection element not divisible by h")
        gens.append(quots[0])
    return Ideal(tuple(gens), n)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) as the intersection of the element quotients."""
    result = None
    for j in J.generators:
        q = quotient_by_element(I, j)
        result = q if result is None else intersection(result, q)
    return result if result is not None else Ideal.unit(I.nvars)


def saturate_by_element(I: Ideal, h: Polynomial) -> Ideal:
    """(I : h^inf) via I + (1 - t*h) and elimination of t."""
    n = I.nvars
    t = Polynomial.variable(n + 1, n)
    gens = [_extend(f) for f in I.generators]
    gens.append(Polynomial.constant(n + 1, 1) - t * _extend(h))
    return eliminate(Ideal(tuple(gens), n + 1, _aux_order(n)), [n])


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """Whether J ⊆ I.

    I ⊆ I + J, and two nested ideals with the same leading ideal coincide, so
    it is enough to compare leading monomials.
    """
    if J.nvars != I.nvars:
        raise RingMismatchError("ideals in different rings")
    lms = standard_basis(I).leading_monomials()
    bigger = standard_basis(Ideal(I.generators + J.generators, I.nvars, I.order))
    return all(any(_divides(m, e) for m in lms) for e in bigger.leading_monomials())


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    return ideal_contains(I, J) and ideal_contains(J, I)


def _is_complete_intersection(I: Ideal) -> bool:
    dim = leading_ideal_krull_dim(I)
    return dim >= 1 and len(I.generators) == I.nvars - dim


def saturate(I: Ideal, J: Ideal, method: str = "elimination", max_iterations: int = 50) -> Ideal:
    """(I : J^inf) in the local ring.

    ``method="elimination"`` intersects the element saturations (I : j^inf),
    each computed with one auxiliary variable.  ``method="iterate"`` repeats
    I <- (I : J) until it stabilises and raises ``SaturationLimitError``
    after ``max_iterations`` rounds.
    """
    n = I.nvars
    if J.nvars != n:
        raise RingMismatchError("ideals in different rings")
    I = standard_basis(I)
    if not J.generators:
        # V(J) is everything; I : 0^inf is the unit ideal unless I = 0
        return I if not I.generators else Ideal.unit(n)
    if I.is_unit():
        return I
    J = standard_basis(J)
    if J.is_unit():
        return I
    if method == "iterate":
        current = I
        for _ in range(max_iterations):
            nxt = standard_basis(ideal_quotient(current, J))
            if ideal_contains(current, nxt):
                return current
            current = nxt
        raise SaturationLimitError(f"saturation did not stabilise in {max_iterations} rounds")
    if method != "elimination":
        raise ValueError(f"unknown saturation method {method!r}")
    gens = J.generators
    if is_finite(local_quotient_dim(J)):
        # m-primary J: same saturation as the maximal ideal
        if _is_complete_intersection(I):
            # Cohen-Macaulay of positive dimension: m is not associated
            return I
        gens = Ideal.maximal(n).generators
    result = None
    for j in gens:
        part = standard_basis(saturate_by_element(I, j))
        if ideal_contains(I, part):
            # I is one of the intersected ideals and lies in all the others
            return I
        result = part if result is None else standard_basis(intersection(result, part))
    return result
