"""Exact multivariate polynomials over the rationals and monomial orders.

Monomials are exponent tuples; a polynomial is an immutable map from
exponent tuples to nonzero rational coefficients.  Integral coefficients are
kept as plain ints (much faster than Fraction); others are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import RingMismatchError

Monomial = tuple  # tuple[int, ...], one exponent per ambient variable

GLOBAL_DEGREVLEX = "global-degrevlex"
LOCAL_DEGREVLEX = "local-degrevlex"
BLOCK = "block"


def _revlex_tail(exp):
    return tuple(-e for e in reversed(exp))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``kind`` is one of ``"global-degrevlex"``, ``"local-degrevlex"`` (lower
    total degree is larger, so 1 is the largest monomial) or ``"block"``.
    A block order compares the exponents in ``global_vars`` by global
    degrevlex first and breaks ties on ``local_vars`` by local degrevlex.
    """

    kind: str
    global_vars: tuple = ()
    local_vars: tuple = ()

    def __post_init__(self):
        if self.kind not in (GLOBAL_DEGREVLEX, LOCAL_DEGREVLEX, BLOCK):
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.kind == BLOCK and set(self.global_vars) & set(self.local_vars):
            raise ValueError("block order variable sets overlap")

    def key(self, exp):
        """Sort key: ``order.key(a) > order.key(b)`` iff a is the larger monomial."""
        if self.kind == LOCAL_DEGREVLEX:
            return (-sum(exp), _revlex_tail(exp))
        if self.kind == GLOBAL_DEGREVLEX:
            return (sum(exp), _revlex_tail(exp))
        g = [exp[i] for i in self.global_vars]
        loc = [exp[i] for i in self.local_vars]
        return (sum(g), _revlex_tail(g), -sum(loc), _revlex_tail(loc))

    @property
    def is_local(self) -> bool:
        return self.kind == LOCAL_DEGREVLEX or (self.kind == BLOCK and not self.global_vars)

    @property
    def is_global(self) -> bool:
        return self.kind == GLOBAL_DEGREVLEX or (self.kind == BLOCK and not self.local_vars)


GLOBAL = MonomialOrder(GLOBAL_DEGREVLEX)
LOCAL = MonomialOrder(LOCAL_DEGREVLEX)


def block_order(global_vars: Iterable[int], local_vars: Iterable[int]) -> MonomialOrder:
    return MonomialOrder(BLOCK, tuple(global_vars), tuple(local_vars))


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """Return 1, 0 or -1 as m1 is larger than, equal to or smaller than m2."""
    if len(m1) != len(m2):
        raise RingMismatchError("monomials of different lengths")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


def _coerce(c) -> int | Fraction:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return int(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class Polynomial:
    """Immutable polynomial in ``nvars`` variables with rational coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise RingMismatchError(f"monomial {exp} does not have {nvars} exponents")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _coerce(c) + clean.get(exp, 0)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = _coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exp), {tuple(exp): coeff})

    # accessors

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the vanishing order at 0); -1 for zero."""
        return min((sum(e) for e in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def variables_used(self) -> set:
        return {i for e in self._terms for i, k in enumerate(e) if k}

    def sorted_terms(self, order: MonomialOrder = GLOBAL):
        """Terms as ``(exp, coeff)`` pairs in decreasing order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=order.key)
        return exp, self._terms[exp]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    # arithmetic

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.nvars != self.nvars:
            raise RingMismatchError(
                f"polynomials in {self.nvars} and {other.nvars} variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            s = terms.get(exp, 0) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exp, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): c * v for e, v in self._terms.items()})

    def partial(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise RingMismatchError(f"variable index {i} out of range")
        terms = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                d = list(e)
                d[i] = k - 1
                terms[tuple(d)] = c * k
        return Polynomial._raw(self.nvars, terms)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace variable i by ``images[i]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise RingMismatchError("need one image per variable")
        if not images:
            return Polynomial._raw(0, dict(self._terms))
        m = images[0].nvars
        if any(q.nvars != m for q in images):
            raise RingMismatchError("substitution images live in different rings")
        powers = [[Polynomial.constant(m, 1)] for _ in images]

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1] * images[i])
            return cache[k]

        total: dict = {}
        for e, c in self._terms.items():
            term = Polynomial.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for exp, v in term._terms.items():
                total[exp] = total.get(exp, 0) + v
        return Polynomial._raw(m, {e: c for e, c in total.items() if c})

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial._raw(
            self.nvars, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def content_free(self) -> "Polynomial":
        """Scale to an integer polynomial with coprime coefficients and
        positive leading coefficient in the global order."""
        from math import gcd, lcm

        if not self._terms:
            return self
        den = lcm(*(c.denominator for c in self._terms.values()))
        nums = [int(c * den) for c in self._terms.values()]
        g = gcd(*nums)
        lead = self.leading_term(GLOBAL)[1]
        sign = 1 if lead > 0 else -1
        return self.scale(Fraction(sign * den, g))

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        names = default_names(self.nvars)
        return f"Polynomial({format_polynomial(self, names)!r})"

    def to_string(self, names: Sequence[str], order: MonomialOrder = GLOBAL) -> str:
        return format_polynomial(self, names, order)


def default_names(n: int) -> list:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, names: Sequence[str], order: MonomialOrder = GLOBAL) -> str:
    """Render in decreasing ``order``; output re-parses to the same polynomial."""
    if len(names) != p.nvars:
        raise RingMismatchError("need one name per variable")
    if p.is_zero():
        return "0"
    out = []
    for i, (exp, c) in enumerate(p.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        factors = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, exp) if k]
        if not factors:
            body = _format_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(a)] + factors)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# functional arithmetic entry points


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    return p.partial(i)


def linear_change(p: Polynomial, matrix: Sequence[Sequence]) -> Polynomial:
    """Apply ``x = matrix @ y``: substitute x_i by sum_j matrix[i][j] y_j."""
    n = p.nvars
    m = len(matrix[0]) if matrix else 0
    images = []
    for row in matrix:
        terms = {}
        for j, a in enumerate(row):
            if a:
                e = [0] * m
                e[j] = 1
                terms[tuple(e)] = a
        images.append(Polynomial(m, terms))
    if len(images) != n:
        raise RingMismatchError("matrix row count must equal the variable count")
    return p.substitute(images)
