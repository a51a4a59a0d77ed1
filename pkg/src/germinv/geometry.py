"""Germs, Jacobian minors, singular loci, relative polar curves and
hyperplane sections."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .errors import DimensionMismatchError, GenericityError, RingMismatchError
from .ring import Polynomial
from .standard_basis import (
    Ideal,
    is_finite,
    leading_ideal_krull_dim,
    local_quotient_dim,
    saturate,
    standard_basis,
)

DEFAULT_SEED = 20240601
DEFAULT_BOUND = 1000
DEFAULT_SAMPLES = 3
MAX_ROUNDS = 10


@dataclass(frozen=True)
class GermVariety:
    """A germ (X, 0) in (C^N, 0) cut out by ``ideal`` with declared dimension ``dim``.

    An empty ideal means X = C^N.  Construction checks that 0 lies on X and
    that the leading ideal has Krull dimension ``dim``.
    """

    ideal: Ideal
    dim: int
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        I = self.ideal
        for g in I.generators:
            if g.constant_term() != 0:
                raise DimensionMismatchError("0 is not a point of the germ: "
                                             "a generator has nonzero constant term")
        if not 0 <= self.dim <= I.nvars:
            raise DimensionMismatchError(f"dimension {self.dim} outside 0..{I.nvars}")
        if self.check:
            k = leading_ideal_krull_dim(I)
            if k != self.dim:
                raise DimensionMismatchError(
                    f"declared dimension {self.dim} but the germ has dimension {k}")

    @classmethod
    def from_polynomials(cls, generators: Sequence[Polynomial], nvars: int, dim: int,
                         check: bool = True) -> "GermVariety":
        return cls(Ideal(tuple(generators), nvars), dim, check)

    @classmethod
    def affine_space(cls, nvars: int) -> "GermVariety":
        return cls(Ideal((), nvars), nvars, False)

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    @property
    def generators(self) -> tuple:
        return self.ideal.generators

    @property
    def codim(self) -> int:
        return self.nvars - self.dim

    def is_smooth_space(self) -> bool:
        return not self.ideal.generators

    def is_complete_intersection(self) -> bool:
        return len(self.ideal.generators) == self.codim


@dataclass(frozen=True)
class GenericityConfig:
    seed: int = DEFAULT_SEED
    coefficient_bound: int = DEFAULT_BOUND
    samples: int = DEFAULT_SAMPLES
    max_rounds: int = MAX_ROUNDS

    def __post_init__(self):
        if self.coefficient_bound < 1:
            raise ValueError("coefficient bound must be positive")
        if self.samples < 2:
            raise ValueError("certification needs at least 2 samples")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be positive")


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear form sum c_i x_i (vanishes at 0 by construction)."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not any(coeffs):
            raise ValueError("linear form must not be zero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def polynomial(self) -> Polynomial:
        n = self.nvars
        return Polynomial(n, {tuple(int(i == j) for j in range(n)): c
                              for i, c in enumerate(self.coefficients) if c})

    def primitive(self) -> list:
        """Integer coefficient vector with gcd 1 spanning the same hyperplane."""
        den = lcm(*(c.denominator for c in self.coefficients))
        ints = [int(c * den) for c in self.coefficients]
        g = gcd(*ints)
        return [v // g for v in ints]

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "LinearForm":
        if p.is_zero() or any(sum(e) != 1 for e in p.terms):
            raise ValueError("not a nonzero homogeneous linear polynomial")
        coeffs = [Fraction(0)] * p.nvars
        for e, c in p.terms.items():
            coeffs[e.index(1)] = c
        return cls(tuple(coeffs))


def is_linear_form(p: Polynomial) -> bool:
    return bool(p) and all(sum(e) == 1 for e in p.terms)


# ---------------------------------------------------------------- matrices


def jacobian_stack(X: GermVariety, fns: Sequence[Polynomial]) -> list:
    """Rows of partial derivatives: generators of I_X first, then ``fns``."""
    n = X.nvars
    rows = []
    for p in tuple(X.generators) + tuple(fns):
        if p.nvars != n:
            raise RingMismatchError("function and germ live in different rings")
        rows.append([p.partial(i) for i in range(n)])
    return rows


def determinant(M: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row, memoised on column subsets."""
    k = len(M)
    memo = {}

    def det(r, cols):
        if r == k:
            return Polynomial.constant(M[0][0].nvars, 1)
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = Polynomial.zero(M[0][0].nvars)
        for pos, c in enumerate(cols):
            entry = M[r][c]
            if entry:
                minor = det(r + 1, cols[:pos] + cols[pos + 1:])
                term = entry * minor
                total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return det(0, tuple(range(k)))


def minors(M: Sequence[Sequence[Polynomial]], k: int) -> list:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if k < 1:
        raise ValueError("minor size must be at least 1")
    if k > rows or k > cols:
        return []
    out = []
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            out.append(determinant([[M[r][c] for c in cs] for r in rs]))
    return out


def minors_ideal(M: Sequence[Sequence[Polynomial]], k: int, nvars: int | None = None) -> Ideal:
    """Ideal of all k x k minors; the zero ideal when k exceeds a dimension."""
    if nvars is None:
        if not M or not M[0]:
            raise ValueError("nvars needed for an empty matrix")
        nvars = M[0][0].nvars
    seen = []
    for m in minors(M, k):
        if m and m not in seen and -m not in seen:
            seen.append(m)
    return Ideal(tuple(seen), nvars)


# ---------------------------------------------------------------- loci


@lru_cache(maxsize=256)
def singular_locus_ideal(X: GermVariety) -> Ideal:
    """I_X plus the codim-sized Jacobian minors; the unit ideal for C^N."""
    n = X.nvars
    if X.is_smooth_space():
        return Ideal.unit(n)
    jac = minors_ideal(jacobian_stack(X, []), X.codim, n) if X.codim else Ideal((), n)
    return Ideal(X.generators + jac.generators, n)


def has_isolated_singularity(X: GermVariety) -> bool:
    """Whether Sing(X) is at most the origin."""
    return is_finite(local_quotient_dim(singular_locus_ideal(X)))


def regular_closure(X: GermVariety) -> Ideal:
    """I_X with components inside Sing(X) removed."""
    if X.is_smooth_space():
        return X.ideal
    return saturate(X.ideal, singular_locus_ideal(X))


def critical_ideal(X: GermVariety, f: Polynomial, saturated: bool = True) -> Ideal:
    """Critical locus of f on the regular part of X."""
    n = X.nvars
    raw = Ideal(X.generators + minors_ideal(jacobian_stack(X, [f]), X.codim + 1, n).generators, n)
    if not saturated or X.is_smooth_space():
        return raw
    return saturate(raw, singular_locus_ideal(X))


def has_isolated_critical_point(X: GermVariety, f: Polynomial) -> bool:
    raw = critical_ideal(X, f, saturated=False)
    if is_finite(local_quotient_dim(raw)):
        return True
    if X.is_smooth_space():
        return False
    return is_finite(local_quotient_dim(saturate(raw, singular_locus_ideal(X))))


def polar_ideal(X: GermVariety, f: Polynomial, g: Polynomial) -> Ideal:
    """Ideal of the closure of the relative polar set of (f, g) on X_reg.

    The rank condition on X_reg is the vanishing of the (codim+2)-minors of
    [Jac(I_X); df; dg]; components inside Sing(X) are saturated away.  When
    no such minors exist the condition is vacuous and the result is X itself.
    """
    n = X.nvars
    k = X.codim + 2
    raw = Ideal(X.generators + minors_ideal(jacobian_stack(X, [f, g]), k, n).generators, n)
    if X.is_smooth_space():
        return standard_basis(raw)
    return saturate(raw, singular_locus_ideal(X))


# ---------------------------------------------------------------- generic forms


def _rng(cfg: GenericityConfig, stream: int, nvars: int) -> random.Random:
    return random.Random(f"germinv:{cfg.seed}:{stream}:{nvars}")


def generic_linear(cfg: GenericityConfig, nvars: int, count: int, stream: int = 0) -> list:
    """``count`` pseudo-random integer linear forms, reproducible per (seed, stream)."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = _rng(cfg, stream, nvars)
    b = cfg.coefficient_bound
    forms = []
    while len(forms) < count:
        v = [rng.randint(-b, b) for _ in range(nvars)]
        if any(v):
            forms.append(LinearForm(tuple(v)))
    return forms


# ---------------------------------------------------------------- sections


def unimodular_completion(c: Sequence[int]) -> list:
    """Integer matrix A with det ±1 and c·A = e_last, for a primitive vector c."""
    n = len(c)
    v = list(c)
    if gcd(*v) != 1:
        raise ValueError("vector is not primitive")
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    while sum(1 for x in v if x) > 1:
        k = min((i for i in range(n) if v[i]), key=lambda i: abs(v[i]))
        for j in range(n):
            if j != k and v[j]:
                q = v[j] // v[k]
                v[j] -= q * v[k]
                for row in A:
                    row[j] -= q * row[k]
    k = next(i for i in range(n) if v[i])
    if v[k] < 0:
        for row in A:
            row[k] = -row[k]
    for row in A:
        row[k], row[n - 1] = row[n - 1], row[k]
    return A


def section_substitution(h: LinearForm) -> list:
    """Images of x_1..x_N in new coordinates y_1..y_{N-1} on the hyperplane h = 0."""
    n = h.nvars
    A = unimodular_completion(h.primitive())
    images = []
    for row in A:
        terms = {}
        for j in range(n - 1):
            if row[j]:
                terms[tuple(int(j == i) for i in range(n - 1))] = row[j]
        images.append(Polynomial(n - 1, terms))
    return images


@dataclass(frozen=True)
class Section:
    germ: GermVariety
    images: tuple

    def pull(self, p: Polynomial) -> Polynomial:
        """Restrict a function on the ambient space to the section's coordinates."""
        return p.substitute(self.images)


def cut_by_hyperplane(X: GermVariety, h: LinearForm) -> Section:
    if h.nvars != X.nvars:
        raise RingMismatchError("linear form and germ live in different rings")
    images = tuple(section_substitution(h))
    gens = tuple(g.substitute(images) for g in X.generators)
    n = X.nvars - 1
    Y = GermVariety(Ideal(gens, n), X.dim - 1, check=False) if X.dim >= 1 else None
    if Y is None or leading_ideal_krull_dim(Y.ideal) != X.dim - 1:
        raise GenericityError("hyperplane section does not drop the dimension by one")
    return Section(Y, images)


def hyperplane_section(X: GermVariety, h: LinearForm) -> GermVariety:
    """X ∩ {h = 0} in N-1 coordinates, after a unimodular change sending h to the last variable."""
    return cut_by_hyperplane(X, h).germ


def cut_by_function(X: GermVariety, g: Polynomial) -> Section:
    """X ∩ {g = 0}: a hyperplane section for linear g, otherwise an added equation."""
    if is_linear_form(g):
        return cut_by_hyperplane(X, LinearForm.from_polynomial(g))
    n = X.nvars
    Y = GermVariety(Ideal(X.generators + (g,), n), X.dim - 1, check=False)
    if X.dim < 1 or leading_ideal_krull_dim(Y.ideal) != X.dim - 1:
        raise DimensionMismatchError("X ∩ {g = 0} does not have dimension dim X - 1")
    return Section(Y, tuple(Polynomial.variable(n, i) for i in range(n)))
