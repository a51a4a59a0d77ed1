"""Milnor numbers, intersection multiplicities, Euler obstructions,
Brasselet numbers and identity verifiers.

Quantities that depend on a generic linear form or a generic flag of
hyperplanes are certified: each is computed for ``cfg.samples`` independent
draws, every intermediate finiteness/dimension check must pass, and all
samples must agree.  Otherwise the whole draw is repeated, up to
``cfg.max_rounds`` times.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (
    AdmissibilityError,
    DimensionMismatchError,
    GenericityError,
    InconsistencyError,
    NonIsolatedSingularityError,
    NotICISError,
    PreconditionError,
    UnsupportedCaseError,
)
from .geometry import (
    GenericityConfig,
    GermVariety,
    LinearForm,
    cut_by_function,
    cut_by_hyperplane,
    generic_linear,
    has_isolated_critical_point,
    has_isolated_singularity,
    minors_ideal,
    polar_ideal,
    regular_closure,
)
from .ring import Polynomial
from .standard_basis import (
    Ideal,
    is_finite,
    leading_ideal_krull_dim,
    local_quotient_dim,
)

log = logging.getLogger(__name__)


# ---------------------------------------------------------------- results


@dataclass
class Certified:
    """A generic-form computation with its per-sample evidence."""

    value: object
    terms: list
    certificates: list
    rounds: int = 1


@dataclass
class VerificationReport:
    identity: str
    lhs: int
    rhs: int
    terms: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    rounds: int = 1
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and all(c == self.certificates[0] for c in self.certificates)


@dataclass
class FunctionObstruction:
    value: int
    n_reg: int
    euler_obstruction: int
    brasselet: int


@dataclass(frozen=True)
class StratumDatum:
    """One stratum V_i: the ideal of its closure, its dimension and the
    Euler characteristic of its complex link (supplied by the caller)."""

    closure_ideal: Ideal
    dim: int
    chi_complex_link: int
    euler_obstruction_along: int | None = None
    label: str = ""


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# ---------------------------------------------------------------- certification


def certify(cfg: GenericityConfig, nvars: int, count: int,
            compute: Callable[[list], tuple], pinned: Sequence[LinearForm] = ()) -> Certified:
    """Run ``compute(forms) -> (value, terms)`` on independent draws until
    ``cfg.samples`` of them pass every check and agree.

    ``pinned`` forms occupy the first slots of every draw.
    """
    pinned = list(pinned)
    if count <= len(pinned):
        value, terms = compute(pinned[:count] if count else [])
        return Certified(value, terms, [value])
    failures = []
    for rnd in range(cfg.max_rounds):
        results = []
        try:
            for s in range(cfg.samples):
                drawn = generic_linear(cfg, nvars, count, stream=rnd * cfg.samples + s)
                results.append(compute(pinned + drawn[len(pinned):]))
        except GenericityError as exc:
            log.info("round %d rejected: %s", rnd + 1, exc)
            failures.append(str(exc))
            continue
        values = [r[0] for r in results]
        if all(v == values[0] for v in values):
            return Certified(values[0], results[0][1], values, rnd + 1)
        log.info("round %d rejected: samples disagree %s", rnd + 1, values)
        failures.append(f"samples disagree: {values}")
    raise GenericityError(
        f"no certified-generic draw in {cfg.max_rounds} rounds; last failure: {failures[-1]}")


# ---------------------------------------------------------------- Milnor numbers


def _check_vanishes(f: Polynomial, what: str = "f"):
    if f.is_zero():
        raise PreconditionError(f"{what} is the zero function")
    if f.constant_term() != 0:
        raise PreconditionError(f"{what} does not vanish at 0")


def milnor_hypersurface(f: Polynomial, nvars: int | None = None):
    """dim O/(df/dx_1, ..., df/dx_N); INFINITE for a non-isolated critical point."""
    n = f.nvars if nvars is None else nvars
    if f.nvars != n:
        raise PreconditionError(f"f has {f.nvars} variables, expected {n}")
    _check_vanishes(f)
    return local_quotient_dim(Ideal(tuple(f.partial(i) for i in range(n)), n))


def milnor_icis(F: Sequence[Polynomial], nvars: int | None = None) -> int:
    """Milnor number of an ICIS by the Lê-Greuel recursion over prefixes."""
    F = list(F)
    if not F:
        raise PreconditionError("empty tuple")
    n = F[0].nvars if nvars is None else nvars
    k = len(F)
    if not 1 <= k <= n:
        raise NotICISError(f"{k} equations in {n} variables")
    for i, f in enumerate(F):
        _check_vanishes(f, f"f_{i + 1}")
    previous = 0
    for j in range(1, k + 1):
        jac = [[p.partial(i) for i in range(n)] for p in F[:j]]
        ideal = Ideal(tuple(F[:j - 1]) + minors_ideal(jac, j, n).generators, n)
        total = local_quotient_dim(ideal)
        if not is_finite(total):
            raise NotICISError(f"not an ICIS along the given order: prefix of length {j} "
                               "has an infinite-dimensional minor quotient")
        mu = total - previous
        if mu < 0:
            raise NotICISError(f"negative Milnor number at prefix of length {j}")
        previous = mu
    return previous


def intersection_multiplicity(curve: Ideal, f: Polynomial):
    """dim O/(curve + (f)) for a curve germ; 0 for the empty germ."""
    _check_vanishes(f)
    k = leading_ideal_krull_dim(curve)
    if k == -1:
        return 0
    if k != 1:
        raise DimensionMismatchError(f"expected a curve, got dimension {k}")
    return local_quotient_dim(curve.with_generators([f]))


# ---------------------------------------------------------------- flag formula


def require_isolated(X: GermVariety, f: Polynomial, error=NonIsolatedSingularityError,
                     what: str = "f"):
    _check_vanishes(f, what)
    if not has_isolated_critical_point(X, f):
        raise error(f"{what} does not have an isolated singularity on X at 0")


def _level_number(Gamma: Ideal, f: Polynomial, level: int) -> int:
    k = leading_ideal_krull_dim(Gamma)
    if k == -1:
        return 0
    if k != 1:
        raise GenericityError(f"level {level}: polar set has dimension {k}, not a curve")
    value = local_quotient_dim(Gamma.with_generators([f]))
    if not is_finite(value):
        raise GenericityError(f"level {level}: polar curve has a component inside {{f = 0}}")
    return value


def flag_terms(X: GermVariety, f: Polynomial, flag: Sequence[LinearForm]) -> list:
    """Signed polar intersection numbers (-1)^(d-i-1) I(Γ_f^i, X^f ∩ H^i), i = 0..d-1.

    ``flag`` holds d-1 forms on the ambient space of X; the i-th one is the
    polar direction on X ∩ H^i and cuts out H^(i+1).
    """
    d = X.dim
    if d == 0:
        return []
    if len(flag) < d - 1:
        raise ValueError(f"need {d - 1} flag forms, got {len(flag)}")
    forms = [l.polynomial() for l in flag[:d - 1]]
    terms = []
    Xi, fi = X, f
    for i in range(d):
        if i < d - 1:
            l = forms[0]
            if l.is_zero():
                raise GenericityError(f"level {i}: flag form vanishes on the section")
            Gamma = polar_ideal(Xi, fi, l)
        else:
            Gamma = regular_closure(Xi)
        value = _level_number(Gamma, fi, i)
        terms.append((f"level {i}", _sign(d - i - 1) * value))
        if i < d - 1:
            sec = cut_by_hyperplane(Xi, LinearForm.from_polynomial(l))
            Xi, fi = sec.germ, sec.pull(fi)
            forms = [sec.pull(q) for q in forms[1:]]
            if fi.is_zero():
                raise GenericityError(f"level {i}: f vanishes on the section")
    return terms


def _brasselet_sample(X, f, flag):
    if X.dim == 0:
        return 0, []
    terms = flag_terms(X, f, flag)
    return sum(v for _, v in terms), terms


def brasselet_certified(X: GermVariety, f: Polynomial, cfg: GenericityConfig,
                        check: bool = True) -> Certified:
    if check:
        require_isolated(X, f)
    if X.dim == 0:
        return Certified(0, [], [0])
    return certify(cfg, X.nvars, X.dim - 1, lambda forms: _brasselet_sample(X, f, forms))


def brasselet_number(X: GermVariety, f: Polynomial, cfg: GenericityConfig | None = None) -> int:
    """B_{f,X}(0) as the alternating sum of polar intersection numbers over a generic flag."""
    return brasselet_certified(X, f, cfg or GenericityConfig()).value


def euler_obstruction_certified(X: GermVariety, cfg: GenericityConfig,
                                pinned: LinearForm | None = None) -> Certified:
    if X.dim == 0:
        return Certified(1, [("point", 1)], [1])
    pinned_forms = [pinned] if pinned is not None else []
    if pinned is not None:
        l = pinned.polynomial()
        if not has_isolated_critical_point(X, l):
            raise GenericityError("pinned linear form is not generic: its critical locus "
                                  "on X is not isolated")

    def compute(forms):
        l = forms[0].polynomial()
        if pinned is None and not has_isolated_critical_point(X, l):
            raise GenericityError("drawn linear form has a non-isolated critical locus on X")
        return _brasselet_sample(X, l, forms[1:])

    return certify(cfg, X.nvars, X.dim, compute, pinned_forms)


def euler_obstruction(X: GermVariety, cfg: GenericityConfig | None = None,
                      pinned: LinearForm | None = None) -> int:
    """Eu_X(0) as the Brasselet number of a certified-generic linear form."""
    return euler_obstruction_certified(X, cfg or GenericityConfig(), pinned).value


def euler_obstruction_of_function(X: GermVariety, f: Polynomial,
                                  cfg: GenericityConfig | None = None,
                                  pinned: LinearForm | None = None) -> FunctionObstruction:
    cfg = cfg or GenericityConfig()
    b = brasselet_certified(X, f, cfg).value
    eu = euler_obstruction_certified(X, cfg, pinned).value
    value = eu - b
    n_reg = _sign(X.dim) * value
    if n_reg < 0:
        raise InconsistencyError(
            f"negative Morse point count n_reg = {n_reg} (Eu = {eu}, B = {b})")
    return FunctionObstruction(value, n_reg, eu, b)


def _icis_cross_check(X: GermVariety, f: Polynomial):
    """1 + (-1)^(d-1) mu(defining tuple, f), or None when not applicable."""
    if X.dim == 0 or not X.is_complete_intersection():
        return None
    try:
        mu = milnor_icis(list(X.generators) + [f], X.nvars)
    except NotICISError:
        return None
    return 1 + _sign(X.dim - 1) * mu


def chi_milnor_fibre_isolated(X: GermVariety, f: Polynomial,
                              cfg: GenericityConfig | None = None) -> int:
    """Euler characteristic of the Milnor fibre of f on an isolated-singularity germ."""
    cfg = cfg or GenericityConfig()
    if not has_isolated_singularity(X):
        raise PreconditionError("X does not have an isolated singularity at 0")
    value = brasselet_certified(X, f, cfg).value
    cross = _icis_cross_check(X, f)
    if cross is not None and cross != value:
        raise InconsistencyError(
            f"flag formula gives {value}, ICIS Milnor number gives {cross}",
            {"flag": value, "icis": cross})
    return value


# ---------------------------------------------------------------- identities


@dataclass
class _Pair:
    """Resolved (f, g) for one sample; drawn slots raise genericity errors."""

    f: Polynomial
    g: Polynomial
    f_drawn: bool
    g_drawn: bool


def _resolve(f, g, forms):
    used = 0
    f_drawn = f is None
    if f_drawn:
        f = forms[used].polynomial()
        used += 1
    g_drawn = g is None
    if g_drawn:
        g = forms[used].polynomial()
        used += 1
    return _Pair(f, g, f_drawn, g_drawn), list(forms[used:])


def _err(drawn, precondition_cls=PreconditionError):
    return GenericityError if drawn else precondition_cls


def _proportional(f: Polynomial, g: Polynomial) -> bool:
    if set(f.terms) != set(g.terms):
        return False
    e = next(iter(f.terms))
    ratio = Fraction(f.terms[e]) / g.terms[e]
    return all(f.terms[m] == ratio * g.terms[m] for m in f.terms)


def _check_pair(X: GermVariety, pair: _Pair):
    if _proportional(pair.f, pair.g):
        raise _err(pair.f_drawn and pair.g_drawn, AdmissibilityError)(
            "non-admissible pair (f,g): f and g are proportional")
    require_isolated(X, pair.f, _err(pair.f_drawn, NonIsolatedSingularityError), "f")
    require_isolated(X, pair.g, _err(pair.g_drawn, NonIsolatedSingularityError), "g")


def _polar_number(X: GermVariety, pair: _Pair) -> int:
    """I_{X,0}(X^f, closure of Γ_{f,g}) with the admissibility checks."""
    err = _err(pair.f_drawn and pair.g_drawn, AdmissibilityError)
    Gamma = polar_ideal(X, pair.f, pair.g)
    k = leading_ideal_krull_dim(Gamma)
    if k == -1:
        return 0
    if k > 1:
        raise err(f"non-admissible pair (f,g): the rank condition holds on a set of "
                  f"dimension {k}")
    if k == 0:
        raise err("non-admissible pair (f,g): polar set is zero-dimensional")
    value = local_quotient_dim(Gamma.with_generators([pair.f]))
    if not is_finite(value):
        raise err("non-admissible pair (f,g): infinite intersection number I(X^f, Γ)")
    return value


def _cut(X: GermVariety, pair: _Pair):
    try:
        sec = cut_by_function(X, pair.g)
    except DimensionMismatchError as exc:
        raise _err(pair.g_drawn, DimensionMismatchError)(str(exc)) from None
    fg = sec.pull(pair.f)
    if X.dim - 1 >= 1 and fg.is_zero():
        raise _err(pair.g_drawn, AdmissibilityError)("f vanishes identically on X ∩ {g = 0}")
    if sec.germ.dim >= 1:
        require_isolated(sec.germ, fg,
                         _err(pair.g_drawn or pair.f_drawn, NonIsolatedSingularityError),
                         "f restricted to X ∩ {g = 0}")
    return sec, fg


def _flag_on_section(sec, flag):
    return [LinearForm.from_polynomial(p) if p else None
            for p in (sec.pull(l.polynomial()) for l in flag)]


def _section_brasselet(sec, fg, flag):
    Y = sec.germ
    if Y.dim == 0:
        return 0, []
    forms = _flag_on_section(sec, flag[:Y.dim - 1])
    if any(l is None for l in forms):
        raise GenericityError("flag form vanishes on X ∩ {g = 0}")
    return _brasselet_sample(Y, fg, forms)


def _forms_needed(X, f, g):
    return (f is None) + (g is None) + max(X.dim - 1, 0)


SIGN_NOTE = ("sign exponent d-1 applied to the polar intersection number; "
             "exponent d would give rhs = {alt}")


def verify_le_greuel(X: GermVariety, f: Polynomial | None = None, g: Polynomial | None = None,
                     cfg: GenericityConfig | None = None, pinned: LinearForm | None = None,
                     ) -> VerificationReport:
    """B_{f,X}(0) - B_{f,X^g}(0) = (-1)^(d-1) I_{X,0}(X^f, Γ_{f,g}).

    ``f`` or ``g`` left as None is replaced by a certified-generic linear form;
    ``pinned`` fixes the first such form.
    """
    cfg = cfg or GenericityConfig()
    d = X.dim
    if d < 1:
        raise UnsupportedCaseError("X must have positive dimension")

    def compute(forms):
        pair, flag = _resolve(f, g, forms)
        _check_pair(X, pair)
        polar = _polar_number(X, pair)
        sec, fg = _cut(X, pair)
        b_x, t_x = _brasselet_sample(X, pair.f, flag)
        b_g, t_g = _section_brasselet(sec, fg, flag)
        rhs = _sign(d - 1) * polar
        terms = ([("B_{f,X}", b_x)] + [(f"B_{{f,X}} {lbl}", v) for lbl, v in t_x]
                 + [("B_{f,X^g}", b_g)] + [(f"B_{{f,X^g}} {lbl}", v) for lbl, v in t_g]
                 + [("I(X^f, polar curve)", polar)])
        return (b_x - b_g, rhs), terms

    pinned_forms = [pinned] if pinned is not None else []
    res = certify(cfg, X.nvars, _forms_needed(X, f, g), compute, pinned_forms)
    lhs, rhs = res.value
    polar = dict(res.terms)["I(X^f, polar curve)"]
    report = VerificationReport("le-greuel", lhs, rhs, res.terms, res.certificates, res.rounds)
    report.notes.append(SIGN_NOTE.format(alt=_sign(d) * polar))
    return report


def verify_int_numb_isolated(X: GermVariety, f: Polynomial | None = None,
                             g: Polynomial | None = None,
                             cfg: GenericityConfig | None = None,
                             pinned: LinearForm | None = None) -> VerificationReport:
    """χ(Milnor fibre of f on X) - χ(same on X^g) = (-1)^(d-1) I_{X,0}(X^f, Γ_{f,g})
    for X with an isolated singularity."""
    cfg = cfg or GenericityConfig()
    d = X.dim
    if d < 1:
        raise UnsupportedCaseError("X must have positive dimension")
    if not has_isolated_singularity(X):
        raise PreconditionError("X does not have an isolated singularity at 0")

    def chi(Y, fy, value):
        cross = _icis_cross_check(Y, fy) if Y.dim >= 1 else None
        if cross is not None and cross != value:
            raise InconsistencyError(f"Milnor fibre Euler characteristic: flag formula {value}, "
                                     f"ICIS formula {cross}")
        return value

    def compute(forms):
        pair, flag = _resolve(f, g, forms)
        _check_pair(X, pair)
        polar = _polar_number(X, pair)
        sec, fg = _cut(X, pair)
        chi_x = chi(X, pair.f, _brasselet_sample(X, pair.f, flag)[0])
        chi_g = chi(sec.germ, fg, _section_brasselet(sec, fg, flag)[0])
        rhs = _sign(d - 1) * polar
        terms = [("chi(X ∩ f=δ)", chi_x), ("chi(X^g ∩ f=δ)", chi_g),
                 ("I(X^f, polar curve)", polar)]
        return (chi_x - chi_g, rhs), terms

    pinned_forms = [pinned] if pinned is not None else []
    res = certify(cfg, X.nvars, _forms_needed(X, f, g), compute, pinned_forms)
    lhs, rhs = res.value
    return VerificationReport("int-numb-isolated", lhs, rhs, res.terms, res.certificates,
                              res.rounds)


def verify_icis_le_greuel(X: GermVariety, f: Polynomial | None = None,
                          g: Polynomial | None = None,
                          cfg: GenericityConfig | None = None,
                          pinned: LinearForm | None = None) -> VerificationReport:
    """mu(f_1..f_{N-d}, f) + mu(f_1..f_{N-d}, f, g) = I_{X,0}(X^f, Γ_{f,g}) for an ICIS X."""
    cfg = cfg or GenericityConfig()
    if not X.is_complete_intersection():
        raise NotICISError("X is not presented as a complete intersection")
    if X.dim < 2:
        raise UnsupportedCaseError("needs dim X >= 2 so that X ∩ {f = g = 0} is an ICIS")
    if not has_isolated_singularity(X):
        raise NotICISError("X does not have an isolated singularity at 0")
    base = list(X.generators)

    def compute(forms):
        pair, _ = _resolve(f, g, forms)
        _check_pair(X, pair)
        polar = _polar_number(X, pair)
        err = _err(pair.f_drawn or pair.g_drawn, NotICISError)
        try:
            mu_f = milnor_icis(base + [pair.f], X.nvars)
            mu_fg = milnor_icis(base + [pair.f, pair.g], X.nvars)
        except NotICISError as exc:
            raise err(str(exc)) from None
        terms = [("mu(F, f)", mu_f), ("mu(F, f, g)", mu_fg), ("I(X^f, polar curve)", polar)]
        return (mu_f + mu_fg, polar), terms

    count = (f is None) + (g is None)
    pinned_forms = [pinned] if pinned is not None else []
    res = certify(cfg, X.nvars, count, compute, pinned_forms)
    lhs, rhs = res.value
    return VerificationReport("icis-le-greuel", lhs, rhs, res.terms, res.certificates, res.rounds)


def verify_teissier_smooth(f: Polynomial, nvars: int | None = None,
                           cfg: GenericityConfig | None = None,
                           pinned: LinearForm | None = None) -> VerificationReport:
    """mu(f) + mu'(f) = I_{C^N,0}({f = 0}, Γ_{f,l}) for a generic linear l."""
    cfg = cfg or GenericityConfig()
    n = f.nvars if nvars is None else nvars
    if n < 2:
        raise UnsupportedCaseError("no hyperplane section available for N = 1")
    mu = milnor_hypersurface(f, n)
    if not is_finite(mu):
        raise NonIsolatedSingularityError("f does not have an isolated critical point "
                                          "(infinite Jacobian quotient)")
    space = GermVariety.affine_space(n)

    def compute(forms):
        l = forms[0]
        sec = cut_by_hyperplane(space, l)
        fl = sec.pull(f)
        if fl.is_zero():
            raise GenericityError("f vanishes on the hyperplane")
        mu_prime = milnor_hypersurface(fl, n - 1)
        if not is_finite(mu_prime):
            raise GenericityError("hyperplane section of f is not isolated")
        inter = local_quotient_dim(polar_ideal(space, f, l.polynomial()).with_generators([f]))
        if not is_finite(inter):
            raise GenericityError("polar curve has a component inside {f = 0}")
        terms = [("mu(f)", mu), ("mu'(f)", mu_prime), ("I({f=0}, polar curve)", inter)]
        return (mu + mu_prime, inter), terms

    res = certify(cfg, n, 1, compute, [pinned] if pinned is not None else [])
    lhs, rhs = res.value
    return VerificationReport("teissier", lhs, rhs, res.terms, res.certificates, res.rounds)


def evaluate_stratified_chi(strata: Sequence[StratumDatum], f: Polynomial,
                            g: Polynomial | None = None,
                            cfg: GenericityConfig | None = None,
                            pinned: LinearForm | None = None) -> VerificationReport:
    """Stratified Lê-Greuel identity for caller-supplied stratification data.

    lhs = Σ_i (1 - χ_i) B_{f,V̄_i} - Σ_i (1 - χ_i) B_{f,V̄_i ∩ {g=0}} (the two
    Milnor-fibre Euler characteristics), rhs = Σ_{d_i ≥ 1} (-1)^(d_i - 1)
    I(X^f, Γ^i_{f,g}) (1 - χ_i), where χ_i is the complex-link Euler
    characteristic of stratum i.
    """
    cfg = cfg or GenericityConfig()
    strata = list(strata)
    if not strata:
        return VerificationReport("stratified", 0, 0, [], [(0, 0)])
    germs = []
    for idx, s in enumerate(strata):
        name = s.label or f"stratum {idx}"
        try:
            Y = GermVariety(s.closure_ideal, s.dim)
        except DimensionMismatchError as exc:
            raise DimensionMismatchError(f"{name}: {exc}") from None
        germs.append((name, s, Y))
    top = max(s.dim for s in strata)
    for name, s, _ in germs:
        if s.dim == top and s.chi_complex_link != 0:
            raise PreconditionError(f"{name}: the open stratum must have empty complex link "
                                    "(chi_complex_link = 0)")
    nvars = germs[0][2].nvars
    for name, s, Y in germs:
        if Y.dim >= 1:
            try:
                require_isolated(Y, f)
            except PreconditionError as exc:
                raise type(exc)(f"{name}: {exc}") from None

    def compute(forms):
        pair, flag = _resolve(f, g, forms)
        chi_x = chi_g = rhs = 0
        terms = []
        for name, s, Y in germs:
            if Y.dim == 0:
                terms.append((f"{name} B", 0))
                continue
            weight = 1 - s.chi_complex_link
            try:
                require_isolated(Y, pair.g, _err(pair.g_drawn, NonIsolatedSingularityError), "g")
                polar = _polar_number(Y, pair)
                sec, fg = _cut(Y, pair)
            except PreconditionError as exc:
                raise type(exc)(f"{name}: {exc}") from None
            b, _ = _brasselet_sample(Y, pair.f, flag)
            b_g, _ = _section_brasselet(sec, fg, flag)
            chi_x += weight * b
            chi_g += weight * b_g
            rhs += _sign(s.dim - 1) * polar * weight
            terms += [(f"{name} B", b), (f"{name} B on g=0", b_g), (f"{name} I(X^f, polar)", polar)]
        terms = [("chi(X ∩ f=δ)", chi_x), ("chi(X^g ∩ f=δ)", chi_g)] + terms
        return (chi_x - chi_g, rhs), terms

    res = certify(cfg, nvars, (g is None) + max(top - 1, 0), compute,
                  [pinned] if pinned is not None else [])
    lhs, rhs = res.value
    return VerificationReport("stratified", lhs, rhs, res.terms, res.certificates, res.rounds)


def stratified_milnor_fibre_chi(strata: Sequence[StratumDatum], f: Polynomial,
                                cfg: GenericityConfig | None = None) -> int:
    """Σ_i (1 - χ(lk^C(V_i, X))) B_{f,V̄_i}(0)."""
    report = evaluate_stratified_chi(strata, f, None, cfg)
    return dict(report.terms).get("chi(X ∩ f=δ)", 0)
