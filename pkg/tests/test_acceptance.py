"""Acceptance criteria 1-9.

Each criterion prints one ``PASS``/``FAIL`` line (also collected into the
pytest terminal summary).  Run directly with ``python tests/test_acceptance.py``.
"""

import itertools
import json
import os
import sys
import time
from math import prod

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from germinv import invariants as inv  # noqa: E402
from germinv.cli import run  # noqa: E402
from germinv.geometry import MAX_ROUNDS, GenericityConfig, GermVariety, generic_linear  # noqa: E402
from germinv.ring import Polynomial  # noqa: E402

from helpers import (  # noqa: E402
    P,
    germ,
    random_isolated_germ,
    random_unimodular,
    seeded,
    transform,
    transform_germ,
)

LINES = []
TIME_LIMIT = 10.0


def report(number, title, checks, elapsed):
    bad = [c for c in checks if not c[1]]
    status = "PASS" if not bad else "FAIL"
    line = f"{status}  criterion {number}: {title} ({len(checks)} checks, {elapsed:.2f}s)"
    if bad:
        line += f"; first failure: {bad[0][0]}"
    if elapsed > TIME_LIMIT:
        line += f"; over the {TIME_LIMIT:.0f}s budget"
    print(line)
    LINES.append(line)
    return not bad and elapsed <= TIME_LIMIT


def identity(p):
    return p


# ---------------------------------------------------------------- inputs


def brieskorn(exps):
    n = len(exps)
    return Polynomial(n, {tuple(a if i == j else 0 for j in range(n)): 1
                          for i, a in enumerate(exps)})


TEISSIER_NAMED = [("x^3 + y^2", 2), ("x^2 + y^2", 2), ("x^4 + y^3", 2),
                  ("x^2 + y^2 + z^2", 3), ("x^3 + y^3 + z^3", 3)]


def teissier_suite():
    rng = seeded(2024)
    named = [(text, P(text, n)) for text, n in TEISSIER_NAMED]
    randoms = [(f"random #{k}", random_isolated_germ(rng, 2 + k % 2)) for k in range(10)]
    return named + randoms


def random_surfaces():
    rng = seeded(31)
    return [random_isolated_germ(rng, 3) for _ in range(5)]


def le_greuel_suite():
    """(label, germ, f, g) with None meaning a certified-generic linear form."""
    suite = [
        ("cone, generic f, g", germ(["x*y - z^2"], 3, 2), None, None),
        ("C^2, f = x^3 + y^2, generic g", GermVariety.affine_space(2), P("x^3 + y^2", 2), None),
        ("cusp curve, generic f, g", germ(["y^2 - x^3"], 2, 1), None, None),
    ]
    for k, h in enumerate(random_surfaces()):
        suite.append((f"random surface #{k}", GermVariety(germ([], 3, 3).ideal.with_generators([h]), 2),
                      None, None))
    return suite


def moved(X, f, A):
    if A is None:
        return X, f
    X2 = X if X.is_smooth_space() else transform_germ(X, A)
    return X2, (None if f is None else transform(f, A))


# ---------------------------------------------------------------- criterion bodies
# each returns {label: value}; the expected-value checks live in the tests


def values_1(A=None, cfg=None):
    out = {}
    for n in (1, 2, 3):
        if A is not None and len(A) != n:
            continue
        for exps in itertools.product(range(2, 6), repeat=n):
            f = brieskorn(exps)
            if A is not None:
                f = transform(f, A)
            out[exps] = inv.milnor_hypersurface(f, n)
    return out


def values_2(A=None, cfg=None):
    cfg = cfg or GenericityConfig()
    out = {}
    for label, f in teissier_suite():
        n = f.nvars
        if A is not None:
            if len(A) != n:
                continue
            f = transform(f, A)
        r = inv.verify_teissier_smooth(f, n, cfg)
        mu = dict(r.terms)["mu(f)"]
        b = inv.brasselet_number(GermVariety.affine_space(n), f, cfg)
        out[label] = (r.lhs, r.rhs, mu, b - (1 + (-1) ** (n - 1) * mu))
    return out


CURVES = {"cusp y^2 - x^3": ["y^2 - x^3"], "y^2 - x^5": ["y^2 - x^5"]}


def values_3(A=None, cfg=None):
    cfg = cfg or GenericityConfig()
    out = {}
    if A is None:
        for n in (1, 2, 3, 4):
            out[f"Eu(C^{n})"] = inv.euler_obstruction(GermVariety.affine_space(n), cfg)
    germs = {name: germ(gens, 2, 1) for name, gens in CURVES.items()}
    germs["cone"] = germ(["x*y - z^2"], 3, 2)
    for name, X in germs.items():
        if A is not None:
            if len(A) != X.nvars:
                continue
            X = transform_germ(X, A)
        out[f"Eu({name})"] = inv.euler_obstruction(X, cfg)
        l = generic_linear(cfg, X.nvars, 1, stream=999)[0].polynomial()
        out[f"Eu_f({name}, generic l)"] = inv.euler_obstruction_of_function(X, l, cfg).value
        if X.dim == 1:
            out[f"I({name}, generic l)"] = inv.intersection_multiplicity(X.ideal, l)
        if X.is_complete_intersection():
            out[f"ICIS route({name})"] = 1 + (-1) ** (X.dim - 1) * inv.milnor_icis(
                list(X.generators) + [l], X.nvars)
    return out


def _suite_values(verifier, A, cfg):
    cfg = cfg or GenericityConfig()
    out = {}
    for label, X, f, g in le_greuel_suite():
        if A is not None and len(A) != X.nvars:
            continue
        X, f = moved(X, f, A)
        r = verifier(X, f, g, cfg)
        out[label] = (r.lhs, r.rhs)
    return out


def values_4(A=None, cfg=None):
    return _suite_values(inv.verify_le_greuel, A, cfg)


def values_5(A=None, cfg=None):
    return _suite_values(inv.verify_int_numb_isolated, A, cfg)


def values_6(A=None, cfg=None):
    cfg = cfg or GenericityConfig()
    out = {}
    for name, gens in (("cone", ["x*y - z^2"]), ("quadric", ["x^2 + y^2 + z^2"])):
        X = germ(gens, 3, 2)
        if A is not None:
            X = transform_germ(X, A)
        r = inv.verify_icis_le_greuel(X, None, None, cfg)
        out[name] = tuple(v for _, v in r.terms) + (r.lhs, r.rhs)
    return out


def timed(fn, *args, **kw):
    t = time.perf_counter()
    value = fn(*args, **kw)
    return value, time.perf_counter() - t


# ---------------------------------------------------------------- criteria


def test_criterion_1_milnor_oracle():
    values, dt = timed(values_1)
    checks = [(f"mu{e}", values[e] == prod(a - 1 for a in e)) for e in values]
    assert len(checks) == 4 + 16 + 64
    assert report(1, "Brieskorn Milnor numbers", checks, dt)


def test_criterion_2_teissier_smooth():
    values, dt = timed(values_2)
    checks = []
    for label, (lhs, rhs, mu, gap) in values.items():
        checks.append((f"{label}: {lhs} vs {rhs}", lhs == rhs))
        checks.append((f"{label}: B = 1 + (-1)^(N-1) mu", gap == 0))
    checks.append(("cusp 2 + 1 = 3", values["x^3 + y^2"] == (3, 3, 2, 0)))
    assert len(values) == 15
    assert report(2, "Teissier lemma in C^N", checks, dt)


def test_criterion_3_euler_obstruction():
    values, dt = timed(values_3)
    checks = [(f"Eu(C^{n}) = 1", values[f"Eu(C^{n})"] == 1) for n in (1, 2, 3, 4)]
    checks += [
        ("Eu(cusp) = 2", values["Eu(cusp y^2 - x^3)"] == 2),
        ("Eu(y^2 - x^5) = 2", values["Eu(y^2 - x^5)"] == 2),
        ("Eu(cone) = 0 by flags", values["Eu(cone)"] == 0),
        ("Eu(cone) = 0 by ICIS", values["ICIS route(cone)"] == 0),
    ]
    for name in ("cusp y^2 - x^3", "y^2 - x^5", "cone"):
        checks.append((f"ICIS route agrees on {name}",
                       values[f"ICIS route({name})"] == values[f"Eu({name})"]))
        checks.append((f"Eu_f(generic l) = 0 on {name}", values[f"Eu_f({name}, generic l)"] == 0))
    for name in CURVES:
        checks.append((f"curve multiplicity {name}",
                       values[f"I({name}, generic l)"] == values[f"Eu({name})"]))
    assert report(3, "Euler obstruction values", checks, dt)


def test_criterion_4_le_greuel():
    values, dt = timed(values_4)
    checks = [(f"{k}: {v}", v[0] == v[1]) for k, v in values.items()]
    checks.append(("cone -2 = -2", values["cone, generic f, g"] == (-2, -2)))
    checks.append(("cusp function -3 = -3", values["C^2, f = x^3 + y^2, generic g"] == (-3, -3)))
    assert len(values) == 8
    assert report(4, "Le-Greuel type identity, sign (-1)^(d-1)", checks, dt)


def test_criterion_5_int_numb_isolated():
    values, dt = timed(values_5)
    checks = [(f"{k}: {v}", v[0] == v[1]) for k, v in values.items()]
    checks.append(("cone", values["cone, generic f, g"] == (-2, -2)))
    assert len(values) == 8
    assert report(5, "Milnor fibre Euler characteristics, isolated case", checks, dt)


def test_criterion_6_icis():
    values, dt = timed(values_6)
    checks = [("cone 1 + 1 = 2", values["cone"] == (1, 1, 2, 2, 2))]
    mu_f, mu_fg, polar, lhs, rhs = values["quadric"]
    checks.append((f"quadric {mu_f} + {mu_fg} = {polar}", lhs == rhs == mu_f + mu_fg == polar))
    assert report(6, "ICIS identity", checks, dt)


def test_criterion_7_seed_stability():
    t = time.perf_counter()
    checks = []
    base = {k: fn() for k, fn in (("3", values_3), ("4", values_4), ("5", values_5),
                                   ("6", values_6))}
    for seed in (1, 2, 3):
        cfg = GenericityConfig(seed=seed)
        for key, fn in (("3", values_3), ("4", values_4), ("5", values_5), ("6", values_6)):
            checks.append((f"seed {seed}, criterion {key}", fn(cfg=cfg) == base[key]))
    # the redraw cap is never reached: certify would raise instead of returning
    rounds = []
    for seed in (1, 2, 3):
        cfg = GenericityConfig(seed=seed)
        for _, X, f, g in le_greuel_suite():
            rounds.append(inv.verify_le_greuel(X, f, g, cfg).rounds)
    checks.append((f"max rounds {max(rounds)} < {MAX_ROUNDS}", max(rounds) < MAX_ROUNDS))
    assert report(7, "seed stability over seeds 1, 2, 3", checks, time.perf_counter() - t)


def _cli(tmp_path, name, data, *argv):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return run([*argv[:1], *argv[1:], "--input", str(path)] if argv[0] != "verify"
               else [argv[0], argv[1], "--input", str(path), *argv[2:]],
               stdout=open(os.devnull, "w"), stderr=open(os.devnull, "w"))


def test_criterion_8_degeneracy(tmp_path):
    t = time.perf_counter()
    cone = {"variables": ["x", "y", "z"], "space": {"ideal": ["x*y - z^2"], "dim": 2}}
    checks = [
        ("x^2*y milnor exits 2",
         _cli(tmp_path, "a.json", {"variables": ["x", "y"], "f": "x^2*y"}, "milnor") == 2),
        ("f = g exits 2 (admissibility)",
         _cli(tmp_path, "b.json", {"variables": ["x", "y"], "f": "x^3 + y^2", "g": "x^3 + y^2"},
              "verify", "legreuel") == 2),
        ("pinned x on the cone exits 3",
         _cli(tmp_path, "c.json", cone, "eu", "--linear-form", "x") == 3),
    ]
    with pytest.raises(inv.AdmissibilityError):
        inv.verify_le_greuel(GermVariety.affine_space(2), P("x^3 + y^2", 2), P("x^3 + y^2", 2))
    assert report(8, "degeneracy detection", checks, time.perf_counter() - t)


def test_criterion_9_coordinate_invariance():
    t = time.perf_counter()
    rng = seeded(9)
    checks = []
    base = {1: values_1(), 2: values_2(), 3: values_3(), 4: values_4(), 5: values_5(),
            6: values_6()}
    fns = {1: values_1, 2: values_2, 3: values_3, 4: values_4, 5: values_5, 6: values_6}
    for k in range(3):
        mats = {n: random_unimodular(rng, n) for n in (1, 2, 3)}
        for crit, fn in fns.items():
            for n, A in mats.items():
                if crit == 6 and n != 3:
                    continue
                got = fn(A)
                want = {key: val for key, val in base[crit].items() if key in got}
                checks.append((f"change {k}, criterion {crit}, N = {n}", got == want))
    assert report(9, "invariance under 3 unimodular coordinate changes", checks,
                  time.perf_counter() - t)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
