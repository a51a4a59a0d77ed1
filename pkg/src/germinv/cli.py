"""Command-line front end: ``germinv <command> --input problem.json``.

Problem file (JSON)::

    {"variables": ["x", "y", "z"],
     "space": {"ideal": ["x*y - z^2"], "dim": 2},
     "f": "x - y", "g": "x + y",
     "strata": [{"ideal": [...], "dim": 2, "chi_complex_link": 0}],
     "seed": 7, "samples": 3, "bound": 1000}

Exit codes: 0 ok, 1 input/parse error, 2 precondition violated,
3 genericity certification failed, 4 identity check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import invariants as inv
from .errors import GermError, ParseError
from .geometry import (
    DEFAULT_BOUND,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    GenericityConfig,
    GermVariety,
    LinearForm,
    polar_ideal,
)
from .parser import parse_polynomial
from .ring import format_polynomial
from .standard_basis import Ideal, is_finite, local_quotient_dim, standard_basis

SEED_ENV = "GERMINV_SEED"

COMMANDS = ("milnor", "icis", "imult", "polar", "eu", "brasselet", "eu-f", "chi", "verify")
VERIFY_TARGETS = ("legreuel", "teissier", "intnumb", "stratified", "icis")


class InputError(GermError):
    exit_code = 1


# ---------------------------------------------------------------- problem files


class Problem:
    def __init__(self, data: dict):
        if not isinstance(data, dict):
            raise InputError("problem file must be a JSON object")
        names = data.get("variables")
        if not isinstance(names, list) or not names or not all(isinstance(v, str) for v in names):
            raise InputError("'variables' must be a nonempty list of names")
        self.data = data
        self.names = names
        self.n = len(names)
        space = data.get("space")
        if space is None:
            self.space_gens = []
            self.dim = self.n
        else:
            self.space_gens = [self.poly(s, "space.ideal") for s in space.get("ideal", [])]
            self.dim = space.get("dim", self.n)
            if not isinstance(self.dim, int):
                raise InputError("'space.dim' must be an integer")
        self.f = self.poly(data["f"], "f") if data.get("f") is not None else None
        self.g = self.poly(data["g"], "g") if data.get("g") is not None else None
        self.strata = []
        for k, s in enumerate(data.get("strata") or []):
            try:
                gens = [self.poly(t, f"strata[{k}].ideal") for t in s.get("ideal", [])]
                self.strata.append(inv.StratumDatum(
                    Ideal(tuple(gens), self.n), int(s["dim"]), int(s["chi_complex_link"]),
                    s.get("euler_obstruction"), s.get("label") or f"stratum {k}"))
            except (KeyError, TypeError, AttributeError) as exc:
                raise InputError(f"malformed stratum {k}: {exc}") from None

    def poly(self, text, where):
        if not isinstance(text, str):
            raise InputError(f"{where}: expected a polynomial string")
        try:
            return parse_polynomial(text, self.names)
        except ParseError as exc:
            raise ParseError(f"{where}: {exc.message}", exc.position, exc.text) from None

    def germ(self) -> GermVariety:
        if not self.space_gens and self.dim == self.n:
            return GermVariety.affine_space(self.n)
        return GermVariety(Ideal(tuple(self.space_gens), self.n), self.dim)

    def need_f(self):
        if self.f is None:
            raise InputError("this command needs 'f'")
        return self.f

    def echo(self):
        out = {"variables": self.names}
        if "space" in self.data:
            out["space"] = {"ideal": list(self.data["space"].get("ideal", [])), "dim": self.dim}
        for key in ("f", "g"):
            if self.data.get(key) is not None:
                out[key] = self.data[key]
        if self.strata:
            out["strata"] = self.data["strata"]
        return out


def load_problem(path: str) -> Problem:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return Problem(data)


# ---------------------------------------------------------------- output


def _num(v):
    """Exact rendering: integers as decimal strings, Infinite as "infinite"."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_num(x) for x in v]
    if isinstance(v, dict):
        return {k: _num(x) for k, x in v.items()}
    if v is None or isinstance(v, str):
        return v
    return str(v)


def _terms(terms):
    return [{"name": name, "value": _num(value)} for name, value in terms]


class Result:
    def __init__(self, value=None, report=None, rounds=1, extra=None):
        self.value = value
        self.report = report
        self.rounds = rounds
        self.extra = extra or {}


def render_json(command, problem, result, cfg):
    out = {"command": command, "inputs": problem.echo()}
    if result.report is not None:
        r = result.report
        out["report"] = {
            "identity": r.identity,
            "lhs": _num(r.lhs),
            "rhs": _num(r.rhs),
            "pass": r.passed,
            "terms": _terms(r.terms),
            "certificates": _num([list(c) if isinstance(c, tuple) else c
                                  for c in r.certificates]),
            "notes": list(r.notes),
        }
    else:
        out["value"] = _num(result.value)
        for k, v in result.extra.items():
            out[k] = _num(v)
    out["seed"] = str(cfg.seed)
    out["samples"] = str(cfg.samples)
    out["bound"] = str(cfg.coefficient_bound)
    out["rounds"] = str(result.rounds)
    return json.dumps(out, ensure_ascii=False, indent=2)


def render_text(command, result, cfg):
    lines = []
    if result.report is not None:
        r = result.report
        lines.append(f"{r.identity}: lhs = {r.lhs}, rhs = {r.rhs}  "
                     f"[{'PASS' if r.passed else 'FAIL'}]")
        for name, value in r.terms:
            lines.append(f"  {name} = {value}")
        for note in r.notes:
            lines.append(f"  note: {note}")
    else:
        lines.append(f"{command}: {result.value}")
        for k, v in result.extra.items():
            if k == "terms":
                lines.extend(f"  {t['name']} = {t['value']}" for t in v)
                continue
            if isinstance(v, list):
                v = ", ".join(map(str, v)) or "(empty)"
            lines.append(f"  {k}: {v}")
    lines.append(f"seed {cfg.seed}, samples {cfg.samples}, bound {cfg.coefficient_bound}, "
                 f"rounds {result.rounds}")
    return "\n".join(lines)


# ---------------------------------------------------------------- commands


def _pinned(args, problem):
    if args.linear_form is None:
        return None
    p = problem.poly(args.linear_form, "--linear-form")
    try:
        return LinearForm.from_polynomial(p)
    except ValueError:
        raise InputError("--linear-form must be a nonzero homogeneous linear polynomial") from None


def cmd_milnor(problem, cfg, args):
    f = problem.need_f()
    mu = inv.milnor_hypersurface(f, problem.n)
    if not is_finite(mu):
        raise inv.NonIsolatedSingularityError(
            "f has a non-isolated critical point: the Jacobian quotient is infinite-dimensional")
    return Result(mu)


def cmd_icis(problem, cfg, args):
    F = list(problem.space_gens) + ([problem.f] if problem.f is not None else [])
    if not F:
        raise InputError("icis needs 'space.ideal' and/or 'f'")
    return Result(inv.milnor_icis(F, problem.n))


def cmd_imult(problem, cfg, args):
    value = inv.intersection_multiplicity(Ideal(tuple(problem.space_gens), problem.n),
                                          problem.need_f())
    return Result(value)


def cmd_polar(problem, cfg, args):
    X = problem.germ()
    f = problem.need_f()
    if problem.g is None:
        raise InputError("polar needs 'g'")
    G = standard_basis(polar_ideal(X, f, problem.g))
    value = local_quotient_dim(G.with_generators([f]))
    gens = [format_polynomial(p, problem.names) for p in G.generators]
    return Result(value, extra={"polar_ideal": gens})


def cmd_eu(problem, cfg, args):
    res = inv.euler_obstruction_certified(problem.germ(), cfg, _pinned(args, problem))
    return Result(res.value, rounds=res.rounds, extra={"terms": _terms(res.terms)})


def cmd_brasselet(problem, cfg, args):
    res = inv.brasselet_certified(problem.germ(), problem.need_f(), cfg)
    return Result(res.value, rounds=res.rounds, extra={"terms": _terms(res.terms)})


def cmd_eu_f(problem, cfg, args):
    r = inv.euler_obstruction_of_function(problem.germ(), problem.need_f(), cfg,
                                          _pinned(args, problem))
    return Result(r.value, extra={"n_reg": r.n_reg, "euler_obstruction": r.euler_obstruction,
                                  "brasselet": r.brasselet})


def cmd_chi(problem, cfg, args):
    return Result(inv.chi_milnor_fibre_isolated(problem.germ(), problem.need_f(), cfg))


def cmd_verify(problem, cfg, args):
    pinned = _pinned(args, problem)
    target = args.target
    if target == "teissier":
        report = inv.verify_teissier_smooth(problem.need_f(), problem.n, cfg, pinned)
    elif target == "legreuel":
        report = inv.verify_le_greuel(problem.germ(), problem.f, problem.g, cfg, pinned)
    elif target == "intnumb":
        report = inv.verify_int_numb_isolated(problem.germ(), problem.f, problem.g, cfg, pinned)
    elif target == "icis":
        report = inv.verify_icis_le_greuel(problem.germ(), problem.f, problem.g, cfg, pinned)
    else:
        if not problem.strata:
            raise InputError("verify stratified needs 'strata'")
        report = inv.evaluate_stratified_chi(problem.strata, problem.need_f(), problem.g, cfg,
                                             pinned)
    return Result(report=report, rounds=report.rounds)


HANDLERS = {
    "milnor": cmd_milnor, "icis": cmd_icis, "imult": cmd_imult, "polar": cmd_polar,
    "eu": cmd_eu, "brasselet": cmd_brasselet, "eu-f": cmd_eu_f, "chi": cmd_chi,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------- entry point


def _default_seed():
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="problem file (JSON)")
    common.add_argument("--seed", type=int, help=f"RNG seed (default: ${SEED_ENV} or {DEFAULT_SEED})")
    common.add_argument("--samples", type=int, help=f"agreeing samples required (default {DEFAULT_SAMPLES})")
    common.add_argument("--bound", type=int, help=f"coefficient bound for drawn forms (default {DEFAULT_BOUND})")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--linear-form", help="pin the generic linear form instead of drawing it")
    common.add_argument("-v", "--verbose", action="store_true", help="log redraws to stderr")

    parser = argparse.ArgumentParser(prog="germinv",
                                     description="Exact local invariants of complex germs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "verify":
            p.add_argument("target", choices=VERIFY_TARGETS)
    return parser


def resolve_config(args, problem) -> GenericityConfig:
    def pick(flag, key, default):
        if flag is not None:
            return flag
        if problem.data.get(key) is not None:
            return int(problem.data[key])
        return default

    env_seed = _default_seed()
    seed = pick(args.seed, "seed", DEFAULT_SEED if env_seed is None else env_seed)
    try:
        return GenericityConfig(seed=seed,
                                coefficient_bound=pick(args.bound, "bound", DEFAULT_BOUND),
                                samples=pick(args.samples, "samples", DEFAULT_SAMPLES))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=stderr, format="%(message)s")
    try:
        problem = load_problem(args.input)
        cfg = resolve_config(args, problem)
        result = HANDLERS[args.command](problem, cfg, args)
    except GermError as exc:
        print(f"error: {exc}", file=stderr)
        return exc.exit_code
    if args.format == "json":
        print(render_json(args.command, problem, result, cfg), file=stdout)
    else:
        print(render_text(args.command, result, cfg), file=stdout)
    if result.report is not None and not result.report.passed:
        return 4
    return 0


def main():
    sys.exit(run())
