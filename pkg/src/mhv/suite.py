"""Orchestration of the exhaustive verification checks.

run_suite executes a selection of named checks at a common window and
e-mode and returns one Report per check.  All checks compute residuals
symbolically; a numeric run evaluates every reported value at the fixed
rational e afterwards, which is exactly the contract the JSON reports
promise (a numeric report is the symbolic report evaluated at e).  The
window-level admissibility guard refuses a numeric e whose pole degree
-1/e lies inside the window itself, where the product table would be
undefined on the window's own output degrees.

Check names, in canonical order:

    jacobi antisym grading lsa-identity compatibility bider-family
    bider-grid commuting postlie-grid lsa-bider-grid star ast
    cross-check solve-theta

The environment variable MHV_WORKERS caps process parallelism for the
large triple sweeps (default 1); reports are merged deterministically,
so output is byte-identical for any worker count.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import get_context

from .algebra import FULL, C, Element, L, basis_vectors, bracket, grading_degree
from .biderivations import (LinearMap, check_bider_converse, check_family,
                            check_commuting, lsa_bider_grid, post_lie_grid)
from .coeffs import (ast_residuals, cross_check, solve_theta, star_residuals,
                     closed_form_fns)
from .linalg import InconsistentSystemError, UnderdeterminedSystemError
from .lsa import (SYMBOLIC, EpsMode, lsa_associator_defect, lsa_commutator)
from .reports import Failure, Report
from .scalars import sc

CHECK_ORDER = (
    "jacobi", "antisym", "grading", "lsa-identity", "compatibility",
    "bider-family", "bider-grid", "commuting", "postlie-grid",
    "lsa-bider-grid", "star", "ast", "cross-check", "solve-theta",
)


@dataclass
class RunConfig:
    window: int = 5
    eps: EpsMode = SYMBOLIC
    checks: tuple = CHECK_ORDER
    fmt: str = "json"

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be at least 1")
        unknown = [c for c in self.checks if c not in CHECK_ORDER]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        if self.fmt not in ("json", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")


def workers_from_env() -> int:
    raw = os.environ.get("MHV_WORKERS", "1")
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"MHV_WORKERS must be an integer, got {raw!r}")
    return max(count, 1)


# ---------------------------------------------------------------------------
# sweep bodies: generators of (inputs, equation_id, residual Element)
# ---------------------------------------------------------------------------

def _jacobi_cases(window: int, lo: int, hi: int):
    basis = basis_vectors(window, FULL)
    for x in basis[lo:hi]:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            for z in basis:
                ez = Element.basis(z)
                residual = bracket(ex, bracket(ey, ez)) \
                    + bracket(ey, bracket(ez, ex)) \
                    + bracket(ez, bracket(ex, ey))
                yield (f"({x.render()}, {y.render()}, {z.render()})",
                       "jacobi", residual)


def _antisym_cases(window: int, lo: int, hi: int):
    basis = basis_vectors(window, FULL)
    for x in basis[lo:hi]:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            residual = bracket(ex, ey) + bracket(ey, ex)
            yield (f"({x.render()}, {y.render()})", "antisym", residual)


def _grading_cases(window: int, lo: int, hi: int):
    basis = basis_vectors(window, FULL)
    for x in basis[lo:hi]:
        ex = Element.basis(x)
        for y in basis:
            value = bracket(ex, Element.basis(y))
            inputs = f"({x.render()}, {y.render()})"
            if value.is_zero():
                yield (inputs, "grading", Element.zero())
                continue
            expected = x.degree() + y.degree()
            if grading_degree(value) == expected:
                yield (inputs, "grading", Element.zero())
            else:
                yield (inputs, "grading", value)


def _lsa_identity_cases(window: int, lo: int, hi: int):
    basis = basis_vectors(window, FULL)
    for x in basis[lo:hi]:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            for z in basis:
                ez = Element.basis(z)
                residual = lsa_associator_defect(ex, ey, ez, SYMBOLIC)
                yield (f"({x.render()}, {y.render()}, {z.render()})",
                       "lsa.identity", residual)


def _compatibility_cases(window: int, lo: int, hi: int):
    basis = basis_vectors(window, FULL)
    for x in basis[lo:hi]:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            residual = lsa_commutator(ex, ey, SYMBOLIC) - bracket(ex, ey)
            yield (f"({x.render()}, {y.render()})", "lsa.compat", residual)


_SWEEPS = {
    "jacobi": _jacobi_cases,
    "antisym": _antisym_cases,
    "grading": _grading_cases,
    "lsa-identity": _lsa_identity_cases,
    "compatibility": _compatibility_cases,
}


def _sweep_chunk(args: tuple) -> tuple:
    name, window, lo, hi = args
    cases = 0
    failures = []
    for inputs, eq_id, residual in _SWEEPS[name](window, lo, hi):
        cases += 1
        if not residual.is_zero():
            failures.append((inputs, eq_id, residual.render()))
    return cases, failures


def _run_sweep(name: str, window: int, workers: int) -> Report:
    size = len(basis_vectors(window, FULL))
    if workers <= 1:
        cases, raw_failures = _sweep_chunk((name, window, 0, size))
    else:
        workers = min(workers, size)
        bounds = [(size * i // workers, size * (i + 1) // workers)
                  for i in range(workers)]
        jobs = [(name, window, lo, hi) for lo, hi in bounds]
        with get_context("fork").Pool(workers) as pool:
            parts = pool.map(_sweep_chunk, jobs)
        cases = sum(p[0] for p in parts)
        raw_failures = [f for p in parts for f in p[1]]
    failures = [Failure(*f) for f in raw_failures]
    return Report(name, window, "symbolic", cases, failures).sorted()


# ---------------------------------------------------------------------------
# the remaining checks
# ---------------------------------------------------------------------------

def _commuting_specs(window: int) -> list:
    """Three deterministic (lambda, tau) samples with tau valued in the
    center on a few window basis vectors."""
    import random
    rng = random.Random(7)
    specs = []
    basis = basis_vectors(window, FULL)
    for i in range(3):
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 4)) \
            * (1 if rng.random() < 0.5 else -1)
        tau = {}
        for bv in rng.sample(basis, 3):
            tau[bv] = Element.of((Fraction(rng.randint(-3, 3)), C),
                                 (Fraction(rng.randint(-3, 3)), L))
        specs.append(LinearMap.from_spec(sc(lam), tau, name=f"sample{i}"))
    return specs


def _check_commuting_samples(window: int) -> Report:
    failures = []
    cases = 0
    for phi in _commuting_specs(window):
        sub = check_commuting(phi, window)
        cases += sub.total_cases
        for failure in sub.failures:
            failures.append(Failure(f"{phi.name} {failure.inputs}",
                                    failure.equation_id, failure.residual))
    return Report("commuting", window, "symbolic", cases, failures).sorted()


def _check_star(window: int) -> Report:
    fns = closed_form_fns()
    failures = []
    cases = 0
    rng = range(-window, window + 1)
    for m in rng:
        for n in rng:
            for k in rng:
                for eq_id, residual in star_residuals(fns, m, n, k):
                    cases += 1
                    if not residual.is_zero():
                        failures.append(Failure(f"({m}, {n}, {k})", eq_id,
                                                residual.render()))
    return Report("star", window, "symbolic", cases, failures).sorted()


def _check_ast(window: int) -> Report:
    fns = closed_form_fns()
    failures = []
    cases = 0
    rng = range(-window, window + 1)
    for m in rng:
        for n in rng:
            for k in rng:
                for eq_id, residual in ast_residuals(fns, m, n, k):
                    cases += 1
                    if not residual.is_zero():
                        failures.append(Failure(f"({m}, {n}, {k})", eq_id,
                                                residual.render()))
    return Report("ast", window, "symbolic", cases, failures).sorted()


def _check_solve_theta(window: int) -> Report:
    failures = []
    extra = {}
    cases = 0
    try:
        table = solve_theta(max(window, 2))
        cases = table.equations
        extra = {
            "unknowns": table.unknowns,
            "rank": table.rank,
            "equations": table.equations,
            "theta": {str(n): str(v)
                      for n, v in sorted(table.values.items())},
        }
        for n, value in sorted(table.values.items()):
            expected = Fraction(2 * n + 1, 4)
            if value != expected:
                failures.append(Failure(f"theta({n})", "theta.value",
                                        f"{value} != {expected}"))
    except (InconsistentSystemError, UnderdeterminedSystemError) as exc:
        failures.append(Failure(f"window={window}", "theta.system", str(exc)))
    return Report("solve-theta", window, "symbolic", cases, failures,
                  extra).sorted()


def run_suite(config: RunConfig, workers: int | None = None) -> list:
    """Execute the selected checks and return one Report each."""
    if workers is None:
        workers = workers_from_env()
    if not config.eps.is_symbolic:
        config.eps.ensure_admissible(config.window)

    reports = []
    for name in config.checks:
        if name in _SWEEPS:
            report = _run_sweep(name, config.window, workers)
        elif name == "bider-family":
            report = check_family(config.window)
        elif name == "bider-grid":
            report = check_bider_converse(config.window)
        elif name == "commuting":
            report = _check_commuting_samples(config.window)
        elif name == "postlie-grid":
            report = post_lie_grid(config.window)
        elif name == "lsa-bider-grid":
            report = lsa_bider_grid(config.window, SYMBOLIC)
        elif name == "star":
            report = _check_star(config.window)
        elif name == "ast":
            report = _check_ast(config.window)
        elif name == "cross-check":
            report = cross_check(config.window)
        else:  # solve-theta
            report = _check_solve_theta(config.window)
        if not config.eps.is_symbolic:
            report = report.evaluated_at(config.eps.eps)
        reports.append(report)
    return reports
