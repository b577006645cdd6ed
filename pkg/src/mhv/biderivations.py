"""Biderivations of the mirror Heisenberg-Virasoro algebra and their
applications: commuting maps, commutative post-Lie structures, and
biderivations of the graded left-symmetric algebra.

The classified two-parameter family is

    f(x, y) = lambda [x, y] + Upsilon_Omega(x, y),

where Upsilon_Omega is supported on d,d pairs,

    Upsilon_Omega(d_m, d_n) = sum_k (k+1/2) mu_k h_{m+n+k+1/2},

and Omega = (mu_k) has finite support.  The family arises on the
centerless quotient and the derivation axioms hold there; that is the
default mode of check_biderivation.  Over the centrally extended algebra
the h-valued image of Upsilon brackets into the central l (for example
[Upsilon(d_0, d_0), h_{-1/2}] = mu_0/4 * l), and no central correction
of the family can absorb the resulting residual, so in FULL mode only
the inner members (Omega empty) satisfy the axioms; full mode is kept
available precisely to exhibit that obstruction.

The converse is certified in bounded brute-force form by
check_bider_converse, which solves the (centerless) axiom equations
exactly over a declared candidate space of bilinear shapes and confirms
that the solution set is precisely the family span.

check_post_lie and check_lsa_biderivation test the commutative post-Lie
axioms and the left-symmetric biderivation axioms for a family member;
swept over a finite parameter grid they certify the two triviality
statements: only lambda = 0, Omega = {} survives either axiom system.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .algebra import (C, CENTERLESS, FULL, BasisVector, Element, L,
                      basis_vectors, bracket, d, h)
from .linalg import RowReducer
from .lsa import SYMBOLIC, EpsMode, lsa_product
from .reports import Failure, Report
from .scalars import Scalar, sc


class BiderParams:
    """A member (lambda, Omega) of the classified biderivation family."""

    __slots__ = ("lam", "omega")

    def __init__(self, lam: Scalar | int | Fraction,
                 omega: dict | None = None):
        self.lam = lam if isinstance(lam, Scalar) else sc(lam)
        cleaned = {}
        for k, mu in (omega or {}).items():
            mu = mu if isinstance(mu, Scalar) else sc(mu)
            if not mu.is_zero():
                cleaned[int(k)] = mu
        self.omega = cleaned

    def is_zero(self) -> bool:
        return self.lam.is_zero() and not self.omega

    def describe(self) -> str:
        entries = ", ".join(f"{k}: {mu}" for k, mu in sorted(self.omega.items()))
        return f"lambda={self.lam}, omega={{{entries}}}"

    def __repr__(self) -> str:
        return f"BiderParams({self.describe()})"


def upsilon(params: BiderParams, x: Element, y: Element) -> Element:
    """The exceptional component: nonzero only on d,d term pairs."""
    if not params.omega:
        return Element.zero()
    acc = Element.zero()
    for u, cu in x.terms():
        if u.tag != "d":
            continue
        for v, cv in y.terms():
            if v.tag != "d":
                continue
            weight = cu * cv
            pairs = []
            for k, mu in sorted(params.omega.items()):
                coeff = sc(Fraction(2 * k + 1, 2)) * mu * weight
                pairs.append((coeff, h(u.index + v.index + k)))
            acc = acc + Element.of(*pairs)
    return acc


def bider_eval(params: BiderParams, x: Element, y: Element) -> Element:
    """lambda [x, y] + Upsilon_Omega(x, y)."""
    acc = Element.zero()
    if not params.lam.is_zero():
        acc = bracket(x, y, FULL).scale(params.lam)
    if params.omega:
        acc = acc + upsilon(params, x, y)
    return acc


class BilinearTable:
    """A candidate bilinear map given by its values on basis pairs.

    The evaluator must be total on basis vectors (return the zero element
    where the map vanishes); dict-backed tables default missing pairs to
    zero.  Bilinear extension to arbitrary elements is provided here.
    """

    __slots__ = ("evaluator", "name")

    def __init__(self, evaluator: Callable[[BasisVector, BasisVector], Element],
                 name: str = "table"):
        self.evaluator = evaluator
        self.name = name

    @staticmethod
    def from_params(params: BiderParams,
                    mode: AlgebraMode = FULL) -> "BilinearTable":
        def evaluate(u: BasisVector, v: BasisVector) -> Element:
            eu, ev = Element.basis(u), Element.basis(v)
            out = upsilon(params, eu, ev)
            if not params.lam.is_zero():
                out = out + bracket(eu, ev, mode).scale(params.lam)
            return out
        return BilinearTable(evaluate, params.describe())

    @staticmethod
    def from_dict(entries: dict, name: str = "table") -> "BilinearTable":
        def evaluate(u: BasisVector, v: BasisVector) -> Element:
            return entries.get((u, v), Element.zero())
        return BilinearTable(evaluate, name)

    def __call__(self, x: Element, y: Element) -> Element:
        acc = Element.zero()
        for u, cu in x.terms():
            for v, cv in y.terms():
                base = self.evaluator(u, v)
                if not base.is_zero():
                    acc = acc + base.scale(cu * cv)
        return acc


def project_centerless(x: Element) -> Element:
    """Drop the central components (the quotient map onto the centerless
    algebra)."""
    return Element({bv: coeff for bv, coeff in x.terms()
                    if not bv.is_central()}, _clean=True)


def _axiom_residuals(f, x: Element, y: Element, z: Element,
                     mode: AlgebraMode = FULL) -> list:
    """Residuals of the two derivation axioms at (x, y, z)."""
    if mode is FULL:
        fxz, fyz, fxy = f(x, z), f(y, z), f(x, y)
    else:
        fxz = project_centerless(f(x, z))
        fyz = project_centerless(f(y, z))
        fxy = project_centerless(f(x, y))
    left = f(bracket(x, y, mode), z) - bracket(fxz, y, mode) \
        - bracket(x, fyz, mode)
    right = f(x, bracket(y, z, mode)) - bracket(fxy, z, mode) \
        - bracket(y, fxz, mode)
    if mode is not FULL:
        left = project_centerless(left)
        right = project_centerless(right)
    return [("bider.left", left), ("bider.right", right)]


def check_biderivation(cand: BilinearTable, window: int,
                       mode: AlgebraMode = CENTERLESS) -> Report:
    """Both derivation axioms on every basis triple of the window.

    The default mode is the centerless quotient, where the classified
    family lives; FULL mode additionally exercises the central extension
    and rejects every candidate with a nonzero Upsilon part."""
    basis = basis_vectors(window, mode)
    failures = []
    cases = 0
    for x in basis:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            for z in basis:
                ez = Element.basis(z)
                for eq_id, residual in _axiom_residuals(cand, ex, ey, ez,
                                                        mode):
                    cases += 1
                    if not residual.is_zero():
                        inputs = f"({x.render()}, {y.render()}, {z.render()})"
                        failures.append(Failure(inputs, eq_id,
                                                residual.render()))
    return Report(f"biderivation[{cand.name}]", window, "symbolic",
                  cases, failures, {"mode": mode.value}).sorted()


# ---------------------------------------------------------------------------
# commuting maps
# ---------------------------------------------------------------------------

class LinearMap:
    """A linear map given on basis vectors, extended by linearity."""

    __slots__ = ("evaluator", "name")

    def __init__(self, evaluator: Callable[[BasisVector], Element],
                 name: str = "map"):
        self.evaluator = evaluator
        self.name = name

    @staticmethod
    def from_spec(lam: Scalar | int | Fraction,
                  tau: dict | None = None,
                  name: str | None = None) -> "LinearMap":
        """phi(x) = lambda x + tau(x) with tau valued in the center."""
        lam = lam if isinstance(lam, Scalar) else sc(lam)
        tau = dict(tau or {})
        for bv, image in tau.items():
            for w in image.support():
                if not w.is_central():
                    raise ValueError(
                        f"tau({bv.render()}) = {image.render()} "
                        "is not central")

        def evaluate(u: BasisVector) -> Element:
            out = Element.basis(u).scale(lam)
            extra = tau.get(u)
            return out + extra if extra is not None else out

        return LinearMap(evaluate, name or f"lambda*id+tau (lambda={lam})")

    @staticmethod
    def from_table(entries: dict, name: str = "map") -> "LinearMap":
        def evaluate(u: BasisVector) -> Element:
            return entries.get(u, Element.zero())
        return LinearMap(evaluate, name)

    def __call__(self, x: Element) -> Element:
        acc = Element.zero()
        for u, cu in x.terms():
            image = self.evaluator(u)
            if not image.is_zero():
                acc = acc + image.scale(cu)
        return acc


def check_commuting(phi: LinearMap, window: int) -> Report:
    """Polarized commuting condition [phi(u), v] + [phi(v), u] = 0 on all
    window basis pairs (equivalent to [phi(x), x] = 0 on the window span)."""
    basis = basis_vectors(window, FULL)
    images = {u: phi(Element.basis(u)) for u in basis}
    failures = []
    cases = 0
    for u in basis:
        eu = Element.basis(u)
        for v in basis:
            cases += 1
            residual = bracket(images[u], Element.basis(v)) \
                + bracket(images[v], eu)
            if not residual.is_zero():
                inputs = f"({u.render()}, {v.render()})"
                failures.append(Failure(inputs, "commuting.polarized",
                                        residual.render()))
    return Report(f"commuting[{phi.name}]", window, "symbolic",
                  cases, failures).sorted()


# ---------------------------------------------------------------------------
# commutative post-Lie structures
# ---------------------------------------------------------------------------

def _post_lie_residuals(params: BiderParams, window: int):
    """Yields (inputs, equation_id, residual) for the three axioms."""
    basis = basis_vectors(window, FULL)

    def dot(a: Element, b: Element) -> Element:
        return bider_eval(params, a, b)

    for x in basis:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            yield (f"({x.render()}, {y.render()})", "postlie.commutative",
                   dot(ex, ey) - dot(ey, ex))
    for x in basis:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            bxy = bracket(ex, ey)
            for z in basis:
                ez = Element.basis(z)
                inputs = f"({x.render()}, {y.render()}, {z.render()})"
                yield (inputs, "postlie.bracket_product",
                       dot(bxy, ez) - dot(ex, dot(ey, ez))
                       + dot(ey, dot(ex, ez)))
                yield (inputs, "postlie.product_bracket",
                       dot(ex, bracket(ey, ez)) - bracket(dot(ex, ey), ez)
                       - bracket(ey, dot(ex, ez)))


def check_post_lie(params: BiderParams, window: int) -> Report:
    """All three commutative post-Lie axioms for x*y := f_params(x, y)."""
    failures = []
    cases = 0
    for inputs, eq_id, residual in _post_lie_residuals(params, window):
        cases += 1
        if not residual.is_zero():
            failures.append(Failure(inputs, eq_id, residual.render()))
    return Report(f"postlie[{params.describe()}]", window, "symbolic",
                  cases, failures).sorted()


# ---------------------------------------------------------------------------
# biderivations of the left-symmetric algebra
# ---------------------------------------------------------------------------

def _lsa_bider_residuals(params: BiderParams, window: int, eps: EpsMode):
    basis = basis_vectors(window, FULL)

    def f(a: Element, b: Element) -> Element:
        return bider_eval(params, a, b)

    for x in basis:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            xy = lsa_product(ex, ey, eps)
            fxy = f(ex, ey)
            for z in basis:
                ez = Element.basis(z)
                inputs = f"({x.render()}, {y.render()}, {z.render()})"
                fxz = f(ex, ez)
                fyz = f(ey, ez)
                yield (inputs, "lsabider.left",
                       f(xy, ez) - lsa_product(fxz, ey, eps)
                       - lsa_product(ex, fyz, eps))
                yield (inputs, "lsabider.right",
                       f(ex, lsa_product(ey, ez, eps))
                       - lsa_product(fxy, ez, eps)
                       - lsa_product(ey, fxz, eps))


def check_lsa_biderivation(params: BiderParams, window: int,
                           eps: EpsMode = SYMBOLIC) -> Report:
    """Derivation axioms of f_params with respect to the left-symmetric
    product, on all window basis triples."""
    failures = []
    cases = 0
    for inputs, eq_id, residual in _lsa_bider_residuals(params, window, eps):
        cases += 1
        if not residual.is_zero():
            failures.append(Failure(inputs, eq_id, residual.render()))
    return Report(f"lsabider[{params.describe()}]", window, eps.describe(),
                  cases, failures).sorted()


# ---------------------------------------------------------------------------
# parameter grids and triviality sweeps
# ---------------------------------------------------------------------------

GRID_LAMBDAS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2),
                Fraction(-2), Fraction(1, 2))
GRID_MUS = (Fraction(0), Fraction(1), Fraction(-1))
GRID_SUPPORT = (-1, 0, 1)


def grid_points() -> list:
    """The finite parameter grid for the two triviality sweeps."""
    points = []
    for lam in GRID_LAMBDAS:
        for mu_m1 in GRID_MUS:
            for mu_0 in GRID_MUS:
                for mu_1 in GRID_MUS:
                    omega = {k: mu for k, mu in
                             zip(GRID_SUPPORT, (mu_m1, mu_0, mu_1))
                             if mu != 0}
                    points.append(BiderParams(lam, omega))
    return points


def _first_failure(residuals) -> tuple | None:
    for inputs, eq_id, residual in residuals:
        if not residual.is_zero():
            return inputs, eq_id, residual
    return None


def _grid_report(check_name: str, window: int, eps_label: str,
                 residual_source) -> Report:
    """Sweep the grid; pass iff the passing set is exactly the zero point."""
    failures = []
    points = grid_points()
    passing = []
    for params in points:
        witness = _first_failure(residual_source(params))
        if witness is None:
            passing.append(params)
            if not params.is_zero():
                failures.append(Failure(f"({params.describe()})",
                                        "grid.unexpected_pass", "0"))
        elif params.is_zero():
            inputs, eq_id, residual = witness
            failures.append(Failure(f"({params.describe()}) at {inputs}",
                                    f"grid.trivial_failed[{eq_id}]",
                                    residual.render()))
    extra = {
        "grid_points": len(points),
        "passing_points": [p.describe() for p in passing],
    }
    return Report(check_name, window, eps_label, len(points), failures,
                  extra).sorted()


def post_lie_grid(window: int) -> Report:
    """Exactly one grid point (the zero product) may satisfy all post-Lie
    axioms: the triviality statement in brute-force form."""
    return _grid_report(
        "postlie-grid", window, "symbolic",
        lambda params: _post_lie_residuals(params, window))


def lsa_bider_grid(window: int, eps: EpsMode = SYMBOLIC) -> Report:
    """Exactly one grid point (f = 0) may satisfy the left-symmetric
    biderivation axioms: the final triviality statement in brute-force form."""
    return _grid_report(
        "lsa-bider-grid", window, eps.describe(),
        lambda params: _lsa_bider_residuals(params, window, eps))


# ---------------------------------------------------------------------------
# converse certification: the axioms cut out exactly the family
# ---------------------------------------------------------------------------

UPSILON_SHIFTS = (-2, -1, 0, 1, 2)
_DECOY_SHIFTS = (-2, -1, 0, 1, 2)


def _candidate_generators() -> list:
    """A linearly independent spanning set of centerless bilinear shapes,
    strictly larger than the family, over which the axiom equations are
    solved."""
    zero = Element.zero()

    def dd(fn):
        return lambda u, v: fn(u.index, v.index) \
            if u.tag == "d" and v.tag == "d" else zero

    def dh(fn):
        return lambda u, v: fn(u.index, v.index) \
            if u.tag == "d" and v.tag == "h" else zero

    def hd(fn):
        return lambda u, v: fn(u.index, v.index) \
            if u.tag == "h" and v.tag == "d" else zero

    def hh(fn):
        return lambda u, v: fn(u.index, v.index) \
            if u.tag == "h" and v.tag == "h" else zero

    gens = [("bracket", lambda u, v:
             bracket(Element.basis(u), Element.basis(v), CENTERLESS))]
    for s in UPSILON_SHIFTS:
        gens.append((f"upsilon[{s}]",
                     dd(lambda m, n, s=s: Element.basis(h(m + n + s)))))
    for s in _DECOY_SHIFTS:
        gens.append((f"dd->d[{s}]",
                     dd(lambda m, n, s=s: Element.basis(d(m + n + s)))))
        gens.append((f"dd->(m-n)d[{s}]",
                     dd(lambda m, n, s=s:
                        Element.of((m - n, d(m + n + s))))))
        gens.append((f"dd->(m-n)h[{s}]",
                     dd(lambda m, n, s=s:
                        Element.of((m - n, h(m + n + s))))))
        gens.append((f"dh->h[{s}]",
                     dh(lambda m, n, s=s: Element.basis(h(m + n + s)))))
        gens.append((f"dh->-(n+1/2)h[{s}]",
                     dh(lambda m, n, s=s:
                        Element.of((Fraction(-(2 * n + 1), 2),
                                    h(m + n + s))))))
        gens.append((f"hd->h[{s}]",
                     hd(lambda m, n, s=s: Element.basis(h(m + n + s)))))
        gens.append((f"hh->d[{s}]",
                     hh(lambda m, n, s=s: Element.basis(d(m + n + s)))))
        gens.append((f"hh->h[{s}]",
                     hh(lambda m, n, s=s: Element.basis(h(m + n + s)))))
    return gens


FAMILY_GENERATORS = ("bracket",) + tuple(f"upsilon[{s}]"
                                         for s in UPSILON_SHIFTS)


def check_bider_converse(window: int) -> Report:
    """Solve the (centerless) biderivation axioms exactly over the candidate
    space and certify that the solution set is exactly the family span.

    The axiom residual of a candidate sum_g u_g * g is linear in u, so every
    (triple, axiom, output vector) gives one linear equation.  Family
    generators satisfy the axioms identically, so their columns are zero in
    every row and the system's solution space always contains the family;
    the certificate is that the rank over the remaining columns is full,
    leaving nothing else.  Rows are fed incrementally and the sweep stops
    as soon as the target rank is reached.
    """
    gens = _candidate_generators()
    names = [name for name, _ in gens]
    tables = [BilinearTable(fn, name) for name, fn in gens]
    family = {names.index(name) for name in FAMILY_GENERATORS}
    target = len(gens) - len(family)

    basis = basis_vectors(window, CENTERLESS)
    reducer = RowReducer()
    failures = []
    rows_used = 0
    done = False
    for x in basis:
        ex = Element.basis(x)
        for y in basis:
            ey = Element.basis(y)
            for z in basis:
                ez = Element.basis(z)
                residuals = [_axiom_residuals(t, ex, ey, ez, CENTERLESS)
                             for t in tables]
                for axiom in (0, 1):
                    supports = set()
                    per_gen = [residuals[g][axiom][1]
                               for g in range(len(gens))]
                    for res in per_gen:
                        supports.update(res.support())
                    for w in sorted(supports, key=lambda b: b.sort_key()):
                        row = {}
                        for g, res in enumerate(per_gen):
                            coeff = res.coeff(w)
                            if not coeff.is_zero():
                                if g in family:
                                    failures.append(Failure(
                                        f"({x.render()}, {y.render()}, "
                                        f"{z.render()})",
                                        "converse.family_residual",
                                        f"{names[g]}: {coeff.render()}"))
                                    continue
                                row[g] = coeff.as_rational()
                        rows_used += 1
                        reducer.add_row(row)
                if reducer.rank >= target and not failures:
                    done = True
                    break
            if done:
                break
        if done:
            break
    if reducer.rank < target:
        failures.append(Failure(
            f"window={window}", "converse.rank_deficit",
            f"rank {reducer.rank} < {target}: extra solutions beyond "
            "the family survive the window equations"))
    extra = {
        "generators": len(gens),
        "family_dimension": len(family),
        "target_rank": target,
        "rank": reducer.rank,
        "rows_used": rows_used,
    }
    return Report("bider-grid", window, "symbolic", rows_used, failures,
                  extra).sorted()


# canned family members exercised by the family check: finite Omega
# supports inside [-3, 3], mixed signs and a non-integer lambda
FAMILY_SAMPLES = (
    BiderParams(0, {}),
    BiderParams(1, {}),
    BiderParams(2, {1: sc(1)}),
    BiderParams(Fraction(1, 2), {-3: sc(2), 3: sc(-1)}),
    BiderParams(-2, {0: sc(1), 2: sc(-3)}),
)


def check_family(window: int) -> Report:
    """The forward direction on canned family members (centerless axioms),
    plus central annihilation of both arguments in the full algebra."""
    failures = []
    cases = 0
    basis = basis_vectors(window, FULL)
    for params in FAMILY_SAMPLES:
        table = BilinearTable.from_params(params, CENTERLESS)
        sub = check_biderivation(table, window, CENTERLESS)
        cases += sub.total_cases
        for failure in sub.failures:
            failures.append(Failure(
                f"params=({params.describe()}) {failure.inputs}",
                failure.equation_id, failure.residual))
        for central in (C, L):
            ec = Element.basis(central)
            for u in basis:
                eu = Element.basis(u)
                for label, value in (("left", bider_eval(params, ec, eu)),
                                     ("right", bider_eval(params, eu, ec))):
                    cases += 1
                    if not value.is_zero():
                        failures.append(Failure(
                            f"params=({params.describe()}) "
                            f"({central.render()}, {u.render()}, {label})",
                            "bider.central", value.render()))
    return Report("bider-family", window, "symbolic", cases,
                  failures).sorted()
