"""Coefficient functions of the graded product ansatz and their
functional-equation systems.

The ansatz assigns seven coefficient functions to the graded product:

    d_m d_n           = f(m,n) d_{m+n} + omega(m,n) C
    d_m h_{n+1/2}     = g(m,n) h_{m+n+1/2}
    h_{m+1/2} d_n     = h(m,n) h_{m+n+1/2}
    h_{m+1/2} h_{n+1/2} = a(m,n) d_{m+n} + b(m,n) h_{m+n+1/2} + rho(m,n) L

Two equation systems govern these functions: thirteen centerless
equations ("star.1" .. "star.13") and seven central ones ("ast.1" ..
"ast.7").  star_residuals / ast_residuals evaluate the transcribed
equations verbatim, with one unavoidable repair: the star.10
transcription arrives with an unbindable index (a coefficient
"a(a, m+k)") and is completed with the index the identity expansion
dictates.

residuals_from_identity is the independent oracle: it builds the product
from the ansatz, expands the left-symmetric identity on the six basis
triple types and commutator compatibility on the three pair types, and
returns raw component residuals.  derived_counterparts rearranges those
raw components into the transcription's shapes (substituting the pair
relations the same way the equations themselves are arranged), giving a
per-equation reference value to compare against the transcription.
cross_check runs the comparison on the closed-form solution and on
seeded random coefficient tables; it is expected to expose exactly one
transcription error at runtime (star.12, whose second term repeats
b(m,k) where the expansion yields b(n,k)) and documents two more
transcription findings (the star.10 index repair, and ast.4, which
circulates in two argument-naming conventions that are pointwise
different instances of the same equation family).

solve_theta recovers the one-parameter l-coefficient table from its two
constraint families as an exact linear system with a rank certificate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import C, Element, L, bracket, d, h
from .linalg import solve_unique
from .reports import Failure, Report
from .scalars import EPS, EPS_INV, ONE, ZERO, Scalar, sc


def _memoized(fn: Callable[[int, int], Scalar]) -> Callable[[int, int], Scalar]:
    cache: dict = {}

    def wrapped(m: int, n: int) -> Scalar:
        key = (m, n)
        value = cache.get(key)
        if value is None:
            value = fn(m, n)
            cache[key] = value
        return value

    return wrapped


@dataclass(frozen=True)
class CoeffFns:
    """The seven coefficient functions, memoized and total."""

    f: Callable[[int, int], Scalar]
    g: Callable[[int, int], Scalar]
    h: Callable[[int, int], Scalar]
    a: Callable[[int, int], Scalar]
    b: Callable[[int, int], Scalar]
    omega: Callable[[int, int], Scalar]
    rho: Callable[[int, int], Scalar]
    name: str = "fns"

    @staticmethod
    def make(f, g, h, a, b, omega, rho, name="fns") -> "CoeffFns":
        return CoeffFns(_memoized(f), _memoized(g), _memoized(h),
                        _memoized(a), _memoized(b), _memoized(omega),
                        _memoized(rho), name)

    def replace(self, name=None, **overrides) -> "CoeffFns":
        fields = {k: getattr(self, k)
                  for k in ("f", "g", "h", "a", "b", "omega", "rho")}
        for k, fn in overrides.items():
            fields[k] = _memoized(fn)
        return CoeffFns(name=name or self.name + "*", **fields)


def _half(n: int) -> Scalar:
    return sc(Fraction(2 * n + 1, 2))


def closed_form_fns() -> CoeffFns:
    """The closed-form solution of both equation systems."""

    def f(m: int, n: int) -> Scalar:
        return sc(-n) * (ONE + sc(n) * EPS) / (ONE + sc(m + n) * EPS)

    def g(m: int, n: int) -> Scalar:
        return -_half(n)

    def zero(m: int, n: int) -> Scalar:
        return ZERO

    def omega(m: int, n: int) -> Scalar:
        if m + n != 0:
            return ZERO
        return (sc(m**3 - m) + (EPS - EPS_INV) * sc(m * m)) * sc(Fraction(1, 24))

    def rho(m: int, n: int) -> Scalar:
        if m + n + 1 != 0:
            return ZERO
        return sc(Fraction(1, 2)) * _half(m)

    return CoeffFns.make(f, g, zero, zero, zero, omega, rho, "closed-form")


def zero_fns() -> CoeffFns:
    def zero(m: int, n: int) -> Scalar:
        return ZERO
    return CoeffFns.make(zero, zero, zero, zero, zero, zero, zero, "zero")


def random_fns(seed: int, magnitude: int = 6) -> CoeffFns:
    """Unstructured rational-valued tables; deterministic in the seed."""
    rng = random.Random(seed)
    caches = {name: {} for name in "fghab" + "OR"}

    def make(name: str) -> Callable[[int, int], Scalar]:
        cache = caches[name]

        def fn(m: int, n: int) -> Scalar:
            key = (m, n)
            if key not in cache:
                num = rng.randint(-magnitude, magnitude)
                den = rng.randint(1, 4)
                cache[key] = sc(Fraction(num, den))
            return cache[key]

        return fn

    return CoeffFns.make(make("f"), make("g"), make("h"), make("a"),
                         make("b"), make("O"), make("R"),
                         f"random(seed={seed})")


def _delta(i: int, j: int) -> Scalar:
    return ONE if i == j else ZERO


# ---------------------------------------------------------------------------
# transcribed equation systems
# ---------------------------------------------------------------------------

STAR_IDS = tuple(f"star.{i}" for i in range(1, 14))
AST_IDS = tuple(f"ast.{i}" for i in range(1, 8))


def star_residuals(fns: CoeffFns, m: int, n: int, k: int) -> list:
    """The thirteen centerless equations as (id, LHS - RHS) pairs.

    star.1 .. star.4 involve only (m, n); the k argument is ignored there.
    star.10 carries the index repair described in the module docstring;
    star.12 is evaluated verbatim.
    """
    f, g, hh, a, b = fns.f, fns.g, fns.h, fns.a, fns.b
    return [
        ("star.1", f(m, n) - f(n, m) - sc(m - n)),
        ("star.2", g(m, n) - hh(n, m) + _half(n)),
        ("star.3", a(m, n) - a(n, m)),
        ("star.4", b(m, n) - b(n, m)),
        ("star.5", f(m, k) * f(n, m + k) - f(n, k) * f(m, n + k)
         - sc(n - m) * f(m + n, k)),
        ("star.6", g(m, k) * g(n, m + k) - g(n, k) * g(m, n + k)
         - sc(n - m) * g(m + n, k)),
        ("star.7", hh(m, k) * g(n, m + k) - f(n, k) * hh(m, n + k)
         + _half(m) * hh(m + n, k)),
        ("star.8", a(m, k) * f(n, m + k) - g(n, k) * a(m, n + k)
         + _half(m) * a(m + n, k)),
        ("star.9", b(m, k) * g(n, m + k) - g(n, k) * b(m, n + k)
         + _half(m) * b(m + n, k)),
        ("star.10", hh(m, k) * a(n, m + k) - hh(n, k) * a(m, n + k)),
        ("star.11", hh(m, k) * b(n, m + k) - hh(n, k) * b(m, n + k)),
        ("star.12", b(m, k) * a(n, m + k) - b(m, k) * a(m, n + k)),
        ("star.13", a(m, k) * hh(n, m + k) + b(m, k) * b(n, m + k)
         - a(n, k) * hh(m, n + k) - b(n, k) * b(m, n + k)),
    ]


def ast_residuals(fns: CoeffFns, m: int, n: int, k: int) -> list:
    """The seven central equations as (id, LHS - RHS) pairs; ast.1 and
    ast.2 ignore k."""
    f, g, hh, a, b = fns.f, fns.g, fns.h, fns.a, fns.b
    omega, rho = fns.omega, fns.rho
    return [
        ("ast.1", omega(m, n) - omega(n, m)
         - sc(Fraction(m**3 - m, 12)) * _delta(m + n, 0)),
        ("ast.2", rho(m, n) - rho(n, m) - _half(m) * _delta(m + n + 1, 0)),
        ("ast.3", f(n, k) * omega(m, n + k) - f(m, k) * omega(n, m + k)
         - sc(m - n) * omega(m + n, k)),
        ("ast.4", g(m, k) * rho(n, m + k) - _half(n) * rho(m + n, k)),
        ("ast.5", a(m, k) * omega(n, m + k)),
        ("ast.6", hh(n, k) * rho(m, n + k) - hh(m, k) * rho(n, m + k)),
        ("ast.7", b(m, k) * rho(n, m + k) - b(n, k) * rho(m, n + k)),
    ]


def ast4_swapped_form(fns: CoeffFns, m: int, n: int, k: int) -> Scalar:
    """The variant of ast.4 with the two free indices named the other way
    around: g(n,k) rho(m,n+k) - (m+1/2) rho(m+n,k)."""
    return fns.g(n, k) * fns.rho(m, n + k) - _half(m) * fns.rho(m + n, k)


# ---------------------------------------------------------------------------
# the identity-derived oracle
# ---------------------------------------------------------------------------

def product_from_fns(fns: CoeffFns):
    """The graded product of the ansatz as an Element-valued evaluator on
    basis vectors; products with a central factor are zero."""

    def evaluate(u, v) -> Element:
        if u.is_central() or v.is_central():
            return Element.zero()
        if u.tag == "d" and v.tag == "d":
            m, n = u.index, v.index
            return Element.of((fns.f(m, n), d(m + n)), (fns.omega(m, n), C))
        if u.tag == "d" and v.tag == "h":
            m, n = u.index, v.index
            return Element.of((fns.g(m, n), h(m + n)))
        if u.tag == "h" and v.tag == "d":
            m, n = u.index, v.index
            return Element.of((fns.h(m, n), h(m + n)))
        m, n = u.index, v.index
        return Element.of((fns.a(m, n), d(m + n)), (fns.b(m, n), h(m + n)),
                          (fns.rho(m, n), L))

    return evaluate


_TRIPLE_TYPES = ("ddd", "ddh", "dhd", "dhh", "hhd", "hhh")


def _typed_vector(tag: str, index: int):
    return d(index) if tag == "d" else h(index)


def raw_defect_components(fns: CoeffFns, ttype: str, m: int, n: int,
                          k: int) -> dict:
    """Component residuals of the left-symmetric identity for the basis
    triple of type ttype at indices (m, n, k): coefficient of d(m+n+k),
    h(m+n+k), C and L in ((xy)z - x(yz)) - ((yx)z - y(xz))."""
    mul = product_from_fns(fns)

    def product(x: Element, y: Element) -> Element:
        acc = Element.zero()
        for u, cu in x.terms():
            for v, cv in y.terms():
                base = mul(u, v)
                if not base.is_zero():
                    acc = acc + base.scale(cu * cv)
        return acc

    x = Element.basis(_typed_vector(ttype[0], m))
    y = Element.basis(_typed_vector(ttype[1], n))
    z = Element.basis(_typed_vector(ttype[2], k))

    def assoc(p, q, r):
        return product(product(p, q), r) - product(p, product(q, r))

    defect = assoc(x, y, z) - assoc(y, x, z)
    s = m + n + k
    return {"d": defect.coeff(d(s)), "h": defect.coeff(h(s)),
            "c": defect.coeff(C), "l": defect.coeff(L)}


def compat_residuals(fns: CoeffFns, m: int, n: int) -> list:
    """Commutator-minus-bracket components for the three pair types."""
    mul = product_from_fns(fns)

    def commutator(u, v) -> Element:
        return mul(u, v) - mul(v, u)

    out = []
    r = commutator(d(m), d(n)) - bracket(Element.basis(d(m)),
                                         Element.basis(d(n)))
    out.append(("compat.dd.d", r.coeff(d(m + n))))
    out.append(("compat.dd.c", r.coeff(C)))
    r = commutator(d(m), h(n)) - bracket(Element.basis(d(m)),
                                         Element.basis(h(n)))
    out.append(("compat.dh.h", r.coeff(h(m + n))))
    r = commutator(h(m), h(n)) - bracket(Element.basis(h(m)),
                                         Element.basis(h(n)))
    out.append(("compat.hh.d", r.coeff(d(m + n))))
    out.append(("compat.hh.h", r.coeff(h(m + n))))
    out.append(("compat.hh.l", r.coeff(L)))
    return out


_TYPE_COMPONENTS = {
    "ddd": ("d", "c"),
    "ddh": ("h",),
    "dhd": ("h",),
    "dhh": ("d", "h", "c", "l"),
    "hhd": ("d", "h", "c", "l"),
    "hhh": ("d", "h", "l"),
}


def residuals_from_identity(fns: CoeffFns, m: int, n: int, k: int) -> list:
    """The independent oracle: raw identity components for all six triple
    types at (m, n, k) plus the pair compatibility components at (m, n)."""
    out = []
    for ttype in _TRIPLE_TYPES:
        components = raw_defect_components(fns, ttype, m, n, k)
        for comp in _TYPE_COMPONENTS[ttype]:
            out.append((f"identity.{ttype}.{comp}", components[comp]))
    out.extend(compat_residuals(fns, m, n))
    return out


# ---------------------------------------------------------------------------
# transcription shapes rebuilt from the oracle
# ---------------------------------------------------------------------------

def derived_counterparts(fns: CoeffFns, m: int, n: int, k: int) -> dict:
    """For every transcribed equation, the combination that produces its
    shape, built from the raw oracle components: the raw defect of the
    instantiating triple with the pair relations substituted out.
    Agreement of these values with star_residuals/ast_residuals is exactly
    correctness of the transcription."""
    f, g, hh, a, b = fns.f, fns.g, fns.h, fns.a, fns.b
    omega, rho = fns.omega, fns.rho

    def raw(ttype, mm, nn, kk):
        return raw_defect_components(fns, ttype, mm, nn, kk)

    # pair relation residuals in the transcription's orientation
    eq1r = lambda mm, nn: f(mm, nn) - f(nn, mm) - sc(mm - nn)
    eq2r = lambda mm, nn: g(mm, nn) - hh(nn, mm) + _half(nn)
    eq3r = lambda mm, nn: a(mm, nn) - a(nn, mm)
    eq4r = lambda mm, nn: b(mm, nn) - b(nn, mm)
    ast1r = lambda mm, nn: omega(mm, nn) - omega(nn, mm) \
        - sc(Fraction(mm**3 - mm, 12)) * _delta(mm + nn, 0)
    ast2r = lambda mm, nn: rho(mm, nn) - rho(nn, mm) \
        - _half(mm) * _delta(mm + nn + 1, 0)

    ddd = raw("ddd", m, n, k)
    ddh = raw("ddh", m, n, k)
    dhd_s = raw("dhd", n, m, k)    # triple (d_n, h_{m+1/2}, d_k)
    dhh = raw("dhh", m, n, k)      # triple (d_m, h_{n+1/2}, h_{k+1/2})
    dhh_s = raw("dhh", n, m, k)    # triple (d_n, h_{m+1/2}, h_{k+1/2})
    hhd_s = raw("hhd", n, m, k)    # triple (h_{n+1/2}, h_{m+1/2}, d_k)
    hhh_s = raw("hhh", n, m, k)    # triple (h_{n+1/2}, h_{m+1/2}, h_{k+1/2})

    return {
        "star.1": eq1r(m, n),
        "star.2": eq2r(m, n),
        "star.3": eq3r(m, n),
        "star.4": eq4r(m, n),
        "star.5": ddd["d"] - eq1r(m, n) * f(m + n, k),
        "star.6": ddh["h"] - eq1r(m, n) * g(m + n, k),
        "star.7": eq2r(n, m) * hh(m + n, k) - dhd_s["h"],
        "star.8": eq2r(n, m) * a(m + n, k) - dhh_s["d"],
        "star.9": eq2r(n, m) * b(m + n, k) - dhh_s["h"],
        "star.10": eq3r(n, m) * f(m + n, k) - hhd_s["d"],
        "star.11": eq4r(n, m) * hh(m + n, k) - hhd_s["h"],
        "star.12": eq4r(n, m) * a(m + n, k) - hhh_s["d"],
        "star.13": eq3r(n, m) * g(m + n, k) + eq4r(n, m) * b(m + n, k)
        - hhh_s["h"],
        "ast.1": ast1r(m, n),
        "ast.2": ast2r(m, n),
        "ast.3": eq1r(m, n) * omega(m + n, k) - ddd["c"],
        "ast.4": dhh["l"] - eq2r(m, n) * rho(m + n, k),
        "ast.5": -dhh_s["c"],
        "ast.6": hhd_s["l"],
        "ast.7": eq4r(n, m) * rho(m + n, k) - hhh_s["l"],
    }


# the three documented transcription findings; star.12 is the only one
# expected to disagree at runtime
DOCUMENTED_DISCREPANCIES = ("star.10", "star.12", "ast.4")
RUNTIME_DISCREPANCIES = ("star.12",)


def cross_check(window: int, sample_window: int = 2,
                seeds: tuple = (1, 2)) -> Report:
    """Compare every transcribed residual against its oracle-derived
    counterpart: on the closed-form solution over the full window, and on
    seeded random tables over a smaller window (random tables are what
    actually exercises the equations' shapes).  Disagreement anywhere
    except the documented star.12 is a failure."""
    suites = [(closed_form_fns(), window)]
    suites += [(random_fns(seed), sample_window) for seed in seeds]

    failures = []
    cases = 0
    witnesses: dict = {}
    for fns, w in suites:
        rng = range(-w, w + 1)
        for m in rng:
            for n in rng:
                for k in rng:
                    transcribed = dict(star_residuals(fns, m, n, k))
                    transcribed.update(ast_residuals(fns, m, n, k))
                    derived = derived_counterparts(fns, m, n, k)
                    for eq_id, t_value in transcribed.items():
                        cases += 1
                        d_value = derived[eq_id]
                        if t_value == d_value:
                            continue
                        entry = {
                            "fns": fns.name,
                            "tuple": f"({m}, {n}, {k})",
                            "transcribed": t_value.render(),
                            "derived": d_value.render(),
                        }
                        witnesses.setdefault(eq_id, []).append(entry)
                        if eq_id not in RUNTIME_DISCREPANCIES:
                            failures.append(Failure(
                                f"{fns.name} ({m}, {n}, {k})",
                                f"cross.{eq_id}",
                                f"transcribed {t_value.render()} != "
                                f"derived {d_value.render()}"))

    documented = []
    documented.append({
        "id": "star.10",
        "note": "arrives with an unbindable index; completed with the "
                "index the identity expansion dictates, so transcription "
                "and oracle agree by construction",
        "witnesses": [],
    })
    documented.append({
        "id": "star.12",
        "note": "transcribed second term repeats b(m,k); the identity "
                "expansion yields b(n,k)",
        "witnesses": witnesses.get("star.12", [])[:3],
    })
    ast4_witness = []
    probe = random_fns(seeds[0]) if seeds else random_fns(1)
    for (m, n, k) in ((0, 1, 0), (1, 2, -1), (0, 2, 1)):
        primary = dict(ast_residuals(probe, m, n, k))["ast.4"]
        swapped = ast4_swapped_form(probe, m, n, k)
        if primary != swapped:
            ast4_witness.append({
                "fns": probe.name,
                "tuple": f"({m}, {n}, {k})",
                "primary_form": primary.render(),
                "swapped_form": swapped.render(),
            })
    documented.append({
        "id": "ast.4",
        "note": "circulates in two argument-naming conventions; the two "
                "forms are pointwise different instances of the same "
                "equation family and the oracle matches the primary form",
        "witnesses": ast4_witness[:3],
    })

    extra = {"documented_discrepancies": documented}
    return Report("cross-check", window, "symbolic", cases, failures,
                  extra).sorted()


# ---------------------------------------------------------------------------
# the theta linear system
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThetaTable:
    """Solved l-coefficient profile theta with its rank certificate."""

    window: int
    values: dict            # n -> Fraction
    unknowns: int
    rank: int
    equations: int

    def rho(self, n: int, k: int) -> Scalar:
        if n + k + 1 != 0 or n not in self.values:
            return ZERO
        return sc(self.values[n])


def theta_equations(window: int) -> tuple:
    """Rows and right-hand sides of the two constraint families restricted
    to the window: (m+n+1/2) theta(n) = (n+1/2) theta(m+n) and
    theta(-1-m) - theta(m) = -(m+1/2)."""
    def col(n: int) -> int:
        return n + window

    rows, rhs = [], []
    rng = range(-window, window + 1)
    for m in rng:
        for n in rng:
            if not -window <= m + n <= window:
                continue
            row = {}
            coeff_n = Fraction(2 * (m + n) + 1, 2)
            row[col(n)] = row.get(col(n), Fraction(0)) + coeff_n
            coeff_mn = Fraction(2 * n + 1, 2)
            row[col(m + n)] = row.get(col(m + n), Fraction(0)) - coeff_mn
            rows.append({c: v for c, v in row.items() if v != 0})
            rhs.append(Fraction(0))
    for m in rng:
        if not -window <= -1 - m <= window:
            continue
        row = {col(-1 - m): Fraction(1)}
        row[col(m)] = row.get(col(m), Fraction(0)) - Fraction(1)
        rows.append({c: v for c, v in row.items() if v != 0})
        rhs.append(Fraction(-(2 * m + 1), 2))
    return rows, rhs


def solve_theta(window: int) -> ThetaTable:
    """Solve the theta constraints exactly; unique solution certified by
    rank = number of unknowns.  Raises InconsistentSystemError or
    UnderdeterminedSystemError if the window system were defective."""
    if window < 2:
        raise ValueError("window must be at least 2")
    rows, rhs = theta_equations(window)
    unknowns = 2 * window + 1
    solution = solve_unique(rows, rhs, unknowns)
    values = {n: solution[n + window] for n in range(-window, window + 1)}
    return ThetaTable(window, values, unknowns, unknowns, len(rows))
