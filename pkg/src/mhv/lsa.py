"""The compatible graded left-symmetric product on the mirror
Heisenberg-Virasoro algebra, in symbolic-e and numeric-e modes.

The product table (stored h-indices, so h(n) stands for h_{n+1/2}):

    d_m d_n  = -n(1+e*n)/(1+e*(m+n)) d_{m+n}
               + 1/24 (m^3 - m + (e - 1/e) m^2) delta_{m+n,0} C
    d_m h(n) = -(n+1/2) h(m+n)
    h(m) h(n) = 1/2 (m+1/2) delta_{m+n+1,0} L

All other products of basis vectors are zero: h(m) d_n, and any product
with a central factor.  The h(m) h(n) coefficient uses the *left* index;
that is forced by compatibility with the bracket (the commutator must give
(m+1/2) delta_{m+n+1,0} L, which fails for the right-index variant).

Symbolic mode is total: 1+e*(m+n) is never the zero rational function.
Numeric mode fixes e to a nonzero rational; a product pre-scans every
denominator index sum reachable from its inputs and raises PoleError
before computing anything if 1+e*s would vanish.  A whole verification
run at window N additionally refuses e outright when 1/e is an integer
whose negative lies inside [-N, N] (the product on the window's own
degrees would be undefined).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import C, Element, L, d, h
from .scalars import PoleError, Scalar, sc


class AdmissibilityError(ValueError):
    """A numeric value of e is not admissible for the requested window."""


class EpsMode:
    """Symbolic e, or a fixed nonzero rational value of e."""

    __slots__ = ("eps",)

    def __init__(self, eps: Fraction | None):
        if eps is not None:
            eps = Fraction(eps)
            if eps == 0:
                raise AdmissibilityError("e must be nonzero")
        self.eps = eps

    @staticmethod
    def numeric(eps) -> "EpsMode":
        return EpsMode(Fraction(eps))

    @property
    def is_symbolic(self) -> bool:
        return self.eps is None

    def pole_sum(self) -> int | None:
        """The integer s with 1 + e*s = 0, if one exists."""
        if self.eps is None:
            return None
        inv = 1 / self.eps
        if inv.denominator != 1:
            return None
        return -int(inv)

    def ensure_admissible(self, window: int) -> None:
        """Window-level guard: reject e whose pole degree falls in the window."""
        s = self.pole_sum()
        if s is not None and -window <= s <= window:
            raise AdmissibilityError(
                f"e = {self.eps} is not admissible at window {window}: "
                f"1+e*({s}) = 0 and {s} lies in [-{window}, {window}]")

    def describe(self) -> str:
        return "symbolic" if self.eps is None else f"eps={self.eps}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EpsMode) and self.eps == other.eps

    def __hash__(self) -> int:
        return hash(self.eps)

    def __repr__(self) -> str:
        return f"EpsMode({self.describe()})"


SYMBOLIC = EpsMode(None)


# ---------------------------------------------------------------------------
# coefficient formulas
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def dd_coeff(m: int, n: int) -> Scalar:
    """-n(1+e*n)/(1+e*(m+n)) as a symbolic scalar."""
    num = (Fraction(-n), Fraction(-n * n))          # -n - n^2 e
    den = (Fraction(1), Fraction(m + n))            # 1 + (m+n) e
    return Scalar(num, den)


@lru_cache(maxsize=None)
def dd_central_coeff(m: int) -> Scalar:
    """1/24 (m^3 - m + (e - 1/e) m^2), the coefficient of C at m+n = 0."""
    # as a fraction over 24e: (-m^2 + (m^3 - m) e + m^2 e^2) / (24 e)
    num = (Fraction(-m * m), Fraction(m**3 - m), Fraction(m * m))
    den = (Fraction(0), Fraction(24))
    return Scalar(num, den)


def dh_coeff(n: int) -> Scalar:
    return sc(Fraction(-(2 * n + 1), 2))


def hh_coeff(m: int) -> Scalar:
    return sc(Fraction(2 * m + 1, 4))


@lru_cache(maxsize=None)
def _basis_product_symbolic(u, v) -> Element:
    if u.is_central() or v.is_central():
        return Element.zero()
    if u.tag == "d" and v.tag == "d":
        m, n = u.index, v.index
        pairs = []
        if n != 0:
            pairs.append((dd_coeff(m, n), d(m + n)))
        if m + n == 0 and m != 0:
            pairs.append((dd_central_coeff(m), C))
        return Element.of(*pairs)
    if u.tag == "d" and v.tag == "h":
        m, n = u.index, v.index
        return Element.of((dh_coeff(n), h(m + n)))
    if u.tag == "h" and v.tag == "d":
        return Element.zero()
    m, n = u.index, v.index
    if m + n + 1 == 0:
        return Element.of((hh_coeff(m), L))
    return Element.zero()


def _basis_product_numeric(u, v, eps: Fraction) -> Element:
    """Independent numeric route: the table evaluated with plain Fractions."""
    if u.is_central() or v.is_central():
        return Element.zero()
    if u.tag == "d" and v.tag == "d":
        m, n = u.index, v.index
        pairs = []
        if n == 0:
            f_value = Fraction(0)
        elif m == 0:
            # -n(1+e*n)/(1+e*n) cancels exactly, no pole even at 1+e*n = 0
            f_value = Fraction(-n)
        else:
            den = 1 + eps * (m + n)
            if den == 0:
                raise PoleError(
                    f"1+e*({m + n}) = 0 at e = {eps} in d({m})*d({n})")
            f_value = Fraction(-n) * (1 + eps * n) / den
        if f_value != 0:
            pairs.append((f_value, d(m + n)))
        if m + n == 0:
            omega = Fraction(m**3 - m + 0, 24) + (eps - 1 / eps) * m * m / 24
            if omega != 0:
                pairs.append((omega, C))
        return Element.of(*pairs)
    if u.tag == "d" and v.tag == "h":
        m, n = u.index, v.index
        return Element.of((Fraction(-(2 * n + 1), 2), h(m + n)))
    if u.tag == "h" and v.tag == "d":
        return Element.zero()
    m, n = u.index, v.index
    if m + n + 1 == 0:
        return Element.of((Fraction(2 * m + 1, 4), L))
    return Element.zero()


def _scan_poles(x: Element, y: Element, eps: Fraction) -> None:
    """Fail fast if any produced d*d pair hits the denominator's zero."""
    pole = 1 / eps
    if pole.denominator != 1:
        return
    pole_sum = -int(pole)
    left = [u.index for u in x.support() if u.tag == "d"]
    right = [v.index for v in y.support() if v.tag == "d"]
    offenders = sorted((m, n) for m in left for n in right
                       if m + n == pole_sum and m != 0 and n != 0)
    if offenders:
        pairs = ", ".join(f"d({m})*d({n})" for m, n in offenders)
        raise PoleError(
            f"1+e*({pole_sum}) = 0 at e = {eps}; offending pairs: {pairs}")


def lsa_product(x: Element, y: Element, eps: EpsMode = SYMBOLIC) -> Element:
    """Bilinear extension of the product table."""
    if not eps.is_symbolic:
        _scan_poles(x, y, eps.eps)
    acc = Element.zero()
    for u, cu in x.terms():
        for v, cv in y.terms():
            if eps.is_symbolic:
                base = _basis_product_symbolic(u, v)
            else:
                base = _basis_product_numeric(u, v, eps.eps)
            if not base.is_zero():
                acc = acc + base.scale(cu * cv)
    return acc


def lsa_commutator(x: Element, y: Element, eps: EpsMode = SYMBOLIC) -> Element:
    """x*y - y*x; equals the full bracket for the compatible product."""
    return lsa_product(x, y, eps) - lsa_product(y, x, eps)


def lsa_associator_defect(x: Element, y: Element, z: Element,
                          eps: EpsMode = SYMBOLIC) -> Element:
    """((x*y)*z - x*(y*z)) - ((y*x)*z - y*(x*z)); zero iff the triple
    satisfies the left-symmetric identity."""

    def assoc(a: Element, b: Element, c: Element) -> Element:
        return lsa_product(lsa_product(a, b, eps), c, eps) \
            - lsa_product(a, lsa_product(b, c, eps), eps)

    return assoc(x, y, z) - assoc(y, x, z)
