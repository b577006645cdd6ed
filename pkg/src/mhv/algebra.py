"""The mirror Heisenberg-Virasoro Lie algebra: basis, sparse elements,
bracket and Z-grading.

Basis vectors are d(m) for m in Z, h(n) denoting h_{n+1/2} for n in Z, and
the two central vectors C and L.  Storing the integer n for h_{n+1/2}
keeps every index integral; the implicit +1/2 only ever shows up in
coefficients and in the rendered form "h((2n+1)/2)".

The bracket table:

    [d_m, d_n]       = (m-n) d_{m+n} + (m^3-m)/12 * delta_{m+n,0} C
    [d_m, h_{n+1/2}] = -(n+1/2) h_{m+n+1/2}
    [h_{m+1/2}, h_{n+1/2}] = (m+1/2) delta_{m+n+1,0} L
    C, L central.

Centerless mode works on the quotient by the center: C and L are rejected
in inputs and the central output terms are dropped.  Elements produced by
the bracket are never truncated to any index window; windows only bound
the loops of verification sweeps.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .scalars import ONE, ZERO, Scalar, sc


class AlgebraError(ValueError):
    """Base class for algebra usage errors."""


class CentralTermError(AlgebraError):
    """A central basis vector appeared in a centerless-mode input."""


class ZeroElementError(AlgebraError):
    """The zero element has no grading degree."""


class AlgebraMode(Enum):
    FULL = "full"
    CENTERLESS = "centerless"


FULL = AlgebraMode.FULL
CENTERLESS = AlgebraMode.CENTERLESS


class BasisVector:
    """One of d(m), h(n) (meaning h_{n+1/2}), C or L.  Interned."""

    __slots__ = ("tag", "index", "_key", "_hash")

    _cache: dict = {}

    def __new__(cls, tag: str, index: int | None):
        key = (tag, index)
        cached = cls._cache.get(key)
        if cached is not None:
            return cached
        self = object.__new__(cls)
        self.tag = tag
        self.index = index
        order = {"d": 0, "h": 1, "c": 2, "l": 3}[tag]
        self._key = (order, index if index is not None else 0)
        self._hash = hash(key)
        cls._cache[key] = self
        return self

    def sort_key(self) -> tuple:
        return self._key

    def is_central(self) -> bool:
        return self.tag in ("c", "l")

    def degree(self) -> int:
        """Z-grading degree: d_m and h_{m+1/2} sit in degree m; C in 0, L in -1."""
        if self.tag == "c":
            return 0
        if self.tag == "l":
            return -1
        return self.index

    def render(self) -> str:
        if self.tag == "d":
            return f"d({self.index})"
        if self.tag == "h":
            return f"h({2 * self.index + 1}/2)"
        return self.tag

    def __eq__(self, other: object) -> bool:
        return self is other

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "BasisVector") -> bool:
        return self._key < other._key

    def __repr__(self) -> str:
        return self.render()


def d(m: int) -> BasisVector:
    return BasisVector("d", m)


def h(n: int) -> BasisVector:
    """h(n) is the basis vector h_{n+1/2}."""
    return BasisVector("h", n)


C = BasisVector("c", None)
L = BasisVector("l", None)


class Element:
    """A finite linear combination of basis vectors with Scalar coefficients.

    Immutable; zero coefficients are never stored, so the zero element is
    the element with no terms and equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None, _clean: bool = False):
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {bv: coeff for bv, coeff in terms.items()
                     if not coeff.is_zero()}
        self._terms = terms

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "Element":
        return _ZERO_ELEMENT

    @staticmethod
    def basis(bv: BasisVector) -> "Element":
        return Element({bv: ONE}, _clean=True)

    @staticmethod
    def of(*pairs) -> "Element":
        """Element from (coefficient, basis vector) pairs; coefficients may
        be ints, Fractions or Scalars."""
        acc: dict = {}
        for coeff, bv in pairs:
            if not isinstance(coeff, Scalar):
                coeff = sc(coeff)
            prev = acc.get(bv)
            coeff = coeff if prev is None else prev + coeff
            if coeff.is_zero():
                acc.pop(bv, None)
            else:
                acc[bv] = coeff
        return Element(acc, _clean=True)

    # -- access --------------------------------------------------------------

    def coeff(self, bv: BasisVector) -> Scalar:
        return self._terms.get(bv, ZERO)

    def terms(self) -> list:
        """Terms as (basis vector, coefficient), in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def support(self) -> Iterator[BasisVector]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # -- vector-space operations ----------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for bv, coeff in other._terms.items():
            prev = acc.get(bv)
            total = coeff if prev is None else prev + coeff
            if total.is_zero():
                acc.pop(bv, None)
            else:
                acc[bv] = total
        return Element(acc, _clean=True)

    def __neg__(self) -> "Element":
        return Element({bv: -coeff for bv, coeff in self._terms.items()},
                       _clean=True)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, factor: Scalar) -> "Element":
        if factor.is_zero() or not self._terms:
            return _ZERO_ELEMENT
        return Element({bv: coeff * factor
                        for bv, coeff in self._terms.items()}, _clean=True)

    def eval_at(self, eps_value) -> "Element":
        """Element with every coefficient evaluated at e = eps_value."""
        acc = {}
        for bv, coeff in self._terms.items():
            value = coeff.eval_at(eps_value)
            if value != 0:
                acc[bv] = sc(value)
        return Element(acc, _clean=True)

    # -- comparison / rendering -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for bv, coeff in self.terms():
            if coeff == ONE:
                body = bv.render()
            elif coeff.is_rational():
                r = coeff.as_rational()
                if r == -1:
                    body = f"-{bv.render()}"
                else:
                    body = f"{r}*{bv.render()}"
            else:
                body = f"({coeff.render()})*{bv.render()}"
            parts.append(body)
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Element({self.render()})"


_ZERO_ELEMENT = Element({}, _clean=True)


class Mixed:
    """Sentinel result of grading_degree for inhomogeneous elements."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Mixed"


MIXED = Mixed()


# ---------------------------------------------------------------------------
# the bracket
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _basis_bracket(u: BasisVector, v: BasisVector,
                   mode: AlgebraMode) -> Element:
    if u.is_central() or v.is_central():
        return Element.zero()
    if u.tag == "d" and v.tag == "d":
        m, n = u.index, v.index
        pairs = []
        if m != n:
            pairs.append((Fraction(m - n), d(m + n)))
        if mode is FULL and m + n == 0:
            central = Fraction(m**3 - m, 12)
            if central != 0:
                pairs.append((central, C))
        return Element.of(*pairs)
    if u.tag == "d" and v.tag == "h":
        m, n = u.index, v.index
        return Element.of((Fraction(-(2 * n + 1), 2), h(m + n)))
    if u.tag == "h" and v.tag == "d":
        n, m = u.index, v.index
        return Element.of((Fraction(2 * n + 1, 2), h(m + n)))
    # h, h
    m, n = u.index, v.index
    if mode is FULL and m + n + 1 == 0:
        return Element.of((Fraction(2 * m + 1, 2), L))
    return Element.zero()


def _check_centerless(x: Element, what: str) -> None:
    for bv in x.support():
        if bv.is_central():
            raise CentralTermError(
                f"centerless mode forbids central term {bv.render()} in {what}")


def bracket(x: Element, y: Element, mode: AlgebraMode = FULL) -> Element:
    """Bilinear extension of the bracket table."""
    if mode is CENTERLESS:
        _check_centerless(x, "left argument")
        _check_centerless(y, "right argument")
    acc = Element.zero()
    for u, cu in x._terms.items():
        for v, cv in y._terms.items():
            base = _basis_bracket(u, v, mode)
            if not base.is_zero():
                acc = acc + base.scale(cu * cv)
    return acc


def grading_degree(x: Element):
    """Common degree of the terms of x, or MIXED; the zero element is an error."""
    if x.is_zero():
        raise ZeroElementError("the zero element has no grading degree")
    degrees = {bv.degree() for bv in x.support()}
    if len(degrees) == 1:
        return degrees.pop()
    return MIXED


def basis_vectors(window: int, mode: AlgebraMode = FULL) -> list:
    """All basis vectors with indices in [-window, window], canonical order."""
    out = [d(m) for m in range(-window, window + 1)]
    out += [h(n) for n in range(-window, window + 1)]
    if mode is FULL:
        out += [C, L]
    return out
