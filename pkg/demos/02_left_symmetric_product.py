"""The compatible graded left-symmetric product.

The product carries a free parameter e (with 1/e required to avoid the
integers); symbolically every identity below is an exact rational-function
identity.  A numeric mode fixes e to a concrete rational and must agree
with the symbolic route wherever both are defined.
"""

from fractions import Fraction

from mhv import (Element, EpsMode, bracket, d, h, lsa_associator_defect,
                 lsa_commutator, lsa_product)
from mhv import basis_vectors, FULL
from mhv.scalars import PoleError

E = Element.basis

print("== the product table, symbolically in e ==")
print("d_2 d_1       =", lsa_product(E(d(2)), E(d(1))))
print("d_1 d_-1      =", lsa_product(E(d(1)), E(d(-1))))
print("d_5 d_0       =", lsa_product(E(d(5)), E(d(0))))
print("d_2 h(3/2)    =", lsa_product(E(d(2)), E(h(1))))
print("h(1/2) h(-1/2) =", lsa_product(E(h(0)), E(h(-1))))
print("h(1/2) d_3    =", lsa_product(E(h(0)), E(d(3))), "  (h.d products vanish)")

print()
print("== left-symmetric identity: (xy)z - x(yz) = (yx)z - y(xz) ==")
print("defect at (d_2, d_1, d_3):     ",
      lsa_associator_defect(E(d(2)), E(d(1)), E(d(3))))
print("defect at (d_1, h(1/2), h(-3/2)):",
      lsa_associator_defect(E(d(1)), E(h(0)), E(h(-2))))

print()
print("== compatibility: x*y - y*x reproduces the bracket exactly ==")
print("commutator d_2, d_1  =", lsa_commutator(E(d(2)), E(d(1))))
print("commutator d_2, d_-2 =", lsa_commutator(E(d(2)), E(d(-2))))
print("bracket    d_2, d_-2 =", bracket(E(d(2)), E(d(-2))))
mismatches = sum(
    1
    for u in basis_vectors(4, FULL)
    for v in basis_vectors(4, FULL)
    if lsa_commutator(E(u), E(v)) != bracket(E(u), E(v)))
print("window-4 pairs where they differ:", mismatches)

print()
print("== numeric e: an independent evaluation route ==")
eps = Fraction(2, 5)
mode = EpsMode.numeric(eps)
sym = lsa_product(E(d(2)), E(d(1)))
num = lsa_product(E(d(2)), E(d(1)), mode)
print(f"symbolic:           {sym}")
print(f"evaluated at e={eps}: {sym.eval_at(eps)}")
print(f"numeric route:      {num}")

print()
print("== poles: e with integer reciprocal is dangerous ==")
mode = EpsMode.numeric(Fraction(1, 7))
try:
    lsa_product(E(d(-3)), E(d(-4)), mode)
except PoleError as exc:
    print("d_-3 d_-4 at e=1/7 ->", exc)
# the identity itself is pole-free: its residual is the zero function
defect = lsa_associator_defect(E(d(-3)), E(d(-3)), E(d(-1)))
print("identity residual at (d_-3, d_-3, d_-1):", defect,
      "-> value at e=1/7:", defect.eval_at(Fraction(1, 7)))
