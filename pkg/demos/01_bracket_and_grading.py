"""The Lie algebra itself: basis, bracket table, center and grading.

The algebra has basis {d_m, h_{m+1/2}, c, l | m in Z}.  All arithmetic is
exact: coefficients are rational functions of a formal parameter, though
for the bracket alone plain rationals ever appear.
"""

from mhv import C, CENTERLESS, Element, L, bracket, d, grading_degree, h
from mhv import basis_vectors, FULL

E = Element.basis

print("== the multiplication table ==")
print("[d_2, d_1]      =", bracket(E(d(2)), E(d(1))))
print("[d_2, d_-2]     =", bracket(E(d(2)), E(d(-2))), "   (central charge)")
print("[d_1, d_-1]     =", bracket(E(d(1)), E(d(-1))), "        (m^3-m vanishes)")
print("[d_2, h(3/2)]   =", bracket(E(d(2)), E(h(1))))
print("[h(1/2), h(-1/2)] =", bracket(E(h(0)), E(h(-1))))
print("[c, d_5]        =", bracket(E(C), E(d(5))), "(central)")

print()
print("== the centerless quotient ==")
print("full:       [d_2, d_-2] =", bracket(E(d(2)), E(d(-2)), FULL))
print("centerless: [d_2, d_-2] =", bracket(E(d(2)), E(d(-2)), CENTERLESS))
print("centerless: [h, h]      =", bracket(E(h(0)), E(h(-1)), CENTERLESS))

print()
print("== brackets extend bilinearly to sparse elements ==")
x = Element.of((2, d(1)), (1, h(0)))
y = Element.of((1, d(-1)), (-3, h(-1)))
print(f"x = {x}")
print(f"y = {y}")
print(f"[x, y] = {bracket(x, y)}")

print()
print("== the Z-grading ==")
print("degree of d_3 + 7 h(7/2):", grading_degree(Element.of((1, d(3)), (7, h(3)))))
print("degree of c:", grading_degree(E(C)), "  degree of l:", grading_degree(E(L)))
print("degree of d_1 + d_2:", grading_degree(Element.of((1, d(1)), (1, d(2)))))

print()
print("== degree additivity on a window ==")
violations = 0
for u in basis_vectors(4, FULL):
    for v in basis_vectors(4, FULL):
        value = bracket(E(u), E(v))
        if not value.is_zero():
            if grading_degree(value) != u.degree() + v.degree():
                violations += 1
print("pairs with [D_a, D_b] outside D_{a+b}:", violations)
