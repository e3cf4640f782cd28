"""Moebius maps on the extended bicomplex plane.

W -> (A*W + B)/(C*W + D) is valid whenever AD - BC avoids the null cone;
the coefficients themselves may be zero divisors, and that is exactly what
makes the slot behavior interesting: each idempotent slot is an ordinary
complex Moebius map, affine when its C-slot vanishes.  Infinity comes in
three flavors (inf*e1, inf*e2, and both), and the map moves them around
per slot.
"""

import bcapprox as bc
from bcapprox import Bicomplex, ExtendedBicomplex

one = Bicomplex.from_scalar(1)
zero = Bicomplex.from_scalar(0)
INF = float("inf")

print("== validation ==")
try:
    bc.moebius_new(one, zero, zero, bc.E1)
except bc.DegenerateMapError as exc:
    print("determinant e1 rejected:", exc)

print()
print("== the four C-slot patterns ==")
cases = {
    "C = (0,0)  affine/affine      ": bc.moebius_new(Bicomplex(2, 3), Bicomplex(1, -1), zero, one),
    "C = (2,0)  pole in slot 1 only": bc.moebius_new(one, zero, Bicomplex(2, 0), one),
    "C = (0,2)  pole in slot 2 only": bc.moebius_new(one, zero, Bicomplex(0, 2), one),
    "C = (2,4)  poles in both slots": bc.moebius_new(Bicomplex(1, 2), zero, Bicomplex(2, 4), one),
}
for name, m in cases.items():
    print(f"{name}  C slots zero: {m.c_is_zero}")

print()
print("== poles map to infinities, infinities to A/C ==")
m = cases["C = (2,4)  poles in both slots"]
pole = Bicomplex(-0.5, -0.25)  # (-D1/C1, -D2/C2)
print("F(-D1/C1 e1 - D2/C2 e2) =", bc.moebius_apply(m, pole).kind())
img = bc.moebius_apply(m, ExtendedBicomplex(INF, INF))
print("F(inf e1 + inf e2)      =", img.to_json(), " (that is A1/C1 e1 + A2/C2 e2)")

m2 = cases["C = (2,0)  pole in slot 1 only"]
print("one-sided: F(-1/2 e1 + 5 e2) =", bc.moebius_apply(m2, Bicomplex(-0.5, 5)).kind())
print("           F(inf e1)         =", bc.moebius_apply(m2, ExtendedBicomplex(INF, 0)).to_json())

print()
print("== composition and inversion ==")
n = bc.moebius_new(one, Bicomplex(1j, -1j), zero, one)  # a translation
comp = bc.moebius_compose(m, n)
z = Bicomplex(0.3 + 0.2j, -0.4)
via_comp = bc.moebius_apply(comp, z)
via_steps = bc.moebius_apply(m, bc.moebius_apply(n, z))
print("compose-then-apply:", via_comp.to_json())
print("apply-then-apply:  ", via_steps.to_json())
mi = bc.moebius_inverse(m)
back = bc.moebius_apply(mi, bc.moebius_apply(m, z))
print("round trip through the inverse:", back.to_json(), "(started from", z.to_json(), ")")
