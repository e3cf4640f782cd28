"""Numeric checks of the univalence theorems on truncated series.

Three classical facts survive the passage to bicomplex scalars, slot by
slot, and all three are checkable on truncated coefficient data:

  * area inequality:  an exterior map Z + B0 + B1/Z + ... has
    sum n |B_n|_k^2 <= 1;
  * second-coefficient bound:  a normalized disk map has |A_2|_k <= 2,
    with equality exactly for rotations t/(1+Bt)^2 of the Koebe map;
  * quarter covering:  the image of the unit bidisk covers the bidisk of
    radius 1/4, probed here by boundary sampling.

The demo also shows what truncation does to the covering probe: close to
the unit circle a fixed-order polynomial stops resembling the map it
truncates, and the probe reports the polynomial, not the map.
"""

import math

import bcapprox as bc
from bcapprox import Bicomplex

print("== area inequality ==")
g = bc.laurent_series([1, 0, Bicomplex(math.e ** 0 * 1j, -1)])  # Z + B1/Z, |B1|_k = (1,1)
print("G = Z + B1/Z with unimodular B1: tail sum =", bc.gronwall_area_sum(g).as_tuple())
g2 = bc.laurent_series([1, 0, 0.5, 0, 0.25])
print("G = Z + 0.5/Z + 0.25/Z^3:        tail sum =", bc.gronwall_area_sum(g2).as_tuple())
area = bc.area_contour_estimate(g2, 1.5, 2048)
closed = math.pi * (1.5**2 - (0.25 * 1.5**-2 + 3 * 0.0625 * 1.5**-6))
print(f"enclosed area of the r=1.5 image: quadrature {area.a1:.12f} vs closed form {closed:.12f}")

print()
print("== second-coefficient bound through the transform pipeline ==")
rot = bc.koebe_rotation_series(Bicomplex(-1, 1j), 16)  # different rotation per slot
res = bc.bieberbach_check(rot)
print("rotation parameters (-1, i): |A2|_k =", res.value.as_tuple(), " holds:", res.holds)
print("pipeline trace:")
for key in ("abs_a2", "inversion_c1", "abs_c1", "tail_area_sum"):
    print(f"  {key}: {res.trace[key]}")

bad = bc.power_series([0, 1, Bicomplex(3, 0)])
res = bc.bieberbach_check(bad)
print("A2 = 3*e1 violates in slot 1 only:", res.value.as_tuple(), " holds:", res.holds)

print()
print("== quarter covering probe ==")
koebe = bc.koebe_rotation_series(Bicomplex.from_scalar(-1), 64)
for r in (0.5, 0.8, 0.9):
    m = bc.koebe_covering_min(koebe, r, 2048)
    print(f"r = {r}: boundary min {m.a1:.6f}   target r/(1+r)^2 = {r / (1 + r) ** 2:.6f}")

print()
print("truncation warning: at r = 0.99 the order-64 tail dominates --")
m = bc.koebe_covering_min(koebe, 0.99, 2048)
print(f"r = 0.99: boundary min {m.a1:.3f}  (the true map's minimum is 0.25;")
print("          the 64th term alone has modulus 64*0.99^64 ~ 34 there)")
