"""Bicomplex arithmetic from the ground up.

A bicomplex number Z = Z1 + j*Z2 carries two commuting imaginary units
i and j; their product k = ij squares to +1.  The whole calculus runs on
the idempotent pair beta1 = Z1 - i*Z2, beta2 = Z1 + i*Z2, because the
idempotents e1 = (1+k)/2 and e2 = (1-k)/2 annihilate each other: ring
operations act on the two complex slots independently.
"""

import bcapprox as bc

print("== units ==")
print("e1 =", bc.E1, " cartesian:", bc.E1.cartesian())
print("e2 =", bc.E2, " cartesian:", bc.E2.cartesian())
print("e1 + e2 =", bc.E1 + bc.E2, " (the unit)")
print("e1 - e2 =", bc.E1 - bc.E2, " (the hyperbolic unit k)")
print("e1 * e2 =", bc.E1 * bc.E2, " (they annihilate: both are zero divisors)")
print("k * k   =", bc.K * bc.K)

print()
print("== idempotent decomposition ==")
z = bc.Bicomplex.from_cartesian(3 + 1j, 2 - 1j)
print("Z = (3+i) + j(2-i)  ->  beta1 =", z.beta1, ", beta2 =", z.beta2)
print("and back:", z.cartesian())

print()
print("== multiplication is slot-wise ==")
w = bc.Bicomplex(2, 3)
v = bc.Bicomplex(5, 7)
print(f"({w.beta1:g},{w.beta2:g}) * ({v.beta1:g},{v.beta2:g}) =", (w * v))

print()
print("== three conjugations ==")
print("Z         =", z)
print("bar       =", z.conjugate("bar"), "  (conjugate both cartesian parts)")
print("dagger    =", z.conjugate("dagger"), "  (negate the j part; swaps slots)")
print("star      =", z.conjugate("star"), "  (both combined)")
zd = z * z.conjugate("dagger")
print("Z * Z^dagger =", zd.cartesian()[0], " -- a C(i)-valued scalar (j part", zd.cartesian()[1], ")")

print()
print("== the null cone: where division dies ==")
print("e1 is a zero divisor:", bc.is_zero_divisor(bc.E1))
zd_el = bc.Bicomplex.from_cartesian(1, 1j)  # Z1^2 + Z2^2 = 0
print("Z = 1 + j*i is one too:", bc.is_zero_divisor(zd_el))
try:
    bc.E1.invert()
except bc.NullConeError as exc:
    print("inverting e1 fails:", exc)
print("off the cone it's just slot-wise reciprocals: (2,4)^-1 =", bc.Bicomplex(2, 4).invert())

print()
print("== hyperbolic norm and partial order ==")
print("|Z|_k of (3+4i, -5)  =", bc.Bicomplex(3 + 4j, -5).norm_k())
h, g = bc.Hyperbolic(1, 0), bc.Hyperbolic(0, 1)
print("(1,0) and (0,1) are incomparable:", bc.hyp_leq(h, g), bc.hyp_leq(g, h))
print("(0.3,0.9) <= (0.3,1.0):", bc.hyp_leq(bc.Hyperbolic(0.3, 0.9), bc.Hyperbolic(0.3, 1.0)))
print("norms multiply slot-wise: |ZW|_k =", (w * v).norm_k(), "= |Z|_k |W|_k =", w.norm_k() * v.norm_k())
