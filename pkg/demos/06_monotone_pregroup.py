#!/usr/bin/env python3
"""An arithmetic pregroup: monotone unbounded maps on the integers.

Multiplication is composition, the order is pointwise, and every map has
a left dual (least preimage bound) and a right dual (greatest preimage
bound), found here by exponential bracketing plus binary search.  Each
dual pairs with the map in a Galois connection.
"""

from gramsem import (MonotoneMap, galois_check, monotone_left_dual,
                     monotone_right_dual)

double = MonotoneMap(lambda m: 2 * m, name="double")

print("f(m) = 2m")
print(" n : f^l(n) f^r(n)")
for n in range(-3, 6):
    print(f"{n:2d} :  {monotone_left_dual(double, n):3d}   "
          f"{monotone_right_dual(double, n):3d}")
print("closed forms: f^l(n) = floor((n+1)/2), f^r(n) = floor(n/2)\n")

print("Galois connection on [-100, 100]:",
      galois_check(double, (-100, 100)))
print("  f^l(n) <= m  iff  n <= f(m)")
print("  f(n) <= m    iff  n <= f^r(m)\n")

# Plateaus are fine: duals only need monotone + unbounded, not strict.
stairs = MonotoneMap(lambda m: 3 * (m // 4), name="stairs")
print("f(m) = 3*floor(m/4), duals at a few points:")
for n in (-7, 0, 1, 5, 12):
    print(f"  n={n:3d}: f^l={monotone_left_dual(stairs, n):3d} "
          f"f^r={monotone_right_dual(stairs, n):3d}")
print("Galois connection on [-40, 40]:", galois_check(stairs, (-40, 40)))
