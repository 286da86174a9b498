#!/usr/bin/env python3
"""Matrix elements of the discrete-series operators and their truncations.

The same element is evaluated through the algebraic (alpha, beta) formula
and through the chart form (magnitude in x times pure phases); the two must
agree to near machine precision.  Truncated blocks are unitary and
multiplicative up to a tail that dies geometrically in the block size.
"""
import numpy as np

from su11 import (
    from_cartan,
    homomorphism_defect,
    matrix_element,
    matrix_element_cartan,
    to_cartan,
    truncated_operator,
    unitarity_defect,
)

g = from_cartan(1.2, 0.7, -0.4)
c = to_cartan(g)

print("U_{n n'}(g) for n, n' < 4 (algebraic form), eta = 3/2:")
block = truncated_operator("3/2", g, 4)
with np.printoptions(precision=4, suppress=True):
    print(block.entries)

print("\nworst |algebraic - chart| over n, n' < 8:")
worst = max(
    abs(matrix_element("3/2", n, np_, g) - matrix_element_cartan("3/2", n, np_, c))
    for n in range(8)
    for np_ in range(8)
)
print(f"  {worst:.3e}")

print("\nunitarity defect of the leading 10 x 10 corner vs block size "
      f"(|z| = {abs(g.beta / g.alpha.conjugate()):.3f}):")
for size in (20, 30, 40, 50, 60):
    defect = unitarity_defect(truncated_operator("3/2", g, size), 10)
    print(f"  size {size:2d}: {defect:.3e}")

g2 = from_cartan(0.6, 2.0, 1.0)
print("\nhomomorphism defect |U(g1 g2) - U(g1) U(g2)| on the 10 x 10 corner:")
for size in (30, 45, 60):
    print(f"  size {size:2d}: {homomorphism_defect('3/2', g, g2, size, 10):.3e}")
