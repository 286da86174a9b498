#!/usr/bin/env python3
"""Group elements, the hyperbolic-angle chart, and the invariant measure.

Every element is a 2x2 matrix [[alpha, beta], [conj(beta), conj(alpha)]]
with |alpha|^2 - |beta|^2 = 1.  The chart (tau, phi, psi) factors it into
rotation * boost * rotation, and the invariant measure has the density
sinh(tau) / (8 pi^2) there.
"""
import math

import numpy as np

from su11 import (
    CartanCoords,
    compact_element,
    disk_point,
    from_cartan,
    haar_density,
    inverse,
    multiply,
    to_cartan,
)

g = from_cartan(0.8, 1.1, -0.3)
print("element of the chart point (0.8, 1.1, -0.3):")
print("  alpha =", g.alpha)
print("  beta  =", g.beta)
print("  det   =", g.det())

back = to_cartan(g)
print("recovered chart point:", (back.tau, back.phi, back.psi))

h = compact_element(0.9)
print("\ncompact subgroup element h(0.9): alpha =", h.alpha, " beta =", h.beta)
print("h(a) h(b) = h(a+b):", multiply(compact_element(0.4), compact_element(0.5)).alpha)

e = multiply(g, inverse(g))
print("g g^{-1} =", (e.alpha, e.beta))

z = disk_point(g).z
print("\ndisk point z = beta/conj(alpha):", z, " |z| =", abs(z),
      " tanh(tau/2) =", math.tanh(0.4))
print("x coordinate 1 - 2 tanh^2(tau/2):", back.x, " = 1 - 2|z|^2:", 1 - 2 * abs(z) ** 2)

# The measure of the ball tau <= T must equal cosh(T) - 1.
nodes, weights = np.polynomial.legendre.leggauss(40)
for T in (1.0, 3.0):
    tau = 0.5 * T * (nodes + 1.0)
    radial = 0.5 * T * float(np.dot(weights, [haar_density(t) for t in tau]))
    volume = radial * (2 * math.pi) * (4 * math.pi)
    print(f"measure of tau <= {T}: {volume:.12f}   cosh(T) - 1 = {math.cosh(T) - 1:.12f}")

print("\ndensity at tau = 1:", haar_density(CartanCoords(1.0, 0.0, 0.0)),
      "= sinh(1)/(8 pi^2) =", math.sinh(1.0) / (8 * math.pi**2))
