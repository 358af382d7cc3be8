"""
Expanding Runge's function
==========================

The u = v = 0 ultraspherical family has unit weight on (-1, 1), which is
plain Legendre territory.  Runge's bump is smooth but stiff, so the
expansion converges slowly; the L2 residual tells the truncation story.
The basis is monic, so raw coefficients grow with n and the meaningful
per-term readout is the L2 contribution |q_n| * norm_n.
"""

import math

import numpy as np

from symortho import GUP, expand, norm_squared, reconstruct


def runge(x):
    return 1.0 / (1.0 + 25.0 * x * x)


basis = GUP(0, 0)

for nmax in (4, 8, 12):
    series = expand(runge, basis, nmax)
    print(f"N = {nmax:2d}:  L2 residual {series.residual:.4e}"
          f"   relative {series.residual_rel:.4e}")
print()

series = expand(runge, basis, 12)
print("coefficients at N = 12 (odd ones vanish by symmetry):")
for n, qn in enumerate(series.coefficients):
    weight = math.sqrt(norm_squared(basis, n).value)
    print(f"   q_{n:<2d} = {qn: .6e}   L2 contribution {abs(qn) * weight:.3e}")
print()

xs = np.array([-0.9, -0.4, 0.0, 0.4, 0.9])
approx = reconstruct(series, xs)
print("pointwise reconstruction:")
for xv, fv, av in zip(xs, runge(xs), approx):
    print(f"   x = {xv: .1f}:  f = {fv:.6f}   series = {av:.6f}"
          f"   err = {abs(fv - av):.2e}")
