"""
Checking orthogonality the honest way
=====================================

Gram matrices are computed entry by entry with adaptive quadrature and
held against the closed-form norms.  The interesting case is a finite
family: beyond the certified degree the machinery must refuse loudly,
and the boundary bracket exposes the leak that breaks the integration-
by-parts argument.
"""

import numpy as np

from symortho import (GUP, FiniteII, boundary_term, from_params, gram_matrix,
                      poly_from_params)

# an infinite family first: every requested entry should come back "ok"
rep = gram_matrix(GUP(1, 1.5), nmax=5)
print(rep.summary())
print("matrix, rounded hard so the zeros are visible:")
print(np.round(rep.matrix, 10))
print()

# the finite family with u = 9/2 certifies degrees 0..4.  Right at the
# boundary degree the norm integral itself already log-diverges, and the
# report says so ("cliff") instead of quietly printing a number.
spec = FiniteII(4.5)
rep = gram_matrix(spec, nmax=4)
print(rep.summary())
for e in rep.entries:
    if e.status != "ok":
        print(f"   entry ({e.n},{e.m}): status {e.status}")
print()

# one index higher the leading coefficient vanishes and the index-5
# member collapses to degree 3.  Its boundary bracket, which must vanish
# for orthogonality to close, stalls at a visibly nonzero value.
sl = from_params(spec.params)
phi5 = poly_from_params(spec.params, 5)
leak = boundary_term(sl, phi5, phi5)
print(f"index-5 member collapses to degree {np.flatnonzero(phi5.as_dense())[-1]}")
print(f"its boundary bracket: {leak:.3e}   (a healthy member gives ~0)")
