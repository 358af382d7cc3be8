"""
A tour of the four symmetric weight families
============================================

Each family is nothing more than a choice of (p, q, r, s) in the master
second-order equation; polynomials, eigenvalues, recurrence coefficients
and norms all follow mechanically from those four numbers.
"""

from symortho import (GUP, GHP, FiniteI, FiniteII, eigenvalue,
                      finite_degree_bound, moment_zero, norm_squared,
                      poly_from_params, recurrence_c, support_theta)

for spec in (GUP(1, 1.5), GHP(0.5), FiniteI(0.3, 2.0), FiniteII(4.5)):
    params = spec.params
    bound = finite_degree_bound(spec)
    print(f"== {spec!r} ==")
    print("   (p, q, r, s) = ({:g}, {:g}, {:g}, {:g})".format(
        *(float(v) for v in (params.p, params.q, params.r, params.s))))
    print(f"   support radius theta = {support_theta(params)}")
    print(f"   certified degrees up to {bound}")
    print(f"   bare weight integral  = {moment_zero(spec):.8f}")

    # first few monic members and their eigenvalues
    for n in range(4):
        poly = poly_from_params(params, n, monic=True)
        cs = ", ".join(f"{float(c):+.6f}" for c in poly.coeffs)
        lam = float(eigenvalue(params, n)) + 0.0
        print(f"   n={n}: coeffs [{cs}]   lambda_n = {lam:g}")

    # a pole in some C_i is how a finite family announces its last degree
    cvals = []
    for i in range(1, 5):
        try:
            cvals.append(f"{float(recurrence_c(params, i)):+.6f}")
        except Exception:
            cvals.append(f"C_{i} has a pole")
    print(f"   recurrence C_1..C_4: {', '.join(cvals)}")

    # norms follow the running product of the C_i, but only as far as the
    # family certifies them; the first refused degree is worth seeing too
    good = [n for n in range(3) if n <= bound]
    norms = ", ".join(f"{norm_squared(spec, n).value:.8f}" for n in good)
    print(f"   squared norms n=0..{good[-1]}: {norms}")
    if bound < 2:
        probe = int(bound) + 1
        try:
            norm_squared(spec, probe)
        except Exception as err:
            print(f"   norm at n={probe} refuses: {err}")
    print()
