"""
The Legendre-type gallery
=========================

Five kinds of generalized Legendre functions share one second-order
equation.  Each kind is a prefactor times a Jacobi-type polynomial; the
norms have closed displays and quadrature reproduces them.  The kinds
with an odd-index twist need the inverse-square term switched on.
"""

from symortho import (G, Pm, Q, U, V, generalized_legendre_residual,
                      integrate, legendre_norm, member_fn,
                      orthogonality_interval)

x = 0.37
n = 3

for kind in (U(0.0), U(0.5), Pm(2), V(-0.5), G(1, 1), Q(1.0)):
    f = member_fn(kind, n)
    display = legendre_norm(kind, n)
    quad = integrate(lambda t: f(t) ** 2, orthogonality_interval(kind))
    e_choice = "-2/x^2" if isinstance(kind, (G, Q)) else "zero"
    res = abs(generalized_legendre_residual(kind, n, x, e_choice=e_choice))
    print(f"{kind!r}")
    print(f"   member_{n}({x}) = {f(x): .8f}")
    print(f"   norm^2: display {display:.10f}   quadrature {quad.value:.10f}")
    print(f"   equation residual at x={x}: {res:.2e}")
    print()

# the Pm kinds start at index m; asking below that is a caller error
try:
    legendre_norm(Pm(2), 1)
except Exception as err:
    print(f"Pm(2) at index 1 refuses: {err}")
