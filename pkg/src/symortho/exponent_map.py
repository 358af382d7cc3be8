"""Fractional-exponent generalization of the symmetric classes.

The map w = x^{lam/2} turns the generic second-order equation into

    x^2 (a x^lam + b) y'' + x (c x^lam + d) y' + (alpha_n x^lam + beta [n odd]) y = 0

whose solutions are the class polynomials composed with an odd real root.
Only exponents lam = 2(odd)/(odd) keep the composed solutions symmetric;
lam = 2 reproduces the polynomial case on the same code path, and
lam = 2/3 is the cube-root worked class with its own weight and Gram
machinery in t-space.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .core import ClassParams, poly_from_params, recurrence_c
from .errors import ConstraintViolation
from .quadrature import IntervalSpec, integrate
from .sturm import GramEntry, GramReport, generic_weight_log, support_theta


def _num(x):
    if isinstance(x, Rational):
        return Fraction(x)
    return float(x)


def _as_fraction(lam):
    if isinstance(lam, tuple):
        return Fraction(*lam)
    return Fraction(lam)


def admissible(lam) -> bool:
    """True iff the odd-root convention makes x^{lam/2} odd and x^lam even:
    lam = 2k/den in lowest terms with k and den both odd."""
    f = _as_fraction(lam)
    if f == 0:
        raise ConstraintViolation("lambda must be nonzero")
    num, den = f.numerator, f.denominator
    return den % 2 == 1 and num % 2 == 0 and (num // 2) % 2 == 1


def signed_power(x, e):
    """sign(x) |x|^e, the canonical real branch of an odd rational power.

    e == 1 passes the input through untouched; integer e stays exact up to
    float rounding.  A negative argument with an even-denominator exponent
    has no real branch and is refused.
    """
    e = _as_fraction(e)
    if e == 1:
        return x
    arr = np.asarray(x)
    if e.denominator % 2 == 0 and np.any(arr < 0):
        raise ConstraintViolation(
            f"even root (exponent {e}) of a negative argument has no real branch")
    if e.denominator == 1:
        out = np.sign(arr) * np.abs(arr) ** int(e)
    else:
        out = np.sign(arr) * np.abs(arr) ** float(e)
    return out if np.ndim(x) else float(out)


@dataclass(frozen=True)
class LambdaSpec:
    """Parameter vector (a, b, c, d) of the transformed equation plus the
    exponent lam, kept as an exact reduced rational.

    The underlying polynomial class has p = a, q = b and

        r = (2/lam) c + (1 - 2/lam) a,   s = (2/lam) d + (1 - 2/lam) b.
    """
    a: object
    b: object
    c: object
    d: object
    lam: object

    def __post_init__(self):
        for f in ("a", "b", "c", "d"):
            object.__setattr__(self, f, _num(getattr(self, f)))
        lam = _as_fraction(self.lam)
        if not admissible(lam):
            raise ConstraintViolation(
                f"lambda = {lam} is not admissible (needs 2*odd/odd)")
        object.__setattr__(self, "lam", lam)

    @property
    def mapped_params(self) -> ClassParams:
        two_over = 2 / self.lam
        r = two_over * self.c + (1 - two_over) * self.a
        s = two_over * self.d + (1 - two_over) * self.b
        return ClassParams(self.a, self.b, r, s)


def alpha_beta(spec: LambdaSpec, n: int):
    """Eigenvalue pair of the transformed equation; exact for exact inputs:
    alpha_n = -(lam/4) n (2c + (lam n - 2) a), beta = -(lam/4)(2d + (lam-2) b)."""
    lam = spec.lam
    alpha = -(lam / 4) * n * (2 * spec.c + (lam * n - 2) * spec.a)
    beta = -(lam / 4) * (2 * spec.d + (lam - 2) * spec.b)
    return alpha, beta


def transformed_eval(spec: LambdaSpec, n: int, x):
    """The transformed solution: the degree-n class polynomial of the
    mapped parameters evaluated at signed_power(x, lam/2).  lam = 2 reduces
    to the plain polynomial on the identical code path."""
    poly = poly_from_params(spec.mapped_params, n, monic=False)
    return poly(signed_power(x, spec.lam / 2))


def generic_ode_residual(spec: LambdaSpec, n: int, x):
    """Left side of the transformed equation at the transformed solution,
    for x > 0; should vanish to rounding."""
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0):
        raise ConstraintViolation("the transformed residual is defined for x > 0")
    half = float(spec.lam) / 2
    poly = poly_from_params(spec.mapped_params, n, monic=False)
    dp = poly.deriv()
    ddp = dp.deriv()
    w = xs ** half
    wp = half * xs ** (half - 1)
    wpp = half * (half - 1) * xs ** (half - 2)
    y = poly(w)
    yp = dp(w) * wp
    ypp = ddp(w) * wp * wp + dp(w) * wpp
    xl = w * w
    a, b, c, d = (float(v) for v in (spec.a, spec.b, spec.c, spec.d))
    al, be = (float(v) for v in alpha_beta(spec, n))
    odd = (1 - (-1) ** n) / 2
    res = (xs * xs * (a * xl + b) * ypp + xs * (c * xl + d) * yp
           + (al * xl + be * odd) * y)
    return res if np.ndim(x) else float(res)


def _t_interval(params, theta, n, m):
    # hints for the substituted measure W(|t|^{1/3}) / (3 |t|^{2/3})
    p, q, r, s = (float(v) for v in params)
    parity = (n % 2) + (m % 2)
    if q != 0:
        origin = (s / q - 2 + parity) / 3
    else:
        origin = None          # essential zero at the origin, split only
    hints = [(0.0, origin)]
    if math.isfinite(theta):
        edge = (r - 2 * p) / (2 * p) - s / (2 * q)
        hints += [(-theta ** 3, edge), (theta ** 3, edge)]
        return IntervalSpec(-theta ** 3, theta ** 3, tuple(hints))
    if p != 0:
        tail = ((r - 2 * p) / p + n + m - 2) / 3
        hints += [(-math.inf, tail), (math.inf, tail)]
    return IntervalSpec(-math.inf, math.inf, tuple(hints))


def lambda_weight_and_gram(spec: LambdaSpec, nmax: int, tol=1e-7) -> GramReport:
    """Gram matrix of the lam = 2/3 class in the substituted variable.

    Integrates int W1(t) S_n(cbrt t) S_m(cbrt t) dt over [-theta^3, theta^3]
    with W1(t) = W(|t|^{1/3}) / (3 |t|^{2/3}), where W is the weight of the
    mapped polynomial class on [-theta, theta].  Diagonals are judged
    against the recurrence product (-1)^n C_1...C_n times the measured
    (0, 0) entry; off-diagonals against tol * sqrt(d_n d_m).  By the
    substitution t = x^3 every entry equals the corresponding entry of the
    mapped class's own Gram matrix, which the tests check against the
    x-space machinery as an independent route.
    """
    if spec.lam != Fraction(2, 3):
        raise ConstraintViolation(
            f"the substituted Gram is worked for lambda = 2/3, got {spec.lam}")
    mp = spec.mapped_params
    theta = support_theta(mp)
    polys = [poly_from_params(mp, k, monic=True) for k in range(nmax + 1)]
    third = Fraction(1, 3)

    def inner(n, m):
        pn, pm = polys[n], polys[m]

        def f(t):
            t = np.asarray(t, dtype=float)
            xr = np.abs(t) ** (1.0 / 3.0)
            with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
                w1 = np.exp(generic_weight_log(mp, xr) - math.log(3.0)
                            - (2.0 / 3.0) * np.log(np.abs(t)))
            u = signed_power(t, third)
            return w1 * pn(u) * pm(u)

        return integrate(f, _t_interval(mp, theta, n, m), on_inconclusive="return")

    entries = []
    diag = {}
    base = inner(0, 0)
    ratio = 1.0
    for n in range(nmax + 1):
        if n > 0:
            ratio *= -float(recurrence_c(mp, n))
        r = inner(n, n) if n else base
        expected = ratio * base.value if base.converged else None
        if not r.converged:
            status = "divergent" if r.diverged else "inconclusive"
        elif expected is None:
            status = "inconclusive"
        elif abs(r.value - expected) <= tol * max(abs(expected), 1e-300):
            status = "ok"
        else:
            status = "mismatch"
        if r.converged:
            diag[n] = r.value
        entries.append(GramEntry(n, n, r, expected, status))

    for n in range(nmax + 1):
        for m in range(n):
            r = inner(n, m)
            dn = abs(diag.get(n, diag.get(m, 1.0)))
            dm = abs(diag.get(m, dn))
            scale = math.sqrt(max(dn * dm, 1e-300))
            if r.converged:
                status = "ok" if abs(r.value) <= tol * scale else "mismatch"
            elif r.diverged:
                status = "divergent"
            else:
                status = "inconclusive"
            entries.append(GramEntry(n, m, r, 0.0, status))

    mat = np.full((nmax + 1, nmax + 1), math.nan)
    for e in entries:
        v = e.quad.value if e.quad.converged else math.nan
        mat[e.n, e.m] = v
        mat[e.m, e.n] = v
    passed = all(e.status == "ok" for e in entries)
    return GramReport("lambda23", 0, nmax, tol, tuple(entries), mat, passed)
