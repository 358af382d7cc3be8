"""Weighted least-squares expansion of a target function in a verified basis.

The coefficients are the classical projections

    q_n = int W* f phi_n / int W* phi_n^2

with W* the orthogonality weight of the basis (identically one for the
Legendre-type kinds).  The basis is checked by gram_matrix before any
coefficient is computed; a basis that fails, or whose members are not all
genuinely square-integrable up to the requested order, is refused.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BasisInvalid, ConstraintViolation, NonSquareIntegrable
from .quadrature import integrate
from .sturm import _adapt, gram_matrix


def barycentric_interpolant(nodes, values):
    """Polynomial interpolant through (nodes, values) in barycentric form.

    Plain Lagrange interpolation on whatever nodes the caller supplies; on
    wild node sets (many equispaced points) the underlying polynomial
    itself oscillates, and that error budget belongs to the caller.
    """
    xs = np.asarray(nodes, dtype=float)
    ys = np.asarray(values, dtype=float)
    if xs.ndim != 1 or xs.shape != ys.shape or xs.size == 0:
        raise ConstraintViolation("need matching, nonempty node and value arrays")
    if np.unique(xs).size != xs.size:
        raise ConstraintViolation("interpolation nodes must be distinct")
    diff = xs[:, None] - xs[None, :]
    np.fill_diagonal(diff, 1.0)
    w = 1.0 / np.prod(diff, axis=1)

    def interp(x):
        x_arr = np.asarray(x, dtype=float)
        flat = np.atleast_1d(x_arr).astype(float)
        d = flat[:, None] - xs[None, :]
        exact = d == 0.0
        hit = exact.any(axis=1)
        d[hit] = 1.0           # silenced; replaced below
        kern = w[None, :] / d
        out = (kern @ ys) / kern.sum(axis=1)
        if np.any(hit):
            out[hit] = ys[exact.argmax(axis=1)[hit]]
        return out.reshape(x_arr.shape) if x_arr.ndim else float(out[0])

    return interp


def _as_callable(f):
    if callable(f):
        return f
    if isinstance(f, tuple) and len(f) == 2:
        return barycentric_interpolant(f[0], f[1])
    pairs = np.asarray(f, dtype=float)
    if pairs.ndim == 2 and pairs.shape[1] == 2:
        return barycentric_interpolant(pairs[:, 0], pairs[:, 1])
    raise ConstraintViolation(
        "target must be callable, an (x, y) pair of arrays, or an (k, 2) sample array")


@dataclass(frozen=True, eq=False)
class ExpansionSeries:
    """Truncated expansion: coefficients index 0..nmax (entries below a
    kind's base order are structurally zero)."""
    basis: object
    coefficients: tuple
    nmax: int
    residual: float          # absolute L2(W*) error of the partial sum
    residual_rel: float      # residual / ||f||


def _weighted(ad, fn):
    spec = getattr(ad, "spec", None)
    if spec is None:
        return fn
    wlog = spec.weight_log

    def g(x):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return np.exp(wlog(x)) * fn(x)
    return g


def _interval(ad, parity):
    spec = getattr(ad, "spec", None)
    if spec is not None:
        return spec.interval(origin_power=parity, tail_power=0)
    from .legendre import orthogonality_interval
    return orthogonality_interval(ad.kind)


def expand(f, basis, nmax, tol=1e-7) -> ExpansionSeries:
    """Project f onto the basis members up to order nmax.

    f is a callable, or sampled (x, f(x)) data which is first interpolated
    (see barycentric_interpolant; the interpolation error is the caller's).
    The basis Gram matrix must pass with every entry status "ok"; finite
    families truncated by a cliff inside the requested range are refused.
    """
    fn = _as_callable(f)
    report = gram_matrix(basis, nmax, tol)
    if not report.passed or any(e.status != "ok" for e in report.entries):
        raise BasisInvalid(report)
    ad = _adapt(basis)

    ff = integrate(_weighted(ad, lambda x: fn(x) ** 2), _interval(ad, 0),
                   on_inconclusive="return")
    if not ff.converged:
        raise NonSquareIntegrable(
            f"int W* f^2 did not converge (estimate {ff.value!r})")
    f_norm2 = max(ff.value, 0.0)

    coeffs = [0.0] * (nmax + 1)
    phis = {}
    for n in range(ad.base, nmax + 1):
        phi = ad.phi(n)
        phis[n] = phi
        num = integrate(_weighted(ad, lambda x: fn(x) * phi(x)),
                        _interval(ad, n % 2))
        coeffs[n] = num.value / ad.norm(n)

    def tail(x):
        acc = fn(x) - sum(coeffs[n] * phis[n](x) for n in range(ad.base, nmax + 1))
        return acc ** 2

    res = integrate(_weighted(ad, tail), _interval(ad, 0), on_inconclusive="return")
    residual = math.sqrt(max(res.value, 0.0))
    rel = residual / math.sqrt(f_norm2) if f_norm2 > 0 else 0.0
    return ExpansionSeries(basis, tuple(coeffs), nmax, residual, rel)


def reconstruct(series: ExpansionSeries, x):
    """Partial sum of the expansion at x."""
    ad = _adapt(series.basis)
    x_arr = np.asarray(x, dtype=float)
    total = np.zeros_like(x_arr, dtype=float)
    for n, q in enumerate(series.coefficients):
        if n < ad.base or q == 0.0:
            continue
        total = total + q * ad.phi(n)(x_arr)
    return float(total) if x_arr.ndim == 0 else total
