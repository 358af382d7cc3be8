"""Adaptive quadrature with singularity hints and divergence detection.

The base rule is the 15-point Kronrod extension of 7-point Gauss, applied on
a worst-panel-first refinement queue.  Three kinds of preprocessing happen
before any panel is evaluated:

* the interval is cut at hinted interior points, so singular or kinked
  points always sit on panel boundaries and are never sampled;
* an algebraic endpoint singularity |x - c|^sigma is softened by the power
  substitution x = c + tau^m, with m picked so the transformed integrand is
  smooth (or nearly so) at tau = 0;
* infinite tails are folded to (0, 1/T] by x -> 1/t, which turns algebraic
  decay at infinity into an algebraic endpoint that the same softening
  machinery handles.

Divergence is declared when refinement fails to bring the error estimate
down while the running total keeps growing with non-decaying increments.
Everything is deterministic: no randomness, no thread-order dependence.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import MaxDepthExceeded

__all__ = ["QuadResult", "IntervalSpec", "integrate"]

# 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
_XGK = np.array([
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
])
_WGK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
])

_NODES = np.concatenate((-_XGK[:7], _XGK[::-1]))
_WK = np.concatenate((_WGK[:7], _WGK[::-1]))
_WGF = np.zeros(15)
_WGF[[1, 13]] = _WG[0]
_WGF[[3, 11]] = _WG[1]
_WGF[[5, 9]] = _WG[2]
_WGF[7] = _WG[3]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadResult:
    """Outcome of one integration: value, error estimate and status flags.

    converged and diverged are mutually exclusive; both False means the
    refinement budget ran out without a determination.
    """

    value: float
    abs_error_estimate: float
    converged: bool
    diverged: bool


@dataclass(frozen=True)
class IntervalSpec:
    """Integration domain plus singularity hints.

    Each hint is a (point, exponent) pair.  A finite point marks an interior
    or endpoint location where the integrand behaves like |x - point|^exponent
    (exponent None means: just split there).  A point of +-inf gives the
    algebraic behavior |x|^exponent of the integrand in that tail; leave the
    tail unhinted for super-algebraic decay.
    """

    lo: float
    hi: float
    singularities: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")


def _gk_panel(g, a, b):
    """Apply the 15-point rule on [a, b]; returns (value, error, finite)."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    fx = np.asarray(g(c + h * _NODES), dtype=float)
    if fx.shape != (15,):
        fx = np.broadcast_to(fx, (15,)).astype(float)
    if not np.all(np.isfinite(fx)):
        return 0.0, math.inf, False
    resk = h * float(_WK @ fx)
    resg = h * float(_WGF @ fx)
    resabs = abs(h) * float(_WK @ np.abs(fx))
    mean = resk / (b - a)
    resasc = abs(h) * float(_WK @ np.abs(fx - mean))
    delta = abs(resk - resg)
    if resasc != 0.0 and delta != 0.0:
        err = resasc * min(1.0, (200.0 * delta / resasc) ** 1.5)
    else:
        err = delta
    err = max(err, 50.0 * _EPS * resabs)
    return resk, err, True


def _needs_soften(sigma) -> bool:
    if sigma is None:
        return False
    if sigma < 0:
        return True
    return sigma < 3 and abs(sigma - round(sigma)) > 1e-12


def _soften_m(sigma) -> int:
    # want m*(sigma+1) - 1 comfortably nonnegative, integer if cheap
    if sigma is None or sigma >= 0:
        m0 = 2
    else:
        m0 = max(2, math.ceil(1.8 / (sigma + 1.0)))
    m0 = min(m0, 64)
    best, best_score = m0, math.inf
    for m in range(m0, min(m0 + 8, 65)):
        t = m * (sigma + 1.0)
        score = abs(t - round(t))
        if score < best_score - 1e-15:
            best, best_score = m, score
    return best


def _soften_left(f, c, d, sigma, u_lo=0.0):
    m = _soften_m(sigma)
    span = d - c

    def g(t):
        tm = t ** m
        return f(c + tm) * (m * t ** (m - 1))

    return g, u_lo ** (1.0 / m), span ** (1.0 / m)


def _soften_right(f, c, d, sigma, u_lo=0.0):
    m = _soften_m(sigma)
    span = d - c

    def g(t):
        tm = t ** m
        return f(d - tm) * (m * t ** (m - 1))

    return g, u_lo ** (1.0 / m), span ** (1.0 / m)


_CUT = 2.0 ** -27


def _power_tail_mass(f, anchor, sign, sigma, span):
    """Analytic mass of f ~ A |x-anchor|^sigma within u0 of the anchor.

    For sigma in (-1, 0) the integrand carries O(eps^(sigma+1)) mass inside
    the half-ulp neighborhood of a nonzero anchor, which pointwise float
    samples can never see; softening alone stalls there.  Sampling at
    displacements ~2^-27 |anchor| keeps the recomputed distances exact
    (the subtraction is lossless for nearby floats) so a two-term power
    law fit recovers that mass analytically.  Returns (u0, value, err)
    or None when the samples do not cooperate.
    """
    u0 = _CUT * abs(anchor)
    if not 0.0 < 2.0 * u0 < abs(span):
        return None
    us, amps = [], []
    for frac in (1.0, 0.5, 0.25):
        x = anchor + sign * u0 * frac
        u = abs(x - anchor)
        fx = float(np.asarray(f(np.array([x])), dtype=float)[0])
        if u <= 0.0 or not math.isfinite(fx):
            return None
        us.append(u)
        amps.append(fx * u ** -sigma)
    (u_c, u1, u2), (a_c, a1, a2) = us, amps
    slope = (a1 - a2) / (u1 - u2)
    a0 = a2 - slope * u2
    value = (a0 * u_c ** (sigma + 1) / (sigma + 1)
             + slope * u_c ** (sigma + 2) / (sigma + 2))
    if not math.isfinite(value):
        return None
    drift = abs(a0 + slope * u_c - a_c)     # curvature of the local amplitude
    err = drift * u_c ** (sigma + 1) / abs(sigma + 1) + 4.0 * _EPS * abs(value)
    return u_c, value, err


def _edge_task(f, a, b, side, sigma):
    """Softened task at a singular finite endpoint, plus the analytic
    correction for the sliver too close to the anchor to sample."""
    anchor = a if side == "left" else b
    sign = 1.0 if side == "left" else -1.0
    u_lo, extra_value, extra_err = 0.0, 0.0, 0.0
    if sigma is not None and sigma < 0 and anchor != 0.0:
        corr = _power_tail_mass(f, anchor, sign, sigma, b - a)
        if corr is not None:
            u_lo, extra_value, extra_err = corr
    if side == "left":
        task = _soften_left(f, a, b, sigma, u_lo)
    else:
        task = _soften_right(f, a, b, sigma, u_lo)
    return task, extra_value, extra_err


def _tail_task(f, T, side, tail_exp):
    """Fold [T, inf) (side=+1) or (-inf, -T] (side=-1) onto (0, 1/T]."""

    def g(t):
        x = side / t
        return f(x) / (t * t)

    if tail_exp is not None:
        sigma_t = -tail_exp - 2.0
        # only soften when the folded endpoint is integrable; a non-integrable
        # endpoint is left raw so the divergence detector can see it grow
        if sigma_t > -1.0 + 1e-12 and _needs_soften(sigma_t):
            return _soften_left(g, 0.0, 1.0 / T, sigma_t)
    return g, 0.0, 1.0 / T


def _plan(f, spec: IntervalSpec):
    """Turn (f, interval, hints) into a list of finite smooth-ish tasks."""
    finite_hints = {}
    tail_hi = tail_lo = None
    for point, exponent in spec.singularities:
        if point == math.inf:
            tail_hi = exponent
        elif point == -math.inf:
            tail_lo = exponent
        else:
            finite_hints[float(point)] = exponent

    lo, hi = spec.lo, spec.hi
    cuts = sorted(p for p in finite_hints if lo < p < hi)
    scale = max([1.0] + [abs(p) for p in cuts]
                + [abs(e) for e in (lo, hi) if math.isfinite(e)])
    T = 2.0 * scale

    points = []
    if lo == -math.inf:
        points.append(-T)
    else:
        points.append(lo)
    points.extend(c for c in cuts if points[-1] < c)
    if hi == math.inf:
        if points[-1] < T:
            points.append(T)
    elif points[-1] < hi:
        points.append(hi)

    tasks = []
    extra_value = extra_err = 0.0
    if lo == -math.inf:
        tasks.append(_tail_task(f, T, -1, tail_lo))
    for c, d in zip(points[:-1], points[1:]):
        sc = finite_hints.get(c)
        sd = finite_hints.get(d)
        pieces = [(c, d)]
        if _needs_soften(sc) and _needs_soften(sd):
            mid = 0.5 * (c + d)
            pieces = [(c, mid), (mid, d)]
        for (a, b) in pieces:
            if _needs_soften(finite_hints.get(a)):
                task, ev, ee = _edge_task(f, a, b, "left", finite_hints[a])
            elif _needs_soften(finite_hints.get(b)):
                task, ev, ee = _edge_task(f, a, b, "right", finite_hints[b])
            else:
                task, ev, ee = (f, a, b), 0.0, 0.0
            tasks.append(task)
            extra_value += ev
            extra_err += ee
    if hi == math.inf:
        tasks.append(_tail_task(f, T, +1, tail_hi))
    return tasks, extra_value, extra_err


def _mirror_hints(sings):
    out = {}
    for point, exponent in sings:
        key = math.inf if point in (math.inf, -math.inf) else abs(float(point))
        if key not in out or out[key] is None:
            out[key] = exponent
    return tuple(out.items())


def integrate(f, interval, *, atol=1e-10, rtol=1e-9, max_depth=60,
              max_panels=4000, parity=None, divergence_growth=2.0,
              on_inconclusive="raise") -> QuadResult:
    """Integrate a vectorized callable over an interval with hints.

    f must accept an ndarray of points and return an ndarray of values.
    Refinement stops once the summed error estimate drops below
    max(atol, rtol * |value|).  parity may declare the integrand "odd" or
    "even" on a symmetric interval; an odd integrand returns exactly zero
    without sampling, an even one is folded onto the right half.

    Divergence is reported through the diverged flag.  If the budget runs
    out with no determination either way, MaxDepthExceeded is raised (or,
    with on_inconclusive="return", a QuadResult with both flags False is
    returned).
    """
    if not isinstance(interval, IntervalSpec):
        interval = IntervalSpec(*interval)

    symmetric = (interval.lo == -interval.hi)
    if parity is not None:
        if not symmetric:
            raise ValueError("parity shortcut needs a symmetric interval")
        if parity == "odd":
            return QuadResult(0.0, 0.0, True, False)
        if parity == "even":
            half = IntervalSpec(0.0, interval.hi,
                                _mirror_hints(interval.singularities))
            res = integrate(f, half, atol=atol / 2, rtol=rtol,
                            max_depth=max_depth, max_panels=max_panels,
                            divergence_growth=divergence_growth,
                            on_inconclusive=on_inconclusive)
            return QuadResult(2.0 * res.value, 2.0 * res.abs_error_estimate,
                              res.converged, res.diverged)
        raise ValueError(f"parity must be 'odd', 'even' or None, not {parity!r}")

    tasks, extra_value, extra_err = _plan(f, interval)

    heap = []
    seq = 0
    total = extra_value     # analytic endpoint-sliver mass from the planner
    err_fin = extra_err     # summed finite panel errors
    n_inf = 0               # panels whose rule evaluation blew up
    for (g, a, b) in tasks:
        if not a < b:
            continue
        val, err, ok = _gk_panel(g, a, b)
        if not ok:
            err = math.inf
            n_inf += 1
        else:
            err_fin += err
        total += val
        heapq.heappush(heap, (-err, seq, g, a, b, val, err, 0))
        seq += 1

    history = [total]
    splits = 0

    def errtot():
        return math.inf if n_inf else err_fin

    def result(converged, diverged):
        return QuadResult(total, errtot(), converged, diverged)

    def diverging(min_k=64):
        k = len(history)
        if k < min_k:
            return False
        t0 = abs(history[k // 4])
        t1 = abs(history[k // 2])
        t2 = abs(history[3 * k // 4])
        t3 = abs(history[-1])
        if not (t3 > t2 > t1 > t0):
            return False
        i1, i2, i3 = t1 - t0, t2 - t1, t3 - t2
        if i1 <= 0 or i2 < 0.3 * i1 or i3 < 0.3 * i2:
            return False
        return t3 >= divergence_growth * max(t0, 10.0 * atol)

    parked = []
    while True:
        if n_inf == 0 and err_fin <= max(atol, rtol * abs(total)):
            return result(True, False)
        if not heap:
            break
        if abs(total) > 1e12 * (abs(history[0]) + atol):
            return result(False, True)
        if splits >= max_panels:
            break
        if splits and splits % 128 == 0 and diverging():
            return result(False, True)

        entry = heapq.heappop(heap)
        _, _, g, a, b, val, err, depth = entry
        if depth >= max_depth:
            if not math.isfinite(err):
                return result(False, True)
            # a chain that needed the whole depth budget is the signature of
            # slow (e.g. logarithmic) divergence; look at the growth record
            # now, before the remaining panels dilute it
            if diverging(min_k=48):
                return result(False, True)
            # unsplittable; keep its error on the books but stop refining it
            parked.append(entry)
            if not heap:
                break
            continue
        mid = 0.5 * (a + b)
        v1, e1, ok1 = _gk_panel(g, a, mid)
        v2, e2, ok2 = _gk_panel(g, mid, b)
        if math.isfinite(err):
            err_fin -= err
        else:
            n_inf -= 1
        genuine_blowup = False
        for child_v, child_e, child_ok, lo_c, hi_c in (
                (v1, e1, ok1, a, mid), (v2, e2, ok2, mid, b)):
            if child_ok:
                err_fin += child_e
            else:
                width = hi_c - lo_c
                res_floor = 64.0 * _EPS * max(1.0, abs(lo_c), abs(hi_c))
                if width <= res_floor and math.isfinite(err):
                    # nodes have collided with an unhinted singular point at
                    # the floating-point resolution limit; retire the sliver
                    # and let it inherit half the parent's uncertainty
                    err_fin += 0.5 * err
                    continue
                genuine_blowup = True
                child_e = math.inf
                n_inf += 1
            heapq.heappush(heap, (-child_e, seq, g, lo_c, hi_c,
                                  child_v, child_e, depth + 1))
            seq += 1
        total += (v1 + v2) - val
        splits += 1
        history.append(total)
        if genuine_blowup and depth >= 8:
            # a wide non-finite spike survives repeated localization
            return result(False, True)

    if diverging():
        return result(False, True)
    partial = result(False, False)
    if on_inconclusive == "return":
        return partial
    raise MaxDepthExceeded(partial)
