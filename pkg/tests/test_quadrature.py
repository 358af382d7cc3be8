"""Adaptive quadrature: exactness, hints, tails, parity, divergence."""

import math

import numpy as np
import pytest

from symortho.quadrature import integrate, IntervalSpec, _gk_panel
from symortho.errors import MaxDepthExceeded


def test_rule_exact_on_low_degree():
    # the 15-point Kronrod rule integrates polynomials up to degree 22
    rng = np.random.default_rng(7)
    coeffs = rng.standard_normal(23)
    exact = sum(c / (k + 1) * (2.0 ** (k + 1) - (-1.0) ** (k + 1))
                for k, c in enumerate(coeffs))
    val, err, ok = _gk_panel(lambda x: np.polynomial.polynomial.polyval(x, coeffs),
                             -1.0, 2.0)
    assert ok
    assert val == pytest.approx(exact, rel=1e-13)


def test_smooth_finite():
    r = integrate(np.sin, IntervalSpec(0.0, math.pi))
    assert r.converged and not r.diverged
    assert r.value == pytest.approx(2.0, abs=1e-12)


def test_oscillatory():
    r = integrate(lambda x: np.cos(40 * x), IntervalSpec(0.0, 10.0))
    assert r.converged
    assert r.value == pytest.approx(math.sin(400.0) / 40.0, abs=1e-12)


def test_gaussian_whole_line():
    r = integrate(lambda x: np.exp(-x * x), IntervalSpec(-math.inf, math.inf))
    assert r.converged
    assert r.value == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_interior_hint_abs_power():
    r = integrate(lambda x: np.abs(x) ** -0.5,
                  IntervalSpec(-1.0, 1.0, ((0.0, -0.5),)))
    assert r.converged
    assert r.value == pytest.approx(4.0, rel=1e-12)


def test_endpoint_hints_arcsine():
    r = integrate(lambda x: (1.0 - x * x) ** -0.5,
                  IntervalSpec(-1.0, 1.0, ((-1.0, -0.5), (1.0, -0.5))))
    assert r.converged
    assert r.value == pytest.approx(math.pi, rel=1e-9)


def test_algebraic_tail():
    r = integrate(lambda x: x ** -2.0,
                  IntervalSpec(1.0, math.inf, ((math.inf, -2.0),)))
    assert r.converged
    assert r.value == pytest.approx(1.0, rel=1e-12)


def test_flat_origin_weight():
    # |x|^-3 exp(-1/x^2) integrates to Gamma(1) = 1 over the whole line
    def w(x):
        with np.errstate(divide="ignore", over="ignore"):
            return np.abs(x) ** -3.0 * np.exp(-1.0 / (x * x))
    spec = IntervalSpec(-math.inf, math.inf,
                        ((0.0, None), (math.inf, -3.0), (-math.inf, -3.0)))
    r = integrate(w, spec)
    assert r.converged
    assert r.value == pytest.approx(1.0, rel=1e-10)


def test_parity_odd_short_circuit():
    calls = []

    def f(x):
        calls.append(x)
        return x * np.exp(-x * x)

    r = integrate(f, IntervalSpec(-math.inf, math.inf), parity="odd")
    assert r.value == 0.0 and r.converged and not calls


def test_parity_even_matches_full():
    f = lambda x: np.exp(-x * x) * x ** 4
    full = integrate(f, IntervalSpec(-math.inf, math.inf))
    folded = integrate(f, IntervalSpec(-math.inf, math.inf), parity="even")
    assert folded.converged
    assert folded.value == pytest.approx(full.value, rel=1e-11)


def test_parity_needs_symmetric_interval():
    with pytest.raises(ValueError):
        integrate(np.exp, IntervalSpec(0.0, 1.0), parity="even")


@pytest.mark.parametrize("f,spec", [
    (lambda x: 1.0 / x, IntervalSpec(0.0, 1.0)),
    (lambda x: x ** -2.0, IntervalSpec(0.0, 1.0)),
    (lambda x: x * x / (1.0 + x * x), IntervalSpec(-math.inf, math.inf)),
])
def test_divergent_integrals_flagged(f, spec):
    r = integrate(f, spec, on_inconclusive="return")
    assert r.diverged and not r.converged


def test_log_divergent_tails_flagged():
    # x^8 against |x|^-9 exp(-1/x^2): integrand ~ 1/|x| at infinity
    def g(x):
        with np.errstate(divide="ignore", over="ignore"):
            return x ** 8 * np.abs(x) ** -9.0 * np.exp(-1.0 / (x * x))
    spec = IntervalSpec(-math.inf, math.inf,
                        ((0.0, None), (math.inf, -1.0), (-math.inf, -1.0)))
    r = integrate(g, spec, on_inconclusive="return")
    assert r.diverged


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_inconclusive_raises_with_partial():
    # integrable endpoint singularity left unhinted: no determination
    with pytest.raises(MaxDepthExceeded) as exc:
        integrate(lambda x: (1.0 - x) ** -0.5, IntervalSpec(0.0, 1.0),
                  max_panels=600)
    partial = exc.value.partial
    assert not partial.converged and not partial.diverged
    assert partial.value == pytest.approx(2.0, abs=1e-4)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_inconclusive_return_mode():
    r = integrate(lambda x: (1.0 - x) ** -0.5, IntervalSpec(0.0, 1.0),
                  max_panels=600, on_inconclusive="return")
    assert not r.converged and not r.diverged


def test_deterministic():
    f = lambda x: np.cos(7 * x) * np.exp(-x * x)
    spec = IntervalSpec(-math.inf, math.inf)
    first = integrate(f, spec)
    for _ in range(3):
        again = integrate(f, spec)
        assert again.value == first.value
        assert again.abs_error_estimate == first.abs_error_estimate


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        IntervalSpec(1.0, 1.0)


def test_tolerances_respected():
    r = integrate(lambda x: np.exp(-x * x), IntervalSpec(-math.inf, math.inf),
                  atol=1e-13, rtol=1e-13)
    assert r.converged
    assert abs(r.value - math.sqrt(math.pi)) < 5e-13
