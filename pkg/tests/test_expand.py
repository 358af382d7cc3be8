import math

import numpy as np
import pytest

from symortho.core import poly_from_params
from symortho.errors import (BasisInvalid, ConstraintViolation,
                             NonSquareIntegrable)
from symortho.expand import (ExpansionSeries, barycentric_interpolant, expand,
                             reconstruct)
from symortho.families import GUP, GHP, FiniteII, norm_squared
from symortho.legendre import Pm, Q
from symortho.quadrature import integrate


# -------------------------------------------------------- interpolation


def test_barycentric_reproduces_polynomial():
    xs = np.linspace(-1, 1, 6)
    ys = 3 * xs ** 4 - xs + 0.5
    interp = barycentric_interpolant(xs, ys)
    for t in (-0.83, 0.0, 0.31, 0.99):
        assert interp(t) == pytest.approx(3 * t ** 4 - t + 0.5, rel=1e-12)


def test_barycentric_exact_at_nodes():
    xs = np.array([0.0, 0.4, 1.1, -2.0])
    ys = np.array([1.0, 2.0, -3.0, 7.0])
    interp = barycentric_interpolant(xs, ys)
    assert np.all(interp(xs) == ys)
    assert interp(0.4) == 2.0


def test_barycentric_rejects_bad_nodes():
    with pytest.raises(ConstraintViolation):
        barycentric_interpolant([0.0, 0.0, 1.0], [1.0, 2.0, 3.0])
    with pytest.raises(ConstraintViolation):
        barycentric_interpolant([0.0, 1.0], [1.0])


# ------------------------------------------------------------ expansion


def test_polynomial_reproduced_exactly():
    ser = expand(lambda x: x ** 5, GUP(1, 1), 8)
    assert isinstance(ser, ExpansionSeries)
    assert ser.nmax == 8
    assert ser.residual <= 1e-9
    assert ser.residual_rel <= 1e-8
    # only odd orders participate
    assert all(abs(ser.coefficients[k]) < 1e-10 for k in (0, 2, 4, 6, 8))
    assert reconstruct(ser, 0.3) == pytest.approx(0.3 ** 5, abs=1e-8)
    xs = np.linspace(-0.9, 0.9, 11)
    assert reconstruct(ser, xs) == pytest.approx(xs ** 5, abs=1e-8)


def test_basis_member_round_trip():
    phi3 = poly_from_params(GUP(1, 1).params, 3, monic=True)
    ser = expand(phi3, GUP(1, 1), 5)
    assert ser.coefficients[3] == pytest.approx(1.0, abs=1e-9)
    for k, q in enumerate(ser.coefficients):
        if k != 3:
            assert abs(q) <= 1e-9


def test_odd_function_kills_even_orders():
    ser = expand(np.sin, GHP(0), 6)
    for k in (0, 2, 4, 6):
        assert abs(ser.coefficients[k]) <= 1e-10


def test_parseval_consistency():
    ser = expand(lambda x: x ** 5, GUP(1, 1), 8)
    total = sum(q * q * norm_squared(GUP(1, 1), n).value
                for n, q in enumerate(ser.coefficients) if q != 0.0)
    spec = GUP(1, 1)
    f2 = integrate(lambda x: np.exp(spec.weight_log(x)) * x ** 10,
                   spec.interval(origin_power=2)).value
    assert total <= f2 * (1 + 1e-7)
    assert total == pytest.approx(f2, rel=1e-7)


def test_projection_idempotence():
    ser = expand(lambda x: np.exp(-x * x) * x, GHP(0.5), 7)
    again = expand(lambda x: reconstruct(ser, x), GHP(0.5), 7)
    for a, b in zip(ser.coefficients, again.coefficients):
        assert a == pytest.approx(b, abs=1e-9)


def test_constant_on_trivial_truncation():
    ser = expand(lambda x: np.ones_like(np.asarray(x, dtype=float)), GHP(0), 0)
    assert reconstruct(ser, 0.7) == pytest.approx(1.0, rel=1e-9)


def test_legendre_kind_basis_uses_unit_weight():
    # smooth even function in the Q kind, cross-checked pointwise
    ser = expand(lambda x: x * np.sqrt(np.clip(1 - x * x, 0, None)), Q(0), 5)
    xs = np.linspace(-0.9, 0.9, 7)
    err = np.max(np.abs(reconstruct(ser, xs) - xs * np.sqrt(1 - xs ** 2)))
    assert err < 0.05
    assert ser.residual < 0.05


def test_sampled_input_matches_callable_route():
    xs = np.cos(np.pi * (np.arange(12) + 0.5) / 12)
    ser_s = expand((xs, xs ** 5), GUP(1, 1), 8)
    ser_c = expand(lambda x: x ** 5, GUP(1, 1), 8)
    for a, b in zip(ser_s.coefficients, ser_c.coefficients):
        assert a == pytest.approx(b, abs=1e-10)
    pairs = np.column_stack([xs, xs ** 5])
    ser_p = expand(pairs, GUP(1, 1), 8)
    assert ser_p.coefficients == pytest.approx(ser_c.coefficients, abs=1e-10)


def test_pm_basis_offset():
    # (1-x^2) P_3'' = 15 x (1 - x^2); expanding half of it hits order 3 alone
    ser = expand(lambda x: 7.5 * x * (1 - x * x), Pm(2), 4)
    assert ser.coefficients[0] == 0.0 and ser.coefficients[1] == 0.0
    assert ser.coefficients[3] == pytest.approx(0.5, rel=1e-9)
    for k in (2, 4):
        assert abs(ser.coefficients[k]) <= 1e-9
    assert ser.residual <= 1e-8


def test_cliffy_basis_is_refused():
    with pytest.raises(BasisInvalid) as exc:
        expand(lambda x: x, FiniteII(4.5), 4)
    assert exc.value.report.entry(4, 4).status == "cliff"


def test_non_square_integrable_target():
    with pytest.raises(NonSquareIntegrable):
        expand(lambda x: 1.0 / x, GUP(0, 1), 3)


def test_bad_target_payload():
    with pytest.raises(ConstraintViolation):
        expand(np.ones((3, 4)), GUP(1, 1), 2)
