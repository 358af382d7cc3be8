"""Jacobi evaluation routes, Legendre-type kinds, norms, shared-equation residuals."""

import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from symortho.errors import ConstraintViolation, SingularPoint
from symortho.legendre import (G, JacobiParams, Pm, Q, U, V, eval_jacobi,
                               eval_legendre_fn, generalized_legendre_residual,
                               jacobi_coeffs, legendre_mu_nu, legendre_norm,
                               member_fn, orthogonality_interval)
from symortho.quadrature import integrate


def _poly_val(coeffs, x):
    return np.polynomial.polynomial.polyval(x, np.array([float(c) for c in coeffs]))


def test_jacobi_params_validated():
    with pytest.raises(ConstraintViolation):
        JacobiParams(-1, 0)
    with pytest.raises(ConstraintViolation):
        JacobiParams(0, -1.2)


def test_jacobi_base_cases():
    jp = JacobiParams(0, 0)
    assert eval_jacobi(0, jp, 0.37) == 1
    assert eval_jacobi(1, jp, 0.37) == pytest.approx(0.37, abs=1e-16)
    assert eval_jacobi(2, jp, 1.0) == pytest.approx(1.0, abs=1e-14)


def test_jacobi_sum_vs_recurrence_vs_mpmath():
    rng = np.random.default_rng(7)
    for _ in range(40):
        al, be = rng.uniform(-0.9, 3, size=2)
        n = int(rng.integers(0, 10))
        x = float(rng.uniform(-0.99, 0.99))
        jp = JacobiParams(al, be)
        through_sum = eval_jacobi(n, jp, x)
        through_rec = _poly_val(jacobi_coeffs(n, jp), x)
        oracle = float(mpmath.jacobi(n, al, be, x))
        scale = max(1.0, abs(oracle))
        assert through_sum == pytest.approx(oracle, abs=1e-9 * scale)
        assert through_rec == pytest.approx(oracle, abs=1e-9 * scale)


def test_jacobi_exact_rational_routes_agree():
    jp = JacobiParams(Fraction(1, 2), Fraction(-1, 4))
    x = Fraction(1, 3)
    coeffs = jacobi_coeffs(3, jp)
    assert all(isinstance(c, Fraction) for c in coeffs)
    direct = sum(c * x ** i for i, c in enumerate(coeffs))
    assert eval_jacobi(3, jp, x) == direct


def test_legendre_polynomial_coeffs_match_numpy():
    for n in range(9):
        ref = np.polynomial.Legendre.basis(n).convert(
            kind=np.polynomial.Polynomial).coef
        mine = [float(c) for c in jacobi_coeffs(n, JacobiParams(0, 0))]
        assert np.allclose(mine, ref, rtol=0, atol=1e-13)


def test_kind_constraints():
    with pytest.raises(ConstraintViolation):
        U(-1)
    with pytest.raises(ConstraintViolation):
        Pm(-1)
    with pytest.raises(ConstraintViolation):
        Pm(1.5)
    with pytest.raises(ConstraintViolation):
        V(1)
    with pytest.raises(ConstraintViolation):
        G(-0.5, 0)
    with pytest.raises(ConstraintViolation):
        Q(-1)


def test_eval_special_values():
    # zero-order derivative and unit prefactor both collapse to P_n
    x = np.linspace(-0.9, 0.9, 13)
    pn = _poly_val(jacobi_coeffs(4, JacobiParams(0, 0)), x)
    assert eval_legendre_fn(Pm(0), 4, x) == pytest.approx(pn, rel=1e-14)
    assert eval_legendre_fn(U(0), 4, x) == pytest.approx(pn, rel=1e-14)
    # vanishing branch, returned rather than raised
    assert eval_legendre_fn(Pm(3), 1, 0.4) == 0.0
    # direct arithmetic for the simplest weighted member
    assert eval_legendre_fn(Q(0.5), 0, 0.6) == pytest.approx(0.6 * 0.64 ** 0.25)


def test_eval_domain_checked():
    for bad in (1.0, -1.0, 1.7):
        with pytest.raises(ConstraintViolation):
            eval_legendre_fn(U(0.5), 2, bad)
    with pytest.raises(ConstraintViolation):
        eval_legendre_fn(Q(1), 2, np.array([0.3, -1.0]))


def test_q_is_g_at_one():
    x = np.linspace(-0.95, 0.95, 17)
    for n in range(5):
        assert eval_legendre_fn(Q(1.5), n, x) == pytest.approx(
            eval_legendre_fn(G(1, 1.5), n, x), rel=0, abs=1e-300)


def test_q_parity_flips():
    x = np.array([0.12, 0.45, 0.83])
    for n in range(6):
        left = eval_legendre_fn(Q(2), n, -x)
        right = (-1) ** (n + 1) * eval_legendre_fn(Q(2), n, x)
        assert left == pytest.approx(right, abs=1e-14)


def test_u_parity_even_odd():
    x = np.array([0.2, 0.61])
    for n in range(6):
        assert eval_legendre_fn(U(0.7), n, -x) == pytest.approx(
            (-1) ** n * eval_legendre_fn(U(0.7), n, x), abs=1e-14)


def test_norm_closed_forms():
    assert legendre_norm(Pm(0), 2) == pytest.approx(0.4, rel=1e-15)
    assert legendre_norm(U(0), 1) == pytest.approx(2 / 3, rel=1e-15)
    assert legendre_norm(V(0.5), 0) == pytest.approx(math.pi, rel=1e-14)
    # removable 0 * gamma-pole pairing at the parameter edge
    assert legendre_norm(U(-0.5), 0) == pytest.approx(math.pi, rel=1e-14)
    with pytest.raises(ConstraintViolation):
        legendre_norm(Pm(2), 1)


def test_q_norm_display_matches_weighted_family_route():
    # running-product closed form vs the recurrence-coefficient product
    # behind the weighted family norms; independent derivations
    for b in (0, 0.5, 2, 4.25):
        for n in range(8):
            display = legendre_norm(Q(b), n)
            family = legendre_norm(G(1, b), n)
            assert display == pytest.approx(family, rel=1e-12)


def test_q_norm_small_n_beta_values():
    for b in (0.5, 2):
        b0 = math.gamma(1.5) * math.gamma(b + 1) / math.gamma(b + 2.5)
        b1 = math.gamma(2.5) * math.gamma(b + 1) / math.gamma(b + 3.5)
        assert legendre_norm(Q(b), 0) == pytest.approx(b0, rel=1e-13)
        assert legendre_norm(Q(b), 1) == pytest.approx(b1, rel=1e-13)


@pytest.mark.parametrize("kind", [U(0.5), U(-0.5), Pm(2), V(0.5), V(-0.8),
                                  Q(2), G(0.7, 1.5)])
def test_orthogonality_and_diagonal(kind):
    spec = orthogonality_interval(kind)
    base = kind.m if isinstance(kind, Pm) else 0
    fns = {n: member_fn(kind, n) for n in range(base, base + 4)}
    diag_scale = abs(legendre_norm(kind, base))
    for n in range(base, base + 4):
        for m in range(base, n + 1):
            r = integrate(lambda x: fns[n](x) * fns[m](x), spec)
            assert r.converged
            if n == m:
                assert r.value == pytest.approx(legendre_norm(kind, n), rel=1e-8)
            else:
                assert abs(r.value) < 1e-9 * max(1.0, diag_scale)


def test_mu_nu_values():
    assert legendre_mu_nu(U(0.5), 2) == (2.5 * 3.5, 0.25)
    assert legendre_mu_nu(Pm(3), 4) == (20, 9)
    assert legendre_mu_nu(V(-0.3), 1) == (2, pytest.approx(0.09))
    assert legendre_mu_nu(Q(1), 2) == (4 * 5, 1)
    assert legendre_mu_nu(G(1, 1), 2) == (4 * 5, 1)


def test_residual_classical_kinds():
    xs = np.array([-0.7, -0.2, 0.3, 0.8])
    for kind in (U(0), U(0.5), U(2), Pm(1), Pm(2), V(0.3), V(-0.5)):
        for n in range(5):
            res = generalized_legendre_residual(kind, n, xs)
            assert np.max(np.abs(res)) < 1e-10, (kind, n)


def test_residual_q_needs_inverse_square_term():
    res = generalized_legendre_residual(Q(1), 2, 0.5, e_choice="-2/x^2")
    assert abs(res) < 1e-9
    for b in (0, 0.5, 2):
        for n in range(7):
            r = generalized_legendre_residual(Q(b), n, 0.41, e_choice="-2/x^2")
            assert abs(r) < 1e-8, (b, n)
    # wrong pairing on an odd degree leaves a visible defect
    assert abs(generalized_legendre_residual(Q(1), 3, 0.5, e_choice="zero")) > 0.1


def test_residual_nu_override_and_validation():
    same = generalized_legendre_residual(U(0.5), 3, 0.3, nu=0.25)
    assert same == pytest.approx(generalized_legendre_residual(U(0.5), 3, 0.3))
    with pytest.raises(ConstraintViolation):
        generalized_legendre_residual(U(0.5), 3, 0.3, e_choice="bogus")
    with pytest.raises(SingularPoint):
        generalized_legendre_residual(Q(1), 3, 0.0, e_choice="-2/x^2")
    with pytest.raises(ConstraintViolation):
        generalized_legendre_residual(U(0.5), 3, 1.0)


def test_residual_generic_g_is_off_form():
    # a = 1/2 carries an extra origin term neither E choice reproduces
    assert abs(generalized_legendre_residual(G(0.5, 1), 2, 0.5)) > 1e-3
