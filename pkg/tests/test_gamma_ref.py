"""Tests for the high-precision gamma/psi oracle and the function catalog."""

import math

import mpmath
import pytest
from mpmath import mpf

from gamma_remainders import gamma_ref as G
from gamma_remainders.gamma_ref import (CatalogFunction, DEFAULT_PRECISION,
                                        DomainError, EvalPrecision)

HI = EvalPrecision(60, 50)


def _close(a, b, tol):
    return abs(mpf(a) - mpf(b)) < tol


# ---- core oracle ---------------------------------------------------------

def test_log_gamma_known_values():
    with mpmath.workdps(50):
        assert _close(G.log_gamma(0.5, HI), mpmath.log(mpmath.sqrt(mpmath.pi)), 1e-45)
        assert _close(G.log_gamma(5, HI), mpmath.log(24), 1e-45)
        assert _close(G.log_gamma(1, HI), 0, 1e-45)
        assert _close(G.log_gamma(2, HI), 0, 1e-45)


def test_log_gamma_recurrence():
    with mpmath.workdps(50):
        for x in (0.1, 0.7, 1.3, 4.5, 17.0):
            x = mpf(x)  # keep x+1 exact: float addition would shift the point
            lhs = G.log_gamma(x + 1, HI)
            rhs = G.log_gamma(x, HI) + mpmath.log(x)
            assert _close(lhs, rhs, 1e-44), x


def test_log_gamma_agrees_with_mpmath():
    with mpmath.workdps(50):
        for x in (0.01, 0.5, 3.25, 10.0, 123.456):
            assert _close(G.log_gamma(x, HI), mpmath.loggamma(x), 1e-44), x


def test_digamma_trigamma_known_values():
    with mpmath.workdps(50):
        psi, psi1 = G.digamma_trigamma(1, HI)
        assert _close(psi, -mpmath.euler, 1e-44)
        assert _close(psi1, mpmath.pi ** 2 / 6, 1e-44)
        psi, psi1 = G.digamma_trigamma(0.5, HI)
        assert _close(psi, -mpmath.euler - 2 * mpmath.log(2), 1e-44)
        assert _close(psi1, mpmath.pi ** 2 / 2, 1e-44)


def test_domain_errors():
    with pytest.raises(DomainError):
        G.log_gamma(0, DEFAULT_PRECISION)
    with pytest.raises(DomainError):
        G.log_gamma(-1.5, DEFAULT_PRECISION)
    with pytest.raises(DomainError):
        G.theta(0, DEFAULT_PRECISION)
    with pytest.raises(DomainError):
        G.b(-0.5, DEFAULT_PRECISION)


def test_remainder_asymptotics():
    # theta(x) ~ +1/(12x) while b(x) ~ -1/(24(x+1/2)) for large x.
    for x in (1e3, 1e5):
        th = float(G.theta(x, DEFAULT_PRECISION))
        assert abs(th * 12 * x - 1) < 1e-5
        bb = float(G.b(x, DEFAULT_PRECISION))
        assert abs(bb * 24 * (x + 0.5) + 1) < 1e-5


def test_lam_phi_match_definitions():
    with mpmath.workdps(50):
        for x in (0.3, 1.0, 4.2):
            x = mpf(x)
            psi_x, _ = G.digamma_trigamma(x, HI)
            psi_h, _ = G.digamma_trigamma(x + mpf(1) / 2, HI)
            lam_def = (mpmath.log(x) - 1 / (2 * mpf(x)) - psi_x) / 2
            phi_def = (psi_h - mpmath.log(x)) / 2
            assert _close(G.lam(x, HI), lam_def, 1e-44)
            assert _close(G.phi(x, HI), phi_def, 1e-44)


def test_big_f_third_derivative():
    # F'''(x) = -4 / (x^2 (2x+1)^2): second-order central difference of F''
    # at h = 1e-4 carries only ~1e-8 relative error.
    with mpmath.workdps(50):
        h = mpf(1) / 10 ** 4   # exact nodes: float rounding of x +/- k*h
        for x in (0.5, 1.0, 3.0):   # would swamp the 2h^3 denominator
            x = mpf(x)
            f = lambda u: G.big_f(u, HI)
            d3 = (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) \
                / (2 * h ** 3)
            want = -4 / (mpf(x) ** 2 * (2 * mpf(x) + 1) ** 2)
            assert abs(d3 / want - 1) < 1e-6, x


# ---- catalog -------------------------------------------------------------

def test_catalog_simple_names_match_module_functions():
    x = 1.7
    assert _close(CatalogFunction("theta")(x), G.theta(x), 1e-30)
    assert _close(CatalogFunction("b")(x), G.b(x), 1e-30)
    assert _close(CatalogFunction("w")(x), 12 * mpf(x) * G.b(x), 1e-30)
    assert _close(CatalogFunction("H")(x), G.h_big(x), 1e-30)
    assert _close(CatalogFunction("BigF")(x), G.big_f(x), 1e-30)
    assert _close(CatalogFunction("BigG")(x), G.big_g(x), 1e-30)


def test_catalog_domain_enforcement():
    with pytest.raises(DomainError):
        CatalogFunction("theta")(0)
    with pytest.raises(DomainError):
        CatalogFunction("b")(-0.6)
    with pytest.raises(DomainError):
        CatalogFunction("g_alpha", {"alpha": -2.0})(1.5)
    assert CatalogFunction("g_alpha", {"alpha": -2.0})(2.5) > 0


def test_catalog_parametrized_values():
    with mpmath.workdps(50):
        x = 2.0
        f_half = CatalogFunction("F_alpha", {"alpha": 0.5})(x, HI)
        _, psi1 = G.digamma_trigamma(x + 0.5, HI)
        assert _close(f_half, mpmath.exp(G.theta(x, HI) - psi1 / 12), 1e-40)
        lam_pq = CatalogFunction("Lambda_pq", {"p": 2.0, "q": 0.5})(x, HI)
        assert _close(lam_pq, G.lam(2 * x, HI) - 0.5 * G.lam(x, HI), 1e-40)
        f_pqr = CatalogFunction("f_pqr", {"p": 2.0, "q": 0.5, "r": -3.0})(x, HI)
        assert _close(f_pqr, -3 * (G.theta(2 * x, HI) - 0.5 * G.theta(x, HI)), 1e-40)


def test_h_lambda_shift():
    # H_lambda uses psi'(x + lambda) in place of psi'(x + 1/2).
    x = 3.0
    base = CatalogFunction("H")(x, HI)
    shifted = CatalogFunction("H_lambda", {"lambda": 0.5})(x, HI)
    assert _close(base, shifted, 1e-40)
    other = CatalogFunction("H_lambda", {"lambda": 0.25})(x, HI)
    assert abs(base - other) > 1e-6


def test_unknown_catalog_name():
    with pytest.raises(ValueError):
        CatalogFunction("nope")(1.0)


# ---- derived quantities --------------------------------------------------

def test_vartheta_minimum_stable_across_precision():
    lo = G.vartheta_minimum(DEFAULT_PRECISION)
    hi = G.vartheta_minimum(HI)
    assert abs(lo - hi) < 1e-25
    assert abs(float(hi) - 0.34142) < 5e-6


def test_minimizer_is_a_critical_point():
    beta = G.vartheta_minimum(HI)
    h = mpf(1) / 10 ** 12
    with mpmath.workdps(50):
        d = (G.stirling_variant_remainder(beta + h, HI)
             - G.stirling_variant_remainder(beta - h, HI)) / (2 * h)
        assert abs(d) < 1e-8


def test_factorial_shift_error_decreases_in_n():
    errs = [float(G.factorial_shift_error(n, 0.5)) for n in (5, 10, 20, 40)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
