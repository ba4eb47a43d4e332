"""Tests for kernels and semi-infinite quadrature."""

import math

import mpmath
import pytest
from mpmath import mpf

from gamma_remainders import gamma_ref, kernels, quadrature
from gamma_remainders.kernels import (Kernel, KernelDomainError,
                                      binet_theta_kernel, burnside_b_kernel,
                                      entry46_kernel, lambda_kernel,
                                      load_manifest, phi_kernel,
                                      sinh_power_kernel)
from gamma_remainders.quadrature import (QuadratureResult, ToleranceNotMet,
                                         integrate_semiinfinite,
                                         results_to_csv)

PREC = gamma_ref.DEFAULT_PRECISION


# ---- kernel pointwise behaviour ------------------------------------------

def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        Kernel("no_such_family")


def test_kernel_value_requires_positive_t():
    with pytest.raises(KernelDomainError):
        binet_theta_kernel().value(0.0)


def test_domain_checks():
    with pytest.raises(KernelDomainError):
        binet_theta_kernel().check_domain(0.0)
    with pytest.raises(KernelDomainError):
        burnside_b_kernel().check_domain(-0.5)
    burnside_b_kernel().check_domain(-0.49)


@pytest.mark.parametrize("make", [binet_theta_kernel, burnside_b_kernel,
                                  entry46_kernel])
def test_series_matches_direct_form_at_seam(make):
    """Series and closed-form paths agree at the same t near the cutoff."""
    k = make()
    direct = Kernel(k.family, near_zero_cutoff=0.0,
                    near_zero_series=k.near_zero_series)
    for t in (0.3, 0.45, 0.4999):
        assert abs(k.value(t) - direct.value(t)) \
            <= 1e-13 * max(1.0, abs(direct.value(t))), t


def test_expoly_kernel_seam_continuity():
    man = load_manifest()
    for name, k in man.items():
        if k.family != "expoly_over_sinhpow":
            continue
        direct = Kernel(k.family, dict(k.params), near_zero_cutoff=0.0,
                        near_zero_series=k.near_zero_series)
        for t in (0.3, 0.45, 0.4999):
            assert abs(k.value(t) - direct.value(t)) \
                <= 1e-12 * max(1.0, abs(direct.value(t))), (name, t)


def test_kernel_positive_on_range():
    """Theorem-1 kernels are nonnegative: their numerators are AM."""
    man = load_manifest()
    for name, k in man.items():
        if k.family != "expoly_over_sinhpow":
            continue
        for t in (1e-6, 0.01, 0.4999, 0.5001, 1.0, 5.0, 30.0):
            assert k.value(t) >= 0.0, (name, t)


def test_manifest_contents():
    man = load_manifest()
    assert {"binet_theta", "burnside_b", "entry46"} <= set(man)
    expoly = [n for n, k in man.items() if k.family == "expoly_over_sinhpow"]
    assert len(expoly) == 7


# ---- quadrature ----------------------------------------------------------

def test_invalid_tolerance():
    with pytest.raises(ValueError):
        integrate_semiinfinite(binet_theta_kernel(), 1.0, 0.0)


def test_result_fields_and_determinism():
    r1 = integrate_semiinfinite(binet_theta_kernel(), 2.0, 1e-11)
    r2 = integrate_semiinfinite(binet_theta_kernel(), 2.0, 1e-11)
    assert isinstance(r1, QuadratureResult)
    assert r1.value == r2.value
    assert r1.evaluations == r2.evaluations
    assert r1.error_estimate <= 1e-11
    assert r1.truncation_point > 0
    assert r1.converged


def test_binet_matches_oracle():
    for x in (0.25, 1.0, 7.5):
        got = integrate_semiinfinite(binet_theta_kernel(), x, 1e-12).value
        assert abs(got - float(gamma_ref.theta(x, PREC))) < 1e-11, x


def test_burnside_matches_oracle_near_left_endpoint():
    for x in (-0.499, -0.45, -0.1):
        got = integrate_semiinfinite(burnside_b_kernel(), x, 1e-11).value
        assert abs(got - float(gamma_ref.b(x, PREC))) < 1e-10, x


def test_entry46_closed_form():
    for x in (0.5, 2.0, 9.0):
        got = integrate_semiinfinite(entry46_kernel(), x, 1e-12).value
        with mpmath.workdps(40):
            want = mpf(x) ** 2 * mpmath.log1p(1 / mpf(x)) - mpf(x) + mpf(1) / 2
        assert abs(got - float(want)) < 1e-11, x


def test_lambda_phi_kernels_integrate_to_definitions():
    for x in (0.5, 2.0):
        lam = integrate_semiinfinite(lambda_kernel(x), x, 1e-12).value
        phi = integrate_semiinfinite(phi_kernel(x), x, 1e-12).value
        assert abs(lam - float(gamma_ref.lam(x, PREC))) < 1e-11, x
        assert abs(phi - float(gamma_ref.phi(x, PREC))) < 1e-11, x


def test_custom_sinh_power_kernel():
    """K = 2t/(e^2t - 1) integrates against e^-(2x+1)t in closed form:
    the integral equals psi'((x+1/2)+1/2)/2 - ... easier: compare against
    a reference numeric value from termwise expansion."""
    k = sinh_power_kernel("2*t", 0, 1)
    x = 1.0
    got = integrate_semiinfinite(k, x, 1e-12).value
    # integral of 2t e^{-(2x+1)t} / (e^{2t}-1) = sum_{m>=1} 2/(2m+2x+1)^2
    with mpmath.workdps(40):
        want = mpmath.nsum(lambda m: 2 / (2 * m + 2 * x + 1) ** 2, [1, mpmath.inf])
    assert abs(got - float(want)) < 1e-11


def test_tolerance_not_met_carries_best_value():
    k = binet_theta_kernel()
    with pytest.raises(ToleranceNotMet) as err:
        integrate_semiinfinite(k, 1.0, 1e-30)
    res = err.value.result
    assert not res.converged
    assert math.isnan(res.value) or \
        abs(res.value - float(gamma_ref.theta(1.0, PREC))) < 1e-10


def test_theorem1_item_values_match_registry_closures():
    from gamma_remainders import registry
    man = load_manifest()
    for key, (fname, a, b, pref) in registry.THEOREM1_KERNELS.items():
        closure, left = registry.THEOREM1[key]
        for x in (0.25, 1.0, 4.0):
            got = integrate_semiinfinite(man[key], x, 1e-12).value
            want = float(closure(x, PREC))
            assert abs(got - want) < 1e-10, (key, x)


def test_results_to_csv():
    rows = [("binet_theta", 1.0,
             integrate_semiinfinite(binet_theta_kernel(), 1.0, 1e-10))]
    text = results_to_csv(rows)
    lines = text.strip().splitlines()
    assert lines[0] == "kernel,x,value,error_estimate,evaluations"
    assert lines[1].startswith("binet_theta,1.0,")
