"""Acceptance gate: the thirteen end-to-end criteria, with pinned
tolerances.  Each test prints a PASS line on success so the suite output
doubles as a human-readable scorecard."""

import math
import time

import mpmath
import pytest
from mpmath import mpf

from gamma_remainders import bounds as B
from gamma_remainders import certify, gamma_ref, kernels, monotonicity, quadrature, registry
from gamma_remainders.gamma_ref import CatalogFunction, DEFAULT_PRECISION as PREC

F1_LIMITS = [0, 0, 0, 0, 10, 74, 231, 408]
F2_CHAIN = [1288, 26880, 24238, 181608, 1070320, 5354016, 4634026,
            13963144, 38142544, 14800923, 20133558, 25428438]


def _contains_in_order(seq, sub):
    it = iter(seq)
    return all(any(x == want for x in it) for want in sub)


def test_criterion_01_certificates():
    start = time.time()
    certs = {}
    for name in registry.AM_FUNCTION_NAMES:
        res = certify.certify_absolutely_monotonic(registry.am_function(name),
                                                   max_depth=64)
        assert isinstance(res, certify.AMCertificate), name
        assert certify.replay(res), name
        certs[name] = res
    f1_seq = [int(v) for v in certs["f1"].limit_sequence]
    assert f1_seq == F1_LIMITS
    f2_seq = [int(v) for v in certs["f2"].limit_sequence]
    assert _contains_in_order(f2_seq, F2_CHAIN), f2_seq
    elapsed = time.time() - start
    assert elapsed < 10.0
    print("ACCEPTANCE 1 (certificates, %.2fs): PASS" % elapsed)


def test_criterion_02_taylor_necessary_condition():
    start = time.time()
    for name in registry.AM_FUNCTION_NAMES:
        coeffs = registry.am_function(name).taylor_coeffs(200)
        assert all(c >= 0 for c in coeffs), name
    elapsed = time.time() - start
    assert elapsed < 30.0
    print("ACCEPTANCE 2 (taylor coefficients, %.2fs): PASS" % elapsed)


def test_criterion_03_representation_cross_validation():
    kb = kernels.burnside_b_kernel()
    for x in (-0.49, -0.25, 0.1, 0.5, 1.0, 2.0, 10.0, 50.0):
        got = quadrature.integrate_semiinfinite(kb, x, 1e-11).value
        assert abs(got - float(gamma_ref.b(x, PREC))) < 1e-10, x
    kt = kernels.binet_theta_kernel()
    for x in (0.1, 0.5, 1.0, 5.0, 40.0):
        got = quadrature.integrate_semiinfinite(kt, x, 1e-11).value
        assert abs(got - float(gamma_ref.theta(x, PREC))) < 1e-10, x
    ke = kernels.entry46_kernel()
    for x in (0.2, 1.0, 3.0, 20.0):
        got = quadrature.integrate_semiinfinite(ke, x, 1e-11).value
        with mpmath.workdps(50):
            xm = mpf(x)
            closed = xm ** 2 * mpmath.log1p(1 / xm) - xm + mpf(1) / 2
        assert abs(got - float(closed)) < 1e-10, x
    print("ACCEPTANCE 3 (integral representations): PASS")


def test_criterion_04_psi_identities():
    for x in (0.5, 1.0, 2.0, 5.0):
        lam_val = quadrature.integrate_semiinfinite(kernels.lambda_kernel(x),
                                                    x, 1e-12).value
        phi_val = quadrature.integrate_semiinfinite(kernels.phi_kernel(x),
                                                    x, 1e-12).value
        psi_x, _ = gamma_ref.digamma_trigamma(x, PREC)
        psi_xh, _ = gamma_ref.digamma_trigamma(x + 0.5, PREC)
        assert abs(math.log(x) - 1 / (2 * x) - 2 * lam_val - float(psi_x)) < 1e-9
        assert abs(math.log(x) + 2 * phi_val - float(psi_xh)) < 1e-9
    print("ACCEPTANCE 4 (psi identities): PASS")


def test_criterion_05_theorem1_sweep():
    for key, (closure, left) in registry.THEOREM1.items():
        for h in (0.125, 0.5):
            grid = monotonicity.Grid(left + 0.01, h, 64)
            rep = monotonicity.check_cm(closure, grid, 8, name=key,
                                        domain_left=left, prec=PREC)
            assert rep.all_pass, (key, h, rep.failed_orders())
            assert not rep.counterexample
    print("ACCEPTANCE 5 (Theorem 1 sweep): PASS")


def test_criterion_06_theorem2_sweep():
    for key, (closure, left) in registry.THEOREM2.items():
        for h in (0.125, 0.5):
            grid = monotonicity.Grid(left + 0.01, h, 64)
            rep = monotonicity.check_lcm(closure, grid, 6, name=key,
                                         domain_left=left, prec=PREC,
                                         log_form=True)
            assert rep.all_pass, (key, h, rep.failed_orders())
            assert not rep.counterexample
    print("ACCEPTANCE 6 (Theorem 2 sweep): PASS")


def test_criterion_07_h_constants():
    upper = math.sqrt(2) * math.exp(1.0 / 12)
    lower = math.sqrt(2 * math.pi / math.e)
    h0 = float(gamma_ref.h_big(0.001, PREC))
    assert 1.5371 - 1e-3 < h0 < upper
    hinf = float(gamma_ref.h_big(1e4, PREC))
    assert lower < hinf < lower + 1e-3
    xs = B.log_grid(1e-3, 1e4, 100)
    values = [float(gamma_ref.h_big(x, PREC)) for x in xs]
    assert all(a > b for a, b in zip(values, values[1:]))
    print("ACCEPTANCE 7 (H constants and monotonicity): PASS")


def test_criterion_08_vartheta_minimum():
    beta = float(gamma_ref.vartheta_minimum(PREC))
    assert abs(beta - 0.34142) < 5e-6
    svr = lambda x: float(gamma_ref.stirling_variant_remainder(x, PREC))
    left = [svr(beta - d) for d in (0.2, 0.1, 0.02)]
    right = [svr(beta + d) for d in (0.02, 0.1, 0.2)]
    assert left[0] > left[1] > left[2] > svr(beta)   # decreasing into beta
    assert svr(beta) < right[0] < right[1] < right[2]  # increasing past beta
    print("ACCEPTANCE 8 (variant-remainder minimizer): PASS")


def test_criterion_09_inequality_catalog():
    for name in ("sevli-batir", "p236-rew", "cor-2.4"):
        spec = B.get_spec(name)
        xs = B.log_grid(0.01, 50.0, 200)
        assert B.verify_bound_on_grid(spec, xs, PREC) == [], name
    assert B.verify_bound_on_grid(B.get_spec("ii-continuous"),
                                  list(range(1, 21)), PREC) == []
    print("ACCEPTANCE 9 (inequality catalog): PASS")


def test_criterion_10_envelope_comparison():
    res = B.compare_bounds(B.get_spec("cor-2.4"), B.get_spec("lu-jnt-k1"),
                           "upper", B.log_grid(0.5, 1e4, 512), PREC)
    assert res.winner_at_right == "b"   # the k = 1 upper envelope is smaller
    limit = math.exp(7.0 / 12) / math.sqrt(math.pi)
    assert abs(res.right_edge_ratio - limit) < 1e-3
    print("ACCEPTANCE 10 (envelope comparison): PASS")


def test_criterion_11_best_shift():
    for n in (5, 10, 20):
        errs = {a: float(gamma_ref.factorial_shift_error(n, a, PREC))
                for a in (0, 0.25, 0.5, 0.75, 1)}
        assert min(errs, key=errs.get) == 0.5, (n, errs)
    print("ACCEPTANCE 11 (best shift a = 1/2): PASS")


REGION_REPRESENTATIVES = (
    ("Lambda", 2.0, -1.0), ("Lambda", 0.5, 1.0),
    ("Lambda", 2.0, 1.0), ("Lambda", 0.5, 4.0),
    ("Phi", 2.0, -1.0), ("Phi", 0.5, 0.5),
    ("Phi", 1.0, 2.0), ("Phi", 2.0, 1.0),
)


def test_criterion_12_region_claims():
    grid = monotonicity.Grid(0.1, 0.31, 64)   # reaches x ~ 19.8
    for family, p, q in REGION_REPRESENTATIVES:
        rep = monotonicity.check_region_claims(family, p, q, grid, PREC)
        assert rep.claim != "unclassified", (family, p, q)
        assert rep.all_pass, (family, p, q, rep)
    print("ACCEPTANCE 12 (Lambda/Phi regions): PASS")


def test_criterion_13_identity_suite():
    with mpmath.workdps(50):
        for x in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0):
            x = mpf(x)
            half = mpf(1) / 2
            b = gamma_ref.b(x, PREC)
            w = gamma_ref.remainder("w", x, PREC)
            th = gamma_ref.theta(x, PREC)
            vth = gamma_ref.remainder("vartheta", x, PREC)
            assert abs(w - 12 * x * b) < 1e-10
            assert abs(b - (half * ((2 * x + 1) * mpmath.log1p(1 / (2 * x + 1)) - 1)
                            + gamma_ref.theta(x + 1, PREC))) < 1e-10
            assert abs(vth - (w - 6 * x
                              + 12 * x * (x + half) * mpmath.log1p(1 / (2 * x)))) < 1e-10
            assert abs(th - (b + (x + half) * mpmath.log1p(1 / (2 * x)) - half)) < 1e-10
            assert abs(gamma_ref.big_f(x, PREC)
                       - (1 - 8 * x * gamma_ref.big_g(x, PREC))) < 1e-10
    print("ACCEPTANCE 13 (identity suite): PASS")
