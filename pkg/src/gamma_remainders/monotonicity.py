"""Finite-difference evidence for complete and logarithmic complete
monotonicity, and for the Lambda/Phi sign-and-monotonicity regions.

A completely monotonic f satisfies (-1)^n * Delta_h^n f(x) >= 0 for every
order n, step h > 0 and x in the domain; the checks here evaluate those
alternating differences on explicit grids in high precision and compare
the per-order minima against a rounding-amplification tolerance.  All
results are evidence, never proof: a pass is consistency, and only a
failure far beyond tolerance is flagged as a counterexample candidate.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import mpmath
from mpmath import mpf

from .gamma_ref import DEFAULT_PRECISION, DomainError, lam, phi

MAX_ORDER = 10

# Failures this many times beyond tolerance stop looking like rounding.
COUNTEREXAMPLE_FACTOR = 10.0


@dataclass(frozen=True)
class Grid:
    """Equally spaced evaluation points start, start+h, ..., start+(count-1)h.

    open_left_margin is the distance kept from an open domain endpoint;
    validate() enforces it together with headroom for the highest-order
    difference stencil.
    """
    start: float
    step: float
    count: int
    open_left_margin: float = 0.0

    def __post_init__(self):
        if self.step <= 0:
            raise ValueError("step must be positive")
        if self.count < 1:
            raise ValueError("count must be positive")
        if self.open_left_margin < 0:
            raise ValueError("open_left_margin must be nonnegative")

    def points(self, extra=0):
        return [self.start + i * self.step for i in range(self.count + extra)]

    def validate(self, domain_left, max_order=0):
        if self.start < domain_left + self.open_left_margin:
            raise DomainError(
                "grid starts at %g, inside the margin of the open endpoint %g"
                % (self.start, domain_left))
        # all stencil points must be finite; the right end is unbounded for
        # every catalog domain, so only the left endpoint matters
        del max_order


@dataclass(frozen=True)
class CMReport:
    function_name: str
    grid: Grid
    max_order: int
    minima: tuple          # ((order, min over grid of (-1)^n Delta^n f), ...)
    verdicts: tuple        # bool per entry of minima
    tolerances: tuple      # tolerance used per entry of minima
    counterexample: bool   # some failure exceeded 10x tolerance

    @property
    def all_pass(self):
        return all(self.verdicts)

    def failed_orders(self):
        return [order for (order, _), ok in zip(self.minima, self.verdicts) if not ok]


def tolerance(n, f_max, prec=DEFAULT_PRECISION):
    """Rounding budget for an order-n alternating difference.

    The binomial sum amplifies evaluation rounding by at most 2^n, so the
    budget is C * 2^n * eps * max|f| with C = 8 and eps two digits shy of
    the working precision; max|f| is floored at 1 because the oracle's
    absolute error scales with its internal log-gamma magnitudes even when
    the function value itself is tiny.
    """
    eps = 10.0 ** (-(prec.working_digits - 2))
    return 8.0 * (2.0 ** n) * eps * max(float(f_max), 1.0)


def finite_difference_table(f, grid, n, domain_left=-math.inf,
                            prec=DEFAULT_PRECISION):
    """table[k][i] = Delta_h^k f(start + i*h) for k <= n, i < count.

    Built by iterated forward differences of one row of evaluations, so it
    costs count + n function calls.  All arithmetic runs at the working
    precision: the ambient mpmath precision would otherwise round the
    cancellations that the higher-order differences consist of.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    grid.validate(domain_left, n)
    with mpmath.workdps(prec.working_digits + 10):
        row = [mpf(f(x)) for x in grid.points(extra=n)]
        table = [row[: grid.count]]
        for _ in range(n):
            row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
            table.append(row[: grid.count])
    return table


def check_cm(f, grid, max_order, sign=1, name="f", domain_left=-math.inf,
             prec=DEFAULT_PRECISION, min_order=0):
    """CMReport for complete monotonicity of sign*f on the grid.

    Verdict at order n: min over the grid of (-1)^n Delta_h^n (sign*f)
    is >= -tolerance(n).  Failures are data, not errors.
    """
    if not 0 <= max_order <= MAX_ORDER:
        raise ValueError("max_order must lie in [0, %d]" % MAX_ORDER)
    table = finite_difference_table(f, grid, max_order, domain_left, prec)
    if sign == -1:
        table = [[-v for v in row] for row in table]
    f_max = max(abs(v) for v in table[0]) if table[0] else mpf(0)
    minima, verdicts, tolerances = [], [], []
    counterexample = False
    for n in range(min_order, max_order + 1):
        signed = [((-1) ** n) * v for v in table[n]]
        m = min(signed)
        tol = tolerance(n, f_max, prec)
        ok = m >= -tol
        if not ok and m < -COUNTEREXAMPLE_FACTOR * tol:
            counterexample = True
        minima.append((n, m))
        verdicts.append(ok)
        tolerances.append(tol)
    return CMReport(name, grid, max_order, tuple(minima), tuple(verdicts),
                    tuple(tolerances), counterexample)


def check_lcm(f, grid, max_order, name="f", domain_left=-math.inf,
              prec=DEFAULT_PRECISION, log_form=False):
    """CMReport for logarithmic complete monotonicity of f.

    f is LCM when (-1)^n (ln f)^(n) >= 0 for every n >= 1, so this runs
    the alternating-difference check on ln f at orders >= 1 (order 0 is
    not part of the definition: ln f may take either sign).  With
    log_form=True, f already returns ln f, which avoids overflow for
    functions like exp((2x+1)b(x)).
    """
    if log_form:
        g = f
    else:
        def g(x):
            v = mpf(f(x))
            if v <= 0:
                raise DomainError("nonpositive value %s at x=%s in check_lcm" % (v, x))
            return mpmath.log(v)
    return check_cm(g, grid, max_order, sign=1, name=name,
                    domain_left=domain_left, prec=prec, min_order=1)


def g_alpha_log_derivative_margin(alpha, n, x, prec=DEFAULT_PRECISION):
    """Exact (-1)^n (ln g_alpha)^(n)(x), the order-n LCM margin of g_alpha.

    g_alpha(x) = e^x Gamma(x+1) / (x+alpha)^(x+alpha).  The closed form
    uses the Hurwitz-zeta representation of the polygamma functions, so
    it reaches orders far beyond the finite-difference cap: the first
    negative margin for alpha slightly below 1 appears only around order
    35, which no order-10 difference table can witness.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    with mpmath.workdps(prec.working_digits + 10):
        x = mpf(x)
        alpha = mpf(alpha)
        if x <= max(0, -alpha):
            raise DomainError("g_alpha margin requires x > max(0, -alpha)")
        if n == 1:
            return mpmath.log(x + alpha) - mpmath.digamma(x + 1)
        return (mpmath.factorial(n - 1) * mpmath.zeta(n, x + 1)
                - mpmath.factorial(n - 2) / (x + alpha) ** (n - 1))


# ---- Lambda/Phi region claims --------------------------------------------

_POSITIVE_DECREASING = "positive-decreasing"
_NEGATIVE_INCREASING = "negative-increasing"
_UNCLASSIFIED = "unclassified"


def classify_region(family, p, q):
    """The claim applicable to (p, q), or 'unclassified'.

    Mirrors the published case lists for Lambda_{p,q} (two regions, with
    subcases) and Phi_{p,q} (two regions); points outside every case get
    no asserted claim.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    if family == "Lambda":
        if q <= 0 or (0 < p < 1 and p * q <= 1) or (q == 1 / p ** 2 and 0 < q <= 1):
            return _POSITIVE_DECREASING
        if (p >= 1 and p * q >= 1) or (q == 1 / p ** 2 and q >= 1):
            return _NEGATIVE_INCREASING
        return _UNCLASSIFIED
    if family == "Phi":
        if ((p >= 1 and q <= 0) or (0 < p < 1 and q <= 1)
                or (p ** 2 * q < 1 and q * (p ** 2 - 1) * ((1 + 3 * q) * p ** 2 - 4) <= 0)
                or (p ** 2 * q == 1 and 0 < q <= 1)):
            return _POSITIVE_DECREASING
        if (4 <= p ** 2 * (1 + 3 * q) <= 1 + 3 * q) or (p > 1 and q >= 1):
            return _NEGATIVE_INCREASING
        return _UNCLASSIFIED
    raise ValueError("family must be 'Lambda' or 'Phi'")


@dataclass(frozen=True)
class RegionReport:
    family: str
    p: float
    q: float
    claim: str
    grid: Grid
    min_value: float
    max_value: float
    max_first_difference: float
    min_first_difference: float
    sign_ok: bool          # vacuously True when unclassified
    monotone_ok: bool      # vacuously True when unclassified

    @property
    def all_pass(self):
        return self.sign_ok and self.monotone_ok


def check_region_claims(family, p, q, grid, prec=DEFAULT_PRECISION):
    """Test the sign and first-difference monotonicity claim at (p, q)."""
    claim = classify_region(family, p, q)
    base = lam if family == "Lambda" else phi

    def f(x):
        return base(mpf(p) * mpf(x), prec) - mpf(q) * base(mpf(x), prec)

    table = finite_difference_table(f, grid, 1, domain_left=0.0, prec=prec)
    values, diffs = table[0], table[1]
    f_max = max(abs(v) for v in values)
    tol = tolerance(1, f_max, prec)
    lo, hi = min(values), max(values)
    dlo, dhi = min(diffs), max(diffs)
    if claim == _POSITIVE_DECREASING:
        sign_ok = lo >= -tol
        monotone_ok = dhi <= tol
    elif claim == _NEGATIVE_INCREASING:
        sign_ok = hi <= tol
        monotone_ok = dlo >= -tol
    else:
        sign_ok = monotone_ok = True
    return RegionReport(family, float(p), float(q), claim, grid,
                        float(lo), float(hi), float(dhi), float(dlo),
                        bool(sign_ok), bool(monotone_ok))


# ---- serialization -------------------------------------------------------

def report_to_json(report):
    doc = {
        "function": report.function_name,
        "grid": {"start": report.grid.start, "step": report.grid.step,
                 "count": report.grid.count,
                 "open_left_margin": report.grid.open_left_margin},
        "max_order": report.max_order,
        "orders": [
            {"order": order, "min": float(m), "tolerance": float(tol),
             "verdict": "pass" if ok else "fail"}
            for (order, m), ok, tol in zip(report.minima, report.verdicts,
                                           report.tolerances)
        ],
        "counterexample_candidate": report.counterexample,
        "all_pass": report.all_pass,
        "schema_version": 1,
    }
    return json.dumps(doc, indent=2)


def report_to_csv(report, header=True):
    """CSV matrix: one row per order with the grid minimum and verdict."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    if header:
        writer.writerow(["function", "order", "min", "tolerance", "verdict"])
    for (order, m), ok, tol in zip(report.minima, report.verdicts,
                                   report.tolerances):
        writer.writerow([report.function_name, order, repr(float(m)),
                         repr(float(tol)), "pass" if ok else "fail"])
    return buf.getvalue()


def region_report_to_json(report):
    doc = {
        "family": report.family,
        "p": report.p,
        "q": report.q,
        "claim": report.claim,
        "grid": {"start": report.grid.start, "step": report.grid.step,
                 "count": report.grid.count,
                 "open_left_margin": report.grid.open_left_margin},
        "min_value": report.min_value,
        "max_value": report.max_value,
        "min_first_difference": report.min_first_difference,
        "max_first_difference": report.max_first_difference,
        "sign_ok": report.sign_ok,
        "monotone_ok": report.monotone_ok,
        "schema_version": 1,
    }
    return json.dumps(doc, indent=2)
