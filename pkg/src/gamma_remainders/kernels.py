"""Integrand families for the semi-infinite Laplace-type representations.

Each kernel K(t) extends continuously to t = 0 but is a difference of
singular-looking pieces there, so below the cutoff t0 the cancellation-prone
families evaluate a truncated Maclaurin series whose coefficients are
computed exactly (Fractions) and frozen as floats.

Families:
    binet_theta          (1/(e^t-1) - 1/t + 1/2)/t           weight e^{-x t}
    burnside_b           (1 - e^t/(2t) + 1/(e^{2t}-1))/t     weight e^{-2(x+1) t}
    entry46              (2 - (t^2+2t+2)e^{-t})/t^3          weight e^{-x t}
    lambda_gr            t/((t^2+x^2)(e^{2 pi t}-1))         no weight (x inside)
    phi_magnus           t/((t^2+4x^2)(e^{pi t}+1))          no weight (x inside)
    expoly_over_sinhpow  pref * N(t)/(t^a (e^{2t}-1)^b)      weight e^{-(2x+1) t}
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import ratseries
from .expoly import ExpPoly, parse_expoly, poly_eval_exact

NEAR_ZERO_CUTOFF = 0.5     # kernel Maclaurin series used below this t
SERIES_TERMS = 40          # series radius is pi, so 40 terms clear 1e-16 at t=1
_NUM_TAYLOR_TERMS = 80     # numerator Maclaurin length for the mid-range route
_NUM_TAYLOR_LIMIT = 2.0    # above this t the exp form of the numerator is stable

FAMILIES = ("binet_theta", "burnside_b", "entry46",
            "lambda_gr", "phi_magnus", "expoly_over_sinhpow")


class KernelDomainError(ValueError):
    pass


class TailBoundError(ValueError):
    """The tail envelope does not apply for the given (x, T)."""


def _sinh_family_series(numerator, a, b, prefactor, n):
    """Exact series of pref * N(t) / (t^a (e^{2t}-1)^b) at t = 0."""
    order = n + a + b
    num = numerator.taylor_coeffs(order)
    # (e^{2t}-1)^b = t^b * u(t)^b with u = (e^{2t}-1)/t, u(0) = 2
    em1 = ratseries.exp_series(2, order + 1)
    em1[0] -= 1
    u = ratseries.shift_down(em1, 1)[:order]  # (e^{2t}-1)/t
    ub = ratseries.power(u, b, order)
    shifted = ratseries.shift_down(num, a + b)
    quot = ratseries.mul(shifted, ratseries.inv(ub, n), n)
    return [Fraction(prefactor) * c for c in quot]


def _binet_series(n):
    # (1/(e^t-1) - 1/t + 1/2)/t
    order = n + 2
    em1 = ratseries.exp_series(1, order + 1)
    em1[0] -= 1
    u = ratseries.shift_down(em1, 1)[:order]  # (e^t-1)/t
    invu = ratseries.inv(u, order)          # t/(e^t - 1)
    invu[0] -= 1                            # t/(e^t-1) - 1 = t*(1/(e^t-1) - 1/t)
    g = ratseries.shift_down(invu, 1)       # 1/(e^t-1) - 1/t
    g[0] += Fraction(1, 2)
    return ratseries.shift_down(ratseries.pad(g, n + 1), 1)[:n]


def _burnside_series(n):
    # (1 - e^t/(2t) + 1/(e^{2t}-1))/t = (2t e^{2t} - e^{3t} + e^t) / (2 t^3 (e^{2t}-1)/t)
    order = n + 4
    num = parse_expoly("2*t*E^(2t) - E^(3t) + E^(t)").taylor_coeffs(order)
    em1 = ratseries.exp_series(2, order + 1)
    em1[0] -= 1
    u = ratseries.shift_down(em1, 1)[:order]  # (e^{2t}-1)/t
    shifted = ratseries.shift_down(num, 3)
    quot = ratseries.mul(shifted, ratseries.inv(u, n), n)
    return [c / 2 for c in quot]


def _entry46_series(n):
    # (2 - (t^2+2t+2) e^{-t})/t^3 = (2 e^t - t^2 - 2t - 2) e^{-t} / t^3
    order = n + 3
    m = parse_expoly("2*E^(t) - t^2 - 2*t - 2").taylor_coeffs(order)
    shifted = ratseries.shift_down(m, 3)
    return ratseries.mul(shifted, ratseries.exp_series(-1, n), n)


@dataclass(frozen=True)
class Kernel:
    family: str
    params: dict = field(default_factory=dict)
    near_zero_cutoff: float = NEAR_ZERO_CUTOFF
    near_zero_series: tuple = None  # float coefficients, or None (no cancellation)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown kernel family %r" % self.family)
        if self.near_zero_series is None and self.family not in ("lambda_gr", "phi_magnus"):
            object.__setattr__(self, "near_zero_series",
                               tuple(float(c) for c in self.exact_series(SERIES_TERMS)))
        if self.family == "expoly_over_sinhpow" and "_num_taylor" not in self.params:
            # numerators are absolutely monotonic: nonnegative Maclaurin
            # coefficients give a cancellation-free mid-range evaluation
            coeffs = self.params["numerator"].taylor_coeffs(_NUM_TAYLOR_TERMS)
            self.params["_num_taylor"] = tuple(float(c) for c in coeffs)

    # -- construction ------------------------------------------------------

    def exact_series(self, n):
        if self.family == "binet_theta":
            return _binet_series(n)
        if self.family == "burnside_b":
            return _burnside_series(n)
        if self.family == "entry46":
            return _entry46_series(n)
        if self.family == "expoly_over_sinhpow":
            p = self.params
            return _sinh_family_series(p["numerator"], p["a"], p["b"], p["prefactor"], n)
        raise ValueError("family %s has no cancellation-prone series" % self.family)

    # -- weight / domain ---------------------------------------------------

    def decay_rate(self, x):
        """Coefficient r of the e^{-r t} weight attached at integration time."""
        if self.family == "binet_theta" or self.family == "entry46":
            return float(x)
        if self.family == "burnside_b":
            return 2.0 * (float(x) + 1.0)
        if self.family == "expoly_over_sinhpow":
            return 2.0 * float(x) + 1.0
        return 0.0  # lambda_gr / phi_magnus decay through their own kernel

    def check_domain(self, x):
        x = float(x)
        if self.family in ("binet_theta", "entry46", "lambda_gr", "phi_magnus"):
            if x <= 0:
                raise KernelDomainError("%s requires x > 0, got %s" % (self.family, x))
        else:
            if x <= -0.5:
                raise KernelDomainError("%s requires x > -1/2, got %s" % (self.family, x))

    # -- pointwise values --------------------------------------------------

    def value(self, t, x=None):
        """K(t), excluding the x-dependent exponential weight.

        For lambda_gr/phi_magnus the kernel itself carries x (taken from
        params if not passed).
        """
        t = float(t)
        if t <= 0:
            raise KernelDomainError("kernel value requires t > 0")
        if self.family in ("lambda_gr", "phi_magnus"):
            if x is None:
                x = self.params["x"]
            x = float(x)
            if self.family == "lambda_gr":
                return t / ((t * t + x * x) * math.expm1(2 * math.pi * t))
            return t / ((t * t + 4 * x * x) * (math.exp(math.pi * t) + 1.0))
        if t < self.near_zero_cutoff:
            acc = 0.0
            for c in reversed(self.near_zero_series):
                acc = acc * t + c
            return acc
        if self.family == "binet_theta":
            return (1.0 / math.expm1(t) - 1.0 / t + 0.5) / t
        if self.family == "burnside_b":
            return (1.0 - math.exp(t) / (2.0 * t) + 1.0 / math.expm1(2.0 * t)) / t
        if self.family == "entry46":
            return (2.0 - (t * t + 2.0 * t + 2.0) * math.exp(-t)) / t ** 3
        p = self.params
        return (float(p["prefactor"]) * self._numerator_value(t)
                / (t ** p["a"] * math.expm1(2.0 * t) ** p["b"]))

    def _numerator_value(self, t):
        p = self.params
        if t <= _NUM_TAYLOR_LIMIT:
            acc = 0.0
            for c in reversed(p["_num_taylor"]):
                acc = acc * t + c
            return acc
        acc = 0.0
        for k, poly in p["numerator"].terms.items():
            pv = 0.0
            for c in reversed(poly):
                pv = pv * t + float(c)
            acc += pv * math.exp(k * t)
        return acc

    def integrand(self, t, x):
        """Full integrand K(t) * weight(t; x), organized to avoid overflow."""
        t = float(t)
        x = float(x)
        if t <= 0:
            raise KernelDomainError("integrand requires t > 0")
        r = self.decay_rate(x)
        if self.family in ("lambda_gr", "phi_magnus"):
            return self.value(t, x)
        if t < self.near_zero_cutoff:
            return self.value(t) * math.exp(-r * t)
        if self.family == "binet_theta":
            return (1.0 / math.expm1(t) - 1.0 / t + 0.5) / t * math.exp(-r * t)
        if self.family == "burnside_b":
            # split so every exponent stays negative for r > 1
            one_m = -math.expm1(-2.0 * t)  # 1 - e^{-2t}
            return (math.exp(-r * t)
                    - math.exp((1.0 - r) * t) / (2.0 * t)
                    + math.exp(-(r + 2.0) * t) / one_m) / t
        if self.family == "entry46":
            return self.value(t) * math.exp(-r * t)
        p = self.params
        bb = p["b"]
        one_m = -math.expm1(-2.0 * t)
        if t <= _NUM_TAYLOR_LIMIT:
            return self.value(t) * math.exp(-r * t)
        acc = 0.0
        for k, poly in p["numerator"].terms.items():
            pv = 0.0
            for c in reversed(poly):
                pv = pv * t + float(c)
            acc += pv * math.exp((k - 2.0 * bb - r) * t)
        return float(p["prefactor"]) * acc / (t ** p["a"] * one_m ** bb)

    # -- tail bound --------------------------------------------------------

    def tail_bound(self, x, T):
        """Upper bound on |int_T^inf integrand|; monotone nonincreasing in T."""
        x = float(x)
        T = float(T)
        self.check_domain(x)
        if T < 1.0:
            raise TailBoundError("envelope needs T >= 1")
        r = self.decay_rate(x)
        if self.family == "binet_theta":
            # 0 < e^t/(e^t-1)... the bracket lies in (0, 1/2 + 1/(e^T - 1))
            c = (0.5 + 1.582 * math.exp(-T)) / T   # 1/(e^T-1) <= e^{-T}/(1-1/e)
            return c * math.exp(-r * T) / r
        if self.family == "burnside_b":
            if r <= 1.0:
                raise TailBoundError("burnside envelope needs x > -1/2")
            # |K(t)| <= A e^t on [T, inf)
            A = (math.exp(-T) / T + 0.5 / T ** 2
                 + 1.582 * math.exp(-3.0 * T) / T)
            return A * math.exp(-(r - 1.0) * T) / (r - 1.0)
        if self.family == "entry46":
            c = (2.0 + (T * T + 2.0 * T + 2.0) * math.exp(-T)) / T ** 3
            return c * math.exp(-r * T) / r
        if self.family == "lambda_gr":
            scale = 1.0 / (x * x * -math.expm1(-2.0 * math.pi * T))
            s = 2.0 * math.pi
            return scale * math.exp(-s * T) * (T / s + 1.0 / (s * s))
        if self.family == "phi_magnus":
            s = math.pi
            return math.exp(-s * T) * (T / s + 1.0 / (s * s)) / (4.0 * x * x)
        p = self.params
        bb = p["b"]
        if r <= 0.0:
            raise TailBoundError("expoly envelope needs 2x + 1 > 0")
        scale = abs(float(p["prefactor"])) / ((-math.expm1(-2.0 * T)) ** bb * T ** p["a"])
        total = 0.0
        for k, poly in p["numerator"].terms.items():
            s = r + 2.0 * bb - k
            if s <= 0.0:
                raise TailBoundError("term e^{%dt} not dominated by the weight" % k)
            for j, c in enumerate(poly):
                if not c:
                    continue
                # int_T^inf t^j e^{-s t} dt, closed form
                integ = sum(math.factorial(j) / math.factorial(i) * T ** i / s ** (j - i + 1)
                            for i in range(j + 1)) * math.exp(-s * T)
                total += abs(float(c)) * integ
        return scale * total


# ---- named kernel constructors -------------------------------------------

def binet_theta_kernel():
    return Kernel("binet_theta")


def burnside_b_kernel():
    return Kernel("burnside_b")


def entry46_kernel():
    return Kernel("entry46")


def lambda_kernel(x):
    return Kernel("lambda_gr", {"x": float(x)})


def phi_kernel(x):
    return Kernel("phi_magnus", {"x": float(x)})


def sinh_power_kernel(numerator, a, b, prefactor=1):
    if isinstance(numerator, str):
        numerator = parse_expoly(numerator)
    return Kernel("expoly_over_sinhpow",
                  {"numerator": numerator, "a": int(a), "b": int(b),
                   "prefactor": Fraction(prefactor)})


def load_manifest(path=None):
    """Kernel definitions from a JSON manifest: list of objects with keys
    name, family and (for expoly_over_sinhpow) numerator/a/b/prefactor."""
    if path is None:
        text = resources.files("gamma_remainders").joinpath("data/kernels.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    out = {}
    for entry in json.loads(text)["kernels"]:
        family = entry["family"]
        if family == "expoly_over_sinhpow":
            out[entry["name"]] = sinh_power_kernel(
                entry["numerator"], entry["a"], entry["b"],
                Fraction(entry.get("prefactor", "1")))
        elif family in ("lambda_gr", "phi_magnus"):
            out[entry["name"]] = Kernel(family, {"x": entry.get("x", 1.0)})
        else:
            out[entry["name"]] = Kernel(family)
    return out
