"""Inequality catalog for the gamma-function ratio bounds, with grid
verification, envelope comparison and the asymptotic-expansion truncations.

Every bound is normalized to one of three equivalent targets before any
comparison:

    binet_ratio(x)    = e^x Gamma(x+1) / (x^x sqrt(2 pi x))   = e^theta(x)
    burnside_ratio(x) = e^b(x)
    H(x)              = sqrt(2 pi / e) * e^(b(x) + 1/(24(x+1/2)))

so an "upper bound" always means an upper envelope of the same quantity.
The catalog is immutable after registration; all sweeps are deterministic.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mpf

from . import gamma_ref
from .gamma_ref import DEFAULT_PRECISION, DomainError

TARGETS = ("binet_ratio", "burnside_ratio", "H")

# Correction coefficients of the trigamma-based expansion: the exponent is
# psi'(x+1/2)/12 + c1/x^3 + c2/x^5 + c3/x^7 + c4/x^9 + ...
CORRECTION_COEFFS = (
    Fraction(1, 240),
    Fraction(-11, 6720),
    Fraction(107, 80640),
    Fraction(-2911, 1520640),
)


def target_value(target, x, prec=DEFAULT_PRECISION):
    with mpmath.workdps(prec.working_digits + 10):
        x = mpf(x)
        if target == "binet_ratio":
            return mpmath.exp(gamma_ref.theta(x, prec))
        if target == "burnside_ratio":
            return mpmath.exp(gamma_ref.b(x, prec))
        if target == "H":
            return gamma_ref.h_big(x, prec)
        raise ValueError("unknown target %r" % target)


def conversion_factor(src, dst, x, prec=DEFAULT_PRECISION):
    """c(x) with dst_target(x) = c(x) * src_target(x); envelopes transform
    by the same factor, which is what makes cross-target comparison sound."""
    if src == dst:
        return mpf(1)
    with mpmath.workdps(prec.working_digits + 10):
        x = mpf(x)
        half = mpf(1) / 2

        def to_burnside(name):
            # factor e^b / target
            if name == "burnside_ratio":
                return mpf(1)
            if name == "binet_ratio":
                # theta = b + (x+1/2) ln(1 + 1/(2x)) - 1/2
                return mpmath.exp(half - (x + half) * mpmath.log1p(1 / (2 * x)))
            if name == "H":
                return mpmath.exp(-1 / (24 * (x + half))) / mpmath.sqrt(2 * mpmath.pi / mpmath.e)
            raise ValueError("unknown target %r" % name)

        return to_burnside(src) / to_burnside(dst)


@dataclass(frozen=True)
class BoundSpec:
    """One catalogued double (or one-sided) inequality for a target ratio."""
    name: str
    target: str
    lower: object = None          # callable (x, prec) -> mpf, or None
    upper: object = None
    domain: tuple = (0.0, math.inf)
    strict: tuple = (True, True)  # (lower strict, upper strict)
    provenance: str = ""
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError("unknown target %r" % self.target)
        if self.lower is None and self.upper is None:
            raise ValueError("spec %s has no sides" % self.name)
        if self.domain[0] >= self.domain[1]:
            raise ValueError("empty domain in spec %s" % self.name)


@dataclass(frozen=True)
class Violation:
    x: float
    lower: float
    target: float
    upper: float
    margin: float      # most negative slack, < 0 by construction


@dataclass(frozen=True)
class ComparisonResult:
    spec_a: str
    spec_b: str
    side: str
    crossovers: tuple      # sorted x where the envelope gap changes sign
    winner_at_right: str   # "a", "b" or "tie" at the right edge of the grid
    right_edge_ratio: float  # envelope_a / envelope_b at the right edge


def evaluate_bound(spec, x, prec=DEFAULT_PRECISION):
    """(lower value or None, target value, upper value or None) at x."""
    lo, hi = spec.domain
    if not lo < x < hi:
        raise DomainError("x=%s outside domain %s of %s" % (x, spec.domain, spec.name))
    with mpmath.workdps(prec.working_digits + 10):
        t = target_value(spec.target, x, prec)
        lv = spec.lower(mpf(x), prec) if spec.lower is not None else None
        uv = spec.upper(mpf(x), prec) if spec.upper is not None else None
        return lv, t, uv


def verify_bound_on_grid(spec, xs, prec=DEFAULT_PRECISION):
    """Violations of the inequality over the points xs (empty = verified).

    The error budget is the oracle's own tolerance; the recorded margin is
    the (negative) slack of the violated side.
    """
    budget = 10.0 ** (-(prec.working_digits - 10))
    out = []
    for x in xs:
        lv, t, uv = evaluate_bound(spec, x, prec)
        worst = 0.0
        if lv is not None and float(t - lv) < -budget:
            worst = min(worst, float(t - lv))
        if uv is not None and float(uv - t) < -budget:
            worst = min(worst, float(uv - t))
        if worst < 0.0:
            out.append(Violation(float(x),
                                 float(lv) if lv is not None else math.nan,
                                 float(t),
                                 float(uv) if uv is not None else math.nan,
                                 worst))
    return out


def _envelope_on(spec, side, dst_target):
    fn = spec.lower if side == "lower" else spec.upper
    if fn is None:
        raise ValueError("spec %s has no %s side" % (spec.name, side))

    def env(x, prec=DEFAULT_PRECISION):
        return fn(mpf(x), prec) * conversion_factor(spec.target, dst_target, x, prec)

    return env


def compare_bounds(spec_a, spec_b, side, xs, prec=DEFAULT_PRECISION,
                   bracket_width=1e-6):
    """Compare the chosen side of two specs after target normalization.

    Sign changes of envelope_a - envelope_b are located by a scan over xs
    and bisected to bracket_width.  The winner at the right edge is the
    smaller upper envelope (or larger lower envelope).
    """
    if side not in ("lower", "upper"):
        raise ValueError("side must be 'lower' or 'upper'")
    env_a = _envelope_on(spec_a, side, "burnside_ratio")
    env_b = _envelope_on(spec_b, side, "burnside_ratio")

    def gap(x):
        return float(env_a(x, prec) - env_b(x, prec))

    xs = sorted(xs)
    crossings = []
    g_prev = gap(xs[0])
    for x_prev, x_next in zip(xs, xs[1:]):
        g_next = gap(x_next)
        if g_prev == 0.0:
            crossings.append(x_prev)
        elif g_prev * g_next < 0.0:
            a, bpt = x_prev, x_next
            ga = g_prev
            while bpt - a > bracket_width:
                m = 0.5 * (a + bpt)
                gm = gap(m)
                if gm == 0.0 or ga * gm < 0.0:
                    bpt = m
                else:
                    a, ga = m, gm
            crossings.append(0.5 * (a + bpt))
        g_prev = g_next
    right = xs[-1]
    ea, eb = float(env_a(right, prec)), float(env_b(right, prec))
    if ea == eb:
        winner = "tie"
    elif side == "upper":
        winner = "a" if ea < eb else "b"
    else:
        winner = "a" if ea > eb else "b"
    return ComparisonResult(spec_a.name, spec_b.name, side, tuple(crossings),
                            winner, ea / eb)


def asymptotic_series(x, terms, prec=DEFAULT_PRECISION):
    """Exponent of the trigamma-based expansion truncated after `terms`
    correction terms: psi'(x+1/2)/12 + sum of CORRECTION_COEFFS/x^(2j+1)."""
    if not 0 <= terms <= len(CORRECTION_COEFFS):
        raise ValueError("terms must lie in [0, %d]" % len(CORRECTION_COEFFS))
    with mpmath.workdps(prec.working_digits + 10):
        x = mpf(x)
        if x <= 0:
            raise DomainError("asymptotic_series requires x > 0")
        _, psi1 = gamma_ref.digamma_trigamma(x + mpf(1) / 2, prec)
        acc = psi1 / 12
        for j, c in enumerate(CORRECTION_COEFFS[:terms]):
            acc += mpf(c.numerator) / c.denominator / x ** (2 * j + 3)
        return acc


def gamma_approximation(x, terms, prec=DEFAULT_PRECISION):
    """Gamma(x+1) approximated as sqrt(2 pi) x^(x+1/2) e^-x e^(exponent)."""
    with mpmath.workdps(prec.working_digits + 10):
        x = mpf(x)
        expo = asymptotic_series(x, terms, prec)
        return (mpmath.sqrt(2 * mpmath.pi) * x ** (x + mpf(1) / 2)
                * mpmath.exp(expo - x))


# ---- the registered catalog ----------------------------------------------

def _sevli_batir_lower(x, prec):
    _, psi1 = gamma_ref.digamma_trigamma(x + mpf(1) / 2, prec)
    return mpmath.exp(psi1 / 12)


def _sevli_batir_upper(x, prec):
    _, psi1 = gamma_ref.digamma_trigamma(x, prec)
    return mpmath.exp(psi1 / 12)


def _p236_lower(x, prec):
    return mpmath.exp(-1 / (24 * x))


def _p236_upper(x, prec):
    return mpmath.exp(-1 / (24 * (mpmath.sqrt(x ** 2 + 3 * x + mpf(5) / 2) - mpf(1) / 2)))


def _cor24_lower(x, prec):
    return mpmath.sqrt(2 * mpmath.pi / mpmath.e)


def _cor24_upper(x, prec):
    return mpmath.sqrt(2) * mpmath.exp(mpf(1) / 12)


def _ii_lower(x, prec):
    return mpmath.exp(1 / (240 * x ** 3) - 11 / (6720 * x ** 5))


def _ii_upper(x, prec):
    return mpmath.exp(1 / (240 * x ** 3))


def _ii_target_adjust(x, prec):
    # (ii-continuous) bounds binet_ratio / exp(psi'(x+1/2)/12); fold the
    # denominator into the envelopes so the target stays binet_ratio.
    _, psi1 = gamma_ref.digamma_trigamma(x + mpf(1) / 2, prec)
    return mpmath.exp(psi1 / 12)


def _lu_jnt_upper(k):
    def upper(x, prec):
        bracket = 1 - mpf(k) / (24 * x) + (mpf(k) ** 2 / 1152 + mpf(k) / 48) / x ** 2
        if bracket <= 0:
            return mpf("inf")
        return bracket ** (mpf(1) / k)
    return upper


def _lu_wang_upper(k):
    def upper(x, prec):
        return (1 + mpf(k) / (12 * x) + mpf(k) ** 2 / (288 * x ** 2)) ** (mpf(1) / k)
    return upper


def _theorem2_lower(x, prec):
    return mpmath.exp(-1 / (12 * (2 * x + 1)))


def _theorem2_upper(x, prec):
    return mpmath.exp(-1 / (24 * (x + 1)))


def _build_catalog():
    specs = [
        BoundSpec("sevli-batir", "binet_ratio",
                  _sevli_batir_lower, _sevli_batir_upper,
                  (0.0, math.inf), (True, True),
                  provenance="trigamma-shift double inequality"),
        BoundSpec("p236-rew", "burnside_ratio",
                  _p236_lower, _p236_upper, (0.0, math.inf), (True, False),
                  provenance="rewritten log-gamma double inequality"),
        BoundSpec("cor-2.4", "H",
                  _cor24_lower, _cor24_upper, (0.0, math.inf), (True, False),
                  provenance="extremal constants of the decreasing H"),
        BoundSpec("ii-continuous", "binet_ratio",
                  lambda x, prec: _ii_lower(x, prec) * _ii_target_adjust(x, prec),
                  lambda x, prec: _ii_upper(x, prec) * _ii_target_adjust(x, prec),
                  (0.0, math.inf), (True, True),
                  provenance="asymptotic truncation enclosure at integers"),
        BoundSpec("theorem2-derived", "burnside_ratio",
                  _theorem2_lower, _theorem2_upper,
                  (-0.5, math.inf), (True, True),
                  provenance="monotone limits of exp((2x+1)b) and exp(-(x+1)b)"),
    ]
    for k in range(1, 9):
        specs.append(BoundSpec("lu-jnt-k%d" % k, "burnside_ratio",
                               None, _lu_jnt_upper(k), (0.0, math.inf),
                               (True, True),
                               provenance="asymptotic upper family, onset empirical",
                               parameters={"k": k}))
        specs.append(BoundSpec("lu-wang-k%d" % k, "binet_ratio",
                               None, _lu_wang_upper(k), (0.0, math.inf),
                               (True, True),
                               provenance="asymptotic upper family, onset empirical; "
                                          "reverses for k >= 6",
                               parameters={"k": k}))
    return {s.name: s for s in specs}


CATALOG = _build_catalog()


def get_spec(name):
    return CATALOG[name]


def load_manifest(path=None):
    """The catalog as declared in the JSON manifest.

    The manifest carries the declarative metadata (targets, sides,
    domains, parameters); the side expressions live in code.  Loading
    cross-checks every manifest entry against the registered catalog and
    returns the matching specs.
    """
    from importlib import resources
    if path is None:
        text = resources.files("gamma_remainders").joinpath("data/bounds.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    out = {}
    for entry in json.loads(text)["bounds"]:
        spec = CATALOG[entry["name"]]
        if spec.target != entry["target"]:
            raise ValueError("manifest target mismatch for %s" % spec.name)
        declared = set(entry["sides"])
        present = {s for s, fn in (("lower", spec.lower), ("upper", spec.upper))
                   if fn is not None}
        if declared != present:
            raise ValueError("manifest sides mismatch for %s" % spec.name)
        out[spec.name] = spec
    return out


def empirical_onset(spec, xs, prec=DEFAULT_PRECISION):
    """Smallest grid point from which the inequality holds on the rest of
    the grid, or None if it never stabilizes.  This is data, not an
    assertion: the constants below which the asymptotic bounds fail are
    unstated, so validity is never extrapolated below the onset."""
    xs = sorted(xs)
    bad = verify_bound_on_grid(spec, xs, prec)
    if not bad:
        return xs[0]
    worst = max(v.x for v in bad)
    later = [x for x in xs if x > worst]
    return later[0] if later else None


def log_grid(lo, hi, count):
    """count log-spaced points in (lo, hi], deterministic."""
    llo, lhi = math.log(lo), math.log(hi)
    return [math.exp(llo + (lhi - llo) * i / (count - 1)) for i in range(count)]


# ---- serialization -------------------------------------------------------

def results_to_csv(rows, header=True):
    """CSV rows (spec, x, lower, target, upper, margin)."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    if header:
        writer.writerow(["spec", "x", "lower", "target", "upper", "margin"])
    for name, x, lv, t, uv, margin in rows:
        writer.writerow([name, repr(float(x)),
                         "" if lv is None else repr(float(lv)),
                         repr(float(t)),
                         "" if uv is None else repr(float(uv)),
                         repr(float(margin))])
    return buf.getvalue()


def summary_to_json(entries):
    doc = {"specs": entries, "schema_version": 1}
    return json.dumps(doc, indent=2)
