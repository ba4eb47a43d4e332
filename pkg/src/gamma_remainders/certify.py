"""Replayable absolute-monotonicity certificates for exponential polynomials.

The search replays the classical hand strategy for proving f^(n) >= 0 on
(0, inf) for every n: differentiate, and whenever the derivative has a
common factor c*exp(k*t) with c > 0 and k >= 1, divide it out (both
factors are absolutely monotonic with positive value, so the reduction is
sound).  Each recorded limit at 0+ must be >= 0; the chain terminates at
an exponential polynomial whose coefficients are all nonnegative, which
is manifestly absolutely monotonic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .expoly import ExpPoly, parse_expoly, render


@dataclass(frozen=True)
class AMStep:
    """One differentiate-then-strip move of the certificate chain."""
    reached: ExpPoly          # state after stripping
    derivatives: int          # derivatives applied in this step (always 1)
    stripped_exp: int         # k of the exp(k*t) factor divided out (0 = none)
    stripped_content: Fraction  # positive rational factor divided out with it
    limit_at_zero: Fraction   # limit at 0+ of the derivative, before stripping


@dataclass(frozen=True)
class AMCertificate:
    root: ExpPoly
    root_limit: Fraction
    steps: tuple
    terminal: ExpPoly

    @property
    def limit_sequence(self):
        return [s.limit_at_zero for s in self.steps]


@dataclass(frozen=True)
class AMFailure:
    root: ExpPoly
    offending: ExpPoly
    reason: str
    depth_reached: int


def _strip(d):
    """Strip exp(k*t) and positive content when no degree-0 term remains."""
    k = d.min_exp_degree()
    if k == 0 or not d:
        return d, 0, Fraction(1)
    g = d.strip_exp(k)
    c = g.content()
    if c == 0 or c == 1:
        return g, k, Fraction(1)
    return g.scale(Fraction(1, c)), k, c


def certify_absolutely_monotonic(f, max_depth=64):
    """Search for an AMCertificate for f; returns AMCertificate or AMFailure.

    A failure never asserts non-monotonicity, except that a negative limit
    at 0+ really is a witness against it.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be positive")
    root_limit = f.limit_at_zero()
    if root_limit < 0:
        return AMFailure(f, f, "limit at 0+ equals %s" % root_limit, 0)
    if f.all_coeffs_nonnegative():
        return AMCertificate(f, root_limit, (), f)
    g = f
    steps = []
    for depth in range(1, max_depth + 1):
        d = g.differentiate()
        limit = d.limit_at_zero()
        stripped, k, content = _strip(d)
        if stripped.all_coeffs_nonnegative():
            return AMCertificate(f, root_limit, tuple(steps), stripped)
        if limit < 0:
            return AMFailure(f, d, "limit at 0+ equals %s" % limit, depth)
        steps.append(AMStep(stripped, 1, k, content, limit))
        g = stripped
    return AMFailure(f, g, "depth %d exhausted" % max_depth, max_depth)


def replay(cert):
    """Re-execute every step from the root; True iff it reproduces the chain."""
    if cert.root.limit_at_zero() != cert.root_limit or cert.root_limit < 0:
        return False
    g = cert.root
    for step in cert.steps:
        d = g
        for _ in range(step.derivatives):
            d = d.differentiate()
        if d.limit_at_zero() != step.limit_at_zero or step.limit_at_zero < 0:
            return False
        expected = step.reached.scale(step.stripped_content)
        expected = ExpPoly({k + step.stripped_exp: p for k, p in expected.terms.items()})
        if expected != d:
            return False
        g = step.reached
    if not cert.terminal.all_coeffs_nonnegative():
        return False
    if cert.steps:
        d = cert.steps[-1].reached.differentiate()
    elif cert.root.all_coeffs_nonnegative():
        return cert.terminal == cert.root
    else:
        return False
    stripped, _, _ = _strip(d)
    return stripped == cert.terminal


def _frac_str(x):
    return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(x.numerator)


def certificate_to_json(cert):
    """Canonical JSON document; field order is fixed so certificates diff cleanly."""
    doc = {
        "root": render(cert.root),
        "steps": [
            {
                "reached": render(s.reached),
                "derivatives": s.derivatives,
                "stripped_exp": s.stripped_exp,
                "stripped_content": _frac_str(s.stripped_content),
                "limit_at_zero": _frac_str(s.limit_at_zero),
            }
            for s in cert.steps
        ],
        "terminal": render(cert.terminal),
        "root_limit": _frac_str(cert.root_limit),
        "schema_version": 1,
    }
    return json.dumps(doc, indent=2)


def certificate_from_json(text):
    doc = json.loads(text)
    steps = tuple(
        AMStep(
            reached=parse_expoly(s["reached"]),
            derivatives=s["derivatives"],
            stripped_exp=s["stripped_exp"],
            stripped_content=Fraction(s["stripped_content"]),
            limit_at_zero=Fraction(s["limit_at_zero"]),
        )
        for s in doc["steps"]
    )
    return AMCertificate(
        root=parse_expoly(doc["root"]),
        root_limit=Fraction(doc["root_limit"]),
        steps=steps,
        terminal=parse_expoly(doc["terminal"]),
    )
