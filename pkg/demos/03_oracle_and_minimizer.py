"""
The high-precision oracle and the variant-remainder minimizer
=============================================================

Everything in the package is checked against a gamma/psi oracle built
from scratch (argument-shift recurrence plus an asymptotic series with a
smallest-term stopping rule), so no numerical claim depends on a single
implementation.  This demo exercises the oracle, the function catalog
and two derived quantities: the interior minimizer of the variant
Stirling remainder and the best argument shift for the trigamma
correction.
"""

import mpmath

from gamma_remainders.gamma_ref import (b, factorial_shift_error, h_big,
                                        log_gamma, stirling_variant_remainder,
                                        theta, vartheta_minimum)

# The oracle at 40 working digits, cross-checked against mpmath.
with mpmath.workdps(45):
    x = mpmath.mpf("3.75")
    print("log Gamma(3.75):")
    print("  oracle :", log_gamma(x))
    print("  mpmath :", mpmath.loggamma(x))

# The remainders it certifies: theta > 0 shrinks like 1/(12x) while the
# Burnside-form remainder b is negative, shrinking like -1/(24(x+1/2)).
print()
for x in (1.0, 10.0, 100.0):
    print("x=%-6g theta=%.6e  12x*theta=%.6f   b=%.6e" %
          (x, float(theta(x)), 12 * x * float(theta(x)), float(b(x))))

# H(x) interpolates between two explicit constants and is strictly
# decreasing; its endpoints pin the sharp constants of one catalog bound.
print()
print("H(0.001)  = %.10f   (sup:  sqrt(2) e^{1/12} = %.10f)"
      % (float(h_big(0.001)), float(mpmath.sqrt(2) * mpmath.exp(mpmath.mpf(1) / 12))))
print("H(10000)  = %.10f   (inf: sqrt(2 pi / e)   = %.10f)"
      % (float(h_big(1e4)), float(mpmath.sqrt(2 * mpmath.pi / mpmath.e))))

# The variant remainder 12x[ln Gamma(x+1) - x ln x + x - ln sqrt(2 pi)]
# has a unique interior minimum; the solver finds it from its defining
# critical-point equation.
print()
beta = vartheta_minimum()
print("variant-remainder minimizer beta = %.8f" % float(beta))
print("value at the minimum             = %.8f" % float(stirling_variant_remainder(beta)))

# Among candidate shifts a in the trigamma correction psi'(n+a)/12, the
# shift a = 1/2 approximates ln n! best at every tested n.
print()
print("n    " + "".join("a=%-10g" % a for a in (0, 0.25, 0.5, 0.75, 1)))
for n in (5, 10, 20):
    errs = [float(factorial_shift_error(n, a)) for a in (0, 0.25, 0.5, 0.75, 1)]
    print("%-4d " % n + "".join("%-12.2e" % e for e in errs))
