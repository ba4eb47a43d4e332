"""
Finite-difference evidence for complete monotonicity
====================================================

A function f is completely monotonic when (-1)^n f^(n) >= 0 for every n,
and logarithmically completely monotonic when the same holds for ln f at
orders n >= 1.  Finite differences give checkable evidence: on a grid
with step h, (-1)^n Delta_h^n f must stay above a rounding tolerance
that grows like 2^n.  Failures beyond ten times the tolerance are
counterexample candidates, not noise.
"""

from gamma_remainders import Grid, check_cm, check_lcm
from gamma_remainders.gamma_ref import CatalogFunction
from gamma_remainders.monotonicity import report_to_csv
from gamma_remainders.registry import THEOREM1, THEOREM2

# A claimed-CM combination of the Burnside remainder, checked to order 8
# on two step sizes.
closure, left = THEOREM1["theorem1-item4"]
for h in (0.125, 0.5):
    rep = check_cm(closure, Grid(left + 0.01, h, 64), 8,
                   name="theorem1-item4", domain_left=left)
    print("theorem1-item4, h=%-5g: all orders pass = %s" % (h, rep.all_pass))

# The same machinery on ln f handles the logarithmic claims; the closures
# return ln f directly so that huge powers like exp((2x+1)b(x)) never
# overflow.
closure, left = THEOREM2["theorem2-item8"]
rep = check_lcm(closure, Grid(left + 0.01, 0.125, 64), 6,
                name="theorem2-item8", domain_left=left, log_form=True)
print("theorem2-item8 (log form):  all orders pass =", rep.all_pass)
print()
print(report_to_csv(rep))

# A *failing* claim is reported as data.  F_alpha is completely monotonic
# exactly when alpha >= 1/2; just below the boundary the engine finds a
# violation far beyond tolerance.
f = CatalogFunction("F_alpha", {"alpha": 0.4})
rep = check_cm(lambda x: f(x), Grid(0.05, 0.2, 48), 4,
               name="F_0.4", domain_left=0.0)
print("F_alpha with alpha=0.4: all_pass=%s, counterexample flagged=%s"
      % (rep.all_pass, rep.counterexample))
print("failed orders:", rep.failed_orders())

# Some boundaries are invisible to differences: for g_alpha with alpha
# slightly below 1, the first negative log-derivative appears only near
# order 35.  The exact Hurwitz-zeta margin exhibits it directly.
from gamma_remainders.monotonicity import g_alpha_log_derivative_margin

print()
for n in (34, 35):
    m = g_alpha_log_derivative_margin(0.9, n, 0.001)
    print("g_0.9 margin at order %d, x=0.001: %+.3e" % (n, float(m)))
