"""
The inequality catalog: verification, normalization, comparison
===============================================================

Each catalogued bound encloses one of three equivalent targets -- the
Binet ratio e^theta, the Burnside ratio e^b, or H(x) -- and exact
conversion factors let any two envelopes be compared on a common target.
Verification sweeps a grid and reports violations; comparison locates
envelope crossovers by bisection.
"""

import math

from gamma_remainders.bounds import (CATALOG, compare_bounds, empirical_onset,
                                     evaluate_bound, get_spec, log_grid,
                                     verify_bound_on_grid)

# Sweep the always-valid double bounds over four decades.
xs = log_grid(0.01, 100.0, 300)
for name in ("sevli-batir", "p236-rew", "cor-2.4", "theorem2-derived"):
    bad = verify_bound_on_grid(get_spec(name), xs)
    print("%-18s %d violations on %d points" % (name, len(bad), len(xs)))

# The asymptotic families hold only from some empirical onset; the k=6
# member of the second family actually reverses and never becomes an
# upper bound.
print()
for name in ("lu-jnt-k1", "lu-jnt-k4", "lu-wang-k2", "lu-wang-k6"):
    onset = empirical_onset(get_spec(name), log_grid(0.5, 500.0, 150))
    print("%-12s empirical onset: %s" % (name, onset))

# Comparing two upper envelopes of the Burnside ratio: the constant-based
# envelope wins near the origin, the k=1 asymptotic envelope wins beyond
# a single crossover, and the envelope ratio tends to an explicit
# constant.
print()
res = compare_bounds(get_spec("cor-2.4"), get_spec("lu-jnt-k1"),
                     "upper", log_grid(0.5, 1e4, 512))
print("crossovers:", ["%.4f" % c for c in res.crossovers])
print("winner at the right edge:", res.winner_at_right)
print("envelope ratio there: %.10f" % res.right_edge_ratio)
print("limit e^(7/12)/sqrt(pi): %.10f" % (math.exp(7 / 12) / math.sqrt(math.pi)))

# Pointwise, every spec exposes (lower, target, upper):
print()
lv, t, uv = evaluate_bound(get_spec("theorem2-derived"), 2.0)
print("theorem2-derived at x=2: %.12f < %.12f < %.12f" %
      (float(lv), float(t), float(uv)))
print()
print("catalog size:", len(CATALOG), "specs")
