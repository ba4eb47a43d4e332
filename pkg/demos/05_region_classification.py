"""
Sign and monotonicity regions of the psi-difference combinations
================================================================

Two parametrized families built from the digamma function,

    Lambda_{p,q}(x) = lambda(px) - q lambda(x),
    Phi_{p,q}(x)    = phi(px)    - q phi(x),

are each claimed positive-and-decreasing on one region of the (p, q)
plane and negative-and-increasing on another.  `classify_region` encodes
the case lists exactly (boundary curves included); `check_region_claims`
then tests the applicable claim on a grid.  Points outside every case
are "unclassified" and nothing is asserted there.
"""

from gamma_remainders import Grid, check_region_claims
from gamma_remainders.monotonicity import classify_region

grid = Grid(0.1, 0.31, 64)   # reaches x ~ 19.8

samples = [
    ("Lambda", 2.0, -1.0),
    ("Lambda", 0.5, 1.0),
    ("Lambda", 2.0, 1.0),
    ("Lambda", 0.5, 4.0),    # on the boundary curve q = 1/p^2
    ("Lambda", 1.5, 0.5),    # outside every case
    ("Phi", 2.0, -1.0),
    ("Phi", 0.5, 0.5),
    ("Phi", 1.0, 2.0),
    ("Phi", 2.0, 1.0),
]

print("%-7s %-5s %-5s %-20s %-6s %-6s" %
      ("family", "p", "q", "claim", "sign", "mono"))
for family, p, q in samples:
    rep = check_region_claims(family, p, q, grid)
    print("%-7s %-5g %-5g %-20s %-6s %-6s" %
          (family, p, q, rep.claim, rep.sign_ok, rep.monotone_ok))

# The classifier alone answers "what is claimed here?" without any
# numerics at all:
print()
print("claim at (p, q) = (0.9, 1.1):",
      classify_region("Lambda", 0.9, 1.1))
print("claim at (p, q) = (3.0, 0.05):",
      classify_region("Phi", 3.0, 0.05))
