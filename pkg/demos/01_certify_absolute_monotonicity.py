"""
Certifying absolute monotonicity of an exponential polynomial
=============================================================

An exponential polynomial sum_k p_k(t) e^{kt} with rational coefficients
is absolutely monotonic on [0, oo) when all of its derivatives are
nonnegative there.  The certifier searches for a finite proof: it
differentiates symbolically, records the exact limit at 0+, strips
common factors e^{kt} and positive rational content, and stops once
every remaining coefficient is nonnegative.  The resulting certificate
is a JSON document that anyone can replay step by step.
"""

from gamma_remainders import (certificate_to_json, certify_absolutely_monotonic,
                              parse_expoly, render, replay)

# One of the catalog numerators: it vanishes to high order at t = 0, so
# nonnegativity is far from obvious by inspection.
f = parse_expoly(
    "(t+2)*E^(4t) - 2*t*(2*t+1)*E^(3t) - 2*(t+2)*E^(2t) + 2*t*E^(t) + t + 2")
print("function:", render(f))

# Run the certification search (each step = one derivative + one strip).
cert = certify_absolutely_monotonic(f, max_depth=64)
print("steps needed:", len(cert.steps))
print("derivative limits at 0+ along the chain:")
print("  ", [str(v) for v in cert.limit_sequence])
print("terminal (coefficientwise nonnegative):", render(cert.terminal))

# Replay re-executes every recorded step from scratch and compares.
print("replay ok:", replay(cert))

# The serialized certificate is self-contained.
doc = certificate_to_json(cert)
print("certificate size:", len(doc), "bytes of JSON")

# A function that is *not* absolutely monotonic fails with a witness:
# here f(0) = 0 but f'(0) = -1 < 0.
from gamma_remainders.certify import AMFailure

bad = certify_absolutely_monotonic(parse_expoly("E^t - 2t - 1"))
assert isinstance(bad, AMFailure)
print("counterexample reason:", bad.reason, "(depth %d)" % bad.depth_reached)
