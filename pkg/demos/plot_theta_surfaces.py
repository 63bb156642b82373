"""
Orientable surfaces in products of two theta-curves
===================================================

Each surface is a union of squares meridian x meridian.  Walking the
cycle of circles recovers the genus.
"""

from graphprod.constructions import involution_surface, m0_surface, swap_invariance_check
from graphprod.homology import surface_report
from graphprod.projection import theta_decompose

for m in range(1, 5):
    M = m0_surface(m).complex
    r = surface_report(M)
    d = theta_decompose(M)
    print(f"m={m}: genus {r.genus}, orientable {r.orientable}, sigma {d.sigma}, tau {d.tau}")

# a variant that is symmetric under swapping the two factors
for m in range(1, 5):
    M = involution_surface(m).complex
    print(f"m={m}: swap invariant {swap_invariance_check(M)}, genus {surface_report(M).genus}")
