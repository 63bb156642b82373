"""
Projections, fibers and splitting off circles
=============================================

For a top-dimensional complex M in a product of graphs, the factors whose
projection is a circle split off as a product.
"""

from graphprod.complexes import ProductComplex
from graphprod.constructions import circle_times, cycle_graph, m0_surface
from graphprod.homology import homology_of
from graphprod.projection import (
    circle_projection_set,
    fiber_complex,
    fiber_property_violations,
    product_decomposition,
    rank_bound_assert,
)

S = m0_surface(2).complex
M = circle_times(S)
print("rank H_1:", homology_of(M).betti[1])
print("circle factors:", circle_projection_set(M))

d = product_decomposition(M)
print("splits exactly:", d.exact, "residual is the surface:", d.residual == S)
print(rank_bound_assert(M).claims)

# fiber of the surface over a pole of the second theta-curve
F = fiber_complex(S, [0], ("s",))
print("fiber over the pole:", sorted(c[0] for c in F.cells))

# the fiber identities hold on a 3-torus too
T3 = ProductComplex([cycle_graph(3, "x"), cycle_graph(3, "y"), cycle_graph(3, "z")]).full()
print("violations on T^3:", fiber_property_violations(T3))
