"""
Recognizing surfaces cell by cell
=================================

The verifier works on the face poset only.  A failing check always comes
with witnesses naming the offending cells.
"""

from graphprod.complexes import ProductComplex, closure
from graphprod.constructions import cycle_graph, dunce_hat, simplicial_complex, theta
from graphprod.verify import (
    closed_surface_check,
    free_edges,
    pseudo_manifold_check,
    ramified_manifold_check,
)

# a torus: two circles times each other
T = ProductComplex([theta(2), theta(2)]).full()
print("torus is a closed surface:", bool(closed_surface_check(T)))

# three squares glued along one edge: every interior edge has 3 cofaces
book = closure(ProductComplex([theta(3), cycle_graph(3)]),
               [(f"m{j}", "e0") for j in range(3)])
rep = pseudo_manifold_check(book, 2)
for w in rep.witnesses:
    if "3" in w.reason:
        print("  ", w.cell, "-", w.reason)
print("  plus", len(free_edges(book)), "free edges along the outer page edges")

# two tetrahedra sharing a vertex pass the edge test but not the link test
tetra = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
pinched = simplicial_complex(tetra + [(0, 4, 5), (0, 4, 6), (0, 5, 6), (4, 5, 6)])
print("pinched spheres pseudo:", bool(pseudo_manifold_check(pinched, 2)))
print("pinched spheres surface:", closed_surface_check(pinched).witnesses)

# the dunce hat has no free edges and branches along one edge
hat = dunce_hat()
print("dunce hat free edges:", free_edges(hat))
print("dunce hat ramified:", bool(ramified_manifold_check(hat, 2)))
