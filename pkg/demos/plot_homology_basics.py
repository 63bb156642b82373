"""
Integral homology of graph products
===================================

Build a product of two theta-curves, look at its cells and compute its
homology over the integers.  Torsion shows up for the projective plane.
"""

from graphprod.complexes import ProductComplex
from graphprod.constructions import simplicial_complex, theta
from graphprod.homology import homology_of, kunneth_betti

# theta(3) has two poles and three meridians; the product has 9 squares
M = ProductComplex([theta(3), theta(3)]).full()
print("cells by dimension:", M.counts())

h = homology_of(M)
print("betti:", h.betti, "euler:", h.euler)

# no torsion here, so the Kunneth formula predicts the Betti numbers
print("kunneth:", kunneth_betti([1, 2], [1, 2]))

# the six-vertex projective plane has H_1 = Z/2
rp2 = simplicial_complex([(1, 2, 4), (2, 3, 4), (3, 1, 5), (1, 4, 5), (4, 5, 6),
                          (2, 5, 6), (3, 2, 5), (1, 6, 3), (1, 2, 6), (3, 4, 6)])
print("RP^2:", homology_of(rp2).betti, "torsion:", homology_of(rp2).torsion)
