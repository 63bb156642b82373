"""
Non-orientable surfaces of every rank
=====================================

Odd rank: two tori over a shared set of arcs, one of them running the
wrong way through one arc.  Even rank: squares of wheel triangles with
the diagonal spoke squares removed.
"""

from graphprod.constructions import cauty_even, cauty_even_plus, cauty_odd
from graphprod.homology import surface_report


def show(label, M):
    r = surface_report(M)
    print(f"{label:>22}: closed {r.is_closed_surface}, orientable {r.orientable}, "
          f"euler {r.chi}, rank H_1 {r.rank_h1}, torsion {r.homology.torsion[1]}")


for k in (2, 3, 4):
    show(f"odd, k={k}", cauty_odd(k).complex)
# same construction with every arc traversed the same way
show("odd control, k=2", cauty_odd(2, "same").complex)

for n in (3, 5):
    show(f"even, n={n}", cauty_even(n).complex)
show("even plus torus, n=4", cauty_even_plus(4).complex)
