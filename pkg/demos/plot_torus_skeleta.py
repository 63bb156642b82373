"""
Skeleta of the torus and three overlapping tori
===============================================

In the canonical cell structure on T^k all boundary maps vanish, so the
n-skeleton has b_i = C(k, i).  A regular model built from 3-cycles gives
the same answer independently.
"""

from graphprod import oracles
from graphprod.constructions import triple_torus_q
from graphprod.homology import torus_skeleton_homology

for k in (2, 3, 4):
    for n in range(k + 1):
        print(f"T^{k}, {n}-skeleton:", torus_skeleton_homology(k, n).betti,
              "regular model:", oracles.torus_skeleton_betti_oracle(k, n) if k <= 3 else "-")

rep = triple_torus_q(3).notes["report"]
print("profiles:", rep.profiles)
print("pairwise:", rep.pairwise)
print("triple:", rep.triple, "hypotheses hold:", rep.hypotheses_hold)
