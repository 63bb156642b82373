"""
Collapsing and embedding into two trees
=======================================

A collapsible 2-complex can be rebuilt, expansion by expansion, inside a
product of two trees.  The dunce hat is contractible but has nothing to
start collapsing from.
"""

from graphprod.collapse import (
    classify_core,
    exhaustive_collapsibility,
    greedy_collapse,
    tree_embed,
    verify_tree_embedding,
)
from graphprod.complexes import ProductComplex, to_regular2
from graphprod.constructions import cone_over_graph, cycle_graph, dunce_hat, theta, triangulated_disc

K = cone_over_graph(theta(3))
plan = greedy_collapse(K)
print("cone over theta: steps", len(plan.steps), "core", classify_core(plan.core))

t = tree_embed(K, plan)
print("tree sizes:", len(t.tree1.edges), len(t.tree2.edges))
print("image cells:", len(t.image.cells), "stats:", t.stats)
print("verified:", bool(verify_tree_embedding(t, K)))

disc = triangulated_disc()
print("disc verified:", bool(verify_tree_embedding(tree_embed(disc), disc)))

# a torus collapses to a torus, nothing smaller
torus = to_regular2(ProductComplex([cycle_graph(3), cycle_graph(3)]).full())
print("torus core:", classify_core(greedy_collapse(torus).core))

print("dunce hat:", exhaustive_collapsibility(dunce_hat()).status)
