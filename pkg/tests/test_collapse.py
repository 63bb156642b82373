import random
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from graphprod.collapse import (
    CollapseStep,
    classify_core,
    exhaustive_collapsibility,
    free_face_pairs,
    greedy_collapse,
    replay,
    tree_embed,
    verify_tree_embedding,
)
from graphprod.complexes import ProductComplex, to_regular2
from graphprod.constructions import (
    bing_house,
    cone_over_graph,
    cycle_graph,
    dunce_hat,
    path_graph,
    simplicial_complex,
    theta,
    triangulated_disc,
    triangulated_grid,
)
from graphprod.homology import homology_of
from graphprod.sampling import random_graph

TRIANGLE = simplicial_complex([(0, 1, 2)])


def test_free_pairs_of_a_triangle():
    pairs = free_face_pairs(TRIANGLE)
    assert [p.coface for p in pairs] == ["0-1-2"] * 3
    assert all(TRIANGLE.cell_dim(p.free_face) == 1 for p in pairs)


def test_greedy_collapse_reaches_a_point():
    for k in (TRIANGLE, triangulated_disc(), triangulated_grid(3), cone_over_graph(theta(4))):
        plan = greedy_collapse(k)
        assert plan.collapsed_to_point
        v, e, f = k.counts()
        assert len(plan.steps) == e  # every edge leaves paired with a face or a vertex
        assert replay(k, plan.steps).counts() == (1, 0, 0)


def test_replay_rejects_a_non_free_pair():
    with pytest.raises(ValueError, match="not a free face"):
        replay(TRIANGLE, [CollapseStep("0", "0-1")])


def test_homology_is_invariant_along_a_plan():
    k = triangulated_grid(2)
    plan = greedy_collapse(k)
    for i in range(0, len(plan.steps) + 1, 3):
        h = homology_of(replay(k, plan.steps[:i]))
        assert h.reduced_trivial() and h.euler == 1
    # a cylinder keeps its H_1 all the way down to its core circle
    cyl = to_regular2(ProductComplex([cycle_graph(4), path_graph(3)]).full())
    plan = greedy_collapse(cyl)
    for i in range(len(plan.steps) + 1):
        assert homology_of(replay(cyl, plan.steps[:i])).betti[:2] == (1, 1)


def test_cores():
    torus = to_regular2(ProductComplex([cycle_graph(3), cycle_graph(4)]).full())
    assert classify_core(greedy_collapse(torus).core) == "torus"
    cyl = ProductComplex([cycle_graph(3), path_graph(2)]).full()
    assert classify_core(greedy_collapse(to_regular2(cyl)).core) == "quasi-1-manifold"
    assert classify_core(greedy_collapse(dunce_hat()).core) == "other"
    assert classify_core(TRIANGLE.subcomplex(["0"])) == "point"


@pytest.mark.parametrize("k", [dunce_hat, bing_house], ids=["dunce", "bing"])
def test_contractible_but_not_collapsible(k):
    K = k()
    assert greedy_collapse(K).steps == []
    res = exhaustive_collapsibility(K)
    assert res.status == "refuted" and res.plan is None


def test_exhaustive_finds_plans_and_respects_budget():
    res = exhaustive_collapsibility(triangulated_disc())
    assert res.status == "collapsible" and res.plan.collapsed_to_point
    small = exhaustive_collapsibility(triangulated_grid(3), budget=3)
    assert small.status == "not-collapsible-within-budget"
    with pytest.raises(ValueError):
        exhaustive_collapsibility(TRIANGLE, budget=0)


@pytest.mark.parametrize("k", [TRIANGLE, triangulated_disc(), cone_over_graph(theta(3)),
                               cone_over_graph(cycle_graph(5))], ids=["triangle", "disc", "cone3", "cone-c5"])
def test_tree_embedding_verifies(k):
    t = tree_embed(k)
    rep = verify_tree_embedding(t, k)
    assert rep, rep.witnesses
    s = t.stats
    assert t.tree1.is_tree() and t.tree2.is_tree()
    assert s["face_expansions"] == k.counts()[2]
    assert s["pendant_edges"] == s["edge_expansions"] + s["runs"]
    assert s["corners"] == s["runs"] - s["face_expansions"]


@given(st.integers(0, 10_000))
@settings(max_examples=50, deadline=None)
def test_cones_over_random_graphs_embed(seed):
    rng = random.Random(seed)
    g = random_graph(rng, max_vertices=5, connected=True)
    k = cone_over_graph(g)
    t = tree_embed(k)
    assert verify_tree_embedding(t, k)


def test_non_collapsible_input_is_refused():
    with pytest.raises(ValueError, match="not collapsible"):
        tree_embed(dunce_hat())


def _embedded_disc():
    k = triangulated_disc()
    return k, tree_embed(k)


def _interior_square(t, face):
    p = t.image.parent
    return next(c for c in sorted(t.assignment[face]) if p.dim(c) == 2)


def test_shared_interior_square_is_caught():
    k, t = _embedded_disc()
    f1, f2 = list(k.faces)[:2]
    sq = _interior_square(t, f1)
    bad = dict(t.assignment)
    bad[f2] = bad[f2] | {sq}
    rep = verify_tree_embedding(replace(t, assignment=bad), k)
    assert not rep
    assert any("several cells" in w.reason for w in rep.witnesses)


def test_punched_hole_is_caught():
    k, t = _embedded_disc()
    f = list(k.faces)[0]
    sq = _interior_square(t, f)
    bad = dict(t.assignment)
    bad[f] = bad[f] - {sq}
    image = type(t.image)(t.image.parent, t.image.cells - {sq})
    rep = verify_tree_embedding(replace(t, assignment=bad, image=image), k)
    assert not rep
    reasons = " ".join(w.reason for w in rep.witnesses)
    assert "reduced homology" in reasons or "disc" in reasons or "cycle" in reasons


def test_missing_cell_is_caught():
    k, t = _embedded_disc()
    bad = dict(t.assignment)
    del bad[next(iter(k.vertices))]
    assert not verify_tree_embedding(replace(t, assignment=bad), k)
