import pytest

from graphprod.complexes import ProductComplex, closure, to_regular2
from graphprod.constructions import (
    bing_house,
    cycle_graph,
    dunce_hat,
    simplicial_complex,
    theta,
    triangulated_disc,
    torus_regular_model,
    triple_torus_index_sets,
    triple_torus_q,
)
from graphprod.verify import (
    closed_surface_check,
    combinatorial_components,
    component_closures,
    free_edges,
    incidence_count,
    pseudo_manifold_check,
    ramified_manifold_check,
)

TETRA = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
PINCHED = TETRA + [(0, 4, 5), (0, 4, 6), (0, 5, 6), (4, 5, 6)]


def book(pages):
    """``pages`` squares glued along a common edge: theta(pages) x interval."""
    P = ProductComplex([theta(pages), cycle_graph(3)])
    return closure(P, [(f"m{j}", "e0") for j in range(pages)])


def test_sphere_is_pseudo_and_surface():
    K = simplicial_complex(TETRA)
    assert pseudo_manifold_check(K, 2, simple=True)
    assert closed_surface_check(K)
    assert free_edges(K) == set()


def test_pinched_spheres_fail_only_the_link_test():
    K = simplicial_complex(PINCHED)
    assert pseudo_manifold_check(K, 2)
    rep = closed_surface_check(K)
    assert not rep
    assert [w.cell for w in rep.witnesses] == ["0"]
    assert "components" in rep.witnesses[0].reason
    # pinching at a vertex keeps the two spheres in different chain classes
    assert not pseudo_manifold_check(K, 2, simple=True)
    assert len(combinatorial_components(K, 2)) == 2


def test_book_with_three_pages_is_ramified_not_pseudo():
    M = book(3)
    rep = pseudo_manifold_check(M, 2)
    assert not rep
    assert any("incident with 3" in w.reason for w in rep.witnesses)
    assert not ramified_manifold_check(M, 2)  # the outer page edges are free
    assert len(free_edges(M)) == 6


def test_torus_in_theta_product():
    M = ProductComplex([theta(2), theta(2)]).full()
    for check in (pseudo_manifold_check, ramified_manifold_check):
        assert check(M, 2, simple=True)
    assert closed_surface_check(M)
    assert incidence_count(M, ("m1", "s")) == 2


def test_theta3_squared_is_ramified():
    M = ProductComplex([theta(3), theta(3)]).full()
    assert ramified_manifold_check(M, 2, simple=True)
    assert not pseudo_manifold_check(M, 2)
    assert incidence_count(M, ("m1", "s")) == 3


def test_disc_has_free_boundary():
    K = triangulated_disc()
    assert len(free_edges(K)) == 6
    rep = ramified_manifold_check(K, 2)
    assert not rep and len(rep.witnesses) == 6


def test_spines_without_free_edges():
    for K in (dunce_hat(), bing_house()):
        assert free_edges(K) == set()
        assert ramified_manifold_check(K, 2)
        assert not pseudo_manifold_check(K, 2)
        assert not closed_surface_check(K)


def test_lower_dimensional_cells_outside_top_cells():
    M = ProductComplex([theta(2), theta(2)])
    sub = closure(M, [("m0", "m0"), ("m0", "m1"), ("m1", "m0"), ("m1", "m1")])
    assert pseudo_manifold_check(sub, 2)
    # dangling vertex-edge is not in any square
    G = ProductComplex([theta(2), cycle_graph(3)])
    sub = closure(G, [("m0", "e0"), ("m1", "e0"), ("s", "e1")])
    rep = pseudo_manifold_check(sub, 2)
    assert not rep
    assert any("not a face" in w.reason for w in rep.witnesses)


def test_empty_top_dimension():
    rep = pseudo_manifold_check(to_regular2(ProductComplex([theta(2), theta(2)]).full()), 3)
    assert not rep and rep.witnesses[0].reason == "no 3-cells"


def test_components_need_ramified_input():
    with pytest.raises(ValueError):
        combinatorial_components(triangulated_disc(), 2)


@pytest.mark.parametrize("n", [2, 3])
def test_triple_torus_q_is_one_component(n):
    # the three tori pairwise share codimension-one cells, so chain
    # connectivity merges them into a single component
    q = triple_torus_q(n)
    assert q.notes["report"].hypotheses_hold
    model = torus_regular_model(n + 1, triple_torus_index_sets(n))
    assert ramified_manifold_check(model, n)
    assert not pseudo_manifold_check(model, n)
    assert len(component_closures(model, n)) == 1
