import random

import pytest
from hypothesis import given, settings, strategies as st

from graphprod.complexes import Graph1Complex, ProductComplex, closure, cross
from graphprod.constructions import (
    circle_times,
    cycle_graph,
    gallery,
    involution_surface,
    m0_surface,
    path_graph,
    theta,
)
from graphprod.homology import homology_of
from graphprod.projection import (
    PropertyViolation,
    circle_projection_set,
    fiber_complex,
    fiber_property_violations,
    fiber_table,
    fibers_all_circles,
    is_circle,
    product_decomposition,
    project,
    rank_bound_assert,
    theta_decompose,
)
from graphprod.sampling import random_product_subcomplex


def torus(a=3, b=4):
    return ProductComplex([cycle_graph(a, "x"), cycle_graph(b, "y")]).full()


def test_project_and_bad_indices():
    M = m0_surface(2).complex
    p = project(M, [0])
    assert p.parent.factors == (theta(3),)
    assert len(p.cells) == 5  # the whole theta-curve
    with pytest.raises(ValueError):
        project(M, [2])
    with pytest.raises(ValueError):
        project(M, [])


def test_fiber_over_vertex_and_edge():
    M = m0_surface(2).complex
    # squares over m0 in the second factor: m0 x m0 and m2 x m0
    f = fiber_complex(M, [0], ("m0",))
    assert {c for c in f.cells if c[0].startswith("m")} == {("m0",), ("m2",)}
    assert is_circle(f)
    # over a pole every meridian of the first factor shows up
    g = fiber_complex(M, [0], ("s",))
    assert homology_of(g).betti == (1, 2)
    with pytest.raises(ValueError):
        fiber_complex(M, [0], ("m0", "m1"))


def test_is_circle():
    assert is_circle(cycle_graph(5))
    assert is_circle(theta(2))
    assert not is_circle(theta(3))
    assert not is_circle(path_graph(3))
    assert not is_circle(Graph1Complex([]))
    with pytest.raises(ValueError):
        is_circle(torus())


def test_torus_splits_completely():
    M = torus()
    assert circle_projection_set(M) == (0, 1)
    d = product_decomposition(M)
    assert d.exact and d.residual is None
    assert fibers_all_circles(M, 0) and fibers_all_circles(M, 1)


def test_circle_times_surface_splits_off_the_circle():
    M = circle_times(m0_surface(2).complex)
    assert circle_projection_set(M) == (0,)
    d = product_decomposition(M)
    assert d.exact
    assert d.residual == m0_surface(2).complex
    r = rank_bound_assert(M)
    assert r.rank_h1 == 5 and r.n == 3


def test_theta_surfaces_have_no_circle_factor():
    M = m0_surface(3).complex
    assert circle_projection_set(M) == ()
    assert not fibers_all_circles(M, 0)
    d = product_decomposition(M)
    assert not d.claimed and not d.exact
    assert rank_bound_assert(M).rank_h1 == 6


def test_rank_bound_needs_ramified_input():
    M = closure(ProductComplex([theta(2), theta(2)]), [("m0", "m0")])
    with pytest.raises(ValueError, match="ramified"):
        rank_bound_assert(M)


def test_circle_times_theta2_is_a_torus():
    P = ProductComplex([cycle_graph(3, "x"), theta(2)])
    M = closure(P, [(f"xe{i}", f"m{j}") for i in range(3) for j in range(2)])
    assert product_decomposition(M).exact
    assert rank_bound_assert(M).circle_indices == (0, 1)


def test_missing_square_breaks_the_product():
    P = ProductComplex([cycle_graph(3, "x"), cycle_graph(3, "y")])
    M = closure(P, [(f"xe{i}", f"ye{j}") for i in range(3) for j in range(3) if (i, j) != (0, 0)])
    assert circle_projection_set(M) == (0, 1)
    assert not product_decomposition(M).exact


@pytest.mark.parametrize("c", gallery(), ids=lambda c: f"{c.name}{c.params}")
def test_fiber_identities_on_gallery(c):
    assert fiber_property_violations(c.complex) == []


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_fiber_identities_on_random_pure_complexes(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    parent = random_product_subcomplex(rng, n, max_vertices=3, full=True).parent
    tops = [c for c in parent.cells_of_dim(n) if rng.random() < 0.5]
    if not tops:
        return
    M = closure(parent, tops)
    assert fiber_property_violations(M) == []
    for j in range(n):
        assert set(fiber_table(M, [j])) == set(project(M, [i for i in range(n) if i != j]).cells)


@pytest.mark.parametrize("m", range(1, 6))
def test_theta_decomposition_of_m0(m):
    d = theta_decompose(m0_surface(m).complex)
    assert d.genus == m
    assert len(d.sigma) == len(d.tau) == m + 1
    assert len(set(d.tau)) == m + 1


@pytest.mark.parametrize("m", range(1, 5))
def test_theta_decomposition_of_involution_surface(m):
    M = involution_surface(m).complex
    d = theta_decompose(M)
    assert d.genus == m
    assert d.squares() == {c for c in M.cells if M.parent.dim(c) == 2}


def test_theta_decomposition_of_torus_in_theta2_squared():
    d = theta_decompose(ProductComplex([theta(2), theta(2)]).full())
    assert d.genus == 1 and len(d.sigma) == 2


def test_theta_decomposition_rejects_other_inputs():
    with pytest.raises(ValueError):
        theta_decompose(torus())
    with pytest.raises(ValueError):
        theta_decompose(ProductComplex([theta(3), theta(3)]).full())


def test_property_violation_carries_data():
    e = PropertyViolation("boom", {"k": 1})
    assert isinstance(e, AssertionError) and e.data == {"k": 1}


def test_torus_times_surface():
    t2 = torus(3, 3)
    M = cross(t2, m0_surface(2).complex)
    assert circle_projection_set(M) == (0, 1)
    assert product_decomposition(M).exact
