import random

import pytest
from hypothesis import given, settings, strategies as st

from graphprod.complexes import (
    Graph1Complex,
    InvalidComplexError,
    ProductComplex,
    ProductSubcomplex,
    Regular2Complex,
    closure,
    cross,
    from_json,
    proper_cells_check,
    subdivide_edge,
    subdivide_product_edge,
    to_regular2,
    top_cell_span,
    wedge,
)
from graphprod.constructions import cycle_graph, theta
from graphprod.homology import chain_complex_of_product, chain_complex_of_regular2, homology_of
from graphprod.sampling import random_graph, random_product_subcomplex


def triangle():
    return Regular2Complex(
        ["a", "b", "c"],
        [("ab", "a", "b"), ("bc", "b", "c"), ("ca", "c", "a")],
        [("t", [("ab", "+"), ("bc", "+"), ("ca", "+")])],
    )


def test_graph_rejects_bad_input():
    with pytest.raises(InvalidComplexError, match="loop"):
        Graph1Complex(["a"], [("e", "a", "a")])
    with pytest.raises(InvalidComplexError, match="not a declared vertex"):
        Graph1Complex(["a"], [("e", "a", "b")])
    with pytest.raises(InvalidComplexError, match="duplicate"):
        Graph1Complex(["a", "a"])
    with pytest.raises(InvalidComplexError, match="duplicate"):
        Graph1Complex(["a", "b"], [("a", "a", "b")])


def test_face_boundary_validation():
    vs = ["a", "b", "c"]
    es = [("ab", "a", "b"), ("bc", "b", "c"), ("ca", "c", "a")]
    with pytest.raises(InvalidComplexError, match="closed edge walk"):
        Regular2Complex(vs, es, [("t", [("ab", 1), ("bc", -1), ("ca", 1)])])
    with pytest.raises(InvalidComplexError, match="missing edge"):
        Regular2Complex(vs, es, [("t", [("ab", 1), ("zz", 1)])])
    with pytest.raises(InvalidComplexError, match="length"):
        Regular2Complex(vs, es, [("t", [("ab", 1)])])
    with pytest.raises(InvalidComplexError, match="direction"):
        Regular2Complex(vs, es, [("t", [("ab", "x"), ("bc", 1), ("ca", 1)])])
    # a bigon on two parallel edges is fine
    Regular2Complex(["a", "b"], [("p", "a", "b"), ("q", "a", "b")], [("f", [("p", 1), ("q", -1)])])


def test_repeated_vertex_in_boundary_is_rejected():
    vs = ["o", "x", "y", "z", "w"]
    es = [("ox", "o", "x"), ("xy", "x", "y"), ("yo", "y", "o"),
          ("oz", "o", "z"), ("zw", "z", "w"), ("wo", "w", "o")]
    bd = [("ox", 1), ("xy", 1), ("yo", 1), ("oz", 1), ("zw", 1), ("wo", 1)]
    with pytest.raises(InvalidComplexError, match="repeats a vertex"):
        Regular2Complex(vs, es, [("f", bd)])


def test_product_cells_and_counts():
    P = ProductComplex([theta(3), cycle_graph(4)])
    assert P.count_cells(0) == 2 * 4
    assert P.count_cells(1) == 3 * 4 + 2 * 4
    assert P.count_cells(2) == 3 * 4
    assert sum(1 for _ in P.cells_of_dim(2)) == 12
    assert P.faces(("m1", "e0")) == {("s", "e0"), ("n", "e0"), ("m1", "v0"), ("m1", "v1"),
                                     ("s", "v0"), ("s", "v1"), ("n", "v0"), ("n", "v1")}
    with pytest.raises(InvalidComplexError):
        P.check_cell(("m9", "e0"))


def test_subcomplex_must_be_face_closed():
    P = ProductComplex([theta(2), theta(2)])
    with pytest.raises(InvalidComplexError, match="not face-closed"):
        ProductSubcomplex(P, [("m1", "m1")])
    sub = closure(P, [("m1", "m1")])
    assert sub.counts() == (4, 4, 1)


@given(st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_boundary_squares_to_zero(seed):
    rng = random.Random(seed)
    M = random_product_subcomplex(rng, factors=rng.randint(1, 3), max_vertices=4)
    c = chain_complex_of_product(M)
    assert c.check_dd() is None
    assert c.euler_characteristic() == M.euler_characteristic()


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_regular2_conversion_preserves_homology(seed):
    rng = random.Random(seed)
    M = random_product_subcomplex(rng, factors=2, max_vertices=4)
    K = to_regular2(M)
    assert chain_complex_of_regular2(K).check_dd() is None
    assert homology_of(K) == homology_of(M)


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_json_round_trip(seed):
    rng = random.Random(seed)
    M = random_product_subcomplex(rng, factors=2, max_vertices=4)
    assert from_json(M.to_json()) == M
    K = to_regular2(M)
    assert from_json(K.to_json()) == K
    g = random_graph(rng)
    assert from_json(g.to_json()) == g
    assert from_json(M.parent.to_json()) == M.parent


def test_from_json_errors():
    with pytest.raises(InvalidComplexError, match="unknown kind"):
        from_json({"kind": "blob"})
    with pytest.raises(InvalidComplexError, match="missing field"):
        from_json({"kind": "regular2", "vertices": ["a"], "edges": [{"id": "e"}]})
    with pytest.raises(InvalidComplexError, match="factors"):
        from_json({"kind": "product-subcomplex"})


def test_subdivision_keeps_homology():
    g = theta(3)
    h = subdivide_edge(g, "m2")
    assert len(h.vertices) == 3 and len(h.edges) == 4
    assert homology_of(h) == homology_of(g)
    M = ProductComplex([theta(2), theta(2)]).full()
    S = subdivide_product_edge(M, 0, "m1")
    assert homology_of(S).betti == homology_of(M).betti
    with pytest.raises(KeyError):
        subdivide_edge(g, "zz")


def test_wedge():
    w = wedge(cycle_graph(3), "v0", cycle_graph(4), "v0", prefix="b")
    assert len(w.vertices) == 6 and len(w.edges) == 7
    assert homology_of(w).betti == (1, 2)
    with pytest.raises(KeyError):
        wedge(cycle_graph(3), "zz", cycle_graph(3), "v0")


def test_cross_and_top_span():
    a = ProductComplex([cycle_graph(3)]).full()
    T = cross(a, a)
    assert T.counts() == (9, 18, 9)
    assert homology_of(T).betti == (1, 2, 1)
    assert top_cell_span(T, 2) == T
    # the 1-cells span everything but the open squares
    assert top_cell_span(T, 1).counts() == (9, 18, 0)


def test_proper_cells():
    ok, w = proper_cells_check(triangle())
    assert ok and w is None
    assert proper_cells_check(theta(4)) == (True, None)
