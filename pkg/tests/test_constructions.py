import pytest

from graphprod.complexes import ProductComplex
from graphprod.constructions import (
    REGISTRY,
    bing_house,
    cauty_even,
    cauty_even_plus,
    cauty_odd,
    cone_over_graph,
    diagonal_disjointness_check,
    dunce_hat,
    ladder_surface,
    gallery,
    involution_surface,
    m0_surface,
    swap_invariance_check,
    theta,
    triangulated_disc,
    triangulated_grid,
    triple_torus_q,
    wheel,
    wheel_tilde,
)
from graphprod.homology import binomial_profile, homology_of, surface_report
from graphprod.projection import project

SURFACE_KEYS = ("orientable", "genus", "rank_h1")


def surfaces():
    return [c for c in gallery() if c.expected and c.expected.get("closed_surface")]


@pytest.mark.parametrize("c", surfaces(), ids=lambda c: f"{c.name}{c.params}")
def test_gallery_surfaces_match_expectations(c):
    r = surface_report(c.complex)
    assert r.is_closed_surface and r.connected
    assert r.chi == c.expected["euler"]
    for key in SURFACE_KEYS:
        if key in c.expected:
            assert getattr(r, key) == c.expected[key], key
    if "torsion_h1" in c.expected:
        assert list(r.homology.torsion[1]) == c.expected["torsion_h1"]


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_m0_and_involution_surfaces(m):
    for c in (m0_surface(m), involution_surface(m)):
        assert c.complex.counts() == (4, 4 * (m + 1), 2 * (m + 1))
        r = surface_report(c.complex)
        assert r.orientable and r.genus == m
    assert swap_invariance_check(involution_surface(m).complex)
    assert swap_invariance_check(m0_surface(m).complex) == (m == 1)


def test_cauty_odd_torsion_and_control():
    h = homology_of(cauty_odd(3).complex)
    assert h.betti == (1, 7, 0) and h.torsion[1] == (2,)
    r = surface_report(cauty_odd(3, "same").complex)
    assert r.orientable and r.rank_h1 == 8
    with pytest.raises(ValueError):
        cauty_odd(2, "sideways")


@pytest.mark.parametrize("n", [3, 5, 7])
def test_cauty_even_ranks(n):
    r = surface_report(cauty_even(n).complex)
    assert not r.orientable and r.rank_h1 == 2 * n and r.chi == 1 - 2 * n


@pytest.mark.parametrize("n", [4, 6])
def test_cauty_even_plus_ranks(n):
    r = surface_report(cauty_even_plus(n).complex)
    assert not r.orientable and r.rank_h1 == 2 * n


def test_parameter_validation():
    for bad in (lambda: cauty_even(4), lambda: cauty_even_plus(5), lambda: m0_surface(0),
                lambda: ladder_surface(3), lambda: theta(0), lambda: wheel(2), lambda: triple_torus_q(1)):
        with pytest.raises(ValueError):
            bad()


def test_ladder_surface_at_n4():
    M = ladder_surface(4).complex
    r = surface_report(M)
    assert r.is_closed_surface and r.orientable and r.chi == -8
    assert swap_invariance_check(M)
    assert diagonal_disjointness_check(M)
    P = M.parent.factors[0]
    for i in (0, 1):
        assert len(project(M, [i]).cells) == len(P.cells())


@pytest.mark.parametrize("n", [5, 6, 7])
def test_ladder_surface_beyond_n4(n):
    # the swap sends S_j x S_{j+2} to S_{j+2} x S_j, which is only a piece
    # of the union when j + 4 = j mod n
    M = ladder_surface(n).complex
    r = surface_report(M)
    assert r.is_closed_surface and r.chi == -2 * n
    assert diagonal_disjointness_check(M)
    assert not swap_invariance_check(M)
    assert r.orientable == (n % 2 == 0)


def test_swap_and_diagonal_need_equal_factors():
    M = ProductComplex([theta(2), theta(3)]).full()
    with pytest.raises(ValueError):
        swap_invariance_check(M)
    with pytest.raises(ValueError):
        diagonal_disjointness_check(M)
    assert not diagonal_disjointness_check(ProductComplex([theta(2), theta(2)]).full())


def test_graph_builders():
    assert homology_of(wheel_tilde(4)).betti == (1, 5)
    assert homology_of(cone_over_graph(theta(4))).reduced_trivial()
    with pytest.raises(ValueError):
        cone_over_graph(theta(2), apex="s")


@pytest.mark.parametrize("k", [dunce_hat, bing_house, triangulated_disc, lambda: triangulated_grid(3)])
def test_contractible_fixtures(k):
    assert homology_of(k()).reduced_trivial()


def test_fixture_sizes():
    assert dunce_hat().counts()[2] == 17
    assert triangulated_disc().euler_characteristic() == 1
    assert triangulated_grid(2).counts() == (9, 16, 8)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_triple_torus_report(n):
    rep = triple_torus_q(n).notes["report"]
    assert rep.hypotheses_hold
    assert all(p == binomial_profile(n) for p in rep.profiles.values())
    assert rep.triple == binomial_profile(n - 2)
    h = homology_of(triple_torus_q(n).complex.chain_complex())
    assert not any(h.torsion)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_registry_entries_build_and_serialize(name):
    c = REGISTRY[name]()
    doc = c.to_json()
    assert doc["name"] == c.name
    if c.expected and "betti" in c.expected:
        x = c.complex
        h = homology_of(x.chain_complex() if hasattr(x, "chain_complex") else x)
        assert list(h.betti) == c.expected["betti"]
