import random

import pytest
from hypothesis import given, settings, strategies as st

from graphprod import oracles
from graphprod.complexes import InvalidComplexError, ProductComplex, cross
from graphprod.constructions import (
    cycle_graph,
    dunce_hat,
    simplicial_complex,
    theta,
    wheel,
)
from graphprod.homology import (
    ChainComplex,
    ChainComplexError,
    canonical_torus_complex,
    chain_complex_of_product,
    homology,
    homology_of,
    kunneth_betti,
    orientability,
    surface_report,
    torus_skeleton_homology,
)
from graphprod.sampling import random_product_subcomplex

# six-vertex projective plane
RP2 = [(1, 2, 4), (2, 3, 4), (3, 1, 5), (1, 4, 5), (4, 5, 6),
       (2, 5, 6), (3, 2, 5), (1, 6, 3), (1, 2, 6), (3, 4, 6)]
# seven-vertex torus
TORUS7 = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + \
         [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]


def test_graphs():
    assert homology_of(theta(4)).betti == (1, 3)
    assert homology_of(wheel(5)).betti == (1, 5)
    assert homology_of(cycle_graph(6)).euler == 0


def test_projective_plane_has_torsion():
    K = simplicial_complex(RP2)
    h = homology_of(K)
    assert h.betti == (1, 0, 0)
    assert h.torsion[1] == (2,)
    assert h.euler == 1
    r = surface_report(K)
    assert r.is_closed_surface and not r.orientable and r.genus == 1


def test_seven_vertex_torus():
    r = surface_report(simplicial_complex(TORUS7))
    assert r.is_closed_surface and r.orientable and r.genus == 1 and r.chi == 0
    assert r.homology.betti == (1, 2, 1)


def test_dunce_hat_is_acyclic_but_not_a_surface():
    K = dunce_hat()
    assert homology_of(K).reduced_trivial()
    assert not surface_report(K).is_closed_surface
    with pytest.raises(InvalidComplexError):
        orientability(K)


def test_orientability_rejects_graphs_and_disconnected():
    with pytest.raises(TypeError):
        orientability(theta(3))
    two = simplicial_complex(TORUS7 + [(a + 10, b + 10, c + 10) for a, b, c in TORUS7])
    with pytest.raises(InvalidComplexError):
        orientability(two)


def test_product_of_thetas_kunneth():
    M = ProductComplex([theta(3), theta(4)]).full()
    h = homology_of(M)
    assert list(h.betti) == kunneth_betti([1, 2], [1, 3])
    assert not any(h.torsion)


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_kunneth_on_random_products(seed):
    rng = random.Random(seed)
    a = random_product_subcomplex(rng, factors=1, max_vertices=5)
    b = random_product_subcomplex(rng, factors=1, max_vertices=5)
    ha, hb = homology_of(a).betti, homology_of(b).betti
    assert list(homology_of(cross(a, b)).betti) == kunneth_betti(ha, hb)


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_betti_match_rank_over_primes(seed):
    rng = random.Random(seed)
    M = random_product_subcomplex(rng, factors=rng.randint(2, 3), max_vertices=4)
    c = chain_complex_of_product(M)
    h = homology(c)
    assert tuple(oracles.betti_mod_p(c, 1_000_003)) == h.betti
    # mod p Betti numbers exceed rational ones exactly where p-torsion sits
    for p in (2, 3):
        extra = [sum(t % p == 0 for t in h.torsion[k]) for k in range(len(h.betti))]
        expect = [b + extra[k] + (extra[k - 1] if k else 0) for k, b in enumerate(h.betti)]
        assert oracles.betti_mod_p(c, p) == expect


@pytest.mark.parametrize("k", [2, 3, 4])
def test_torus_skeleta(k):
    for n in range(k + 1):
        h = torus_skeleton_homology(k, n)
        assert list(h.betti) == oracles.torus_skeleton_expected(k, n)
        assert oracles.torus_skeleton_betti_oracle(k, n) == oracles.torus_skeleton_expected(k, n)


def test_canonical_torus_validation():
    with pytest.raises(ValueError):
        canonical_torus_complex(3, n=4)
    with pytest.raises(ValueError, match="not closed"):
        canonical_torus_complex(3, cells=[frozenset(), frozenset({1, 2})])


def test_chain_complex_validation():
    with pytest.raises(ChainComplexError):
        ChainComplex([1, 1], [])
    with pytest.raises(ChainComplexError):
        ChainComplex([1, 1], [{(3, 0): 1}])
    bad = ChainComplex([1, 1, 1], [{(0, 0): 1}, {(0, 0): 1}])
    with pytest.raises(ChainComplexError, match="boundary of boundary"):
        homology(bad)
