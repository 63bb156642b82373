"""Generators for the explicit complexes: theta-curves, wheels, surfaces in
products of graphs, cones, the dunce hat and Bing's house, and the three-torus
obstruction in the canonical torus model.

Every surface generator returns a :class:`NamedConstruction` whose ``complex``
is a :class:`ProductSubcomplex` of a product of two graphs, with an
``expected`` record where the values are known in advance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .complexes import (
    Graph1Complex,
    ProductComplex,
    ProductSubcomplex,
    Regular2Complex,
    closure,
    cross,
)
from .homology import HomologySummary, binomial_profile, canonical_torus_complex, homology


@dataclass
class NamedConstruction:
    name: str
    params: list[int]
    complex: object
    expected: dict | None = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "params": list(self.params),
                "complex": self.complex.to_json(), "expected": self.expected}


# -- graphs ------------------------------------------------------------------

def theta(n: int) -> Graph1Complex:
    """Poles ``s``, ``n`` (south, north) joined by meridians ``m0 .. m{n-1}``, all ``s -> n``."""
    if n < 1:
        raise ValueError("theta needs at least one meridian")
    return Graph1Complex(["s", "n"], [(f"m{j}", "s", "n") for j in range(n)])


def meridian(j: int, n: int) -> str:
    return f"m{j % n}"


def cycle_graph(n: int, prefix: str = "") -> Graph1Complex:
    """``n``-cycle with vertices ``{prefix}v{i}`` and edges ``{prefix}e{i}: v_i -> v_{i+1}``."""
    if n < 2:
        raise ValueError("a regular cycle needs at least 2 edges")
    return Graph1Complex([f"{prefix}v{i}" for i in range(n)],
                         [(f"{prefix}e{i}", f"{prefix}v{i}", f"{prefix}v{(i + 1) % n}")
                          for i in range(n)])


def path_graph(n: int, prefix: str = "") -> Graph1Complex:
    """Path with ``n`` edges."""
    return Graph1Complex([f"{prefix}v{i}" for i in range(n + 1)],
                         [(f"{prefix}e{i}", f"{prefix}v{i}", f"{prefix}v{i + 1}") for i in range(n)])


def wheel(n: int) -> Graph1Complex:
    """Hub ``o``, rim ``v0..v{n-1}``, spokes ``s{i}: o -> v_i``, rim edges ``r{i}: v_i -> v_{i+1}``."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    vs = ["o"] + [f"v{i}" for i in range(n)]
    es = [(f"s{i}", "o", f"v{i}") for i in range(n)]
    es += [(f"r{i}", f"v{i}", f"v{(i + 1) % n}") for i in range(n)]
    return Graph1Complex(vs, es)


def wheel_tilde(n: int) -> Graph1Complex:
    """:func:`wheel` plus an edge ``x: v1 -> v0`` closing the bigon ``r0 ∪ x``."""
    w = wheel(n)
    return Graph1Complex(w.vertices, [(e, t, h) for e, (t, h) in w.edges.items()] + [("x", "v1", "v0")])


# -- orientable surfaces in theta products -----------------------------------

def _theta_square(parent, sigma_edges, tau_edges):
    return closure(parent, [(a, b) for a in sigma_edges for b in tau_edges])


def m0_surface(m: int) -> NamedConstruction:
    """``⋃_j μ_j × (μ_j ∪ μ_{j+1})`` in ``Θ_{m+1} × Θ_{m+1}``: genus ``m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    t = theta(m + 1)
    parent = ProductComplex([t, t])
    squares = set()
    for j in range(m + 1):
        squares.add((meridian(j, m + 1), meridian(j, m + 1)))
        squares.add((meridian(j, m + 1), meridian(j + 1, m + 1)))
    sub = closure(parent, squares)
    return NamedConstruction("m0-surface", [m], sub,
                             {"closed_surface": True, "orientable": True, "genus": m,
                              "euler": 2 - 2 * m, "rank_h1": 2 * m, "squares": len(squares)})


def involution_surface(m: int) -> NamedConstruction:
    """``μ_0×μ_0 ∪ ⋃_{i<m} (μ_i×μ_{i+1} ∪ μ_{i+1}×μ_i) ∪ μ_m×μ_m``: swap-invariant, genus ``m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    t = theta(m + 1)
    parent = ProductComplex([t, t])
    mu = lambda j: meridian(j, m + 1)  # noqa: E731
    squares = {(mu(0), mu(0)), (mu(m), mu(m))}
    for i in range(m):
        squares.add((mu(i), mu(i + 1)))
        squares.add((mu(i + 1), mu(i)))
    return NamedConstruction("involution-surface", [m], closure(parent, squares),
                             {"closed_surface": True, "orientable": True, "genus": m,
                              "euler": 2 - 2 * m, "rank_h1": 2 * m, "swap_invariant": True})


def swap_invariance_check(M: ProductSubcomplex) -> bool:
    """``(σ, τ) ∈ M ⇔ (τ, σ) ∈ M`` for a subcomplex of ``P × P``."""
    f = M.parent.factors
    if len(f) != 2 or f[0] != f[1]:
        raise ValueError("swap invariance needs two equal factors")
    return all((b, a) in M.cells for a, b in M.cells)


def _closed_cell(g: Graph1Complex, c: str) -> set[str]:
    return {c} | set(g.edges[c]) if c in g.edges else {c}


def diagonal_disjointness_check(M: ProductSubcomplex) -> bool:
    """True iff no cell ``σ_1 × σ_2`` of ``M`` has ``σ_1 ∩ σ_2 ≠ ∅``."""
    f = M.parent.factors
    if len(f) != 2 or f[0] != f[1]:
        raise ValueError("diagonal check needs two equal factors")
    g = f[0]
    return all(not (_closed_cell(g, a) & _closed_cell(g, b)) for a, b in M.cells)


# -- non-orientable surfaces ---------------------------------------------------

def _wheel_triangle(i: int, n: int) -> list[str]:
    return [f"s{i}", f"r{i}", f"s{(i + 1) % n}"]


def _cauty_even_squares(n: int) -> set[tuple[str, str]]:
    squares = set()
    for i in range(n):
        S = _wheel_triangle(i, n)
        squares |= {(a, b) for a in S for b in S}
    for i in range(n):
        squares.discard((f"s{i}", f"s{i}"))
    return squares


def cauty_even(n: int) -> NamedConstruction:
    """``⋃ (S_i × S_i) \\ ⋃ open(ov_i × ov_i)`` in ``P_n × P_n``, ``n`` odd.

    ``S_i`` is the triangle ``o v_i v_{i+1}`` of the wheel.  Closed,
    non-orientable, ``χ = 1 - 2n``.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("cauty_even needs odd n >= 3")
    w = wheel(n)
    parent = ProductComplex([w, w])
    sub = closure(parent, _cauty_even_squares(n))
    return NamedConstruction("cauty-even", [n], sub,
                             {"closed_surface": True, "orientable": False, "euler": 1 - 2 * n,
                              "rank_h1": 2 * n, "genus": 1 + 2 * n})


def cauty_even_plus(n: int) -> NamedConstruction:
    """Even target rank ``2n`` (``n`` even >= 4) in ``P̃_{n-1} × P̃_{n-1}``.

    Glues the torus ``S × S`` over the bigon ``S = r0 ∪ x`` to
    ``cauty_even(n - 1)`` along the shared square ``r0 × r0``, whose interior
    is removed: a connected sum with a torus.
    """
    if n < 4 or n % 2:
        raise ValueError("cauty_even_plus needs even n >= 4")
    w = wheel_tilde(n - 1)
    parent = ProductComplex([w, w])
    squares = _cauty_even_squares(n - 1)
    squares |= {(a, b) for a in ("r0", "x") for b in ("r0", "x")}
    squares.discard(("r0", "r0"))
    sub = closure(parent, squares)
    chi = -2 * (n - 1) - 1
    return NamedConstruction("cauty-even-plus", [n], sub,
                             {"closed_surface": True, "orientable": False, "euler": chi,
                              "rank_h1": 2 * n, "genus": 2 - chi})


def cauty_odd(k: int, orientation: str = "mixed") -> NamedConstruction:
    """Union of two tori ``S_1 × S_2`` and ``S_1' × S_2'`` minus the ``k`` shared squares.

    ``S_1`` and ``S_1'`` share the single-edge arcs ``A_1..A_k``; ``S_1'``
    runs through ``A_1`` the same way as ``S_1`` and through ``A_2`` the
    opposite way (``orientation="mixed"``), or the same way through every
    arc (``orientation="same"``, an orientable control).  ``P_2`` is the
    theta-curve ``τ ∪ τ_1 ∪ τ_1'``.
    """
    if k < 2:
        raise ValueError("cauty_odd needs k >= 2")
    if orientation not in ("mixed", "same"):
        raise ValueError("orientation must be 'mixed' or 'same'")
    vs = [f"a{j}" for j in range(1, k + 1)] + [f"b{j}" for j in range(1, k + 1)]
    edges = [(f"A{j}", f"a{j}", f"b{j}") for j in range(1, k + 1)]
    # S1: a1 -A1-> b1 -p1-> a2 -A2-> b2 ... bk -pk-> a1
    edges += [(f"p{j}", f"b{j}", f"a{j % k + 1}") for j in range(1, k + 1)]
    S1 = [f"A{j}" for j in range(1, k + 1)] + [f"p{j}" for j in range(1, k + 1)]
    if orientation == "mixed":
        # S1': a1 -A1-> b1 -q1-> b2 -A2(rev)-> a2 -q2-> a3 -A3-> b3 -q3-> a4 ... bk -qk-> a1
        edges.append(("q1", "b1", "b2"))
        edges.append(("q2", "a2", "a3" if k > 2 else "a1"))
        edges += [(f"q{j}", f"b{j}", f"a{j % k + 1}") for j in range(3, k + 1)]
    else:
        edges += [(f"q{j}", f"b{j}", f"a{j % k + 1}") for j in range(1, k + 1)]
    S1p = [f"A{j}" for j in range(1, k + 1)] + [f"q{j}" for j in range(1, k + 1)]
    P1 = Graph1Complex(vs, edges)
    P2 = Graph1Complex(["w0", "w1"], [("t", "w0", "w1"), ("t1", "w1", "w0"), ("t1p", "w1", "w0")])
    S2, S2p = ["t", "t1"], ["t", "t1p"]
    parent = ProductComplex([P1, P2])
    squares = {(a, b) for a in S1 for b in S2} | {(a, b) for a in S1p for b in S2p}
    for j in range(1, k + 1):
        squares.discard((f"A{j}", "t"))
    sub = closure(parent, squares)
    if orientation == "mixed":
        expected = {"closed_surface": True, "orientable": False, "euler": -2 * k,
                    "rank_h1": 2 * k + 1, "torsion_h1": [2], "genus": 2 + 2 * k}
    else:
        expected = {"closed_surface": True, "orientable": True, "euler": -2 * k,
                    "rank_h1": 2 * k + 2, "genus": k + 1}
    return NamedConstruction("cauty-odd", [k], sub, expected, {"orientation": orientation})


def ladder_graph(n: int) -> Graph1Complex:
    """Two ``n``-cycles (bottom ``b_j``, top ``t_j``) joined by rungs ``i{j}: b_j -> t_j``."""
    vs = [f"b{j}" for j in range(n)] + [f"t{j}" for j in range(n)]
    es = [(f"a{j}", f"b{j}", f"b{(j + 1) % n}") for j in range(n)]
    es += [(f"c{j}", f"t{j}", f"t{(j + 1) % n}") for j in range(n)]
    es += [(f"i{j}", f"b{j}", f"t{j}") for j in range(n)]
    return Graph1Complex(vs, es)


def ladder_surface(n: int) -> NamedConstruction:
    """``⋃ S_j × S_{j+2}`` minus the open squares ``I_{j+1} × I_{j+3}``.

    ``S_j = I_j ∪ A_j × {0, 1} ∪ I_{j+1}`` is a 4-cycle of the ladder graph.
    """
    if n < 4:
        raise ValueError("ladder_surface needs n >= 4")
    P = ladder_graph(n)
    parent = ProductComplex([P, P])

    def S(j):
        j %= n
        return [f"i{j}", f"a{j}", f"c{j}", f"i{(j + 1) % n}"]

    squares = set()
    for j in range(n):
        squares |= {(a, b) for a in S(j) for b in S(j + 2)}
    for j in range(n):
        squares.discard((f"i{(j + 1) % n}", f"i{(j + 3) % n}"))
    return NamedConstruction("ladder-surface", [n], closure(parent, squares),
                             {"closed_surface": True, "euler": -2 * n,
                              "diagonal_disjoint": True, "swap_invariant": True,
                              "projections_surjective": True})


example_5b4 = ladder_surface
example_5b4_graph = ladder_graph


# -- 2-complexes that are not surfaces -----------------------------------------

def cone_over_graph(g: Graph1Complex, apex: str = "apex") -> Regular2Complex:
    """Apex joined to every vertex; one triangle per edge ``u -> v``: ``(a→u, u→v, -(a→v))``."""
    if apex in g.vertices or apex in g.edges:
        raise ValueError(f"apex id {apex!r} clashes with the graph")
    vs = list(g.vertices) + [apex]
    es = [(e, t, h) for e, (t, h) in g.edges.items()]
    es += [(f"c:{v}", apex, v) for v in g.vertices]
    fs = [(f"f:{e}", [(f"c:{t}", 1), (e, 1), (f"c:{h}", -1)]) for e, (t, h) in g.edges.items()]
    return Regular2Complex(vs, es, fs)


def simplicial_complex(triangles, prefix: str = "") -> Regular2Complex:
    """Regular 2-complex of a pure simplicial 2-complex given by vertex triples."""
    tris = sorted({tuple(sorted(t)) for t in triangles})
    verts = sorted({v for t in tris for v in t})
    edges = sorted({(a, b) for t in tris for a, b in itertools.combinations(t, 2)})
    name = lambda v: f"{prefix}{v}"  # noqa: E731
    ename = lambda a, b: f"{prefix}{a}-{b}"  # noqa: E731
    fs = []
    for a, b, c in tris:
        fs.append((f"{prefix}{a}-{b}-{c}", [(ename(a, b), 1), (ename(b, c), 1), (ename(a, c), -1)]))
    return Regular2Complex([name(v) for v in verts],
                           [(ename(a, b), name(a), name(b)) for a, b in edges], fs)


DUNCE_HAT_TRIANGLES = [
    (1, 2, 4), (1, 2, 7), (1, 2, 8), (1, 3, 4), (1, 3, 5), (1, 3, 6), (1, 5, 6),
    (1, 7, 8), (2, 3, 5), (2, 3, 7), (2, 3, 8), (2, 4, 5), (3, 4, 8), (3, 6, 7),
    (4, 5, 6), (4, 6, 8), (6, 7, 8),
]


def dunce_hat() -> Regular2Complex:
    """8-vertex, 17-triangle triangulation of the dunce hat."""
    return simplicial_complex(DUNCE_HAT_TRIANGLES, prefix="d")


def _cube_complex(squares) -> Regular2Complex:
    """Regular 2-complex from unit squares in Z^3.

    A square is ``(corner, axis_a, axis_b)`` with ``axis_a < axis_b``.
    """
    def vid(p):
        return "p%d_%d_%d" % p

    def shift(p, ax):
        q = list(p)
        q[ax] += 1
        return tuple(q)

    verts, edges, faces_ = set(), {}, []
    for p, a, b in sorted(set(squares)):
        c1, c2, c3 = shift(p, a), shift(shift(p, a), b), shift(p, b)
        for q in (p, c1, c2, c3):
            verts.add(q)
        sides = [(p, a), (c1, b), (c3, a), (p, b)]
        for q, ax in sides:
            edges[(q, ax)] = (f"e{vid(q)}_{ax}", vid(q), vid(shift(q, ax)))
        faces_.append((f"f{vid(p)}_{a}{b}", [(edges[(p, a)][0], 1), (edges[(c1, b)][0], 1),
                                            (edges[(c3, a)][0], -1), (edges[(p, b)][0], -1)]))
    return Regular2Complex([vid(q) for q in sorted(verts)], sorted(edges.values()), faces_)


def bing_house() -> Regular2Complex:
    """Bing's house with two rooms as a complex of unit squares in ``[0,5]² × [0,2]``.

    A floor at height 1 splits the box.  A square tube through the lower
    room leads from the bottom into the upper room and another through the
    upper room leads from the top into the lower room; each tube is tied to
    the outer wall by a single square.
    """
    X = Y = 5
    sq = set()
    holes = {((1, 1, 0), 0, 1), ((1, 1, 1), 0, 1), ((3, 3, 2), 0, 1), ((3, 3, 1), 0, 1)}
    for x in range(X):
        for y in range(Y):
            for z in (0, 1, 2):
                sq.add(((x, y, z), 0, 1))
    for z in (0, 1):
        for x in range(X):
            sq.add(((x, 0, z), 0, 2))
            sq.add(((x, Y, z), 0, 2))
        for y in range(Y):
            sq.add(((0, y, z), 1, 2))
            sq.add(((X, y, z), 1, 2))
    sq -= holes
    # lower tube over [1,2]^2, z in [0,1]; upper tube over [3,4]^2, z in [1,2]
    for (x0, y0, z) in ((1, 1, 0), (3, 3, 1)):
        sq |= {((x0, y0, z), 0, 2), ((x0, y0 + 1, z), 0, 2),
               ((x0, y0, z), 1, 2), ((x0 + 1, y0, z), 1, 2)}
    # walls tying each tube to the outer wall
    sq.add(((1, 0, 0), 1, 2))
    sq.add(((4, 4, 1), 1, 2))
    return _cube_complex(sq)


def triangulated_disc() -> Regular2Complex:
    """Hexagonal disc: six triangles around a centre."""
    tris = [(0, i, i % 6 + 1) for i in range(1, 7)]
    return simplicial_complex(tris, prefix="h")


def triangulated_grid(n: int = 3) -> Regular2Complex:
    """``n × n`` grid of unit squares, each split along a diagonal."""
    idx = lambda i, j: i * (n + 1) + j  # noqa: E731
    tris = []
    for i in range(n):
        for j in range(n):
            a, b, c, d = idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)
            tris += [(a, b, c), (a, c, d)]
    return simplicial_complex(tris, prefix="g")


# -- canonical torus model -------------------------------------------------------

@dataclass
class TripleTorusReport:
    n: int
    tori: list[frozenset]
    profiles: dict
    pairwise: dict
    triple: tuple[int, ...]
    hypotheses_hold: bool

    def to_json(self) -> dict:
        return {"n": self.n, "tori": [sorted(t) for t in self.tori],
                "profiles": {k: list(v) for k, v in self.profiles.items()},
                "pairwise": {k: list(v) for k, v in self.pairwise.items()},
                "triple": list(self.triple), "hypotheses_hold": self.hypotheses_hold}


def _downsets(index_sets) -> set[frozenset]:
    out = set()
    for I in index_sets:
        I = sorted(I)
        for d in range(len(I) + 1):
            out |= {frozenset(c) for c in itertools.combinations(I, d)}
    return out


def triple_torus_index_sets(n: int) -> list[frozenset]:
    full = set(range(1, n + 2))
    return [frozenset(full - {1}), frozenset(full - {2}), frozenset(full - {3})]


def triple_torus_q(n: int) -> NamedConstruction:
    """``Q = T_1 ∪ T_2 ∪ T_3`` in the canonical model of ``T^{n+1}`` plus a hypothesis report.

    ``T_i = e_{I_i}`` with ``I_i = {1..n+1} \\ {i}``; closed cells are subsets.
    """
    if n < 2:
        raise ValueError("triple torus needs n >= 2")
    k = n + 1
    I = triple_torus_index_sets(n)

    def betti(cells) -> tuple[int, ...]:
        h: HomologySummary = homology(canonical_torus_complex(k, cells))
        assert not any(h.torsion)
        return h.betti

    profiles = {f"T{i + 1}": betti(_downsets([I[i]])) for i in range(3)}
    pairwise = {f"T{a + 1}&T{b + 1}": betti(_downsets([I[a] & I[b]]))
                for a, b in itertools.combinations(range(3), 2)}
    triple = betti(_downsets([I[0] & I[1] & I[2]]))
    ok = (all(p == binomial_profile(n) for p in profiles.values())
          and all(p == binomial_profile(n - 1) for p in pairwise.values())
          and triple == binomial_profile(n - 2) and triple != binomial_profile(n - 1))
    cells = _downsets(I)
    report = TripleTorusReport(n, I, profiles, pairwise, triple, ok)
    return NamedConstruction("triple-torus-q", [n], SkeletonModel(k, cells),
                             {"profiles": [comb(n, i) for i in range(n + 1)]},
                             {"report": report})


@dataclass
class SkeletonModel:
    """A subcomplex of the canonical CW structure on ``T^k`` (cells = index sets)."""

    k: int
    cells: set[frozenset]
    kind: str = "torus-skeleton-model"

    def chain_complex(self):
        return canonical_torus_complex(self.k, self.cells)

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": self.k,
                "cells": sorted((sorted(c) for c in self.cells), key=lambda c: (len(c), c))}


def torus_regular_model(k: int, index_sets, cycle_length: int = 3) -> ProductSubcomplex:
    """The union of the ``e_J`` realized in a product of ``k`` cycles.

    ``e_J`` is the product of the cycles in positions ``J`` with the base
    vertex elsewhere.  Used as an independent regular model.
    """
    C = cycle_graph(cycle_length)
    parent = ProductComplex([C] * k)
    out = set()
    for J in index_sets:
        pools = [C.cells() if (i + 1) in J else ["v0"] for i in range(k)]
        out |= set(itertools.product(*pools))
    return ProductSubcomplex(parent, out)


# -- product gallery ---------------------------------------------------------------

def circle_torus(a: int = 3, b: int = 3) -> NamedConstruction:
    A, B = cycle_graph(a, "x"), cycle_graph(b, "y")
    return NamedConstruction("torus", [a, b], ProductComplex([A, B]).full(),
                             {"closed_surface": True, "orientable": True, "genus": 1,
                              "euler": 0, "rank_h1": 2})


def circle_times(sub: ProductSubcomplex, length: int = 3) -> ProductSubcomplex:
    """``S^1 × sub`` with the circle as the new first factor."""
    return cross(ProductComplex([cycle_graph(length, "z")]).full(), sub)


def gallery() -> list[NamedConstruction]:
    """Product-of-graphs complexes used by property suites."""
    out = [m0_surface(m) for m in range(1, 5)]
    out += [involution_surface(m) for m in range(1, 5)]
    out += [cauty_odd(k) for k in (2, 3)] + [cauty_odd(2, "same")]
    out += [cauty_even(3), cauty_even(5), cauty_even_plus(4)]
    out += [ladder_surface(4), ladder_surface(5)]
    out.append(circle_torus(3, 4))
    t3 = ProductComplex([cycle_graph(3, "x"), cycle_graph(3, "y"), cycle_graph(4, "z")]).full()
    out.append(NamedConstruction("3-torus", [3, 3, 4], t3, {"betti": [1, 3, 3, 1]}))
    out.append(NamedConstruction("circle-x-m0", [2], circle_times(m0_surface(2).complex)))
    t2 = ProductComplex([cycle_graph(3, "x"), cycle_graph(3, "y")]).full()
    out.append(NamedConstruction("torus-x-m0", [2], cross(t2, m0_surface(2).complex)))
    th = ProductComplex([theta(3), theta(3)]).full()
    out.append(NamedConstruction("theta3-x-theta3", [3, 3], th))
    return out


REGISTRY: dict[str, Callable[..., object]] = {
    "theta": lambda n=3: NamedConstruction("theta", [n], theta(n),
                                           {"betti": [1, n - 1]}),
    "wheel": lambda n=3: NamedConstruction("wheel", [n], wheel(n), {"betti": [1, n]}),
    "wheel-tilde": lambda n=3: NamedConstruction("wheel-tilde", [n], wheel_tilde(n),
                                                 {"betti": [1, n + 1]}),
    "m0-surface": lambda m=2: m0_surface(m),
    "involution-surface": lambda m=2: involution_surface(m),
    "cauty-odd": lambda k=2: cauty_odd(k),
    "cauty-odd-same": lambda k=2: cauty_odd(k, "same"),
    "cauty-even": lambda n=3: cauty_even(n),
    "cauty-even-plus": lambda n=4: cauty_even_plus(n),
    "ladder-surface": lambda n=4: ladder_surface(n),
    "cone-theta": lambda n=3: NamedConstruction("cone-theta", [n], cone_over_graph(theta(n)),
                                                {"betti": [1, 0, 0]}),
    "dunce-hat": lambda: NamedConstruction("dunce-hat", [], dunce_hat(), {"betti": [1, 0, 0]}),
    "bing-house": lambda: NamedConstruction("bing-house", [], bing_house(), {"betti": [1, 0, 0]}),
    "torus": lambda a=3, b=3: circle_torus(a, b),
    "triple-torus-q": lambda n=2: triple_torus_q(n),
    "disc": lambda: NamedConstruction("disc", [], triangulated_disc(), {"betti": [1, 0, 0]}),
    "grid": lambda n=3: NamedConstruction("grid", [n], triangulated_grid(n), {"betti": [1, 0, 0]}),
}
