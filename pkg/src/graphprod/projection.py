"""Projections and fibers of top-dimensional subcomplexes of graph products.

Factor indices are 0-based throughout.  ``M`` is assumed pure of dimension
equal to the number of factors, so its top cells are tuples of edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .complexes import Graph1Complex, ProductComplex, ProductSubcomplex, cell_label, closure
from .homology import homology_of
from .verify import pseudo_manifold_check, ramified_manifold_check


class PropertyViolation(AssertionError):
    """A structural identity that must hold failed; ``data`` holds the evidence."""

    def __init__(self, message: str, data: dict | None = None):
        super().__init__(message)
        self.data = data or {}


def _index_set(M: ProductSubcomplex, J: Iterable[int]) -> tuple[int, ...]:
    J = tuple(sorted(set(J)))
    n = M.parent.n
    if not J:
        raise ValueError("index set must be nonempty")
    bad = [j for j in J if not 0 <= j < n]
    if bad:
        raise ValueError(f"factor indices {bad} outside 0..{n - 1}")
    return J


def _complement(M: ProductSubcomplex, J: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(i for i in range(M.parent.n) if i not in J)


def _restrict(cell: tuple, J: tuple[int, ...]) -> tuple:
    return tuple(cell[j] for j in J)


def _merge(n: int, J, sigma, Jc, tau) -> tuple:
    out = [None] * n
    for j, c in zip(J, sigma):
        out[j] = c
    for j, c in zip(Jc, tau):
        out[j] = c
    return tuple(out)


def sub_product(M: ProductSubcomplex, J) -> ProductComplex:
    return ProductComplex([M.parent.factors[j] for j in J])


def project(M: ProductSubcomplex, J) -> ProductSubcomplex:
    """Image of ``M`` under the projection onto the factors in ``J``."""
    J = _index_set(M, J)
    return ProductSubcomplex(sub_product(M, J), {_restrict(c, J) for c in M.cells}, check=False)


def _top_cells(M: ProductSubcomplex) -> list[tuple]:
    p = M.parent
    return sorted(c for c in M.cells if p.dim(c) == p.n)


def _is_top(parent: ProductComplex, cell: tuple) -> bool:
    return parent.dim(cell) == parent.n


def _fiber_sigmas(M: ProductSubcomplex, J: tuple[int, ...], literal: bool) -> dict[tuple, set]:
    """Top ``J``-cells of the fiber over every complementary cell, in one pass."""
    Jc = _complement(M, J)
    K = sub_product(M, J)
    out: dict[tuple, set] = {}
    direct: dict[tuple, set] = {}
    for c in M.cells:
        s, t = _restrict(c, J), _restrict(c, Jc)
        out.setdefault(t, set())
        if _is_top(K, s):
            direct.setdefault(t, set()).add(s)
    if literal or not Jc:
        for t, ss in direct.items():
            out[t] = ss
        return out
    Kc = sub_product(M, Jc)
    for t, ss in direct.items():
        if _is_top(Kc, t):
            for face in Kc.faces(t, proper=False):
                out[face] |= ss
    return out


def fiber_complex(M: ProductSubcomplex, J, tau: tuple, literal: bool = False) -> ProductSubcomplex:
    """``P_J(τ)``: closure of the top ``J``-cells ``σ`` with ``σ × τ`` in ``M``.

    For ``τ`` of lower dimension the fiber is the union of the fibers over
    the top complementary cells having ``τ`` as a face.  ``literal=True``
    filters ``σ × τ ∈ M`` directly instead.
    """
    J = _index_set(M, J)
    Jc = _complement(M, J)
    tau = tuple(tau)
    if len(tau) != len(Jc):
        raise ValueError(f"cell {tau} does not match complementary factors {Jc}")
    table = _fiber_sigmas(M, J, literal)
    if tau not in table:
        raise ValueError(f"{cell_label(tau)} is not in the complementary projection")
    return closure(sub_product(M, J), table[tau])


def fiber_table(M: ProductSubcomplex, J, literal: bool = False) -> dict[tuple, ProductSubcomplex]:
    """``P_J(τ)`` for every cell ``τ`` of the complementary projection."""
    J = _index_set(M, J)
    K = sub_product(M, J)
    return {t: closure(K, ss) for t, ss in sorted(_fiber_sigmas(M, J, literal).items())}


def is_circle(g) -> bool:
    """Nonempty, connected, and every vertex of degree exactly 2."""
    if isinstance(g, ProductSubcomplex):
        if g.parent.n != 1:
            raise ValueError("is_circle expects a one-factor subcomplex")
        graph = g.parent.factors[0]
        edges = {c[0]: graph.edges[c[0]] for c in g.cells if c[0] in graph.edges}
        verts = {c[0] for c in g.cells if c[0] not in graph.edges}
    elif isinstance(g, Graph1Complex):
        edges, verts = dict(g.edges), set(g.vertices)
    else:
        raise TypeError("is_circle expects a 1-complex")
    if not verts:
        return False
    deg = {v: 0 for v in verts}
    for t, h in edges.values():
        deg[t] += 1
        deg[h] += 1
    if any(d != 2 for d in deg.values()):
        return False
    parent = {v: v for v in verts}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t, h in edges.values():
        parent[find(t)] = find(h)
    return len({find(v) for v in verts}) == 1


def _require_ramified(M: ProductSubcomplex):
    rep = ramified_manifold_check(M, M.parent.n)
    if not rep.verdict:
        raise ValueError("needs a ramified manifold complex of top dimension: "
                         + "; ".join(f"{w.cell}: {w.reason}" for w in rep.witnesses[:3]))


def fibers_all_circles(M: ProductSubcomplex, j: int) -> bool:
    """Every vertex fiber ``P_j(v)`` is a circle; cross-checked against ``p_j(M)``."""
    _require_ramified(M)
    J = _index_set(M, [j])
    Jc = _complement(M, J)
    if not Jc:
        fibers = is_circle(project(M, J))
    else:
        Kc = sub_product(M, Jc)
        fibers = all(is_circle(f) for t, f in fiber_table(M, J).items() if Kc.dim(t) == 0)
    image = is_circle(project(M, J))
    if fibers != image:
        raise PropertyViolation(f"factor {j}: fibers circles = {fibers}, projection circle = {image}",
                                {"factor": j, "fibers": fibers, "projection": image})
    return fibers


def circle_projection_set(M: ProductSubcomplex) -> tuple[int, ...]:
    """``J(M)``: indices ``j`` with ``p_j(M)`` a circle."""
    return tuple(j for j in range(M.parent.n) if is_circle(project(M, [j])))


@dataclass
class DecompositionResult:
    circle_indices: tuple[int, ...]
    torus_part: list[ProductSubcomplex]
    residual: ProductSubcomplex | None
    exact: bool
    claimed: bool

    def to_json(self) -> dict:
        res = sorted(cell_label(c) for c in self.residual.cells) if self.residual is not None else []
        return {"circle_indices": list(self.circle_indices), "exact": self.exact,
                "claimed": self.claimed, "residual_cells": res}


def product_decomposition(M: ProductSubcomplex) -> DecompositionResult:
    """Split off the circle factors: ``M = p_J(M) × p_{J^c}(M)`` with ``J = J(M)``."""
    J = circle_projection_set(M)
    if not J:
        return DecompositionResult((), [], M, False, False)
    Jc = _complement(M, J)
    circles = [project(M, [j]) for j in J]
    torus = project(M, J)
    n = M.parent.n
    if Jc:
        residual = project(M, Jc)
        product = {_merge(n, J, s, Jc, r) for s in torus.cells for r in residual.cells}
    else:
        residual = None
        product = set(itertools.product(*[[c[0] for c in ci.cells] for ci in circles]))
    torus_full = set(itertools.product(*[[c[0] for c in ci.cells] for ci in circles]))
    exact = product == set(M.cells) and set(torus.cells) == torus_full
    return DecompositionResult(J, circles, residual, exact, True)


@dataclass
class RankBoundReport:
    n: int
    rank_h1: int
    circle_indices: tuple[int, ...]
    decomposition: DecompositionResult | None
    claims: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"n": self.n, "rank_h1": self.rank_h1, "circle_indices": list(self.circle_indices),
                "decomposition": self.decomposition.to_json() if self.decomposition else None,
                "claims": list(self.claims)}


def rank_bound_assert(M: ProductSubcomplex) -> RankBoundReport:
    """``rank H_1(M) >= n``; if ``rank = n + k`` with ``k < n`` then ``|J(M)| >= n - k`` and ``M`` splits."""
    _require_ramified(M)
    n = M.parent.n
    h = homology_of(M)
    rank = h.betti[1] if len(h.betti) > 1 else 0
    data = {"homology": h.to_json(), "n": n}
    if rank < n:
        raise PropertyViolation(f"rank H_1 = {rank} < n = {n}", data)
    claims = [f"rank H_1 = {rank} >= {n}"]
    k = rank - n
    J = circle_projection_set(M)
    dec = None
    if k < n:
        dec = product_decomposition(M)
        data.update(circle_indices=list(J), decomposition=dec.to_json())
        if len(J) < n - k:
            raise PropertyViolation(f"|J(M)| = {len(J)} < n - k = {n - k}", data)
        if not dec.exact:
            raise PropertyViolation("M is not the product of its circle and residual projections", data)
        claims.append(f"|J(M)| = {len(J)} >= {n - k}; product decomposition exact")
    return RankBoundReport(n, rank, J, dec, claims)


# -- structural identities of the fiber calculus ----------------------------------

def fiber_property_violations(M: ProductSubcomplex) -> list[str]:
    """Check reconstruction, monotonicity and union identities for every proper ``J``."""
    n = M.parent.n
    out = []
    cells = set(M.cells)
    for r in range(1, n):
        for J in itertools.combinations(range(n), r):
            Jc = _complement(M, J)
            table = fiber_table(M, J)
            Kc = sub_product(M, Jc)
            lit = fiber_table(M, J, literal=True)
            for t, f in table.items():
                if f.cells != lit[t].cells:
                    out.append(f"J={J}: fiber over {cell_label(t)} differs from the literal filter")
            # reconstruction over top complementary cells
            rebuilt = set()
            for t, f in table.items():
                if Kc.dim(t) == len(Jc):
                    rebuilt |= {_merge(n, J, s, Jc, t) for s in f.cells}
            rebuilt = closure(M.parent, rebuilt).cells
            if rebuilt != cells:
                out.append(f"J={J}: union of P_J(t) x t differs from M")
            # monotonicity
            for t, f in table.items():
                for face in Kc.faces(t):
                    if not f.cells <= table[face].cells:
                        out.append(f"J={J}: P_J({cell_label(face)}) misses part of P_J({cell_label(t)})")
            # union identity per complementary dimension
            image = project(M, J).cells
            for d in range(len(Jc) + 1):
                u = set()
                for t, f in table.items():
                    if Kc.dim(t) == d:
                        u |= f.cells
                if u != image:
                    out.append(f"J={J}: union of fibers over {d}-cells differs from p_J(M)")
    return out


# -- decomposition over theta-curves --------------------------------------------------

@dataclass
class ThetaDecomposition:
    sigma: list[str]
    tau: list[str]
    genus: int

    @property
    def circles(self) -> list[tuple[str, str]]:
        k = len(self.tau)
        return [(self.tau[j], self.tau[(j + 1) % k]) for j in range(k)]

    def squares(self) -> set[tuple[str, str]]:
        return {(s, t) for s, c in zip(self.sigma, self.circles) for t in c}

    def to_json(self) -> dict:
        return {"sigma": self.sigma, "tau": self.tau, "genus": self.genus,
                "circles": [list(c) for c in self.circles]}


def _is_theta(g: Graph1Complex) -> bool:
    return len(g.vertices) == 2 and len(g.edges) >= 1


def theta_decompose(M: ProductSubcomplex) -> ThetaDecomposition:
    """Write ``M ⊂ Θ_a × Θ_b`` as ``⋃ σ_j × (τ_j ∪ τ_{j+1})`` with distinct ``τ_j`` (indices cyclic).

    Starts from the smallest meridian of the first factor met by ``M`` and
    walks the cycle of circles.  The genus is the number of steps minus one,
    checked against ``rank H_1(M)``.
    """
    p = M.parent
    if p.n != 2 or not all(_is_theta(g) for g in p.factors):
        raise ValueError("theta_decompose needs a subcomplex of a product of two theta-curves")
    rep = pseudo_manifold_check(M, 2, simple=True)
    if not rep.verdict:
        raise ValueError("theta_decompose needs a simple pseudo 2-manifold complex: "
                         + "; ".join(f"{w.cell}: {w.reason}" for w in rep.witnesses[:3]))
    squares = set(_top_cells(M))
    over_sigma: dict[str, list[str]] = {}
    over_tau: dict[str, list[str]] = {}
    for s, t in squares:
        over_sigma.setdefault(s, []).append(t)
        over_tau.setdefault(t, []).append(s)
    for s, ts in over_sigma.items():
        if len(ts) != 2:
            raise PropertyViolation(f"P_2({s}) is not a circle: {sorted(ts)}", {"sigma": s, "fiber": sorted(ts)})
    for t, ss in over_tau.items():
        if len(ss) != 2:
            raise PropertyViolation(f"P_1({t}) is not a circle: {sorted(ss)}", {"tau": t, "fiber": sorted(ss)})
    s0 = min(over_sigma)
    t0, t1 = sorted(over_sigma[s0])
    sigma, tau = [s0], [t0, t1]
    while True:
        s = next(x for x in over_tau[tau[-1]] if x != sigma[-1])
        t = next(x for x in over_sigma[s] if x != tau[-1])
        if s == s0:
            break
        sigma.append(s)
        if t == t0:
            break
        if t in tau:
            raise PropertyViolation("meridian sequence revisits a meridian", {"sigma": sigma, "tau": tau + [t]})
        tau.append(t)
    if len(sigma) != len(tau):
        raise PropertyViolation("sequence did not close up", {"sigma": sigma, "tau": tau})
    dec = ThetaDecomposition(sigma, tau, len(sigma) - 1)
    if dec.squares() != squares:
        raise PropertyViolation("the cycle of circles does not exhaust M",
                                {"missing": sorted(squares - dec.squares())})
    b1 = homology_of(M).betti[1]
    if b1 != 2 * dec.genus:
        raise PropertyViolation(f"rank H_1 = {b1} but the sequence gives genus {dec.genus}",
                                {"decomposition": dec.to_json()})
    return dec
