"""Combinatorial recognition of pseudo and ramified manifold complexes.

All checks accept a :class:`Regular2Complex` or a :class:`ProductSubcomplex`
(any number of factors) and work on the face poset only.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .complexes import (
    Graph1Complex,
    ProductSubcomplex,
    Regular2Complex,
    _graph_components,
    cell_label,
    to_regular2,
)


@dataclass(frozen=True)
class Witness:
    cell: str
    reason: str


@dataclass(frozen=True)
class VerifierReport:
    verdict: bool
    witnesses: tuple[Witness, ...] = field(default=())

    def __post_init__(self):
        if not self.verdict and not self.witnesses:
            raise ValueError("a failing report needs at least one witness")

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "witnesses": [{"cell": w.cell, "reason": w.reason} for w in self.witnesses]}


def _report(witnesses) -> VerifierReport:
    witnesses = tuple(witnesses)
    return VerifierReport(not witnesses, witnesses)


class CellPoset:
    """Cells by dimension and codimension-one incidences of a complex."""

    def __init__(self, x):
        self.cofacets: dict = defaultdict(list)
        self.facets: dict = {}
        self.by_dim: dict[int, list] = defaultdict(list)
        if isinstance(x, ProductSubcomplex):
            p = x.parent
            for c in sorted(x.cells):
                d = p.dim(c)
                self.by_dim[d].append(c)
                fs = [f for f, _ in p.facets(c)]
                self.facets[c] = fs
                for f in fs:
                    self.cofacets[f].append(c)
            self.label = cell_label
        elif isinstance(x, (Regular2Complex, Graph1Complex)):
            for v in x.vertices:
                self.by_dim[0].append(v)
                self.facets[v] = []
            for e, (t, h) in x.edges.items():
                self.by_dim[1].append(e)
                self.facets[e] = [t, h]
                self.cofacets[t].append(e)
                self.cofacets[h].append(e)
            for f, bd in getattr(x, "faces", {}).items():
                self.by_dim[2].append(f)
                self.facets[f] = [e for e, _ in bd]
                for e, _ in bd:
                    self.cofacets[e].append(f)
            self.label = str
        else:
            raise TypeError(f"unsupported complex type {type(x).__name__}")
        self.dim_of = {c: d for d, cs in self.by_dim.items() for c in cs}

    def cells(self):
        return self.dim_of.keys()

    def in_top_cell(self, n: int) -> set:
        """Cells that are faces of some ``n``-cell."""
        seen = set(self.by_dim.get(n, []))
        frontier = list(seen)
        while frontier:
            nxt = []
            for c in frontier:
                for f in self.facets[c]:
                    if f not in seen:
                        seen.add(f)
                        nxt.append(f)
            frontier = nxt
        return seen

    def chain_classes(self, n: int) -> list[list]:
        """``n``-cells grouped by adjacency through shared ``(n-1)``-cells."""
        top = self.by_dim.get(n, [])
        parent = {c: c for c in top}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for f in self.by_dim.get(n - 1, []):
            cs = self.cofacets.get(f, [])
            for a in cs[1:]:
                ra, rb = find(a), find(cs[0])
                if ra != rb:
                    parent[ra] = rb
        groups = defaultdict(list)
        for c in top:
            groups[find(c)].append(c)
        return sorted(groups.values(), key=lambda g: g[0])


def _poset(x) -> CellPoset:
    return x if isinstance(x, CellPoset) else CellPoset(x)


def incidence_count(x, c) -> int:
    """Number of cells one dimension up having ``c`` as a face."""
    P = _poset(x)
    if c not in P.dim_of:
        raise KeyError(f"unknown cell {c!r}")
    return len(P.cofacets.get(c, []))


def _manifold_check(x, n: int, simple: bool, exact_two: bool) -> VerifierReport:
    P = _poset(x)
    ws = []
    if not P.by_dim.get(n):
        return _report([Witness("", f"no {n}-cells")])
    covered = P.in_top_cell(n)
    for c in P.cells():
        if c not in covered:
            ws.append(Witness(P.label(c), f"not a face of any {n}-cell"))
    for c in P.by_dim.get(n - 1, []):
        k = len(P.cofacets.get(c, []))
        if (k != 2) if exact_two else (k < 2):
            ws.append(Witness(P.label(c), f"incident with {k} {n}-cells"))
    if simple:
        classes = P.chain_classes(n)
        if len(classes) > 1:
            ws.append(Witness(P.label(classes[1][0]),
                              f"not chain connected to {P.label(classes[0][0])} "
                              f"({len(classes)} chain classes)"))
    return _report(ws)


def pseudo_manifold_check(x, n: int, simple: bool = False) -> VerifierReport:
    """Every cell lies in an ``n``-cell, every ``(n-1)``-cell has exactly two cofaces."""
    return _manifold_check(x, n, simple, exact_two=True)


def ramified_manifold_check(x, n: int, simple: bool = False) -> VerifierReport:
    """As :func:`pseudo_manifold_check` with at least two cofaces."""
    return _manifold_check(x, n, simple, exact_two=False)


def free_edges(k) -> set:
    """Edges lying in exactly one 2-cell."""
    P = _poset(k)
    return {P.label(e) for e in P.by_dim.get(1, []) if len(P.cofacets.get(e, [])) == 1}


def _vertex_link_ok(k: Regular2Complex, v: str, vertex_edges, corners) -> str | None:
    nodes = vertex_edges[v]
    if not nodes:
        return "isolated vertex"
    links = corners.get(v, [])
    deg = defaultdict(int)
    for a, b in links:
        deg[a] += 1
        deg[b] += 1
    for e in nodes:
        if deg[e] != 2:
            return f"link: edge end {e} has degree {deg[e]}"
    comps = _graph_components(nodes, links)
    if len(comps) != 1:
        return f"link has {len(comps)} components"
    return None


def closed_surface_check(x) -> VerifierReport:
    """Connected, all edges in exactly two faces, every vertex link one cycle."""
    k = to_regular2(x) if isinstance(x, ProductSubcomplex) else x
    ws = []
    if not k.vertices:
        return _report([Witness("", "empty complex")])
    comps = _graph_components(k.vertices, k.edges.values())
    if len(comps) != 1:
        ws.append(Witness(sorted(comps[1])[0], f"not connected ({len(comps)} components)"))
    cof = k.edge_cofaces()
    for e in k.edges:
        if len(cof[e]) != 2:
            ws.append(Witness(e, f"incident with {len(cof[e])} faces"))
    vertex_edges = k.vertex_cofaces()
    corners = defaultdict(list)
    for f, bd in k.faces.items():
        m = len(bd)
        for i in range(m):
            e_in, d_in = bd[i - 1]
            e_out, _ = bd[i]
            v = k.directed(e_in, d_in)[1]
            corners[v].append((e_in, e_out))
    for v in k.vertices:
        why = _vertex_link_ok(k, v, vertex_edges, corners)
        if why:
            ws.append(Witness(v, why))
    return _report(ws)


def combinatorial_components(x, n: int) -> list:
    """Chain-connectivity classes of ``n``-cells of a ramified ``n``-manifold complex.

    Each class, closed under faces, is a maximal simple ramified subcomplex.
    """
    P = _poset(x)
    rep = ramified_manifold_check(P, n)
    if not rep.verdict:
        raise ValueError("combinatorial components need a ramified manifold complex: "
                         + "; ".join(f"{w.cell}: {w.reason}" for w in rep.witnesses[:3]))
    classes = P.chain_classes(n)
    closures = []
    for cls in classes:
        seen = set(cls)
        frontier = list(cls)
        while frontier:
            frontier = [f for c in frontier for f in P.facets[c] if f not in seen]
            seen.update(frontier)
        closures.append(seen)
    for i in range(len(closures)):
        for j in range(i + 1, len(closures)):
            common = closures[i] & closures[j]
            top = max((P.dim_of[c] for c in common), default=-1)
            assert top <= n - 2, f"components {i} and {j} share a {top}-cell"
    return classes


def component_closures(x, n: int) -> list[set]:
    P = _poset(x)
    out = []
    for cls in combinatorial_components(P, n):
        seen = set(cls)
        frontier = list(cls)
        while frontier:
            frontier = [f for c in frontier for f in P.facets[c] if f not in seen]
            seen.update(frontier)
        out.append(seen)
    return out
