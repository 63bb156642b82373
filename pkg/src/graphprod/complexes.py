"""Regular cell complexes of dimension <= 2 and products of graphs.

Graphs are regular 1-complexes: every edge has two distinct endpoints,
parallel edges are fine.  A :class:`ProductComplex` never materializes its
cells; a cell is a tuple with one component per factor, each component a
vertex id or an edge id of that factor.  :class:`ProductSubcomplex` is a
face-closed set of such tuples.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Iterable, Iterator, Sequence

CellTuple = tuple  # tuple[str, ...]


class InvalidComplexError(ValueError):
    """Raised when a complex violates one of its defining invariants."""


class Graph1Complex:
    """Vertices plus directed edges ``(id, tail, head)`` with ``tail != head``."""

    kind = "graph"

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]] = ()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise InvalidComplexError("duplicate vertex id")
        self.edges: dict[str, tuple[str, str]] = {}
        for eid, tail, head in edges:
            if eid in self.edges or eid in vset:
                raise InvalidComplexError(f"duplicate cell id {eid!r}")
            if tail not in vset or head not in vset:
                raise InvalidComplexError(
                    f"edge {eid!r}: endpoint not a declared vertex ({tail!r}, {head!r})")
            if tail == head:
                raise InvalidComplexError(f"edge {eid!r} is a loop; regular edges need two endpoints")
            self.edges[eid] = (tail, head)
        self._vset = vset

    def __repr__(self):
        return f"Graph1Complex({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __eq__(self, other):
        return (isinstance(other, Graph1Complex) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, tuple(self.edges.items())))

    def is_vertex(self, c: str) -> bool:
        return c in self._vset

    def is_edge(self, c: str) -> bool:
        return c in self.edges

    def has_cell(self, c: str) -> bool:
        return c in self._vset or c in self.edges

    def endpoints(self, e: str) -> tuple[str, str]:
        return self.edges[e]

    def cells(self) -> list[str]:
        return list(self.vertices) + list(self.edges)

    def degree(self, v: str) -> int:
        return sum((t == v) + (h == v) for t, h in self.edges.values())

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges)

    def is_connected(self) -> bool:
        return len(_graph_components(self.vertices, self.edges.values())) <= 1

    def is_tree(self) -> bool:
        return (len(self.vertices) > 0 and self.is_connected()
                and len(self.vertices) - len(self.edges) == 1)

    def to_json(self) -> dict:
        return {"kind": "graph", "vertices": list(self.vertices),
                "edges": [{"id": e, "tail": t, "head": h} for e, (t, h) in self.edges.items()]}


def _graph_components(vertices, edge_pairs) -> list[set]:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, h in edge_pairs:
        a, b = find(t), find(h)
        if a != b:
            parent[a] = b
    groups = defaultdict(set)
    for v in vertices:
        groups[find(v)].add(v)
    return list(groups.values())


class Regular2Complex:
    """Regular CW complex of dimension <= 2.

    ``faces`` maps a face id to its boundary, a cyclic sequence of
    ``(edge id, +1 | -1)``; ``-1`` means the edge is traversed head to tail.
    Each boundary must be a closed, simple edge walk of length >= 2.
    """

    kind = "regular2"

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]] = (),
                 faces: Iterable[tuple[str, Sequence[tuple[str, int]]]] = ()):
        g = Graph1Complex(vertices, edges)
        self.vertices = g.vertices
        self.edges = g.edges
        self._vset = g._vset
        self.faces: dict[str, tuple[tuple[str, int], ...]] = {}
        for fid, boundary in faces:
            if fid in self.faces or fid in self.edges or fid in self._vset:
                raise InvalidComplexError(f"duplicate cell id {fid!r}")
            bd = tuple((e, _parse_dir(d)) for e, d in boundary)
            self._check_boundary(fid, bd)
            self.faces[fid] = bd

    def _check_boundary(self, fid, bd):
        if len(bd) < 2:
            raise InvalidComplexError(f"face {fid!r}: boundary cycle needs length >= 2")
        for e, _ in bd:
            if e not in self.edges:
                raise InvalidComplexError(f"face {fid!r}: references missing edge {e!r}")
        if len({e for e, _ in bd}) != len(bd):
            raise InvalidComplexError(f"face {fid!r}: boundary repeats an edge (not simple)")
        walk = [self.directed(e, d) for e, d in bd]
        for (_, h), (t, _) in zip(walk, walk[1:] + walk[:1]):
            if h != t:
                raise InvalidComplexError(f"face {fid!r}: boundary is not a closed edge walk")
        starts = [t for t, _ in walk]
        if len(set(starts)) != len(starts):
            raise InvalidComplexError(f"face {fid!r}: boundary repeats a vertex (not simple)")

    def __repr__(self):
        return (f"Regular2Complex({len(self.vertices)} vertices, {len(self.edges)} edges, "
                f"{len(self.faces)} faces)")

    def __eq__(self, other):
        return (isinstance(other, Regular2Complex) and set(self.vertices) == set(other.vertices)
                and self.edges == other.edges and self.faces == other.faces)

    def directed(self, e: str, d: int) -> tuple[str, str]:
        t, h = self.edges[e]
        return (t, h) if d > 0 else (h, t)

    def face_vertices(self, f: str) -> list[str]:
        return [self.directed(e, d)[0] for e, d in self.faces[f]]

    def face_edges(self, f: str) -> list[str]:
        return [e for e, _ in self.faces[f]]

    def dimension(self) -> int:
        if self.faces:
            return 2
        if self.edges:
            return 1
        return 0 if self.vertices else -1

    def cell_dim(self, c: str) -> int:
        if c in self.faces:
            return 2
        if c in self.edges:
            return 1
        if c in self._vset:
            return 0
        raise KeyError(c)

    def has_cell(self, c: str) -> bool:
        return c in self._vset or c in self.edges or c in self.faces

    def cells(self) -> list[str]:
        return list(self.vertices) + list(self.edges) + list(self.faces)

    def edge_cofaces(self) -> dict[str, list[str]]:
        out = {e: [] for e in self.edges}
        for f, bd in self.faces.items():
            for e, _ in bd:
                out[e].append(f)
        return out

    def vertex_cofaces(self) -> dict[str, list[str]]:
        out = {v: [] for v in self.vertices}
        for e, (t, h) in self.edges.items():
            out[t].append(e)
            out[h].append(e)
        return out

    def counts(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces))

    def euler_characteristic(self) -> int:
        v, e, f = self.counts()
        return v - e + f

    def one_skeleton(self) -> Graph1Complex:
        return Graph1Complex(self.vertices, [(e, t, h) for e, (t, h) in self.edges.items()])

    def subcomplex(self, cells: Iterable[str]) -> Regular2Complex:
        """The complex on ``cells``; they must be face-closed."""
        keep = set(cells)
        return Regular2Complex(
            [v for v in self.vertices if v in keep],
            [(e, t, h) for e, (t, h) in self.edges.items() if e in keep],
            [(f, bd) for f, bd in self.faces.items() if f in keep],
        )

    def to_json(self) -> dict:
        return {
            "kind": "regular2",
            "vertices": list(self.vertices),
            "edges": [{"id": e, "tail": t, "head": h} for e, (t, h) in self.edges.items()],
            "faces": [{"id": f, "boundary": [{"edge": e, "dir": "+" if d > 0 else "-"}
                                             for e, d in bd]}
                      for f, bd in self.faces.items()],
        }


def _parse_dir(d) -> int:
    if d in (1, "+", "+1"):
        return 1
    if d in (-1, "-", "-1"):
        return -1
    raise InvalidComplexError(f"edge direction must be + or -, got {d!r}")


# -- products ----------------------------------------------------------------

class ProductComplex:
    """The cell structure ``K_1 ⊠ ... ⊠ K_n`` on a product of graphs."""

    kind = "product"

    def __init__(self, factors: Sequence[Graph1Complex]):
        factors = tuple(factors)
        if not factors:
            raise InvalidComplexError("a product needs at least one factor")
        for i, g in enumerate(factors):
            if not isinstance(g, Graph1Complex):
                raise InvalidComplexError(f"factor {i} is not a Graph1Complex")
        self.factors: tuple[Graph1Complex, ...] = factors

    @property
    def n(self) -> int:
        return len(self.factors)

    def __repr__(self):
        return f"ProductComplex({', '.join(map(repr, self.factors))})"

    def __eq__(self, other):
        return isinstance(other, ProductComplex) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def is_cell(self, cell: CellTuple) -> bool:
        return len(cell) == self.n and all(g.has_cell(c) for g, c in zip(self.factors, cell))

    def check_cell(self, cell: CellTuple) -> None:
        if not self.is_cell(cell):
            raise InvalidComplexError(f"{cell!r} is not a cell of this product")

    def dim(self, cell: CellTuple) -> int:
        return sum(1 for g, c in zip(self.factors, cell) if c in g.edges)

    def facets(self, cell: CellTuple) -> list[tuple[CellTuple, int]]:
        """Codimension-one faces with cubical boundary signs.

        ``∂(c_1 × ... × c_n) = Σ_i (-1)^{ε(i)} c_1 × ... × ∂c_i × ... × c_n``
        where ``ε(i)`` counts edge components before position ``i`` and
        ``∂e = head - tail``.
        """
        out = []
        eps = 0
        for i, (g, c) in enumerate(zip(self.factors, cell)):
            if c in g.edges:
                t, h = g.edges[c]
                s = -1 if eps % 2 else 1
                out.append((cell[:i] + (h,) + cell[i + 1:], s))
                out.append((cell[:i] + (t,) + cell[i + 1:], -s))
                eps += 1
        return out

    def faces(self, cell: CellTuple, proper: bool = True) -> set[CellTuple]:
        """All faces: replace any subset of edge components by an endpoint."""
        self.check_cell(cell)
        options = []
        for g, c in zip(self.factors, cell):
            options.append((c,) + g.edges[c] if c in g.edges else (c,))
        out = set(itertools.product(*options))
        if proper:
            out.discard(tuple(cell))
        return out

    def cells_of_dim(self, d: int) -> Iterator[CellTuple]:
        per = [(list(g.vertices), list(g.edges)) for g in self.factors]
        for kinds in itertools.combinations(range(self.n), d):
            pools = [per[i][1] if i in kinds else per[i][0] for i in range(self.n)]
            yield from itertools.product(*pools)

    def count_cells(self, d: int) -> int:
        total = 0
        for kinds in itertools.combinations(range(self.n), d):
            p = 1
            for i, g in enumerate(self.factors):
                p *= len(g.edges) if i in kinds else len(g.vertices)
            total += p
        return total

    def all_cells(self) -> Iterator[CellTuple]:
        for d in range(self.n + 1):
            yield from self.cells_of_dim(d)

    def full(self) -> ProductSubcomplex:
        return ProductSubcomplex(self, self.all_cells(), check=False)

    def to_json(self) -> dict:
        return {"kind": "product", "factors": [g.to_json() for g in self.factors]}


def product_complex(factors: Sequence[Graph1Complex]) -> ProductComplex:
    return ProductComplex(factors)


def cell_label(cell: CellTuple) -> str:
    """Stable string id of a product cell, e.g. ``"0:m1|1:p"``."""
    return "|".join(f"{i}:{c}" for i, c in enumerate(cell))


class ProductSubcomplex:
    """A face-closed set of cells of a :class:`ProductComplex`."""

    kind = "product-subcomplex"

    def __init__(self, parent: ProductComplex, cells: Iterable[CellTuple], check: bool = True):
        self.parent = parent
        self.cells: frozenset[CellTuple] = frozenset(tuple(c) for c in cells)
        if check:
            for c in self.cells:
                parent.check_cell(c)
            for c in self.cells:
                for f, _ in parent.facets(c):
                    if f not in self.cells:
                        raise InvalidComplexError(
                            f"not face-closed: {cell_label(f)} is a face of "
                            f"{cell_label(c)} but is missing")

    def __repr__(self):
        return f"ProductSubcomplex(n={self.parent.n}, counts={self.counts()})"

    def __eq__(self, other):
        return (isinstance(other, ProductSubcomplex) and self.parent == other.parent
                and self.cells == other.cells)

    def __hash__(self):
        return hash((self.parent, self.cells))

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return tuple(cell) in self.cells

    @property
    def factors(self):
        return self.parent.factors

    def dim(self, cell: CellTuple) -> int:
        return self.parent.dim(cell)

    def dimension(self) -> int:
        return max((self.parent.dim(c) for c in self.cells), default=-1)

    def by_dim(self) -> dict[int, list[CellTuple]]:
        out: dict[int, list[CellTuple]] = {d: [] for d in range(self.parent.n + 1)}
        for c in self.cells:
            out[self.parent.dim(c)].append(c)
        for d in out:
            out[d].sort()
        return out

    def cells_of_dim(self, d: int) -> list[CellTuple]:
        return sorted(c for c in self.cells if self.parent.dim(c) == d)

    def counts(self) -> tuple[int, ...]:
        out = [0] * (self.parent.n + 1)
        for c in self.cells:
            out[self.parent.dim(c)] += 1
        return tuple(out)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * k for d, k in enumerate(self.counts()))

    def to_json(self) -> dict:
        return {"kind": "product-subcomplex",
                "factors": [g.to_json() for g in self.parent.factors],
                "cells": [list(c) for c in sorted(self.cells)]}


def faces(parent: ProductComplex, cell: CellTuple) -> set[CellTuple]:
    """Proper faces of ``cell``."""
    return parent.faces(tuple(cell), proper=True)


def closure(parent: ProductComplex, cells: Iterable[CellTuple]) -> ProductSubcomplex:
    out = set()
    for c in cells:
        c = tuple(c)
        if c not in out:
            out |= parent.faces(c, proper=False)
    return ProductSubcomplex(parent, out, check=False)


def top_cell_span(sub: ProductSubcomplex, n: int) -> ProductSubcomplex:
    """Closure of the ``n``-cells of ``sub``."""
    return closure(sub.parent, (c for c in sub.cells if sub.parent.dim(c) == n))


def cross(a: ProductSubcomplex, b: ProductSubcomplex) -> ProductSubcomplex:
    """Cellwise product of two subcomplexes, factors concatenated."""
    parent = ProductComplex(a.parent.factors + b.parent.factors)
    return ProductSubcomplex(parent, (x + y for x in a.cells for y in b.cells), check=False)


def graph_as_subcomplex(g: Graph1Complex) -> ProductSubcomplex:
    """A graph seen as the full one-factor product."""
    return ProductComplex([g]).full()


def to_regular2(sub: ProductSubcomplex) -> Regular2Complex:
    """The 2-complex on the cells of a subcomplex of a product of two graphs.

    Square ``e1 × e2`` gets boundary ``tail×e2, e1×head, -(head×e2), -(e1×tail)``
    where ``tail``/``head`` are those of the other edge.
    """
    parent = sub.parent
    if parent.n != 2:
        raise InvalidComplexError(f"to_regular2 needs exactly 2 factors, got {parent.n}")
    g1, g2 = parent.factors
    by = sub.by_dim()
    vertices = [cell_label(c) for c in by[0]]
    edges = []
    for c in by[1]:
        a, b = c
        if a in g1.edges:
            t, h = g1.edges[a]
            edges.append((cell_label(c), cell_label((t, b)), cell_label((h, b))))
        else:
            t, h = g2.edges[b]
            edges.append((cell_label(c), cell_label((a, t)), cell_label((a, h))))
    faces_ = []
    for c in by[2]:
        e1, e2 = c
        t1, h1 = g1.edges[e1]
        t2, h2 = g2.edges[e2]
        faces_.append((cell_label(c), [
            (cell_label((t1, e2)), 1),
            (cell_label((e1, h2)), 1),
            (cell_label((h1, e2)), -1),
            (cell_label((e1, t2)), -1),
        ]))
    return Regular2Complex(vertices, edges, faces_)


def proper_cells_check(k: Regular2Complex | Graph1Complex) -> tuple[bool, tuple[str, str] | None]:
    """Every closed cell is the union of the open cells it is declared to contain.

    Concretely: each closed edge is its open edge plus its two endpoints, and
    each closed face is itself plus the edges of its boundary walk plus the
    vertices that walk visits.  Returns ``(True, None)`` or a witness pair
    ``(cell, offending cell)``.
    """
    vset = set(k.vertices)
    for e, (t, h) in k.edges.items():
        for v in (t, h):
            if v not in vset:
                return False, (e, v)
    for f, bd in getattr(k, "faces", {}).items():
        walk_vertices = set()
        for e, d in bd:
            if e not in k.edges:
                return False, (f, e)
            walk_vertices.update(k.edges[e])
        visited = {k.directed(e, d)[0] for e, d in bd}
        extra = walk_vertices ^ visited
        if extra:
            return False, (f, sorted(extra)[0])
    return True, None


def subdivide_edge(g: Graph1Complex, e: str) -> Graph1Complex:
    """Replace ``e`` by ``tail -> e.m -> head`` (edges ``e.0`` and ``e.1``)."""
    if e not in g.edges:
        raise KeyError(f"unknown edge {e!r}")
    t, h = g.edges[e]
    mid = f"{e}.m"
    edges = []
    for eid, (a, b) in g.edges.items():
        if eid == e:
            edges += [(f"{e}.0", t, mid), (f"{e}.1", mid, h)]
        else:
            edges.append((eid, a, b))
    return Graph1Complex(list(g.vertices) + [mid], edges)


def subdivide_product_edge(sub: ProductSubcomplex, factor: int, e: str) -> ProductSubcomplex:
    """Subdivide edge ``e`` of one factor and carry ``sub`` along."""
    g = sub.parent.factors[factor]
    g2 = subdivide_edge(g, e)
    parent = ProductComplex(sub.parent.factors[:factor] + (g2,) + sub.parent.factors[factor + 1:])
    out = set()
    for c in sub.cells:
        if c[factor] == e:
            for r in (f"{e}.0", f"{e}.1", f"{e}.m"):
                out.add(c[:factor] + (r,) + c[factor + 1:])
        else:
            out.add(c)
    return ProductSubcomplex(parent, out)


def wedge(g1: Graph1Complex, v1: str, g2: Graph1Complex, v2: str, prefix: str = "") -> Graph1Complex:
    """One-point union identifying ``v2`` with ``v1``.

    Ids of ``g2`` get ``prefix``; they must then be disjoint from ``g1``'s.
    """
    if v1 not in g1.vertices:
        raise KeyError(f"unknown vertex {v1!r} of the first graph")
    if v2 not in g2.vertices:
        raise KeyError(f"unknown vertex {v2!r} of the second graph")

    def rn(x):
        return v1 if x == v2 else prefix + x

    vertices = list(g1.vertices) + [rn(v) for v in g2.vertices if v != v2]
    edges = [(e, t, h) for e, (t, h) in g1.edges.items()]
    edges += [(prefix + e, rn(t), rn(h)) for e, (t, h) in g2.edges.items()]
    return Graph1Complex(vertices, edges)


# -- JSON --------------------------------------------------------------------

def _graph_from_doc(doc: dict, where: str = "") -> Graph1Complex:
    try:
        return Graph1Complex(doc["vertices"],
                             [(e["id"], e["tail"], e["head"]) for e in doc.get("edges", [])])
    except KeyError as exc:
        raise InvalidComplexError(f"{where}missing field {exc.args[0]!r}") from None


def from_json(doc: dict):
    """Rebuild a complex from its JSON document (see ``to_json`` methods)."""
    kind = doc.get("kind")
    if kind == "graph":
        return _graph_from_doc(doc)
    if kind == "regular2":
        try:
            return Regular2Complex(
                doc["vertices"],
                [(e["id"], e["tail"], e["head"]) for e in doc.get("edges", [])],
                [(f["id"], [(b["edge"], b["dir"]) for b in f["boundary"]])
                 for f in doc.get("faces", [])],
            )
        except KeyError as exc:
            raise InvalidComplexError(f"missing field {exc.args[0]!r}") from None
    if kind in ("product", "product-subcomplex"):
        if "factors" not in doc:
            raise InvalidComplexError("missing field 'factors'")
        parent = ProductComplex([_graph_from_doc(g, f"factors[{i}]: ")
                                 for i, g in enumerate(doc["factors"])])
        if kind == "product":
            return parent
        if "cells" not in doc:
            raise InvalidComplexError("missing field 'cells'")
        return ProductSubcomplex(parent, [tuple(c) for c in doc["cells"]])
    raise InvalidComplexError(f"unknown kind {kind!r}")
