"""Elementary collapses of regular 2-complexes and embeddings of collapsible
2-complexes into products of two trees.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .complexes import (
    Graph1Complex,
    ProductComplex,
    ProductSubcomplex,
    Regular2Complex,
    _graph_components,
    cell_label,
    closure,
    to_regular2,
)
from .homology import homology_of
from .verify import VerifierReport, Witness, closed_surface_check


@dataclass(frozen=True, order=True)
class CollapseStep:
    free_face: str
    coface: str

    def to_json(self) -> dict:
        return {"free_face": self.free_face, "coface": self.coface}


@dataclass
class CollapsePlan:
    steps: list[CollapseStep]
    core: Regular2Complex

    @property
    def collapsed_to_point(self) -> bool:
        return self.core.counts() == (1, 0, 0)

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "core": self.core.to_json(),
                "core_counts": list(self.core.counts())}


def _facets(k: Regular2Complex, c: str) -> list[str]:
    if c in k.faces:
        return [e for e, _ in k.faces[c]]
    if c in k.edges:
        return list(k.edges[c])
    return []


def _cofaces(k: Regular2Complex) -> dict[str, set[str]]:
    cof: dict[str, set[str]] = {c: set() for c in k.cells()}
    for c in list(k.edges) + list(k.faces):
        for f in _facets(k, c):
            cof[f].add(c)
    return cof


def free_face_pairs(k: Regular2Complex) -> list[CollapseStep]:
    """Edges in exactly one face with that face; vertices in exactly one edge (and no face) with that edge."""
    cof = _cofaces(k)
    out = []
    for c in list(k.vertices) + list(k.edges):
        if len(cof[c]) == 1:
            (top,) = cof[c]
            if not cof[top]:
                out.append(CollapseStep(c, top))
    return sorted(out, key=lambda s: (k.cell_dim(s.free_face) != 1, s.free_face, s.coface))


class _Collapser:
    """Mutable collapse state with a lazily validated priority queue of free pairs."""

    def __init__(self, k: Regular2Complex):
        self.k = k
        self.alive = set(k.cells())
        self.cof = _cofaces(k)
        self.heap: list = []
        self.queued: set = set()
        for c in self.cof:
            self._offer(c)

    def _offer(self, c):
        if c in self.alive and len(self.cof[c]) == 1:
            (top,) = self.cof[c]
            key = (self.k.cell_dim(c) != 1, c, top)
            if key not in self.queued:
                self.queued.add(key)
                heapq.heappush(self.heap, key)

    def valid(self, face, top) -> bool:
        return (face in self.alive and top in self.alive and self.cof[face] == {top}
                and not self.cof[top])

    def apply(self, face, top):
        if not self.valid(face, top):
            raise ValueError(f"{face!r} is not a free face of {top!r}")
        for c in (top, face):
            self.alive.discard(c)
            for f in _facets(self.k, c):
                self.cof[f].discard(c)
        for c in (top, face):
            for f in _facets(self.k, c):
                self._offer(f)

    def pop(self) -> CollapseStep | None:
        while self.heap:
            _, face, top = heapq.heappop(self.heap)
            if self.valid(face, top):
                return CollapseStep(face, top)
        return None

    def core(self) -> Regular2Complex:
        return self.k.subcomplex(self.alive)


def greedy_collapse(k: Regular2Complex) -> CollapsePlan:
    """Collapse the smallest free pair (edge-face pairs first) until none is left."""
    st = _Collapser(k)
    steps = []
    while (s := st.pop()) is not None:
        st.apply(s.free_face, s.coface)
        steps.append(s)
    return CollapsePlan(steps, st.core())


def replay(k: Regular2Complex, steps) -> Regular2Complex:
    """Apply ``steps`` in order, checking each is an elementary collapse."""
    st = _Collapser(k)
    for s in steps:
        st.apply(s.free_face, s.coface)
    return st.core()


@dataclass
class CollapsibilityResult:
    status: str  # "collapsible" | "refuted" | "not-collapsible-within-budget"
    nodes: int
    plan: CollapsePlan | None = None

    def to_json(self) -> dict:
        return {"status": self.status, "nodes": self.nodes,
                "plan": self.plan.to_json() if self.plan else None}


class _BudgetExhausted(Exception):
    pass


def exhaustive_collapsibility(k: Regular2Complex, budget: int = 10**6) -> CollapsibilityResult:
    """Depth-first search over the order of edge-face collapses.

    Collapses of a vertex with an edge never create free edges, so only
    edge-face choices branch; once no face is left the remaining graph
    collapses to a point iff it is a tree.  Failed states are memoized.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    ecof = k.edge_cofaces()
    nodes = 0
    failed: set[frozenset] = set()

    def search(alive: frozenset) -> list[CollapseStep] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if alive in failed:
            return None
        faces_ = [f for f in k.faces if f in alive]
        if not faces_:
            sub = k.subcomplex(alive)
            plan = greedy_collapse(sub)
            if plan.collapsed_to_point:
                return plan.steps
            failed.add(alive)
            return None
        moves = []
        for f in faces_:
            for e, _ in k.faces[f]:
                if e in alive and [g for g in ecof[e] if g in alive] == [f]:
                    moves.append(CollapseStep(e, f))
        for m in sorted(moves):
            rest = search(alive - {m.free_face, m.coface})
            if rest is not None:
                return [m] + rest
        failed.add(alive)
        return None

    try:
        steps = search(frozenset(k.cells()))
    except _BudgetExhausted:
        return CollapsibilityResult("not-collapsible-within-budget", nodes - 1)
    if steps is None:
        return CollapsibilityResult("refuted", nodes)
    return CollapsibilityResult("collapsible", nodes, CollapsePlan(steps, replay(k, steps)))


def classify_core(core: Regular2Complex) -> str:
    """``point``, ``quasi-1-manifold`` (graph without endpoints), ``torus`` or ``other``."""
    v, e, f = core.counts()
    if (v, e, f) == (1, 0, 0):
        return "point"
    if f == 0 and e > 0:
        deg = core.vertex_cofaces()
        return "quasi-1-manifold" if all(len(x) >= 2 for x in deg.values()) else "other"
    if f > 0 and closed_surface_check(core).verdict:
        h = homology_of(core)
        if h.euler == 0 and h.betti[2] == 1:
            return "torus"
    return "other"


# -- embedding into a product of two trees ---------------------------------------

class _Tree:
    def __init__(self, vprefix: str, eprefix: str):
        self.vp, self.ep = vprefix, eprefix
        self.vertices = [f"{vprefix}0"]
        self.edges: dict[str, tuple[str, str]] = {}
        self.between: dict[frozenset, str] = {}

    def pendant(self, at: str) -> tuple[str, str]:
        k = len(self.edges)
        leaf, eid = f"{self.vp}{k + 1}", f"{self.ep}{k}"
        self.vertices.append(leaf)
        self.edges[eid] = (at, leaf)
        self.between[frozenset((at, leaf))] = eid
        return eid, leaf

    def graph(self) -> Graph1Complex:
        return Graph1Complex(self.vertices, [(e, t, h) for e, (t, h) in self.edges.items()])


@dataclass
class TreeEmbedding:
    tree1: Graph1Complex
    tree2: Graph1Complex
    image: ProductSubcomplex
    assignment: dict[str, frozenset]
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"tree1": self.tree1.to_json(), "tree2": self.tree2.to_json(),
                "image": sorted(cell_label(c) for c in self.image.cells),
                "assignment": {k: sorted(cell_label(c) for c in v)
                               for k, v in sorted(self.assignment.items())},
                "stats": dict(self.stats)}


def _square_closure(t1: _Tree, t2: _Tree, sq: tuple[str, str]) -> set[tuple[str, str]]:
    a, b = sq
    ta, ha = t1.edges[a]
    tb, hb = t2.edges[b]
    return {sq, (ta, b), (ha, b), (a, tb), (a, hb), (ta, tb), (ta, hb), (ha, tb), (ha, hb)}


def _step_edge(t1: _Tree, t2: _Tree, p, q) -> tuple[str, str]:
    if p[1] == q[1]:
        return (t1.between[frozenset((p[0], q[0]))], p[1])
    if p[0] == q[0]:
        return (p[0], t2.between[frozenset((p[1], q[1]))])
    raise RuntimeError(f"{p} and {q} are not adjacent product vertices")


def _path_cells(t1, t2, path) -> set:
    cells = set(path)
    cells |= {_step_edge(t1, t2, p, q) for p, q in zip(path, path[1:])}
    return cells


def _runs(path) -> list[tuple[str, list]]:
    """Maximal runs of a product-vertex path: ``V`` keeps the first coordinate, ``H`` the second."""
    runs: list[tuple[str, list]] = []
    for p, q in zip(path, path[1:]):
        kind = "V" if p[0] == q[0] else "H"
        if runs and runs[-1][0] == kind:
            runs[-1][1].append(q)
        else:
            runs.append((kind, [p, q]))
    return runs


def tree_embed(k: Regular2Complex, plan: CollapsePlan | None = None) -> TreeEmbedding:
    """Replay a collapse of ``k`` to a point backwards as expansions inside a growing product of trees.

    An edge expansion hangs a new leaf on the second tree.  A face
    expansion reads the arc ``A`` (image of the face boundary minus the
    free edge), splits it into maximal runs, hangs one new leaf per run on
    the tree the run stays constant in, and fills in a disc made of one
    strip per run and one square per corner between runs.
    """
    if plan is None:
        plan = greedy_collapse(k)
        if not plan.collapsed_to_point:
            res = exhaustive_collapsibility(k)
            if res.status != "collapsible":
                raise ValueError(f"complex is not collapsible ({res.status})")
            plan = res.plan
    if not plan.collapsed_to_point:
        raise ValueError("the plan does not collapse the complex to a point")
    t1, t2 = _Tree("a", "ae"), _Tree("b", "be")
    (start,) = plan.core.vertices
    vimg = {start: ("a0", "b0")}
    epath: dict[str, list] = {}
    assign: dict[str, frozenset] = {start: frozenset({("a0", "b0")})}
    image = {("a0", "b0")}
    stats = {"edge_expansions": 0, "face_expansions": 0, "runs": 0, "corners": 0, "max_runs": 0}

    for step in reversed(plan.steps):
        if step.coface in k.edges:
            v, e = step.free_face, step.coface
            t, h = k.edges[e]
            u = h if v == t else t
            x1, x2 = vimg[u]
            eid, leaf = t2.pendant(x2)
            vimg[v] = (x1, leaf)
            epath[e] = [vimg[t], vimg[h]]
            assign[v] = frozenset({vimg[v]})
            assign[e] = frozenset({(x1, eid)})
            image |= {vimg[v], (x1, eid)}
            stats["edge_expansions"] += 1
            continue
        e, F = step.free_face, step.coface
        bd = list(k.faces[F])
        i = next(j for j, (x, _) in enumerate(bd) if x == e)
        bd = bd[i + 1:] + bd[:i]
        arc: list = []
        for x, d in bd:
            p = epath[x] if d > 0 else epath[x][::-1]
            arc += p if not arc else p[1:]
        if len(set(arc)) != len(arc):
            raise RuntimeError(f"image of the boundary of {F!r} minus {e!r} is not an arc")
        runs = _runs(arc)
        squares, pend = [], []
        for kind, pts in runs:
            if kind == "V":
                eid, _ = t1.pendant(pts[0][0])
                squares += [(eid, _step_edge(t1, t2, p, q)[1]) for p, q in zip(pts, pts[1:])]
            else:
                eid, _ = t2.pendant(pts[0][1])
                squares += [(_step_edge(t1, t2, p, q)[0], eid) for p, q in zip(pts, pts[1:])]
            pend.append((kind, eid))
        for (ka, ea), (kb, eb) in zip(pend, pend[1:]):
            squares.append((ea, eb) if ka == "V" else (eb, ea))
        disc = set()
        for sq in squares:
            disc |= _square_closure(t1, t2, sq)
        arc_cells = _path_cells(t1, t2, arc)
        if disc & image != arc_cells:
            raise RuntimeError(f"disc for {F!r} meets the image outside its arc")
        inc = Counter(c for sq in squares for c in _square_closure(t1, t2, sq)
                      if c != sq and (c[0] in t1.edges) != (c[1] in t2.edges))
        outer = {c for c, m in inc.items() if m == 1} - arc_cells
        # walk the outer boundary from the image of the tail of e to that of its head
        tail, head = k.edges[e]
        nbr = defaultdict(list)
        for c in outer:
            a, b = c
            if a in t1.edges:
                ends = [(x, b) for x in t1.edges[a]]
            else:
                ends = [(a, y) for y in t2.edges[b]]
            nbr[ends[0]].append(ends[1])
            nbr[ends[1]].append(ends[0])
        path = [vimg[tail]]
        while path[-1] != vimg[head]:
            nxt = [q for q in nbr[path[-1]] if len(path) < 2 or q != path[-2]]
            if len(nxt) != 1:
                raise RuntimeError(f"outer boundary of the disc for {F!r} is not a path")
            path.append(nxt[0])
        epath[e] = path
        e_cells = _path_cells(t1, t2, path)
        assign[e] = frozenset(e_cells - {path[0], path[-1]})
        assign[F] = frozenset(disc - arc_cells - e_cells)
        image |= disc
        stats["face_expansions"] += 1
        stats["runs"] += len(runs)
        stats["corners"] += len(runs) - 1
        stats["max_runs"] = max(stats["max_runs"], len(runs))

    g1, g2 = t1.graph(), t2.graph()
    parent = ProductComplex([g1, g2])
    stats["tree1_edges"] = len(g1.edges)
    stats["tree2_edges"] = len(g2.edges)
    stats["pendant_edges"] = len(g1.edges) + len(g2.edges)
    return TreeEmbedding(g1, g2, ProductSubcomplex(parent, image), assign, stats)


def _disc_problem(parent: ProductComplex, cells: frozenset, rim: set) -> str | None:
    squares = [c for c in cells if parent.dim(c) == 2]
    if not squares:
        return "no 2-cells"
    C = closure(parent, cells)
    if C.cells != closure(parent, squares).cells:
        return "assigned cells are not covered by its 2-cells"
    inc = Counter(f for sq in squares for f, _ in parent.facets(sq))
    if any(m > 2 for m in inc.values()):
        return "an edge lies in more than two 2-cells"
    boundary = {f for f, m in inc.items() if m == 1}
    verts = {v for f in boundary for v, _ in parent.facets(f)}
    deg = Counter(v for f in boundary for v, _ in parent.facets(f))
    if any(d != 2 for d in deg.values()) or len(_graph_components(
            verts, [[v for v, _ in parent.facets(f)] for f in boundary])) != 1:
        return "boundary is not a single cycle"
    if boundary | verts != rim:
        return "boundary differs from the image of the boundary cycle"
    h = homology_of(C)
    if h.euler != 1 or not h.reduced_trivial():
        return f"not a disc (euler {h.euler}, betti {list(h.betti)})"
    return None


def verify_tree_embedding(t: TreeEmbedding, k: Regular2Complex) -> VerifierReport:
    ws: list[Witness] = []
    for name, g in (("tree1", t.tree1), ("tree2", t.tree2)):
        if not g.is_tree():
            ws.append(Witness(name, "not a tree"))
    parent = ProductComplex([t.tree1, t.tree2])
    try:
        ProductSubcomplex(parent, t.image.cells)
    except ValueError as exc:
        ws.append(Witness("image", f"not face-closed: {exc}"))
    owners = defaultdict(list)
    for c, cells in t.assignment.items():
        for x in cells:
            owners[x].append(c)
    for x, cs in sorted(owners.items()):
        if len(cs) > 1:
            ws.append(Witness(cell_label(x), f"assigned to several cells: {sorted(cs)}"))
    missing = set(k.cells()) - set(t.assignment)
    for c in sorted(missing):
        ws.append(Witness(c, "no image"))
    if set(owners) != set(t.image.cells):
        extra = set(t.image.cells) ^ set(owners)
        ws.append(Witness(cell_label(min(extra)), "assignment and image cells differ"))
    if ws:
        return VerifierReport(False, tuple(ws))

    def clos(c):
        return closure(parent, t.assignment[c]).cells

    vimg = {}
    for v in k.vertices:
        cells = t.assignment[v]
        if len(cells) != 1 or parent.dim(next(iter(cells))) != 0:
            ws.append(Witness(v, "vertex image is not a single vertex"))
        else:
            vimg[v] = next(iter(cells))
    for e, (a, b) in k.edges.items():
        C = clos(e)
        edges = [x for x in C if parent.dim(x) == 1]
        if any(parent.dim(x) > 1 for x in C) or not edges:
            ws.append(Witness(e, "edge image is not an edge path"))
            continue
        deg = Counter(v for x in edges for v, _ in parent.facets(x))
        ends = {v for v, d in deg.items() if d == 1}
        verts = {x for x in C if parent.dim(x) == 0}
        if (any(d > 2 for d in deg.values()) or ends != {vimg.get(a), vimg.get(b)}
                or len(_graph_components(verts, [[v for v, _ in parent.facets(x)] for x in edges])) != 1
                or len(verts) != len(edges) + 1):
            ws.append(Witness(e, "edge image is not a path between its endpoint images"))
    for f, bd in k.faces.items():
        rim = set()
        for e, _ in bd:
            rim |= clos(e)
        why = _disc_problem(parent, t.assignment[f] | rim, rim)
        if why:
            ws.append(Witness(f, why))
    h = homology_of(t.image)
    if not h.reduced_trivial():
        ws.append(Witness("image", f"reduced homology nontrivial: betti {list(h.betti)}, "
                                   f"torsion {[list(x) for x in h.torsion]}"))
    elif not greedy_collapse(to_regular2(t.image)).collapsed_to_point:
        ws.append(Witness("image", "greedy collapse does not reach a point"))
    return VerifierReport(not ws, tuple(ws))
