"""Random graphs and product subcomplexes for property suites."""

from __future__ import annotations

import random

from .complexes import Graph1Complex, ProductComplex, ProductSubcomplex, closure


def random_graph(rng: random.Random, max_vertices: int = 6, max_edges: int | None = None,
                 prefix: str = "", connected: bool = False) -> Graph1Complex:
    """A loop-free multigraph; parallel edges allowed."""
    nv = rng.randint(1, max_vertices)
    vs = [f"{prefix}v{i}" for i in range(nv)]
    edges = []
    if connected:
        for i in range(1, nv):
            j = rng.randrange(i)
            edges.append((vs[j], vs[i]) if rng.random() < 0.5 else (vs[i], vs[j]))
    cap = max_edges if max_edges is not None else nv + 2
    if nv > 1:
        for _ in range(rng.randint(0, max(0, cap - len(edges)))):
            a, b = rng.sample(vs, 2)
            edges.append((a, b))
    return Graph1Complex(vs, [(f"{prefix}e{i}", t, h) for i, (t, h) in enumerate(edges)])


def random_product_subcomplex(rng: random.Random, factors: int = 2, max_vertices: int = 4,
                              density: float = 0.5, full: bool = False,
                              connected_factors: bool = False) -> ProductSubcomplex:
    """Closure of a random set of cells of a product of random graphs."""
    gs = [random_graph(rng, max_vertices, prefix=f"{chr(ord('x') + i) if i < 3 else 'w' + str(i)}",
                       connected=connected_factors) for i in range(factors)]
    parent = ProductComplex(gs)
    if full:
        return parent.full()
    cells = [c for c in parent.all_cells() if rng.random() < density]
    if not cells:
        cells = [next(parent.all_cells())]
    # keep only maximal-ish picks so the result is not always the full product
    top = max(parent.dim(c) for c in cells)
    picks = [c for c in cells if parent.dim(c) == top or rng.random() < 0.3]
    return closure(parent, picks)
