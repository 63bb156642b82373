"""Cell complexes in products of graphs: exact homology, manifold checks,
projection calculus, collapses and tree embeddings.
"""

from .abelian import FgAbGroup, GroupHom, IntegerMatrix, smith_normal_form, tensor
from .collapse import (
    classify_core,
    exhaustive_collapsibility,
    free_face_pairs,
    greedy_collapse,
    tree_embed,
    verify_tree_embedding,
)
from .complexes import (
    Graph1Complex,
    InvalidComplexError,
    ProductComplex,
    ProductSubcomplex,
    Regular2Complex,
    closure,
    from_json,
    to_regular2,
)
from .homology import homology_of, surface_report
from .projection import (
    circle_projection_set,
    fiber_complex,
    product_decomposition,
    project,
    theta_decompose,
)
from .verify import (
    closed_surface_check,
    free_edges,
    pseudo_manifold_check,
    ramified_manifold_check,
)

__version__ = "0.1.0"

__all__ = [
    "FgAbGroup", "GroupHom", "IntegerMatrix", "smith_normal_form", "tensor",
    "classify_core", "exhaustive_collapsibility", "free_face_pairs", "greedy_collapse",
    "tree_embed", "verify_tree_embedding",
    "Graph1Complex", "InvalidComplexError", "ProductComplex", "ProductSubcomplex",
    "Regular2Complex", "closure", "from_json", "to_regular2",
    "homology_of", "surface_report",
    "circle_projection_set", "fiber_complex", "product_decomposition", "project",
    "theta_decompose",
    "closed_surface_check", "free_edges", "pseudo_manifold_check", "ramified_manifold_check",
]
