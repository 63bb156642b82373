"""Independent reference computations.

Nothing here goes through the Smith normal form or the product-complex
machinery: ranks are taken over prime fields, the regular torus model builds
its own cubical boundaries, and tensor-induced maps are decided from cyclic
orders directly.
"""

from __future__ import annotations

import itertools
from math import comb, gcd

from .abelian import FgAbGroup, GroupHom
from .homology import ChainComplex

PRIMES = (2, 3, 1_000_003)


def rank_mod_p(entries: dict[tuple[int, int], int], nrows: int, ncols: int, p: int) -> int:
    rows: dict[int, dict[int, int]] = {}
    for (i, j), v in entries.items():
        v %= p
        if v:
            rows.setdefault(i, {})[j] = v
    pivots: dict[int, dict[int, int]] = {}  # pivot column -> normalized row
    for row in rows.values():
        row = dict(row)
        while row:
            j = min(row)
            if j not in pivots:
                inv = pow(row[j], p - 2, p)
                pivots[j] = {c: v * inv % p for c, v in row.items()}
                break
            piv, a = pivots[j], row[j]
            for c, v in piv.items():
                x = (row.get(c, 0) - a * v) % p
                if x:
                    row[c] = x
                else:
                    row.pop(c, None)
    return len(pivots)


def betti_mod_p(c: ChainComplex, p: int) -> list[int]:
    ranks = [0] + [rank_mod_p(D, c.dims[k], c.dims[k + 1], p)
                   for k, D in enumerate(c.boundaries)] + [0]
    return [c.dims[k] - ranks[k] - ranks[k + 1] for k in range(len(c.dims))]


def cycle_product_chain_complex(k: int, n: int, length: int = 3) -> ChainComplex:
    """Cells of ``(C_length)^k`` with at most ``n`` coordinates off the base vertex.

    A coordinate is ``("v", i)`` or ``("e", i)`` with ``∂("e", i) = v_{i+1} - v_i``;
    a product cell gets the Leibniz sign ``(-1)^(edges before)``.
    """
    base = ("v", 0)
    coords = [("v", i) for i in range(length)] + [("e", i) for i in range(length)]
    cells = [c for c in itertools.product(coords, repeat=k) if sum(x != base for x in c) <= n]
    by_dim: dict[int, list] = {}
    for c in cells:
        by_dim.setdefault(sum(x[0] == "e" for x in c), []).append(c)
    top = max(by_dim)
    index = {c: i for d in by_dim for i, c in enumerate(by_dim[d])}
    bds = []
    for d in range(1, top + 1):
        D: dict[tuple[int, int], int] = {}
        for j, c in enumerate(by_dim[d]):
            before = 0
            for pos, (kind, i) in enumerate(c):
                if kind != "e":
                    continue
                sign = -1 if before % 2 else 1
                for vi, s in (((i + 1) % length, 1), (i, -1)):
                    f = c[:pos] + (("v", vi),) + c[pos + 1:]
                    if f in index:
                        key = (index[f], j)
                        D[key] = D.get(key, 0) + sign * s
                before += 1
        bds.append({ij: v for ij, v in D.items() if v})
    return ChainComplex([len(by_dim[d]) for d in range(top + 1)], bds)


def torus_skeleton_betti_oracle(k: int, n: int, length: int = 3) -> list[int]:
    """Betti numbers of the ``n``-skeleton of ``T^k`` from the regular model, agreed over several primes."""
    c = cycle_product_chain_complex(k, n, length)
    answers = {tuple(betti_mod_p(c, p)) for p in PRIMES}
    if len(answers) != 1:
        raise AssertionError(f"prime-dependent answers {answers}: torsion present")
    return list(answers.pop())


def torus_skeleton_expected(k: int, n: int) -> list[int]:
    return [comb(k, i) for i in range(n + 1)]


def _hom_nonzero_on(f: GroupHom, orders) -> bool:
    m = f.matrix
    for col in range(f.domain.ngens):
        for row, b in enumerate(f.codomain.orders):
            x = m[row, col]
            if not x:
                continue
            for g in orders:
                mod = gcd(b, g)
                if mod == 0 or x % mod:
                    return True
    return False


def tensor_hom_nonzero(f: GroupHom, G: FgAbGroup, k: int = 1) -> bool:
    """Whether ``f ⊗ 1`` on ``G^{⊗k}`` is nonzero, from the cyclic orders of ``G``.

    ``f ⊗ 1`` sends ``a_i ⊗ g`` to ``Σ f_{ri} b_r ⊗ g`` and ``b_r ⊗ g`` has
    order ``gcd(b_r, |g|)``; cyclic summands of ``G^{⊗k}`` have orders the
    gcds of ``k``-tuples of orders of ``G`` (0 standing for infinite).
    """
    orders = {_tuple_order(t) for t in itertools.product(G.orders, repeat=k)}
    return _hom_nonzero_on(f, orders)


def _tuple_order(t) -> int:
    out = 0
    for x in t:
        out = gcd(out, x)
    return out
