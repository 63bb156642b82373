"""Exact integer linear algebra and finitely generated abelian groups.

Everything here works on Python integers, so there is no overflow and no
rounding.  The dense Smith normal form keeps the transforming matrices; the
sparse routine :func:`elementary_divisors` only returns the diagonal and is
what the homology code uses on large boundary matrices.

>>> cokernel(IntegerMatrix.from_rows([[2, 0], [0, 3]]))
FgAbGroup(free_rank=0, invariant_factors=(6,))
>>> str(tensor(FgAbGroup(0, (4,)), FgAbGroup(0, (6,))))
'Z/2'
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    """A dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entries length {len(self.entries)} != rows*cols = {self.rows * self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int | None = None,
                 cols: int | None = None) -> IntegerMatrix:
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            out[i][i] = v
        return cls.from_rows(out, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    @property
    def T(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows
        )

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            row = [0] * other.cols
            for k, x in enumerate(ai):
                if x:
                    bk = b[k]
                    for j in range(other.cols):
                        row[j] += x * bk[j]
            out.append(row)
        return IntegerMatrix.from_rows(out, other.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": list(self.entries)}


@dataclass(frozen=True)
class SmithForm:
    """``U @ source @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    source: IntegerMatrix
    U_inverse: IntegerMatrix | None = None

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _min_abs_position(m, t, rows, cols):
    best = None
    for i in rows:
        row = m[i]
        for j in cols:
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best[1], best[2]
    return None if best is None else (best[1], best[2])


def smith_normal_form(A: IntegerMatrix) -> SmithForm:
    """Smith normal form with transforming matrices.

    Pivots on the nonzero entry of least absolute value, scanning rows then
    columns, so the result is deterministic.
    """
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntegerMatrix.identity(m).to_rows()
    Ui = IntegerMatrix.identity(m).to_rows()  # kept equal to U^-1
    V = IntegerMatrix.identity(n).to_rows()

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]
        for row in Ui:
            row[i], row[k] = row[k], row[i]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]
        for row in Ui:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        pos = _min_abs_position(D, t, range(t, m), range(t, n))
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                # a smaller remainder now sits in row t or column t
                pos = _min_abs_position(D, t, range(t, m), [t])
                pos_r = _min_abs_position(D, t, [t], range(t, n))
                cand = [q for q in (pos, pos_r) if q is not None]
                i, j = min(cand, key=lambda q: abs(D[q[0]][q[1]]))
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
            for row in Ui:
                row[t] = -row[t]
    return SmithForm(
        IntegerMatrix.from_rows(U, m),
        IntegerMatrix.from_rows(D, n),
        IntegerMatrix.from_rows(V, n),
        A,
        IntegerMatrix.from_rows(Ui, m),
    )


def elementary_divisors(entries: Mapping[tuple[int, int], int], nrows: int, ncols: int) -> list[int]:
    """Nonzero Smith diagonal of a sparse integer matrix, in divisibility order.

    Unit pivots are eliminated sparsely (each contributes a divisor 1); the
    remaining block, usually tiny, goes through :func:`smith_normal_form`.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in entries.items():
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise IndexError((i, j))
        if v:
            rows.setdefault(i, {})[j] = v
            cols.setdefault(j, set()).add(i)

    ones = 0
    while True:
        pivot = None
        best = None
        for j in sorted(cols, key=lambda c: len(cols[c])):
            cj = len(cols[j])
            if best is not None and (cj - 1) * 1 >= best:
                break
            for i in cols[j]:
                if abs(rows[i][j]) == 1:
                    cost = (cj - 1) * (len(rows[i]) - 1)
                    if best is None or cost < best:
                        best, pivot = cost, (i, j)
                        if cost == 0:
                            break
            if best == 0:
                break
        if pivot is None:
            break
        r, c = pivot
        u = rows[r][c]
        prow = rows[r]
        for i in list(cols[c]):
            if i == r:
                continue
            f = rows[i][c] * u
            ri = rows[i]
            for j, v in prow.items():
                nv = ri.get(j, 0) - f * v
                if nv:
                    if j not in ri:
                        cols[j].add(i)
                    ri[j] = nv
                elif j in ri:
                    del ri[j]
                    cols[j].discard(i)
            if not ri:
                del rows[i]
        for j in prow:
            cols[j].discard(r)
            if not cols[j]:
                del cols[j]
        del rows[r]
        ones += 1

    rest: list[int] = []
    if rows:
        ri = sorted(rows)
        ci = sorted(cols)
        cidx = {c: k for k, c in enumerate(ci)}
        dense = [[0] * len(ci) for _ in ri]
        for a, i in enumerate(ri):
            for j, v in rows[i].items():
                dense[a][cidx[j]] = v
        rest = [d for d in smith_normal_form(IntegerMatrix.from_rows(dense, len(ci))).diagonal if d]
    return [1] * ones + rest


def matrix_rank(A: IntegerMatrix) -> int:
    return smith_normal_form(A).rank


def unimodular_inverse(A: IntegerMatrix) -> IntegerMatrix:
    """Exact inverse of a square integer matrix with determinant ±1."""
    n = A.rows
    if A.rows != A.cols:
        raise ValueError("inverse of a non-square matrix")
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A.to_rows())]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[k], m[piv] = m[piv], m[k]
        pk = m[k][k]
        m[k] = [x / pk for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    out = []
    for row in m:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in tail])
    return IntegerMatrix.from_rows(out, n)


# -- groups -----------------------------------------------------------------

@dataclass(frozen=True)
class FgAbGroup:
    """``Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_t`` with ``d_1 | d_2 | ... | d_t``.

    Generators are ordered torsion first, then free; :attr:`orders` lists the
    order of each generator with 0 standing for infinite order.
    """

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(d) for d in self.invariant_factors))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2, got {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {fs}")

    @classmethod
    def cyclic(cls, order: int) -> FgAbGroup:
        """``Z/order``; ``order == 0`` gives ``Z``."""
        return from_cyclic_orders([order])[0]

    @property
    def orders(self) -> tuple[int, ...]:
        return self.invariant_factors + (0,) * self.free_rank

    @property
    def ngens(self) -> int:
        return len(self.invariant_factors) + self.free_rank

    @property
    def rank(self) -> int:
        return self.free_rank

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank == 1:
            parts.insert(0, "Z")
        elif self.free_rank > 1:
            parts.insert(0, f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors)}


TRIVIAL = FgAbGroup()
Z = FgAbGroup(1)


@dataclass(frozen=True)
class Presentation:
    """A normalized group together with coordinate changes to and from it.

    ``to_normal`` (``group.ngens × m``) sends coordinates on the original ``m``
    generators to normal-form coordinates; ``from_normal`` goes back.
    """

    group: FgAbGroup
    to_normal: IntegerMatrix
    from_normal: IntegerMatrix


def present(relations: IntegerMatrix) -> Presentation:
    """Normalize ``Z^rows / (column span of relations)``."""
    m = relations.rows
    snf = smith_normal_form(relations)
    diag = snf.diagonal + [0] * max(0, m - len(snf.diagonal))
    keep = [i for i in range(m) if diag[i] != 1]
    factors = tuple(diag[i] for i in keep if diag[i] != 0)
    free = sum(1 for i in keep if diag[i] == 0)
    group = FgAbGroup(free, factors)
    U = snf.U.to_rows()
    Uinv = snf.U_inverse
    to_normal = IntegerMatrix.from_rows([U[i] for i in keep], m)
    from_normal = IntegerMatrix.from_rows(
        [[Uinv[r, i] for i in keep] for r in range(m)], len(keep)
    )
    return Presentation(group, to_normal, from_normal)


def from_cyclic_orders(orders: Sequence[int]) -> tuple[FgAbGroup, Presentation]:
    """Normalize ``⊕ Z/orders[i]`` (0 meaning ``Z``)."""
    return _from_cyclic_orders(tuple(abs(int(o)) for o in orders))


@lru_cache(maxsize=4096)
def _from_cyclic_orders(orders: tuple[int, ...]) -> tuple[FgAbGroup, Presentation]:
    rel = IntegerMatrix.diagonal(orders, len(orders), len(orders))
    pres = present(rel)
    return pres.group, pres


def cokernel(A: IntegerMatrix) -> FgAbGroup:
    """``Z^rows(A) / column span of A``."""
    snf = smith_normal_form(A)
    diag = snf.diagonal
    return FgAbGroup(A.rows - snf.rank, tuple(d for d in diag if d >= 2))


def _reduce(x: int, order: int) -> int:
    return x % order if order else x


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given on normal-form generators.

    ``matrix`` has one column per domain generator holding the image in
    codomain coordinates.
    """

    domain: FgAbGroup
    codomain: FgAbGroup
    matrix: IntegerMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.ngens, self.domain.ngens):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match "
                f"{self.codomain.ngens}x{self.domain.ngens}"
            )
        bad = self.ill_defined_generator()
        if bad is not None:
            raise ValueError(f"not well defined: generator {bad} of order "
                             f"{self.domain.orders[bad]} is sent outside the codomain relations")

    def ill_defined_generator(self) -> int | None:
        co = self.codomain.orders
        for i, d in enumerate(self.domain.orders):
            if d == 0:
                continue
            for j, e in enumerate(co):
                if _reduce(d * self.matrix[j, i], e):
                    return i
        return None

    @property
    def nontrivial(self) -> bool:
        co = self.codomain.orders
        return any(_reduce(self.matrix[j, i], co[j])
                   for i in range(self.domain.ngens) for j in range(len(co)))

    def to_json(self) -> dict:
        return {"domain": self.domain.to_json(), "codomain": self.codomain.to_json(),
                "matrix": self.matrix.to_json(), "nontrivial": self.nontrivial}


def _pair_orders(G: FgAbGroup, H: FgAbGroup) -> list[int]:
    return [math.gcd(a, b) for a in G.orders for b in H.orders]


def tensor(G: FgAbGroup, H: FgAbGroup) -> FgAbGroup:
    """``G ⊗ H`` from ``Z ⊗ C = C`` and ``Z/d ⊗ Z/e = Z/gcd(d, e)``."""
    return from_cyclic_orders(_pair_orders(G, H))[0]


def tensor_power(G: FgAbGroup, k: int) -> FgAbGroup:
    if k < 1:
        raise ValueError("tensor power needs k >= 1")
    out = G
    for _ in range(k - 1):
        out = tensor(out, G)
    return out


def induced_tensor_hom(f: GroupHom, G: FgAbGroup) -> GroupHom:
    """``f ⊗ 1_G`` written in the normal forms of both tensor products."""
    dom_group, dom = from_cyclic_orders(_pair_orders(f.domain, G))
    cod_group, cod = from_cyclic_orders(_pair_orders(f.codomain, G))
    g = G.ngens
    # on the pair bases a_i ⊗ g_l -> sum_j f[j, i] b_j ⊗ g_l
    na, nb = f.domain.ngens, f.codomain.ngens
    pair = [[0] * (na * g) for _ in range(nb * g)]
    for i in range(na):
        for j in range(nb):
            x = f.matrix[j, i]
            if x:
                for l in range(g):
                    pair[j * g + l][i * g + l] = x
    mid = IntegerMatrix.from_rows(pair, na * g)
    raw = cod.to_normal @ mid @ dom.from_normal
    co = cod_group.orders
    reduced = [[_reduce(raw[j, i], co[j]) for i in range(raw.cols)] for j in range(raw.rows)]
    return GroupHom(dom_group, cod_group, IntegerMatrix.from_rows(reduced, raw.cols))


@dataclass(frozen=True)
class TensorPowerReport:
    k: int
    base_nontrivial: bool
    power_nontrivial: bool
    counterexample: dict | None = field(default=None)

    @property
    def holds(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {"k": self.k, "base_nontrivial": self.base_nontrivial,
                "power_nontrivial": self.power_nontrivial, "holds": self.holds,
                "counterexample": self.counterexample}


def tensor_power_check(f: GroupHom, G: FgAbGroup, k: int) -> TensorPowerReport:
    """Compare ``f ⊗ 1_G`` with ``f ⊗ 1_{G^{⊗k}}``.

    For finitely generated ``G`` nonvanishing of the first forces nonvanishing
    of the second; a violation is returned with full matrices.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    base = induced_tensor_hom(f, G)
    power = induced_tensor_hom(f, tensor_power(G, k))
    bad = None
    if base.nontrivial and not power.nontrivial:
        bad = {"f": f.to_json(), "G": G.to_json(), "base": base.to_json(),
               "power": power.to_json()}
    return TensorPowerReport(k, base.nontrivial, power.nontrivial, bad)


theorem_a1_check = tensor_power_check


def random_group(rng, max_summands: int = 3, max_order: int = 12) -> FgAbGroup:
    """A random group with at most ``max_summands`` cyclic summands."""
    n = rng.randint(1, max_summands)
    orders = [rng.choice([0, rng.randint(2, max_order)]) for _ in range(n)]
    return from_cyclic_orders(orders)[0]


def random_hom(rng, A: FgAbGroup, B: FgAbGroup, bound: int = 5) -> GroupHom:
    """A random well-defined homomorphism with small entries.

    Entries are drawn from ``[-bound, bound]``; an entry that would break a
    torsion relation is scaled by ``e / gcd(d, e)`` and reduced mod ``e``.
    """
    rows = []
    for e in B.orders:
        row = []
        for d in A.orders:
            x = rng.randint(-bound, bound)
            if d:
                if e == 0:
                    x = 0
                elif (d * x) % e:
                    x = (x * (e // math.gcd(d, e))) % e
            row.append(x)
        rows.append(row)
    return GroupHom(A, B, IntegerMatrix.from_rows(rows, A.ngens))


def hom_from_rows(A: FgAbGroup, B: FgAbGroup, rows: Iterable[Iterable[int]]) -> GroupHom:
    return GroupHom(A, B, IntegerMatrix.from_rows([list(r) for r in rows], A.ngens))
