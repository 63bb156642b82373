import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from graphprod import oracles
from graphprod.abelian import (
    FgAbGroup,
    GroupHom,
    IntegerMatrix,
    TRIVIAL,
    Z,
    cokernel,
    elementary_divisors,
    from_cyclic_orders,
    hom_from_rows,
    induced_tensor_hom,
    random_group,
    random_hom,
    smith_normal_form,
    tensor,
    tensor_power,
    tensor_power_check,
    unimodular_inverse,
)

small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def cyc(*orders):
    return from_cyclic_orders(orders)[0]


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_snf_factorization(rows):
    A = IntegerMatrix.from_rows(rows)
    s = smith_normal_form(A)
    assert s.U @ A @ s.V == s.D
    assert abs(s.U.det()) == 1 and abs(s.V.det()) == 1
    assert s.U @ s.U_inverse == IntegerMatrix.identity(A.rows)
    d = s.diagonal
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert d[:len(nz)] == nz  # zeros trail
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    for i in range(s.D.rows):
        for j in range(s.D.cols):
            if i != j:
                assert s.D[i, j] == 0


@given(small_matrices)
@settings(max_examples=100, deadline=None)
def test_snf_diagonal_matches_sympy(rows):
    ours = [x for x in smith_normal_form(IntegerMatrix.from_rows(rows)).diagonal if x]
    ref = sympy_snf(Matrix(rows), domain=ZZ)
    theirs = sorted(abs(int(ref[i, i])) for i in range(min(ref.shape)) if ref[i, i] != 0)
    assert ours == theirs


@given(small_matrices)
@settings(max_examples=100, deadline=None)
def test_sparse_divisors_match_dense(rows):
    A = IntegerMatrix.from_rows(rows)
    entries = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
    dense = [x for x in smith_normal_form(A).diagonal if x]
    assert elementary_divisors(entries, A.rows, A.cols) == dense


def test_known_forms():
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])).diagonal == [2, 6, 12]
    assert smith_normal_form(IntegerMatrix.zeros(2, 3)).rank == 0
    assert str(cokernel(IntegerMatrix.from_rows([[2, 0], [0, 3]]))) == "Z/6"
    assert str(cokernel(IntegerMatrix.from_rows([[2], [0]]))) == "Z + Z/2"


def test_unimodular_inverse():
    A = IntegerMatrix.from_rows([[2, 1], [1, 1]])
    assert A @ unimodular_inverse(A) == IntegerMatrix.identity(2)
    with pytest.raises(ValueError):
        unimodular_inverse(IntegerMatrix.from_rows([[2, 0], [0, 1]]))


def test_group_validation_and_printing():
    with pytest.raises(ValueError):
        FgAbGroup(0, (4, 6))
    with pytest.raises(ValueError):
        FgAbGroup(0, (1,))
    assert str(TRIVIAL) == "0"
    assert str(FgAbGroup(2, (2,))) == "Z^2 + Z/2"
    assert cyc(4, 6) == FgAbGroup(0, (2, 12))
    assert cyc(0, 1, 3) == FgAbGroup(1, (3,))


def test_tensor_examples():
    assert tensor(cyc(4), cyc(6)) == cyc(2)
    assert tensor(Z, cyc(5)) == cyc(5)
    assert tensor(Z, Z) == Z
    assert tensor(cyc(2), cyc(3)) == TRIVIAL
    assert tensor_power(cyc(0, 2), 2) == cyc(0, 2, 2, 2)
    with pytest.raises(ValueError):
        tensor_power(Z, 0)


def test_ill_defined_hom_rejected():
    with pytest.raises(ValueError):
        hom_from_rows(cyc(2), Z, [[1]])
    with pytest.raises(ValueError):
        hom_from_rows(cyc(4), cyc(6), [[1]])
    f = hom_from_rows(cyc(4), cyc(6), [[3]])
    assert f.nontrivial


def test_multiplication_by_two():
    f = hom_from_rows(Z, Z, [[2]])
    assert not induced_tensor_hom(f, cyc(2)).nontrivial
    assert induced_tensor_hom(f, cyc(4)).nontrivial
    assert induced_tensor_hom(f, Z).nontrivial
    rep = tensor_power_check(f, cyc(4), 3)
    assert rep.holds and rep.base_nontrivial and rep.power_nontrivial


@given(st.integers(0, 10_000))
@settings(max_examples=150, deadline=None)
def test_tensor_hom_agrees_with_cyclic_oracle(seed):
    rng = random.Random(seed)
    A, B, G = random_group(rng), random_group(rng), random_group(rng)
    f = random_hom(rng, A, B)
    k = rng.randint(1, 3)
    rep = tensor_power_check(f, G, k)
    assert rep.base_nontrivial == oracles.tensor_hom_nonzero(f, G)
    assert rep.power_nontrivial == oracles.tensor_hom_nonzero(f, G, k)
    assert rep.holds


def test_random_hom_is_well_defined():
    rng = random.Random(0)
    for _ in range(200):
        A, B = random_group(rng), random_group(rng)
        f = random_hom(rng, A, B)
        assert isinstance(f, GroupHom) and f.ill_defined_generator() is None
