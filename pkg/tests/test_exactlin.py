"""Exact linear algebra substrate: worked examples plus property tests."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopf_partial.exactlin import (
    Field,
    FieldMismatchError,
    Matrix,
    QQ,
    Subspace,
    hstack,
    image_basis,
    inverse,
    kernel_basis,
    kron,
    leg_perm,
    perm_cols,
    perm_rows,
    rref,
    solve,
    unflatten,
)

F2 = Field.prime(2)
F5 = Field.prime(5)


def mat(rows, field=QQ):
    return Matrix(field, rows)


def col(values, field=QQ):
    return Matrix.column(values, field)


# -- rref ---------------------------------------------------------------------


def test_rref_identity():
    m = Matrix.identity(2, QQ)
    r, rank, pivots = rref(m)
    assert r == m and rank == 2 and pivots == (0, 1)


def test_rref_proportional_rows():
    r, rank, pivots = rref(mat([[1, 2], [2, 4]]))
    assert r == mat([[1, 2], [0, 0]])
    assert rank == 1 and pivots == (0,)


def test_rref_mod2():
    # Hand elimination over F_2: second row minus first is (0, 1), then
    # clearing upwards leaves the identity.
    r, rank, pivots = rref(mat([[1, 1], [1, 2]], F2))
    assert r == Matrix.identity(2, F2)
    assert rank == 2 and pivots == (0, 1)


def test_rref_idempotent_on_samples():
    samples = [
        mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]]),
        mat([["1/2", 1], [3, "2/3"]]),
        mat([[1, 1], [1, 2]], F2),
        Matrix.zeros(3, 2, QQ),
    ]
    for m in samples:
        r1, _, _ = rref(m)
        r2, _, _ = rref(r1)
        assert r1 == r2


# -- kernel ---------------------------------------------------------------------


def test_kernel_of_identity_is_zero():
    assert kernel_basis(Matrix.identity(4, QQ)).dim == 0


def test_kernel_of_zero_matrix_is_everything():
    k = kernel_basis(Matrix.zeros(3, 3, QQ))
    assert k.dim == 3 and k == Subspace.full(3, QQ)


def test_kernel_sum_of_coordinates():
    k = kernel_basis(mat([[1, 1]]))
    assert k.dim == 1
    assert k.contains(col([1, -1]))
    assert not k.contains(col([1, 1]))


# -- solve ----------------------------------------------------------------------


def test_solve_identity():
    b = col([3, "1/2", -2])
    assert solve(Matrix.identity(3, QQ), b) == b


def test_solve_free_variable_convention():
    assert solve(mat([[1, 1]]), col([2])) == col([2, 0])


def test_solve_inconsistent_returns_none():
    assert solve(mat([[1], [1]]), col([0, 1])) is None


# -- kron -------------------------------------------------------------------------


def test_kron_identities():
    assert kron(Matrix.identity(2, QQ), Matrix.identity(3, QQ)) == Matrix.identity(6, QQ)


def test_kron_scalar_factor():
    m = mat([[1, 2], [3, 4]])
    assert kron(mat([["1/2"]]), m) == m.scale("1/2")


def test_kron_direct_expansion():
    swap = mat([[0, 1], [1, 0]])
    assert kron(swap, mat([[2]])) == mat([[0, 2], [2, 0]])


def test_kron_field_mismatch():
    with pytest.raises(FieldMismatchError):
        kron(Matrix.identity(2, QQ), Matrix.identity(2, F2))


# -- subspaces ---------------------------------------------------------------------


def test_subspace_intersection_of_transverse_lines():
    u = Subspace.from_span(col([1, 1]))
    v = Subspace.from_span(col([1, -1]))
    assert u.intersect(v).dim == 0
    assert u.intersect(u) == u


def test_subspace_sum_of_axes():
    e1 = Subspace.from_span(col([1, 0]))
    e2 = Subspace.from_span(col([0, 1]))
    assert e1.sum_with(e2) == Subspace.full(2, QQ)


def test_subspace_canonical_basis_is_reduced_column_echelon():
    s = Subspace.from_span(hstack([col([2, 4, 0]), col([1, 2, 1])]))
    basis = s.basis
    assert s.dim == 2
    # Pivot rows strictly increase and pivots are 1 with zeros elsewhere.
    pivots = []
    for j in range(basis.cols):
        i = next(i for i in range(basis.rows) if basis.entry(i, j) != 0)
        assert basis.entry(i, j) == 1
        pivots.append(i)
    assert pivots == sorted(pivots)


def test_subspace_membership_mod5():
    s = Subspace.from_span(col([1, 2], F5))
    assert s.contains(col([3, 6], F5))
    assert not s.contains(col([1, 0], F5))


# -- property tests -----------------------------------------------------------------

small_entries = st.integers(min_value=-3, max_value=3)


def _matrix_strategy(field):
    return st.integers(min_value=1, max_value=4).flatmap(
        lambda r: st.integers(min_value=1, max_value=4).flatmap(
            lambda c: st.lists(
                st.lists(small_entries, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: Matrix(field, rows))
        )
    )


@settings(max_examples=60, deadline=None)
@given(_matrix_strategy(QQ))
def test_rank_nullity(m):
    _, rank, _ = rref(m)
    assert rank + kernel_basis(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(_matrix_strategy(F5))
def test_rank_nullity_mod5(m):
    _, rank, _ = rref(m)
    assert rank + kernel_basis(m).dim == m.cols


@settings(max_examples=40, deadline=None)
@given(_matrix_strategy(QQ))
def test_rref_idempotent_property(m):
    r, _, _ = rref(m)
    assert rref(r)[0] == r


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=1, max_value=3),
    st.data(),
)
def test_solve_recovers_vector_for_invertible(n, data):
    rows = data.draw(
        st.lists(st.lists(small_entries, min_size=n, max_size=n), min_size=n, max_size=n)
    )
    m = Matrix(QQ, rows)
    if inverse(m) is None:
        return
    v = Matrix.column(data.draw(st.lists(small_entries, min_size=n, max_size=n)), QQ)
    assert solve(m, m @ v) == v


@settings(max_examples=30, deadline=None)
@given(_matrix_strategy(QQ), _matrix_strategy(QQ), _matrix_strategy(QQ))
def test_kron_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=30, deadline=None)
@given(st.permutations([0, 1, 2]), st.data())
def test_leg_perm_matches_row_and_column_shuffles(perm, data):
    dims = data.draw(st.lists(st.integers(1, 3), min_size=3, max_size=3))
    total = dims[0] * dims[1] * dims[2]
    rows = data.draw(
        st.lists(st.lists(small_entries, min_size=2, max_size=2), min_size=total, max_size=total)
    )
    m = Matrix(QQ, rows)
    lp = leg_perm(dims, perm, QQ)
    assert perm_rows(m, dims, perm) == lp @ m
    mt = m.transpose()
    assert perm_cols(mt, dims, perm) == mt @ lp


def test_unflatten_convention():
    assert unflatten(7, [2, 2, 2]) == (1, 1, 1)
    assert unflatten(5, [2, 3]) == (1, 2)


def test_image_basis_matches_rank():
    m = mat([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert image_basis(m).dim == rref(m)[1]
