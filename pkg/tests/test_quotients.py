"""Balanced tensor products as explicit quotients."""

from __future__ import annotations

from hopf_partial import CayleyTable, Matrix, QQ, TensorOverSub, group_algebra, kron
from hopf_partial.catalog import diagonal_algebra


def _scalar_actions(algebra):
    """Right and left action of the one-dimensional subalgebra k.1."""
    n, F = algebra.dim, algebra.field
    i_n = Matrix.identity(n, F)
    ract = algebra.mult @ kron(i_n, algebra.unit)
    lact = algebra.mult @ kron(algebra.unit, i_n)
    return ract, lact


def test_tensor_over_base_field_is_full_tensor_product():
    kz2 = group_algebra(CayleyTable.cyclic(2), QQ)
    ract, lact = _scalar_actions(kz2.algebra)
    square = TensorOverSub(ract, lact, 1)
    assert square.dim == 4
    assert square.relations.dim == 0


def test_tensor_over_itself_collapses_to_the_algebra():
    a = diagonal_algebra(3, QQ)
    i_n = Matrix.identity(3, QQ)
    square = TensorOverSub(a.mult, a.mult, 3)
    assert square.dim == 3
    # a (x) 1 and 1 (x) a agree in the quotient.
    for i in range(3):
        e = Matrix.basis_column(3, i, QQ)
        assert square.pure(e, a.unit) == square.pure(a.unit, e)


def test_projection_section_identity():
    a = diagonal_algebra(2, QQ)
    square = TensorOverSub(a.mult, a.mult, 2)
    assert square.projection @ square.section == Matrix.identity(square.dim, QQ)
    # Projection kills every relation.
    assert (square.projection @ square.relations.basis).is_zero_matrix()


def test_induce_detects_unbalanced_maps():
    a = diagonal_algebra(2, QQ)
    square = TensorOverSub(a.mult, a.mult, 2)
    # The product map is balanced; a raw projection onto one leg is not.
    mult_induced, ok = square.induce(a.mult)
    assert ok
    first_leg = kron(Matrix.identity(2, QQ), Matrix(QQ, [[1, 1]]))
    _, ok = square.induce(first_leg)
    assert not ok
