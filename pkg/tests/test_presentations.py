"""Structure-constant presentations: verifiers, builders, duality twists."""

from __future__ import annotations

import pytest

from hopf_partial import (
    AlgebraPresentation,
    CayleyTable,
    Field,
    Matrix,
    QQ,
    build_sweedler4,
    cop,
    dual_hopf,
    group_algebra,
    op,
    verify,
)
from hopf_partial.report import PreconditionError


def all_small_groups():
    """One Cayley table per isomorphism class of order at most 8."""
    c = CayleyTable.cyclic
    return {
        "Z1": c(1), "Z2": c(2), "Z3": c(3), "Z4": c(4),
        "V4": CayleyTable.direct_product(c(2), c(2)),
        "Z5": c(5), "Z6": c(6), "S3": CayleyTable.symmetric3(),
        "Z7": c(7), "Z8": c(8),
        "Z4xZ2": CayleyTable.direct_product(c(4), c(2)),
        "Z2^3": CayleyTable.direct_product(CayleyTable.direct_product(c(2), c(2)), c(2)),
        "D4": CayleyTable.dihedral(4),
        "Q8": CayleyTable.quaternion8(),
    }


@pytest.mark.parametrize("name", sorted(all_small_groups()))
def test_group_algebra_hopf_axioms(name):
    h = group_algebra(all_small_groups()[name], QQ)
    assert verify(h).passed


def test_group_algebra_over_prime_fields():
    for p in (3, 5, 7):
        h = group_algebra(CayleyTable.cyclic(2), Field.prime(p))
        assert verify(h).passed


def test_z2_antipode_fixes_both_elements(kz2):
    assert kz2.antipode == Matrix.identity(2, QQ)


def test_z3_antipode_swaps_generators(kz3):
    # S(g) = g^2 and S(g^2) = g.
    assert kz3.antipode == Matrix(QQ, [[1, 0, 0], [0, 0, 1], [0, 1, 0]])


def test_cayley_validation_rejects_broken_tables():
    with pytest.raises(ValueError):
        CayleyTable([[0, 1], [1, 1]])  # not associative / no inverses
    with pytest.raises(ValueError):
        CayleyTable([[1, 0], [0, 0]])  # no identity behaves correctly
    with pytest.raises(ValueError):
        CayleyTable([[0, 1], [2, 0]])  # out of range


def test_sweedler_axioms_and_coproduct_shape(sweedler):
    assert verify(sweedler).passed
    # The skew-primitive generator has exactly two coproduct terms.
    x = Matrix.basis_column(4, 2, QQ)
    dx = sweedler.comult @ x
    nonzero = [i for i in range(16) if dx.entry(i, 0) != 0]
    assert len(nonzero) == 2
    # counit values on the grouplike and skew-primitive generators.
    assert sweedler.counit.entry(0, 1) == 1
    assert sweedler.counit.entry(0, 2) == 0


def test_sweedler_antipode_solved_not_hardcoded(sweedler):
    # S(c) = c, S(x) = -cx, S(cx) = x, and S^2 is not the identity.
    s = sweedler.antipode
    assert s @ Matrix.basis_column(4, 1, QQ) == Matrix.basis_column(4, 1, QQ)
    assert s @ Matrix.basis_column(4, 2, QQ) == Matrix.basis_column(4, 3, QQ).scale(-1)
    s2 = s @ s
    assert s2 != Matrix.identity(4, QQ)
    assert s2 @ Matrix.basis_column(4, 2, QQ) == Matrix.basis_column(4, 2, QQ).scale(-1)


def test_sweedler_rejects_characteristic_two():
    with pytest.raises(PreconditionError):
        build_sweedler4(Field.prime(2))


def test_sweedler_over_f3():
    assert verify(build_sweedler4(Field.prime(3))).passed


def test_mutated_multiplication_fails_with_witness(kz3):
    tensor = [[[kz3.algebra.mult_coeff(i, j, k) for k in range(3)] for j in range(3)]
              for i in range(3)]
    tensor[1][2][1] = QQ.coerce(1)  # g*g^2 picks up a spurious g term
    broken = AlgebraPresentation.from_tensor(QQ, tensor, [1, 0, 0])
    report = broken.verify()
    assert not report.passed
    bad = report["associativity"]
    assert not bad.passed and len(bad.witness) == 4


def test_dual_of_z2_is_two_orthogonal_idempotents(kz2):
    d = dual_hopf(kz2)
    assert verify(d).passed
    e0 = Matrix.basis_column(2, 0, QQ)
    e1 = Matrix.basis_column(2, 1, QQ)
    assert d.algebra.product(e0, e0) == e0
    assert d.algebra.product(e1, e1) == e1
    assert d.algebra.product(e0, e1).is_zero_matrix()


def test_double_dual_and_double_cop_are_identities(sweedler, kz3):
    for h in (sweedler, kz3):
        assert dual_hopf(dual_hopf(h)).tensor_eq(h)
        assert cop(cop(h)).tensor_eq(h)
        assert op(op(h)).tensor_eq(h)


def test_dual_of_op_is_cop_of_dual(sweedler, kz2, kz3):
    for h in (sweedler, kz2, kz3):
        assert dual_hopf(op(h)).tensor_eq(cop(dual_hopf(h)))


def test_antipode_involution_on_commutative_and_cocommutative(kz2, kz3):
    groups = [kz2, kz3, group_algebra(CayleyTable.symmetric3(), QQ)]
    for h in groups + [dual_hopf(g) for g in groups]:
        assert h.antipode @ h.antipode == Matrix.identity(h.dim, h.field)


def test_verify_reports_every_axiom_kind(sweedler):
    names = {c.name for c in verify(sweedler)}
    assert {"associativity", "coassociativity", "comult-multiplicative",
            "antipode-left", "antipode-right"} <= names


def test_twists_of_verified_hopf_still_verify(sweedler):
    assert verify(cop(sweedler)).passed
    assert verify(op(sweedler)).passed
    assert verify(dual_hopf(sweedler)).passed
