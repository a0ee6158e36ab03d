"""Integrals, the normalized Frobenius pair (t, phi) of a finite-dimensional
Hopf algebra, and the Frobenius system of the unital smash-product
subalgebra over the base algebra of a partial action.

The construction of the trace form and casimir element needs the
action's unit images h.1 to be central; that hypothesis is re-imposed
here even though actions themselves never require it, and is checked
exactly before anything is built.
"""

from __future__ import annotations

from typing import Optional

from .exactlin import Matrix, Subspace, kernel_basis, kron, perm_rows, vstack
from .presentations import HopfPresentation
from .actions import ActionMap, SmashData, build_smash
from .quotients import TensorOverSub
from .report import (
    AxiomReport,
    Check,
    InternalConsistencyError,
    PreconditionError,
    compare_maps,
)


class IntegralSpace:
    """Solution space of the (left) integral conditions, in H or its dual."""

    def __init__(self, side: str, basis: Subspace):
        self.side = side
        self.basis = basis

    @property
    def dim(self) -> int:
        return self.basis.dim

    def __repr__(self):
        return f"IntegralSpace(side = {self.side}, dim = {self.dim})"


def integrals(h: HopfPresentation, side: str = "H") -> IntegralSpace:
    """Exact basis of left integrals in H (side 'H') or in H* (side 'H*')."""
    m, F = h.dim, h.field
    i_m = Matrix.identity(m, F)
    if side == "H":
        blocks = []
        for i in range(m):
            basis_vec = Matrix.basis_column(m, i, F)
            eps_i = h.counit.entry(0, i)
            blocks.append(h.algebra.left_mult(basis_vec) - i_m.scale(eps_i))
        return IntegralSpace("H", kernel_basis(vstack(blocks)))
    if side == "H*":
        # phi is a left integral in the dual iff h_1 phi(h_2) = phi(h) 1_H.
        rows = []
        for s in range(m):
            for u in range(m):
                row = []
                for v in range(m):
                    coeff = h.coalgebra.comult_coeff(s, u, v)
                    if v == s:
                        coeff = F.sub(coeff, h.unit.entry(u, 0))
                    row.append(coeff)
                rows.append(row)
        return IntegralSpace("H*", kernel_basis(Matrix(F, rows)))
    raise ValueError(f"unknown side {side!r}")


class FrobeniusData:
    """A left integral t and dual left integral phi with pairing one."""

    def __init__(self, hopf: HopfPresentation, t: Matrix, phi: Matrix, sbar: Matrix):
        self.hopf = hopf
        self.t = t
        self.phi = phi
        self.sbar = sbar
        self.pairing = hopf.field.one()

    def phi_row(self) -> Matrix:
        return self.phi.transpose()

    def casimir_element(self) -> Matrix:
        """The element t_2 (x) sbar(t_1) of H (x) H."""
        m, F = self.hopf.dim, self.hopf.field
        dt = self.hopf.comult @ self.t
        swapped = perm_rows(dt, [m, m], [1, 0])
        return kron(Matrix.identity(m, F), self.sbar) @ swapped

    def __repr__(self):
        return f"FrobeniusData(dim H = {self.hopf.dim})"


def frobenius_pair(h: HopfPresentation) -> FrobeniusData:
    """Normalize integrals t, phi with <phi, t> = 1 and verify the two
    structural identities of the induced Frobenius system of H.

    phi is the side that gets rescaled, so t stays the canonical solver
    output.  Both identities are theorem consequences; a failure after
    successful normalization signals a bug, not bad data.
    """
    m, F = h.dim, h.field
    space_t = integrals(h, "H")
    space_phi = integrals(h, "H*")
    if space_t.dim != 1 or space_phi.dim != 1:
        raise PreconditionError(
            "integrals-rank-one",
            f"integral spaces have dims {space_t.dim}, {space_phi.dim}",
        )
    t = space_t.basis.basis.col(0)
    phi0 = space_phi.basis.basis.col(0)
    pairing = (phi0.transpose() @ t).entry(0, 0)
    if F.is_zero(pairing):
        raise PreconditionError("pairing-nonzero", "the integral pairing degenerates")
    phi = phi0.scale(F.inv(pairing))
    sbar = h.inverse_antipode()
    fd = FrobeniusData(h, t, phi, sbar)

    i_m = Matrix.identity(m, F)
    dt = h.comult @ t
    phi_row = fd.phi_row()
    left = sbar @ (kron(i_m, phi_row) @ dt)
    right = kron(phi_row @ sbar, i_m) @ dt
    if left != h.unit or right != h.unit:
        raise InternalConsistencyError("Frobenius pair identity (trace of the casimir) failed")

    q = fd.casimir_element()
    lhs = kron(i_m, h.mult) @ kron(q, i_m)
    rhs = kron(h.mult, i_m) @ kron(i_m, q)
    if lhs != rhs:
        raise InternalConsistencyError("casimir translation identity failed")
    return fd


def check_cocommutativity_534(h: HopfPresentation, t: Matrix) -> Check:
    """Exact middle-legs symmetry of the triple coproduct of t."""
    m, F = h.dim, h.field
    v2 = h.comult @ t
    v3 = kron(h.comult, Matrix.identity(m, F)) @ v2
    v4 = kron(h.comult, Matrix.identity(m * m, F)) @ v3
    swapped = perm_rows(v4, [m, m, m, m], [0, 2, 1, 3])
    return compare_maps("5.3.4", v4, swapped, [], [m, m, m, m])


class FrobeniusSystem:
    """Trace form and casimir element of the unital smash subalgebra."""

    def __init__(self, action: ActionMap, data: FrobeniusData, smash: SmashData,
                 nu: Matrix, casimir: Matrix, square: TensorOverSub, report: AxiomReport):
        self.action = action
        self.data = data
        self.smash = smash
        self.nu = nu
        self.casimir = casimir
        self.square = square
        self.report = report

    def __repr__(self):
        return f"FrobeniusSystem(dim base = {self.action.n}, dim ring = {self.smash.underline_dim})"


def build_frobenius_system(a: ActionMap, fd: FrobeniusData) -> FrobeniusSystem:
    """Materialize (trace, casimir) for the unital summand of A#H and verify
    the three Frobenius-system identities exactly."""
    if not isinstance(a.hopf, HopfPresentation) or not a.hopf.tensor_eq(fd.hopf):
        raise PreconditionError("matching-hopf", "the pair was computed for a different Hopf algebra")
    if not a.classification().is_partial:
        raise PreconditionError("partial", "the Frobenius system needs a partial action")
    n, m, F = a.n, a.m, a.field
    for j in range(m):
        v = a.h_dot_one.col(j)
        if a.algebra.left_mult(v) != a.algebra.right_mult(v):
            raise PreconditionError("central-unit-images", f"h.1 is not central for basis index {j}")
    coco = check_cocommutativity_534(fd.hopf, fd.t)
    if not coco.passed:
        raise PreconditionError("5.3.4", f"integral fails middle-legs symmetry at {coco.witness}")

    smash = build_smash(a)
    u = smash.underline.basis
    d = u.cols
    i_d = Matrix.identity(d, F)
    i_n = Matrix.identity(n, F)
    mult_u = smash.underline_algebra.mult
    eta_u = smash.pi_coords @ smash.eta
    lact = mult_u @ kron(eta_u, i_d)
    ract = mult_u @ kron(i_d, eta_u)
    square = TensorOverSub(ract, lact, n)

    nu = kron(i_n, fd.phi_row()) @ u

    ins = smash.pi_coords @ kron(a.algebra.unit, Matrix.identity(m, F))
    casimir = square.project(kron(ins, ins) @ fd.casimir_element())

    checks = []
    rep = square.section @ casimir
    witness = None
    for s in range(d):
        basis_s = Matrix.basis_column(d, s, F)
        left_mul = mult_u @ kron(basis_s, i_d)
        right_mul = mult_u @ kron(i_d, basis_s)
        lhs = square.project(kron(left_mul, i_d) @ rep)
        rhs = square.project(kron(i_d, right_mul) @ rep)
        if lhs != rhs:
            witness = (s,)
            break
    checks.append(Check("casimir-commutes", witness is None, witness))

    checks.append(
        compare_maps("trace-left-linear", nu @ lact, a.algebra.mult @ kron(i_n, nu), [n, d], [n])
    )
    checks.append(
        compare_maps("trace-right-linear", nu @ ract, a.algebra.mult @ kron(nu, i_n), [d, n], [n])
    )

    unit_u = smash.underline_algebra.unit
    left_counit = lact @ kron(nu, i_d) @ rep
    right_counit = ract @ kron(i_d, nu) @ rep
    checks.append(compare_maps("counit-left", left_counit, unit_u, [], [d]))
    checks.append(compare_maps("counit-right", right_counit, unit_u, [], [d]))

    return FrobeniusSystem(a, fd, smash, nu, casimir, square, AxiomReport(checks))
