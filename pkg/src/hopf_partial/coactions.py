"""Coaction maps rho: A -> A (x) H, their axiom ladder and classification,
the induced corings on A (x) H, and relative Hopf modules.

Every equation is evaluated as an exact identity of matrices built by
composing rho with the structure tensors under the package tensor
convention.  Equation ids are short dotted strings ("2.1.1", ...); the
same ids key the classification report, so a failure always names the
axiom that broke.

Equation glossary (a, b range over A; subscripts are coproduct legs):

* 2.1.1  rho(ab) = rho(a) rho(b)                (multiplicativity)
* 2.1.2  rho(1) = 1 (x) 1                       (global unitality)
* 2.2.1  rho^2(a) = a0.10 (x) a1(1).11 (x) a1(2)  (coproduct compatibility
         up to rho(1); makes the induced coproduct right A-linear)
* 2.2.2  eps(a1) a0 = eps(11) 10 a              (projected counit is
         right A-linear)
* 2.2.3  eps(a1) a0 = a                         (counitality)
* 2.3.1  rho(1) = eps(11) 10 (x) 1_H
* 2.3.2  rho^2(a) = a0 (x) delta(a1)
* 2.5.1  rho(1) = eps(11) 10 (x) 12             (lax unitality)
* 2.5.2  rho(1) = eps(11') 10' 10 (x) 11
* 2.5.3  rho(1) = eps(11') 10 10' (x) 11
* 2.6.1  eps(11) 10 = 1
"""

from __future__ import annotations

from functools import cached_property
from typing import Dict, Optional

from .exactlin import (
    FieldMismatchError,
    Matrix,
    ShapeError,
    Subspace,
    image_basis,
    kron,
    perm_rows,
    solve,
)
from .presentations import AlgebraPresentation, BialgebraPresentation
from .quotients import TensorOverSub
from .report import (
    AxiomReport,
    Check,
    InternalConsistencyError,
    PreconditionError,
    compare_maps,
)

COACTION_EQUATIONS = (
    "2.1.1", "2.1.2", "2.2.1", "2.2.2", "2.2.3",
    "2.3.1", "2.3.2", "2.5.1", "2.5.2", "2.5.3", "2.6.1",
)

# The defining equation sets of the four classes.
COMODULE_SET = ("2.1.1", "2.1.2", "2.2.3", "2.3.2")
WEAK_SET = ("2.1.1", "2.2.2", "2.3.1", "2.3.2")
LAX_SET = ("2.1.1", "2.2.1", "2.2.2", "2.5.1")
PARTIAL_SET = ("2.1.1", "2.2.1", "2.2.3")


class CoactionMap:
    """A linear map A -> A (x) H as an nm x n matrix over the fixed bases."""

    def __init__(self, algebra: AlgebraPresentation, hopf: BialgebraPresentation, rho: Matrix):
        if algebra.field != hopf.field or rho.field != algebra.field:
            raise FieldMismatchError("coaction pieces over different fields")
        if rho.rows != algebra.dim * hopf.dim or rho.cols != algebra.dim:
            raise ShapeError(
                f"rho must be {algebra.dim * hopf.dim}x{algebra.dim}, got {rho.rows}x{rho.cols}"
            )
        self.algebra = algebra
        self.hopf = hopf
        self.rho = rho
        self.field = algebra.field
        self.n = algebra.dim
        self.m = hopf.dim
        self.nm = self.n * self.m

    # -- derived structure maps, all cached ----------------------------------

    @cached_property
    def tensor_algebra(self) -> AlgebraPresentation:
        """A (x) H with the componentwise product."""
        return self.algebra.tensor_with(self.hopf.algebra)

    @cached_property
    def mult_c(self) -> Matrix:
        return self.tensor_algebra.mult

    @cached_property
    def rho_one(self) -> Matrix:
        return self.rho @ self.algebra.unit

    @cached_property
    def ins_h(self) -> Matrix:
        """H -> A (x) H, h |-> 1 (x) h."""
        return kron(self.algebra.unit, Matrix.identity(self.m, self.field))

    @cached_property
    def ins_a(self) -> Matrix:
        """A -> A (x) H, a |-> a (x) 1."""
        return kron(Matrix.identity(self.n, self.field), self.hopf.unit)

    @cached_property
    def ract(self) -> Matrix:
        """Right action (A (x) H) (x) A -> A (x) H, c . a = c rho(a)."""
        return self.mult_c @ kron(Matrix.identity(self.nm, self.field), self.rho)

    @cached_property
    def lact(self) -> Matrix:
        """Left action A (x) (A (x) H) -> A (x) H by multiplication on the A leg."""
        return kron(self.algebra.mult, Matrix.identity(self.m, self.field))

    @cached_property
    def pi(self) -> Matrix:
        """Projection c |-> c . 1_A, i.e. right multiplication by rho(1)."""
        return self.mult_c @ kron(Matrix.identity(self.nm, self.field), self.rho_one)

    @cached_property
    def w(self) -> Matrix:
        """The element eps(11) 10 of A."""
        return kron(Matrix.identity(self.n, self.field), self.hopf.counit) @ self.rho_one

    @cached_property
    def eps_plain(self) -> Matrix:
        """A (x) eps : A (x) H -> A."""
        return kron(Matrix.identity(self.n, self.field), self.hopf.counit)

    @cached_property
    def eps_underline(self) -> Matrix:
        return self.eps_plain @ self.pi

    @cached_property
    def delta_c(self) -> Matrix:
        """The induced coproduct (pi (x) H)(A (x) delta) : C -> C (x) H."""
        i_m = Matrix.identity(self.m, self.field)
        i_n = Matrix.identity(self.n, self.field)
        return kron(self.pi, i_m) @ kron(i_n, self.hopf.comult)

    @cached_property
    def act_ch(self) -> Matrix:
        """Right action of A on C (x) H acting diagonally through rho."""
        i_ch = Matrix.identity(self.nm * self.m, self.field)
        spread = perm_rows(
            kron(i_ch, self.rho),
            [self.nm, self.m, self.n, self.m],
            [0, 2, 1, 3],
        )
        return kron(self.ract, self.hopf.mult) @ spread

    def classification(self) -> "ClassificationVerdict":
        if not hasattr(self, "_classification"):
            self._classification = classify_coaction(self)
        return self._classification

    def __repr__(self):
        return f"CoactionMap(dim A = {self.n}, dim H = {self.m} over {self.field})"


def _equation_sides(c: CoactionMap, eq_id: str):
    """LHS, RHS matrices plus domain/codomain leg dims for one equation."""
    n, m, F = c.n, c.m, c.field
    i_n = Matrix.identity(n, F)
    i_m = Matrix.identity(m, F)
    i_a = c.algebra
    if eq_id == "2.1.1":
        lhs = c.rho @ i_a.mult
        rhs = c.mult_c @ kron(c.rho, c.rho)
        return lhs, rhs, [n, n], [n, m]
    if eq_id == "2.1.2":
        return c.rho_one, kron(i_a.unit, c.hopf.unit), [], [n, m]
    if eq_id == "2.2.1":
        lhs = kron(c.rho, i_m) @ c.rho
        rhs = kron(c.pi, i_m) @ kron(i_n, c.hopf.comult) @ c.rho
        return lhs, rhs, [n], [n, m, m]
    if eq_id == "2.2.2":
        lhs = c.eps_plain @ c.rho
        rhs = i_a.mult @ kron(c.w, i_n)
        return lhs, rhs, [n], [n]
    if eq_id == "2.2.3":
        return c.eps_plain @ c.rho, i_n, [n], [n]
    if eq_id == "2.3.1":
        return c.rho_one, kron(c.w, c.hopf.unit), [], [n, m]
    if eq_id == "2.3.2":
        lhs = kron(c.rho, i_m) @ c.rho
        rhs = kron(i_n, c.hopf.comult) @ c.rho
        return lhs, rhs, [n], [n, m, m]
    if eq_id == "2.5.1":
        rho2_one = kron(c.rho, i_m) @ c.rho_one
        contract = kron(i_n, kron(c.hopf.counit, i_m))
        return c.rho_one, contract @ rho2_one, [], [n, m]
    if eq_id == "2.5.2":
        left_w = i_a.mult @ kron(c.w, i_n)
        return c.rho_one, kron(left_w, i_m) @ c.rho_one, [], [n, m]
    if eq_id == "2.5.3":
        right_w = i_a.mult @ kron(i_n, c.w)
        return c.rho_one, kron(right_w, i_m) @ c.rho_one, [], [n, m]
    if eq_id == "2.6.1":
        return c.w, i_a.unit, [], [n]
    raise KeyError(f"unknown coaction equation id {eq_id!r}")


def check_coaction_equation(c: CoactionMap, eq_id: str) -> Check:
    lhs, rhs, dom, cod = _equation_sides(c, eq_id)
    return compare_maps(eq_id, lhs, rhs, dom, cod)


class ClassificationVerdict:
    """Four class flags plus the full per-equation table."""

    def __init__(self, equations: Dict[str, Check], kind: str = "coaction"):
        self.equations = dict(equations)
        self.kind = kind
        if kind == "coaction":
            com, weak, lax, par = COMODULE_SET, WEAK_SET, LAX_SET, PARTIAL_SET
        else:
            from .actions import MODULE_SET, WEAK_ACTION_SET, LAX_ACTION_SET, PARTIAL_ACTION_SET

            com, weak, lax, par = MODULE_SET, WEAK_ACTION_SET, LAX_ACTION_SET, PARTIAL_ACTION_SET
        holds = lambda ids: all(self.equations[i].passed for i in ids)
        self.is_comodule_algebra = holds(com)
        self.is_weak = holds(weak)
        self.is_lax = holds(lax)
        self.is_partial = holds(par)
        self._consistency()

    def _consistency(self):
        ok = True
        if self.is_comodule_algebra and not (self.is_weak and self.is_partial):
            ok = False
        if self.is_weak and self.is_partial and not self.is_comodule_algebra:
            ok = False
        if self.is_partial and not self.is_lax:
            ok = False
        if self.is_weak and not self.is_lax:
            ok = False
        if not ok:
            raise InternalConsistencyError(
                f"classification lattice violated: {self.flags()} on {self.kind}"
            )

    def flags(self) -> dict:
        name = "comodule" if self.kind == "coaction" else "module"
        return {
            name: self.is_comodule_algebra,
            "weak": self.is_weak,
            "lax": self.is_lax,
            "partial": self.is_partial,
        }

    def to_dict(self) -> dict:
        return {
            "flags": self.flags(),
            "equations": {k: v.to_dict() for k, v in sorted(self.equations.items())},
        }

    def __repr__(self):
        return f"ClassificationVerdict({self.flags()})"


def classify_coaction(c: CoactionMap) -> ClassificationVerdict:
    eqs = {eq: check_coaction_equation(c, eq) for eq in COACTION_EQUATIONS}
    return ClassificationVerdict(eqs, kind="coaction")


# -- the induced coring -------------------------------------------------------


class CoringData:
    """The (possibly lax) coring on C = A (x) H induced by a coaction."""

    def __init__(self, coaction: CoactionMap):
        check = check_coaction_equation(coaction, "2.1.1")
        if not check.passed:
            raise PreconditionError("2.1.1", f"right action ill-defined, witness {check.witness}")
        self.coaction = coaction
        self.delta = coaction.delta_c
        self.eps = coaction.eps_plain
        self.eps_underline = coaction.eps_underline
        self.pi = coaction.pi
        if self.pi @ self.pi != self.pi:
            raise InternalConsistencyError("projection is not idempotent despite 2.1.1")
        self.underline = image_basis(self.pi)
        # Coordinates-in-underline of the projection of any C vector.
        coords = solve(self.underline.basis, self.pi)
        if coords is None:
            raise InternalConsistencyError("projection image escapes its own column space")
        self.pi_coords = coords

    @property
    def underline_dim(self) -> int:
        return self.underline.dim

    def __repr__(self):
        return f"CoringData(dim C = {self.coaction.nm}, dim C1 = {self.underline_dim})"


def build_coring(c: CoactionMap) -> CoringData:
    return CoringData(c)


def _counit_maps(d: CoringData, eps_mat: Matrix):
    """Left and right counit composites C -> C in the concrete model."""
    c = d.coaction
    i_m = Matrix.identity(c.m, c.field)
    i_c = Matrix.identity(c.nm, c.field)
    left = kron(eps_mat, i_m) @ d.delta
    right = c.ract @ kron(i_c, eps_mat @ c.ins_h) @ d.delta
    return left, right


def verify_coring_axioms(d: CoringData, mode: str = "lax", counit: Optional[str] = None) -> AxiomReport:
    """Check the coring axioms in the requested flavour.

    mode 'full' asks for the counit law on all of C, 'weak' for the
    projected counit law on all of C, 'lax' for the counit law on the
    unital summand C1 only.  counit is 'plain' (A (x) eps) or 'underline'
    (the projected one); the default matches the mode.
    """
    if mode not in ("lax", "weak", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    if counit is None:
        counit = "plain" if mode == "full" else "underline"
    if counit not in ("plain", "underline"):
        raise ValueError(f"unknown counit choice {counit!r}")
    c = d.coaction
    n, m, nm, F = c.n, c.m, c.nm, c.field
    i_n = Matrix.identity(n, F)
    i_m = Matrix.identity(m, F)
    eps_mat = d.eps if counit == "plain" else d.eps_underline

    checks = []

    # Bilinearity of the coproduct and the chosen counit.
    lhs_dr = d.delta @ c.ract
    rhs_dr = c.act_ch @ kron(d.delta, i_n)
    checks.append(compare_maps("delta-right-linear", lhs_dr, rhs_dr, [n, m, n], [n, m, m]))
    lhs_dl = d.delta @ c.lact
    rhs_dl = kron(c.lact, i_m) @ kron(i_n, d.delta)
    checks.append(compare_maps("delta-left-linear", lhs_dl, rhs_dl, [n, n, m], [n, m, m]))
    checks.append(
        compare_maps(
            "counit-right-linear",
            eps_mat @ c.ract,
            c.algebra.mult @ kron(eps_mat, i_n),
            [n, m, n],
            [n],
        )
    )
    checks.append(
        compare_maps(
            "counit-left-linear",
            eps_mat @ c.lact,
            c.algebra.mult @ kron(i_n, eps_mat),
            [n, n, m],
            [n],
        )
    )

    # Coassociativity, computed inside the concrete model C1 (x) H of the
    # tensor square over A (both sides land there).
    pi2 = c.act_ch @ kron(Matrix.identity(nm * m, F), c.algebra.unit)
    coassoc_lhs = kron(pi2, i_m) @ kron(d.delta, i_m) @ d.delta
    # Right side: expand the second leg, contract through the right action,
    # then renormalize with pi2; phi2 realizes c (x) (b (x) g) |-> c.b (x) g.
    phi2 = kron(c.ract, i_m)
    inner = kron(Matrix.identity(nm, F), d.delta @ c.ins_h)
    coassoc_rhs = kron(pi2, i_m) @ kron(phi2, i_m) @ inner @ d.delta
    checks.append(
        compare_maps("coassociativity", coassoc_lhs, coassoc_rhs, [n, m], [n, m, m])
    )

    left_cu, right_cu = _counit_maps(d, eps_mat)
    i_c = Matrix.identity(nm, F)
    if mode == "full":
        checks.append(compare_maps("counit-left", left_cu, i_c, [n, m], [n, m]))
        checks.append(compare_maps("counit-right", right_cu, i_c, [n, m], [n, m]))
    elif mode == "weak":
        checks.append(compare_maps("counit-left", left_cu, d.pi, [n, m], [n, m]))
        checks.append(compare_maps("counit-right", right_cu, d.pi, [n, m], [n, m]))
    else:
        u = d.underline.basis
        checks.append(compare_maps("counit-left", left_cu @ u, u, [u.cols], [n, m]))
        checks.append(compare_maps("counit-right", right_cu @ u, u, [u.cols], [n, m]))

    if mode == "lax":
        core = all(ch.passed for ch in checks)
        underline_ok = _underline_coring_passes(
            d, eps_mat, coassoc_lhs, coassoc_rhs, left_cu, right_cu, lhs_dr, rhs_dr, lhs_dl, rhs_dl
        )
        checks.append(Check("underline-coring-equivalence", core == underline_ok,
                            None if core == underline_ok else ()))
    return AxiomReport(checks)


def _underline_coring_passes(d, eps_mat, co_lhs, co_rhs, left_cu, right_cu,
                             dr_lhs, dr_rhs, dl_lhs, dl_rhs) -> bool:
    """Whether the restriction to C1 is a genuine coring (exact checks)."""
    c = d.coaction
    n = c.n
    i_n = Matrix.identity(n, c.field)
    u = d.underline.basis
    if u.cols == 0:
        return True
    restricted = [
        (co_lhs @ u, co_rhs @ u),
        (left_cu @ u, u),
        (right_cu @ u, u),
        (dr_lhs @ kron(u, i_n), dr_rhs @ kron(u, i_n)),
        (dl_lhs @ kron(i_n, u), dl_rhs @ kron(i_n, u)),
        (eps_mat @ c.ract @ kron(u, i_n), c.algebra.mult @ kron(eps_mat @ u, i_n)),
        (eps_mat @ c.lact @ kron(i_n, u), c.algebra.mult @ kron(i_n, eps_mat @ u)),
    ]
    return all(a == b for a, b in restricted)


def grouplike_of(c: CoactionMap) -> Matrix:
    """Coordinates of rho(1) in the unital summand, checked grouplike.

    Verifies counit value 1 and the diagonal law in C1 (x)_A C1, the
    balanced tensor square of the unital summand.  Failure of either is
    an internal error: the laws are theorems once the coaction is partial.
    """
    verdict = c.classification()
    if not verdict.is_partial:
        raise PreconditionError("partial", "grouplike element needs a partial coaction")
    d = build_coring(c)
    x = c.rho_one
    coords = d.underline.coords_of(x)
    if coords is None:
        raise InternalConsistencyError("rho(1) escaped the unital summand")
    if c.eps_plain @ x != c.algebra.unit:
        raise InternalConsistencyError("counit of rho(1) is not 1")

    u = d.underline.basis
    p_u = d.pi_coords  # project-then-coordinates, d x nm
    n = c.n
    i_n = Matrix.identity(n, c.field)
    ract_u = p_u @ c.ract @ kron(u, i_n)
    lact_u = p_u @ c.lact @ kron(i_n, u)
    square = TensorOverSub(ract_u, lact_u, n)
    # Induced coproduct value on x, with both legs projected to C1.
    spread = kron(p_u, p_u @ c.ins_h) @ d.delta @ x
    diag_lhs = square.project(spread)
    diag_rhs = square.pure(coords, coords)
    if diag_lhs != diag_rhs:
        raise InternalConsistencyError("rho(1) is not grouplike in the tensor square")
    return coords


# -- relative Hopf modules ------------------------------------------------------


class RelativeHopfModule:
    """A right A-module with a compatible H-coaction candidate."""

    def __init__(self, dim: int, act: Matrix, rho_m: Matrix):
        self.dim = dim
        self.act = act
        self.rho_m = rho_m
        self.field = act.field
        if act.rows != dim:
            raise ShapeError("action must land in the module")
        if rho_m.cols != dim or rho_m.rows % dim != 0:
            raise ShapeError("coaction matrix has wrong shape")

    def module_checks(self, algebra: AlgebraPresentation) -> list:
        d, n, F = self.dim, algebra.dim, self.field
        i_d = Matrix.identity(d, F)
        i_n = Matrix.identity(n, F)
        return [
            compare_maps("action-unital", self.act @ kron(i_d, algebra.unit), i_d, [d], [d]),
            compare_maps(
                "action-associative",
                self.act @ kron(self.act, i_n),
                self.act @ kron(i_d, algebra.mult),
                [d, n, n],
                [d],
            ),
        ]


def check_relative_hopf_module(mod: RelativeHopfModule, c: CoactionMap) -> AxiomReport:
    """The three compatibility laws of a lax relative Hopf module."""
    if not c.classification().is_lax:
        raise PreconditionError("lax", "relative Hopf modules live over a lax comodule algebra")
    d, n, m, F = mod.dim, c.n, c.m, c.field
    if mod.field != F:
        raise FieldMismatchError("module over the wrong field")
    if mod.act.cols != d * n or mod.rho_m.rows != d * m:
        raise ShapeError("module maps do not match the coaction dimensions")
    i_d = Matrix.identity(d, F)
    i_m = Matrix.identity(m, F)
    checks = mod.module_checks(c.algebra)

    checks.append(
        compare_maps(
            "2a.1.1", kron(i_d, c.hopf.counit) @ mod.rho_m, i_d, [d], [d]
        )
    )

    lhs2 = kron(mod.rho_m, i_m) @ mod.rho_m
    rho2_one = kron(c.rho, i_m) @ c.rho_one
    spread = perm_rows(
        kron(Matrix.identity(d * m * m, F), rho2_one),
        [d, m, m, n, m, m],
        [0, 3, 1, 4, 2, 5],
    )
    weight = kron(mod.act, kron(c.hopf.mult, c.hopf.mult)) @ spread
    rhs2 = weight @ kron(i_d, c.hopf.comult) @ mod.rho_m
    checks.append(compare_maps("2a.1.2", lhs2, rhs2, [d], [d, m, m]))

    lhs3 = mod.rho_m @ mod.act
    rhs3 = kron(mod.act, c.hopf.mult) @ perm_rows(
        kron(mod.rho_m, c.rho), [d, m, n, m], [0, 2, 1, 3]
    )
    checks.append(compare_maps("2a.1.3", lhs3, rhs3, [d, n], [d, m]))
    return AxiomReport(checks)


def alpha_beta(mod: RelativeHopfModule, c: CoactionMap):
    """The mutually inverse comparison maps between the two module pictures.

    Returns (alpha, beta): alpha is the matrix of the induced map
    M -> M (x)_A C1 attached to the module's coaction, beta the matrix of
    the evaluation map M (x)_A C1 -> M (x) H.  Both composites are
    verified to act as identities.
    """
    report = check_relative_hopf_module(mod, c)
    if not report.passed:
        raise PreconditionError(
            "relative-hopf-module", f"module axioms fail: {[ch.name for ch in report.failures()]}"
        )
    d = build_coring(c)
    u = d.underline.basis
    p_u = d.pi_coords
    dm, F = mod.dim, c.field
    i_d = Matrix.identity(dm, F)
    square = TensorOverSub(mod.act, p_u @ c.lact @ kron(Matrix.identity(c.n, F), u), c.n)
    to_quotient = square.projection @ kron(i_d, p_u @ c.ins_h)
    alpha = to_quotient @ mod.rho_m
    b0 = kron(mod.act, Matrix.identity(c.m, F)) @ kron(i_d, u)
    beta = b0 @ square.section
    if beta @ alpha != mod.rho_m:
        raise InternalConsistencyError("beta(alpha(rho)) failed to reproduce rho")
    if to_quotient @ b0 @ square.section != Matrix.identity(square.dim, F):
        raise InternalConsistencyError("alpha(beta(-)) is not the identity on the quotient")
    return alpha, beta


# -- randomized instances --------------------------------------------------------


def random_coaction_map(algebra: AlgebraPresentation, hopf: BialgebraPresentation, rng) -> CoactionMap:
    """A raw random rho with entries in {-2..2}/{1,2} (rationals) or small residues."""
    F = algebra.field
    rows = []
    for _ in range(algebra.dim * hopf.dim):
        row = []
        for _ in range(algebra.dim):
            if F.kind == "Q":
                row.append(F.coerce(f"{rng.randint(-2, 2)}/{rng.choice([1, 2])}"))
            else:
                row.append(F.from_int(rng.randint(0, F.p - 1)))
        rows.append(row)
    return CoactionMap(algebra, hopf, Matrix(F, rows))
