"""The Galois pipeline for a partial coaction: coinvariants T, balanced
tensor products over T, the canonical comparison map into the unital
summand, the dual comparison into the T-linear endomorphisms of A, the
Morita context of the unital dual smash ring, and the aggregate verdict.

Over a field all three verdict ingredients (canonical map bijective,
dual comparison bijective, Morita context strict) are decided by exact
rank computations, and they are forced to agree; disagreement raises
instead of reporting, because it can only mean an implementation bug.
"""

from __future__ import annotations

from typing import Optional

from .exactlin import (
    Matrix,
    Subspace,
    hstack,
    image_basis,
    kernel_basis,
    kron,
    perm_cols,
    perm_rows,
    rank,
    solve,
)
from .presentations import AlgebraPresentation
from .coactions import CoactionMap, build_coring
from .duality import (
    KoppinenSmash,
    Prop410Iso,
    _eval_row,
    _vec,
    build_koppinen,
    curry_last_input,
    prop410_iso,
)
from .quotients import TensorOverSub
from .report import (
    AxiomReport,
    Check,
    InternalConsistencyError,
    PreconditionError,
)


class Coinvariants:
    """The subalgebra T = {b : rho(b) = b rho(1)} with induced presentation."""

    def __init__(self, coaction: CoactionMap, subspace: Subspace, algebra: AlgebraPresentation):
        self.coaction = coaction
        self.subspace = subspace
        self.algebra = algebra

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def embed(self) -> Matrix:
        """Basis matrix of T inside A (columns are the basis of T)."""
        return self.subspace.basis

    def __repr__(self):
        return f"Coinvariants(dim T = {self.dim} in dim A = {self.coaction.n})"


def coinvariants(c: CoactionMap) -> Coinvariants:
    """Exact kernel of b |-> rho(b) - b rho(1), with induced multiplication."""
    if not c.classification().is_partial:
        raise PreconditionError("partial", "coinvariants are defined for partial coactions")
    n, F = c.n, c.field
    right_by_rho_one = c.lact @ kron(Matrix.identity(n, F), c.rho_one)
    space = kernel_basis(c.rho - right_by_rho_one)
    b = space.basis
    t_dim = b.cols
    prods = c.algebra.mult @ kron(b, b)
    coords = solve(b, prods)
    if coords is None:
        raise InternalConsistencyError("coinvariants are not closed under multiplication")
    unit_coords = space.coords_of(c.algebra.unit)
    if unit_coords is None:
        raise InternalConsistencyError("coinvariants do not contain the unit")
    algebra = AlgebraPresentation(
        F, t_dim, coords, unit_coords, tuple(f"t{i}" for i in range(t_dim))
    )
    return Coinvariants(c, space, algebra)


def tensor_over(x_right_act: Matrix, y_left_act: Matrix, t: Coinvariants) -> TensorOverSub:
    """Balanced tensor product of two modules over the coinvariant algebra.

    The action matrices are X (x) T -> X and T (x) Y -> Y with T in its
    induced basis; the result carries the canonical projection/section.
    """
    return TensorOverSub(x_right_act, y_left_act, t.dim)


class CanonicalMapData:
    """The comparison map A (x)_T A -> (A (x) H) 1 and its rank verdicts."""

    def __init__(self, coaction: CoactionMap, t: Optional[Coinvariants] = None):
        if not coaction.classification().is_partial:
            raise PreconditionError("partial", "the canonical map needs a partial coaction")
        self.coaction = coaction
        self.t = t if t is not None else coinvariants(coaction)
        c = coaction
        n, F = c.n, c.field
        i_n = Matrix.identity(n, F)
        emb = self.t.embed
        ract_t = c.algebra.mult @ kron(i_n, emb)
        lact_t = c.algebra.mult @ kron(emb, i_n)
        self.square = tensor_over(ract_t, lact_t, self.t)

        coring = build_coring(c)
        self.coring = coring
        concrete = c.mult_c @ kron(c.ins_a, c.rho)
        if not (concrete @ self.square.relations.basis).is_zero_matrix():
            raise InternalConsistencyError("canonical map is not T-balanced")
        in_underline = solve(coring.underline.basis, concrete)
        if in_underline is None:
            raise InternalConsistencyError("canonical map image escapes the unital summand")
        self.matrix = in_underline @ self.square.section
        self.rank = rank(self.matrix)
        self.injective = self.rank == self.square.dim
        self.surjective = self.rank == coring.underline_dim
        self.bijective = self.injective and self.surjective

    def __repr__(self):
        return (
            f"CanonicalMapData({self.square.dim} -> {self.coring.underline_dim}, "
            f"rank {self.rank}, bijective = {self.bijective})"
        )


def canonical_map(c: CoactionMap, t: Optional[Coinvariants] = None) -> CanonicalMapData:
    return CanonicalMapData(c, t)


def _endo_formula(c: CoactionMap) -> list:
    """For each elementary tensor b_i (x) h_j*, the endomorphism
    b |-> h_j*(b_1) b_0 b_i of A (always T-linear)."""
    n, m, F = c.n, c.m, c.field
    out = []
    for i in range(n):
        r_i = c.algebra.right_mult(Matrix.basis_column(n, i, F))
        for j in range(m):
            extract = kron(
                Matrix.identity(n, F),
                Matrix(F, [[F.one() if k == j else F.zero() for k in range(m)]]),
            )
            out.append(r_i @ extract @ c.rho)
    return out


class ThetaData:
    """The comparison from the unital dual smash into End_T(A)."""

    def __init__(self, coaction: CoactionMap, t: Optional[Coinvariants] = None,
                 iso: Optional[Prop410Iso] = None):
        if not coaction.classification().is_partial:
            raise PreconditionError("partial", "theta needs a partial coaction")
        self.coaction = coaction
        self.t = t if t is not None else coinvariants(coaction)
        self.iso = iso if iso is not None else prop410_iso(coaction)
        c = coaction
        n, F = c.n, c.field

        # End_T(A): the centralizer of left multiplication by T inside End(A).
        emb = self.t.embed
        left_mults = [c.algebra.left_mult(emb.col(k)) for k in range(self.t.dim)]

        cols = []
        for i in range(n):
            for j in range(n):
                e = Matrix.zeros(n, n, F).to_lists()
                e[i][j] = F.one()
                em = Matrix(F, e)
                defect = [em @ lt - lt @ em for lt in left_mults]
                cols.append(_vec(vstack_or_zero(defect, n, F)))
        self.end_t = kernel_basis(hstack(cols))

        elementary = _endo_formula(c)
        u_smash = self.iso.smash.underline.basis
        theta_cols = []
        for k in range(u_smash.cols):
            col = u_smash.col(k)
            acc = Matrix.zeros(n, n, F)
            for idx in range(c.nm):
                coeff = col.entry(idx, 0)
                if not F.is_zero(coeff):
                    acc = acc + elementary[idx].scale(coeff)
            theta_cols.append(_vec(acc))
        raw = hstack(theta_cols) if theta_cols else Matrix.zeros(n * n, 0, F)
        coords = solve(self.end_t.basis, raw) if self.end_t.dim else None
        if coords is None and u_smash.cols:
            raise InternalConsistencyError("theta image is not T-linear")
        self.matrix = coords if coords is not None else Matrix.zeros(0, u_smash.cols, F)

        # Independent route: the same formula on the underline of Hom(H, A),
        # transported through the comparison isomorphism.
        transported = self.iso.alpha @ u_smash
        star_cols = []
        for k in range(transported.cols):
            col = transported.col(k)
            acc = Matrix.zeros(n, n, F)
            for idx in range(c.nm):
                coeff = col.entry(idx, 0)
                if not F.is_zero(coeff):
                    acc = acc + elementary[idx].scale(coeff)
            star_cols.append(_vec(acc))
        star_raw = hstack(star_cols) if star_cols else raw
        if star_raw != raw:
            raise InternalConsistencyError("theta disagrees with the dualized canonical map")

        self.rank = rank(self.matrix)
        self.domain_dim = u_smash.cols
        self.codomain_dim = self.end_t.dim
        self.bijective = self.rank == self.domain_dim == self.codomain_dim

    def __repr__(self):
        return (
            f"ThetaData({self.domain_dim} -> {self.codomain_dim}, "
            f"rank {self.rank}, bijective = {self.bijective})"
        )


def vstack_or_zero(mats, cols: int, field) -> Matrix:
    from .exactlin import vstack

    if not mats:
        return Matrix.zeros(0, cols, field)
    return vstack(mats)


def theta_map(c: CoactionMap, t: Optional[Coinvariants] = None,
              iso: Optional[Prop410Iso] = None) -> ThetaData:
    return ThetaData(c, t, iso)


class MoritaContext:
    """(T, unital dual smash, A, Q, tau, mu) with exact strictness verdicts."""

    def __init__(self, coaction: CoactionMap, t: Optional[Coinvariants] = None,
                 kop: Optional[KoppinenSmash] = None, iso: Optional[Prop410Iso] = None):
        if not coaction.classification().is_partial:
            raise PreconditionError("partial", "the Morita context needs a partial coaction")
        self.coaction = coaction
        self.t = t if t is not None else coinvariants(coaction)
        self.kop = kop if kop is not None else build_koppinen(coaction)
        self.iso = iso if iso is not None else prop410_iso(coaction)
        c = coaction
        n, m, nm, F = c.n, c.m, c.nm, c.field
        i_n = Matrix.identity(n, F)
        i_m = Matrix.identity(m, F)
        i_f = Matrix.identity(nm, F)
        ev = _eval_row(m, F)
        eval_f = kron(i_n, ev)

        # Q inside Hom(H, A): the underline condition plus the grouplike
        # compatibility q(h_2)_0 (x) h_1 q(h_2)_1 = q(h) rho(1).
        s1 = kron(i_f, c.hopf.comult)
        s2 = perm_rows(s1, [nm, m, m], [0, 2, 1])
        s3 = kron(eval_f, i_m) @ s2
        s4 = kron(c.rho, i_m) @ s3
        s5 = perm_rows(s4, [n, m, m], [0, 2, 1])
        lhs = kron(i_n, c.hopf.mult) @ s5
        rhs = kron(c.algebra.mult, i_m) @ kron(i_n, c.rho_one) @ eval_f
        self.q_space = kernel_basis(curry_last_input(lhs - rhs, m)).intersect(self.kop.underline)

        # Alternative cut of Q inside the transferred smash product.
        self._q_alt = self._q_via_smash()
        mapped = (
            Subspace.from_span(self.iso.alpha @ self._q_alt.basis)
            if self._q_alt.dim
            else Subspace.zero(nm, F)
        )
        if mapped != self.q_space:
            raise InternalConsistencyError("the two descriptions of Q disagree")

        # tau on A (x) Q, valued in T.
        spread = perm_rows(kron(c.rho, i_f), [n, m, nm], [0, 2, 1])
        self.tau_full = c.algebra.mult @ kron(i_n, eval_f) @ spread  # A (x) F -> A
        tau_vals = self.tau_full @ kron(i_n, self.q_space.basis)
        tau_coords = solve(self.t.embed, tau_vals)
        if tau_coords is None:
            raise InternalConsistencyError("tau escaped the coinvariants")
        self.tau = tau_coords

        # mu : Q (x) T -> unital dual smash, mu(q (x) a)(h) = q(h) a.
        self.mu_raw = self._mu_matrix()
        mu_in_underline = solve(self.kop.underline.basis, self.mu_raw)
        if mu_in_underline is None:
            raise InternalConsistencyError("mu escaped the unital dual smash")
        self.mu = mu_in_underline

        # Verdicts.
        ev_one = eval_f @ kron(i_f, c.hopf.unit)
        feasible = solve(ev_one @ self.q_space.basis, c.algebra.unit) if self.q_space.dim else None
        self.tau_surjective = feasible is not None
        image = image_basis(self.mu_raw) if self.mu_raw.cols else Subspace.zero(nm, F)
        self.mu_surjective = image.contains(self.kop.unit_element)
        self.strict = self.tau_surjective and self.mu_surjective

        self.report = self._structure_report()

    def _q_via_smash(self) -> Subspace:
        """Q cut out inside the transferred smash product coordinates."""
        act = self.iso.action
        n, F = act.n, act.field
        mk = act.m
        i_n = Matrix.identity(n, F)
        i_k = Matrix.identity(mk, F)
        # For all h*: h*_1 . a (x) h*_2 * g  =  (h*_2 . 1) a-op (x) h*_1(1) g.
        l1 = kron(act.hopf.comult, kron(i_n, i_k))
        l2 = perm_rows(l1, [mk, mk, n, mk], [0, 2, 1, 3])
        lhs = kron(act.kappa, act.hopf.mult) @ l2
        r1 = kron(act.hopf.comult, kron(i_n, i_k))
        r2 = kron(act.hopf.counit, Matrix.identity(mk * n * mk, F)) @ r1
        w = act.h_dot_one
        rhs = kron(act.algebra.mult @ kron(w, i_n), i_k) @ r2
        defect = lhs - rhs  # K (x) (B (x) K) -> B (x) K
        reordered = perm_cols(defect, [n, mk, mk], [2, 0, 1])
        conditions = curry_last_input(reordered, mk)
        kernel = kernel_basis(conditions)
        return kernel.intersect(self.iso.smash.underline)

    def _mu_matrix(self) -> Matrix:
        """mu on Q (x) A (the balanced quotient does not change the image)."""
        c = self.coaction
        n, m, F = c.n, c.m, c.field
        cols = []
        for k in range(self.q_space.dim):
            qmat = _unflatten_hom(self.q_space.basis.col(k), n, m)
            for l in range(n):
                a = Matrix.basis_column(n, l, F)
                vals_cols = [c.algebra.product(qmat.col(s), a) for s in range(m)]
                cols.append(_vec(hstack(vals_cols)))
        if not cols:
            return Matrix.zeros(n * m, 0, F)
        return hstack(cols)

    def _structure_report(self) -> AxiomReport:
        """Exact bimodule typing of the context: tau lands in T (already
        enforced), Q is stable under the ring and under T, tau balanced."""
        c = self.coaction
        n, F = c.n, c.field
        checks = []
        u_ring = self.kop.underline.basis
        qb = self.q_space.basis
        witness = None
        if u_ring.cols and qb.cols:
            prods = self.kop.product @ kron(u_ring, qb)
            for j in range(prods.cols):
                if not self.q_space.contains(prods.col(j)):
                    witness = (j // qb.cols, j % qb.cols)
                    break
        checks.append(Check("q-ring-stable", witness is None, witness))

        witness = None
        for k in range(qb.cols):
            qmat = _unflatten_hom(qb.col(k), n, c.m)
            for l in range(self.t.dim):
                scaled_cols = [
                    c.algebra.product(qmat.col(s), self.t.embed.col(l)) for s in range(c.m)
                ]
                scaled = _vec(hstack(scaled_cols))
                if not self.q_space.contains(scaled):
                    witness = (k, l)
                    break
            if witness:
                break
        checks.append(Check("q-coinvariant-stable", witness is None, witness))

        i_n = Matrix.identity(n, F)
        act_a = self.tau_full @ kron(i_n, u_ring)  # right action of the ring on A
        lhs = self.tau_full @ kron(act_a, qb)
        rhs = self.tau_full @ kron(i_n, self.kop.product @ kron(u_ring, qb))
        checks.append(
            Check("tau-balanced", lhs == rhs, None)
        )
        return AxiomReport(checks)

    def __repr__(self):
        return (
            f"MoritaContext(dim Q = {self.q_space.dim}, tau surj = {self.tau_surjective}, "
            f"mu surj = {self.mu_surjective}, strict = {self.strict})"
        )


def _unflatten_hom(col: Matrix, n: int, m: int) -> Matrix:
    data = [[col.entry(i * m + j, 0) for j in range(m)] for i in range(n)]
    return Matrix(col.field, data)


def morita_context(c: CoactionMap, t: Optional[Coinvariants] = None,
                   kop: Optional[KoppinenSmash] = None,
                   iso: Optional[Prop410Iso] = None) -> MoritaContext:
    return MoritaContext(c, t, kop, iso)


class GaloisReport:
    """All verdict ingredients plus the aggregate, forced mutually equal."""

    def __init__(self, coaction: CoactionMap):
        t = coinvariants(coaction)
        iso = prop410_iso(coaction)
        self.t = t
        self.can = canonical_map(coaction, t)
        self.theta = theta_map(coaction, t, iso)
        self.morita = morita_context(coaction, t, kop=iso.koppinen, iso=iso)
        verdicts = (self.can.bijective, self.theta.bijective, self.morita.strict)
        if len(set(verdicts)) != 1:
            raise InternalConsistencyError(
                f"equivalent Galois criteria disagree: can = {verdicts[0]}, "
                f"theta = {verdicts[1]}, morita = {verdicts[2]}"
            )
        self.galois = verdicts[0]

    def to_dict(self) -> dict:
        return {
            "t_dim": self.t.dim,
            "can": {
                "domain_dim": self.can.square.dim,
                "codomain_dim": self.can.coring.underline_dim,
                "rank": self.can.rank,
                "injective": self.can.injective,
                "surjective": self.can.surjective,
                "bijective": self.can.bijective,
            },
            "theta": {
                "domain_dim": self.theta.domain_dim,
                "codomain_dim": self.theta.codomain_dim,
                "rank": self.theta.rank,
                "bijective": self.theta.bijective,
            },
            "morita": {
                "q_dim": self.morita.q_space.dim,
                "tau_surjective": self.morita.tau_surjective,
                "mu_surjective": self.morita.mu_surjective,
                "strict": self.morita.strict,
            },
            "galois": self.galois,
        }

    def __repr__(self):
        return f"GaloisReport(galois = {self.galois})"


def galois_verdict(c: CoactionMap) -> GaloisReport:
    return GaloisReport(c)
