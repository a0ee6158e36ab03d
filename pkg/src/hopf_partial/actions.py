"""Action maps kappa: H (x) A -> A, their axiom ladder and classification,
smash products A#H with their unital subalgebras, and partial group
actions with the exact correspondence to group-algebra actions.

Equation glossary (h, g in H; a, b in A; subscripts are coproduct legs):

* 4.1.0  h.(ab) = (h1.a)(h2.b)                  (multiplicativity)
* 4.1.1  h.(a (g.b)) = (h1.a)((h2 g).b)         (smash associativity)
* 4.1.2  1_H.a = a                              (global unitality)
* 4.1.3  a (1_H.1_A) = 1_H.a
* 4.2.1  h.1_A = eps(h) (1_H.1_A)
* 4.2.2  h.(g.a) = (hg).a                       (action composition)
* 4.3.1  h.1_A = eps(h) 1_A
* 4.4.1  a (h.1_A) = 1_H.(a (h.1_A))            (lax unitality)
* 4.4.2  a (h.1_A) = (1_H.a)(h.1_A)
"""

from __future__ import annotations

from functools import cached_property
from typing import Optional, Sequence

from .exactlin import (
    FieldMismatchError,
    Matrix,
    ShapeError,
    Subspace,
    image_basis,
    kron,
    perm_rows,
    rank,
    solve,
)
from .presentations import (
    AlgebraPresentation,
    BialgebraPresentation,
    CayleyTable,
    group_algebra,
)
from .report import (
    AxiomReport,
    Check,
    InternalConsistencyError,
    PreconditionError,
    compare_maps,
)

ACTION_EQUATIONS = (
    "4.1.0", "4.1.1", "4.1.2", "4.1.3",
    "4.2.1", "4.2.2", "4.3.1", "4.4.1", "4.4.2",
)

MODULE_SET = ("4.1.0", "4.1.2", "4.2.2", "4.3.1")
WEAK_ACTION_SET = ("4.1.0", "4.1.3", "4.2.1", "4.2.2")
LAX_ACTION_SET = ("4.1.0", "4.1.1", "4.1.3", "4.4.1")
PARTIAL_ACTION_SET = ("4.1.0", "4.1.1", "4.1.2")


class ActionMap:
    """A linear map H (x) A -> A as an n x mn matrix over the fixed bases."""

    def __init__(self, algebra: AlgebraPresentation, hopf: BialgebraPresentation, kappa: Matrix):
        if algebra.field != hopf.field or kappa.field != algebra.field:
            raise FieldMismatchError("action pieces over different fields")
        if kappa.rows != algebra.dim or kappa.cols != hopf.dim * algebra.dim:
            raise ShapeError(
                f"kappa must be {algebra.dim}x{hopf.dim * algebra.dim}, got {kappa.rows}x{kappa.cols}"
            )
        self.algebra = algebra
        self.hopf = hopf
        self.kappa = kappa
        self.field = algebra.field
        self.n = algebra.dim
        self.m = hopf.dim
        self.nm = self.n * self.m

    @cached_property
    def one_dot(self) -> Matrix:
        """Matrix of a |-> 1_H . a."""
        return self.kappa @ kron(self.hopf.unit, Matrix.identity(self.n, self.field))

    @cached_property
    def e_one(self) -> Matrix:
        """The element 1_H . 1_A."""
        return self.kappa @ kron(self.hopf.unit, self.algebra.unit)

    @cached_property
    def h_dot_one(self) -> Matrix:
        """Matrix of h |-> h . 1_A."""
        return self.kappa @ kron(Matrix.identity(self.m, self.field), self.algebra.unit)

    def classification(self) -> "ClassificationVerdict":
        if not hasattr(self, "_classification"):
            self._classification = classify_action(self)
        return self._classification

    def __repr__(self):
        return f"ActionMap(dim A = {self.n}, dim H = {self.m} over {self.field})"


def _equation_sides(a: ActionMap, eq_id: str):
    n, m, F = a.n, a.m, a.field
    i_n = Matrix.identity(n, F)
    i_m = Matrix.identity(m, F)
    mult, unit = a.algebra.mult, a.algebra.unit
    if eq_id == "4.1.0":
        lhs = a.kappa @ kron(i_m, mult)
        spread = perm_rows(
            kron(a.hopf.comult, kron(i_n, i_n)), [m, m, n, n], [0, 2, 1, 3]
        )
        rhs = mult @ kron(a.kappa, a.kappa) @ spread
        return lhs, rhs, [m, n, n], [n]
    if eq_id == "4.1.1":
        lhs = a.kappa @ kron(i_m, mult @ kron(i_n, a.kappa))
        spread = perm_rows(
            kron(a.hopf.comult, kron(i_n, kron(i_m, i_n))),
            [m, m, n, m, n],
            [0, 2, 1, 3, 4],
        )
        inner = a.kappa @ kron(a.hopf.mult, i_n)
        rhs = mult @ kron(a.kappa, inner) @ spread
        return lhs, rhs, [m, n, m, n], [n]
    if eq_id == "4.1.2":
        return a.one_dot, i_n, [n], [n]
    if eq_id == "4.1.3":
        return mult @ kron(i_n, a.e_one), a.one_dot, [n], [n]
    if eq_id == "4.2.1":
        return a.h_dot_one, a.e_one @ a.hopf.counit, [m], [n]
    if eq_id == "4.2.2":
        lhs = a.kappa @ kron(i_m, a.kappa)
        rhs = a.kappa @ kron(a.hopf.mult, i_n)
        return lhs, rhs, [m, m, n], [n]
    if eq_id == "4.3.1":
        return a.h_dot_one, unit @ a.hopf.counit, [m], [n]
    if eq_id == "4.4.1":
        pad = mult @ kron(i_n, a.h_dot_one)
        return pad, a.one_dot @ pad, [n, m], [n]
    if eq_id == "4.4.2":
        pad = mult @ kron(i_n, a.h_dot_one)
        return pad, mult @ kron(a.one_dot, a.h_dot_one), [n, m], [n]
    raise KeyError(f"unknown action equation id {eq_id!r}")


def check_action_equation(a: ActionMap, eq_id: str) -> Check:
    lhs, rhs, dom, cod = _equation_sides(a, eq_id)
    return compare_maps(eq_id, lhs, rhs, dom, cod)


def classify_action(a: ActionMap):
    from .coactions import ClassificationVerdict

    eqs = {eq: check_action_equation(a, eq) for eq in ACTION_EQUATIONS}
    return ClassificationVerdict(eqs, kind="action")


# -- smash product ---------------------------------------------------------------


class SmashData:
    """A#H: the twisted product on A (x) H and its unital direct summand."""

    def __init__(self, action: ActionMap):
        for eq in ("4.1.0", "4.1.1"):
            check = check_action_equation(action, eq)
            if not check.passed:
                raise PreconditionError(eq, f"smash product undefined, witness {check.witness}")
        self.action = action
        n, m, F = action.n, action.m, action.field
        nm = n * m
        i_n = Matrix.identity(n, F)
        i_m = Matrix.identity(m, F)

        spread = perm_rows(
            kron(i_n, kron(action.hopf.comult, kron(i_n, i_m))),
            [n, m, m, n, m],
            [0, 1, 3, 2, 4],
        )
        acted = kron(i_n, kron(action.kappa, kron(i_m, i_m))) @ spread
        self.product = kron(action.algebra.mult, action.hopf.mult) @ acted

        self.eta = kron(i_n, action.hopf.unit)
        i_c = Matrix.identity(nm, F)
        self.ract = self.product @ kron(i_c, self.eta)
        self.pi = self.ract @ kron(i_c, action.algebra.unit)
        if self.pi @ self.pi != self.pi:
            raise InternalConsistencyError("smash projection is not idempotent")
        self.eta_underline = self.pi @ self.eta
        self.underline = image_basis(self.pi)
        coords = solve(self.underline.basis, self.pi)
        if coords is None:
            raise InternalConsistencyError("smash projection escapes its image basis")
        self.pi_coords = coords
        self.underline_algebra = self._induced_algebra()
        self.ring_report = (
            self._lax_ring_report() if action.classification().is_lax else None
        )

    def _induced_algebra(self) -> AlgebraPresentation:
        u = self.underline.basis
        d = u.cols
        F = self.action.field
        prods = self.product @ kron(u, u)
        coords = solve(u, prods)
        if coords is None:
            raise InternalConsistencyError("unital summand of the smash is not closed under its product")
        unit_coords = solve(u, self.eta_underline @ self.action.algebra.unit)
        if unit_coords is None:
            raise InternalConsistencyError("unital summand lost its own unit")
        labels = tuple(f"s{i}" for i in range(d))
        return AlgebraPresentation(F, d, coords, unit_coords, labels)

    def _lax_ring_report(self) -> AxiomReport:
        """Two-sided unit law of eta(1) on the unital summand (exact)."""
        u = self.underline.basis
        one = self.eta @ self.action.algebra.unit
        checks = [
            compare_maps("unit-left-on-underline", self.product @ kron(one, u), u,
                         [u.cols], [self.action.n, self.action.m]),
            compare_maps("unit-right-on-underline", self.product @ kron(u, one), u,
                         [u.cols], [self.action.n, self.action.m]),
        ]
        return AxiomReport(checks)

    @property
    def underline_dim(self) -> int:
        return self.underline.dim

    def __repr__(self):
        return f"SmashData(dim A#H = {self.action.nm}, dim unital summand = {self.underline_dim})"


def build_smash(a: ActionMap) -> SmashData:
    return SmashData(a)


# -- partial group actions --------------------------------------------------------


class PartialGroupAction:
    """Idempotents e_s and partial isomorphisms alpha_s between their ideals.

    alpha_s is stored as a full matrix; only its restriction to the ideal
    of e_{s^-1} is meaningful, so every check and comparison first
    composes with left multiplication by that idempotent.
    """

    def __init__(self, algebra: AlgebraPresentation, table: CayleyTable,
                 idempotents: Sequence[Matrix], alphas: Sequence[Matrix]):
        if len(idempotents) != table.order or len(alphas) != table.order:
            raise ShapeError("need one idempotent and one map per group element")
        n = algebra.dim
        for e in idempotents:
            if e.rows != n or e.cols != 1 or e.field != algebra.field:
                raise ShapeError("idempotent of wrong shape or field")
        for al in alphas:
            if al.rows != n or al.cols != n or al.field != algebra.field:
                raise ShapeError("alpha of wrong shape or field")
        self.algebra = algebra
        self.table = table
        self.idempotents = tuple(idempotents)
        self.alphas = tuple(alphas)
        self.field = algebra.field

    def normalized_alpha(self, s: int) -> Matrix:
        """alpha_s composed with projection onto its meaningful domain."""
        inv = self.table.inv(s)
        return self.alphas[s] @ self.algebra.left_mult(self.idempotents[inv])

    def ideal(self, s: int) -> Subspace:
        return image_basis(self.algebra.left_mult(self.idempotents[s]))

    def equal_on_ideals(self, other: "PartialGroupAction") -> bool:
        if self.table.table != other.table.table:
            return False
        if self.idempotents != other.idempotents:
            return False
        return all(
            self.normalized_alpha(s) == other.normalized_alpha(s)
            for s in self.table.elements()
        )

    def __repr__(self):
        return f"PartialGroupAction(|G| = {self.table.order}, dim A = {self.algebra.dim})"


def verify_partial_group_action(p: PartialGroupAction) -> AxiomReport:
    """All axioms, enumerated over every group element pair exactly."""
    alg, table, F = p.algebra, p.table, p.field
    n = alg.dim
    i_n = Matrix.identity(n, F)
    checks = []

    bad = next(
        (s for s in table.elements()
         if alg.product(p.idempotents[s], p.idempotents[s]) != p.idempotents[s]),
        None,
    )
    checks.append(Check("e-idempotent", bad is None, None if bad is None else (bad,)))
    checks.append(
        Check(
            "e-identity-is-one",
            p.idempotents[table.identity] == alg.unit,
            None if p.idempotents[table.identity] == alg.unit else (table.identity,),
        )
    )
    checks.append(
        Check(
            "alpha-identity-is-id",
            p.normalized_alpha(table.identity) == i_n,
            None if p.normalized_alpha(table.identity) == i_n else (table.identity,),
        )
    )

    norm = {s: p.normalized_alpha(s) for s in table.elements()}
    witness = None
    for s in table.elements():
        left_e = alg.left_mult(p.idempotents[s])
        for t in table.elements():
            st = table.mul(s, t)
            if left_e @ norm[st] != norm[s] @ norm[t]:
                witness = (s, t)
                break
        if witness:
            break
    checks.append(Check("5.2.1", witness is None, witness))

    witness = None
    for s in table.elements():
        if norm[s] @ alg.mult != alg.mult @ kron(norm[s], norm[s]):
            witness = (s,)
            break
    checks.append(Check("5.2.2", witness is None, witness))

    witness = None
    for s in table.elements():
        if norm[s] @ p.idempotents[table.inv(s)] != p.idempotents[s]:
            witness = (s,)
            break
    checks.append(Check("5.2.2b", witness is None, witness))

    witness = None
    for s in table.elements():
        dom = p.ideal(table.inv(s))
        cod = p.ideal(s)
        img = norm[s] @ dom.basis
        onto = rank(img) == cod.dim and cod.dim == dom.dim
        inside = dom.dim == 0 or cod.coords_of(img) is not None
        if not (onto and inside):
            witness = (s,)
            break
    checks.append(Check("alpha-bijective-on-ideals", witness is None, witness))
    return AxiomReport(checks)


def group_to_kG(p: PartialGroupAction, field=None) -> ActionMap:
    """Linearize a partial group action to an action of the group algebra."""
    report = verify_partial_group_action(p)
    if not report.passed:
        raise PreconditionError(
            "partial-group-action", f"axioms fail: {[c.name for c in report.failures()]}"
        )
    F = p.field
    from .exactlin import hstack

    kappa = hstack([p.normalized_alpha(s) for s in p.table.elements()])
    return ActionMap(p.algebra, group_algebra(p.table, F), kappa)


def as_cayley_table(hopf: BialgebraPresentation) -> Optional[CayleyTable]:
    """Recover a group table from a group-algebra presentation, else None.

    Requires every basis product to be a basis element, every basis
    vector grouplike, and the counit identically one.
    """
    m, F = hopf.dim, hopf.field
    one = F.one()
    table = []
    for i in range(m):
        row = []
        for j in range(m):
            col = hopf.mult.column_entries(i * m + j)
            hits = [k for k, v in enumerate(col) if v != F.zero()]
            if len(hits) != 1 or col[hits[0]] != one:
                return None
            row.append(hits[0])
        table.append(row)
    for i in range(m):
        col = hopf.comult.column_entries(i)
        expected = [one if (j == i * m + i) else F.zero() for j in range(m * m)]
        if col != expected:
            return None
        if hopf.counit.entry(0, i) != one:
            return None
    try:
        return CayleyTable(table, hopf.labels)
    except ValueError:
        return None


def kG_to_group(a: ActionMap) -> PartialGroupAction:
    """Read the idempotents and partial isomorphisms off a partial action."""
    if not a.classification().is_partial:
        raise PreconditionError("partial", "only partial actions come from partial group actions")
    table = as_cayley_table(a.hopf)
    if table is None:
        raise PreconditionError("group-algebra", "the acting bialgebra is not a group algebra")
    n, F = a.n, a.field
    i_n = Matrix.identity(n, F)
    idempotents = []
    alphas = []
    for s in table.elements():
        h = Matrix.basis_column(table.order, s, F)
        idempotents.append(a.kappa @ kron(h, a.algebra.unit))
        alphas.append(a.kappa @ kron(h, i_n))
    return PartialGroupAction(a.algebra, table, idempotents, alphas)


# -- stock counterexample family ---------------------------------------------------


def zero_action(algebra: AlgebraPresentation, hopf: BialgebraPresentation) -> ActionMap:
    """The identically-zero action: weak but never partial (unitality fails)."""
    return ActionMap(
        algebra, hopf, Matrix.zeros(algebra.dim, hopf.dim * algebra.dim, algebra.field)
    )


def trivial_action(algebra: AlgebraPresentation, hopf: BialgebraPresentation) -> ActionMap:
    """h . a = eps(h) a, the unit object of the classification lattice."""
    kappa = kron(hopf.counit, Matrix.identity(algebra.dim, algebra.field))
    return ActionMap(algebra, hopf, kappa)
