"""Built-in example structures and randomized instance generators.

Everything here is produced by the library constructors at call time, so
the catalog can never drift away from the code: the CLI and the test
suite both draw from these builders.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Optional

from .exactlin import Field, Matrix, QQ, inverse, kron
from .presentations import (
    AlgebraPresentation,
    CayleyTable,
    HopfPresentation,
    build_sweedler4,
    group_algebra,
)
from .coactions import CoactionMap
from .actions import ActionMap, PartialGroupAction, group_to_kG, trivial_action, zero_action
from .report import PreconditionError


def diagonal_algebra(n: int, field: Field) -> AlgebraPresentation:
    """k^n with componentwise product (the functions on an n-point set)."""
    tensor = [
        [[field.one() if i == j == k else field.zero() for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return AlgebraPresentation.from_tensor(
        field, tensor, [field.one()] * n, tuple(f"chi{i}" for i in range(n))
    )


def dual_numbers_algebra(field: Field) -> AlgebraPresentation:
    """k[x]/(x^2) on basis {1, x}."""
    z, o = field.zero(), field.one()
    tensor = [
        [[o, z], [z, o]],
        [[z, o], [z, z]],
    ]
    return AlgebraPresentation.from_tensor(field, tensor, [o, z], ("1", "x"))


def sweedler_idempotent(field: Field, alpha) -> Matrix:
    """The distinguished idempotent (1 + c)/2 + alpha cx of the 4-dim Hopf algebra."""
    half = field.div(field.one(), field.from_int(2))
    return Matrix.column([half, half, field.zero(), field.coerce(alpha)], field)


def integral_idempotent(hopf: HopfPresentation) -> Matrix:
    """Normalized left integral t / eps(t); needs eps(t) invertible."""
    from .frobenius import integrals

    space = integrals(hopf, "H")
    if space.dim != 1:
        raise PreconditionError("integrals-rank-one", f"integral space has dim {space.dim}")
    t = space.basis.basis.col(0)
    eps_t = (hopf.counit @ t).entry(0, 0)
    if hopf.field.is_zero(eps_t):
        raise PreconditionError("separable", "eps(t) = 0, no normalized idempotent integral")
    return t.scale(hopf.field.inv(eps_t))


def coaction_by_idempotent(algebra: AlgebraPresentation, hopf, e: Matrix) -> CoactionMap:
    """rho(a) = a (x) e for a distinguished idempotent e."""
    return CoactionMap(algebra, hopf, kron(Matrix.identity(algebra.dim, algebra.field), e))


def trivial_coaction(algebra: AlgebraPresentation, hopf) -> CoactionMap:
    return coaction_by_idempotent(algebra, hopf, hopf.unit)


def zero_coaction(algebra: AlgebraPresentation, hopf) -> CoactionMap:
    n, m = algebra.dim, hopf.dim
    return CoactionMap(algebra, hopf, Matrix.zeros(n * m, n, algebra.field))


def regular_coaction(table: CayleyTable, field: Field) -> CoactionMap:
    """A = H = kG coacting on itself by its comultiplication."""
    h = group_algebra(table, field)
    a = AlgebraPresentation(field, h.dim, h.mult, h.unit, h.labels)
    return CoactionMap(a, h, h.comult)


def sweedler_on_k(field: Field, alpha) -> CoactionMap:
    """The canonical partial coaction of the 4-dim Hopf algebra on the base field."""
    k_alg = AlgebraPresentation.from_tensor(field, [[[field.one()]]], [field.one()], ("1",))
    return coaction_by_idempotent(k_alg, build_sweedler4(field), sweedler_idempotent(field, alpha))


def sweedler_on_b(field: Field) -> CoactionMap:
    """The partial coaction of the 4-dim Hopf algebra on k[x]/(x^2):
    every basis element picks up the idempotent (1 + c + cx)/2."""
    b = dual_numbers_algebra(field)
    half = field.div(field.one(), field.from_int(2))
    return coaction_by_idempotent(b, build_sweedler4(field), sweedler_idempotent(field, half))


# -- partial group actions ----------------------------------------------------------


def global_z2_swap(field: Field) -> PartialGroupAction:
    a2 = diagonal_algebra(2, field)
    one = Matrix.column([field.one(), field.one()], field)
    swap = Matrix(field, [[field.zero(), field.one()], [field.one(), field.zero()]])
    return PartialGroupAction(
        a2, CayleyTable.cyclic(2), [one, one], [Matrix.identity(2, field), swap]
    )


def partial_z2_on_k2(field: Field) -> PartialGroupAction:
    """e_g = chi_0, alpha_g the identity on its 1-dimensional ideal."""
    a2 = diagonal_algebra(2, field)
    one = Matrix.column([field.one(), field.one()], field)
    e_g = Matrix.column([field.one(), field.zero()], field)
    ident = Matrix.identity(2, field)
    return PartialGroupAction(a2, CayleyTable.cyclic(2), [one, e_g], [ident, ident])


def restricted_permutation_action(table: CayleyTable, perms, points: int,
                                  kept, field: Field) -> PartialGroupAction:
    """Restrict the coordinate-permuting action on k^points to the ideal of
    the kept coordinate set: e_s indicates kept & s(kept), alpha_s permutes."""
    kept = sorted(kept)
    pos = {x: i for i, x in enumerate(kept)}
    n = len(kept)
    a = diagonal_algebra(n, field)
    idempotents = []
    alphas = []
    for s in table.elements():
        p = perms[s]
        image = {p[x] for x in kept}
        e_vals = [field.one() if x in image else field.zero() for x in kept]
        idempotents.append(Matrix.column(e_vals, field))
        rows = [[field.zero()] * n for _ in range(n)]
        for y in kept:
            if p[y] in pos:
                rows[pos[p[y]]][pos[y]] = field.one()
        alphas.append(Matrix(field, rows))
    return PartialGroupAction(a, table, idempotents, alphas)


def partial_z3_on_k2(field: Field) -> PartialGroupAction:
    """The 3-cycle on k^3 restricted to the span of the first two coordinates."""
    table = CayleyTable.cyclic(3)
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
    return restricted_permutation_action(table, perms, 3, [0, 1], field)


def partial_s3_on_k2(field: Field) -> PartialGroupAction:
    """All of S3 permuting k^3, restricted to the first two coordinates."""
    table = CayleyTable.symmetric3()
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    return restricted_permutation_action(table, perms, 3, [0, 1], field)


# -- randomized families -------------------------------------------------------------


def random_invertible(n: int, field: Field, rng) -> Matrix:
    while True:
        rows = [[field.from_int(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        m = Matrix(field, rows)
        if inverse(m) is not None:
            return m


def conjugate_coaction(c: CoactionMap, p: Matrix) -> CoactionMap:
    """Transport the whole coaction along a change of basis of A."""
    p_inv = inverse(p)
    if p_inv is None:
        raise ValueError("change of basis must be invertible")
    n, F = c.n, c.field
    mult = p_inv @ c.algebra.mult @ kron(p, p)
    unit = p_inv @ c.algebra.unit
    algebra = AlgebraPresentation(F, n, mult, unit, c.algebra.labels)
    rho = kron(p_inv, Matrix.identity(c.m, F)) @ c.rho @ p
    return CoactionMap(algebra, c.hopf, rho)


def conjugate_action(a: ActionMap, p: Matrix) -> ActionMap:
    p_inv = inverse(p)
    if p_inv is None:
        raise ValueError("change of basis must be invertible")
    n, F = a.n, a.field
    mult = p_inv @ a.algebra.mult @ kron(p, p)
    unit = p_inv @ a.algebra.unit
    algebra = AlgebraPresentation(F, n, mult, unit, a.algebra.labels)
    kappa = p_inv @ a.kappa @ kron(Matrix.identity(a.m, F), p)
    return ActionMap(algebra, a.hopf, kappa)


def _block_idempotents(hopf: HopfPresentation, rng, allow_zero: bool):
    """Idempotent choices per 1-dimensional block: the unit, a distinguished
    idempotent of the Hopf algebra, or (optionally) zero."""
    choices = [hopf.unit]
    if hopf.dim == 4 and hopf.labels == ("1", "c", "x", "cx"):
        num = rng.randint(-2, 2)
        den = rng.choice([1, 2])
        choices.append(sweedler_idempotent(hopf.field, Fraction(num, den)))
    else:
        try:
            choices.append(integral_idempotent(hopf))
        except PreconditionError:
            pass
    if allow_zero:
        choices.append(Matrix.zeros(hopf.dim, 1, hopf.field))
    return choices


def random_lax_coaction(hopf: HopfPresentation, rng, max_blocks: int = 3,
                        require_partial: bool = False) -> CoactionMap:
    """A random lax coaction: per-block distinguished idempotents on a
    diagonal algebra, transported along a random change of basis."""
    n = rng.randint(1, max_blocks)
    F = hopf.field
    choices = _block_idempotents(hopf, rng, allow_zero=not require_partial)
    algebra = diagonal_algebra(n, F)
    rows = Matrix.zeros(n * hopf.dim, n, F).to_lists()
    for i in range(n):
        e = rng.choice(choices)
        for q in range(hopf.dim):
            rows[i * hopf.dim + q][i] = e.entry(q, 0)
    base = CoactionMap(algebra, hopf, Matrix(F, rows))
    return conjugate_coaction(base, random_invertible(n, F, rng))


def random_partial_coaction(hopf: HopfPresentation, rng, max_blocks: int = 3) -> CoactionMap:
    return random_lax_coaction(hopf, rng, max_blocks, require_partial=True)


# -- named registry for the CLI -------------------------------------------------------


PRESENTATION_EXAMPLES = {
    "sweedler4": lambda field, params: build_sweedler4(field),
    "z2-group-algebra": lambda field, params: group_algebra(CayleyTable.cyclic(2), field),
    "z3-group-algebra": lambda field, params: group_algebra(CayleyTable.cyclic(3), field),
    "s3-group-algebra": lambda field, params: group_algebra(CayleyTable.symmetric3(), field),
}


def _dim(params) -> int:
    return int(params.get("dim") or 2)


def _alpha(params, field):
    return field.parse(str(params.get("alpha") if params.get("alpha") is not None else "0"))


MAP_EXAMPLES = {
    "trivial": lambda field, params: trivial_coaction(
        diagonal_algebra(_dim(params), field), group_algebra(CayleyTable.cyclic(2), field)
    ),
    "weak-zero": lambda field, params: zero_coaction(
        diagonal_algebra(_dim(params), field), group_algebra(CayleyTable.cyclic(2), field)
    ),
    "sweedler-on-k": lambda field, params: sweedler_on_k(field, _alpha(params, field)),
    "sweedler-on-B": lambda field, params: sweedler_on_b(field),
    "regular-z2": lambda field, params: regular_coaction(CayleyTable.cyclic(2), field),
    "regular-z3": lambda field, params: regular_coaction(CayleyTable.cyclic(3), field),
    "trivial-action": lambda field, params: trivial_action(
        diagonal_algebra(_dim(params), field), group_algebra(CayleyTable.cyclic(2), field)
    ),
    "weak-zero-action": lambda field, params: zero_action(
        diagonal_algebra(_dim(params), field), group_algebra(CayleyTable.cyclic(2), field)
    ),
    "partial-z2-on-k2": lambda field, params: group_to_kG(partial_z2_on_k2(field)),
    "global-z2-swap": lambda field, params: group_to_kG(global_z2_swap(field)),
    "partial-z3-on-k2": lambda field, params: group_to_kG(partial_z3_on_k2(field)),
    "partial-s3-on-k2": lambda field, params: group_to_kG(partial_s3_on_k2(field)),
}


def build_example(name: str, field: Optional[Field] = None, **params):
    """Look up a named example; raises KeyError for unknown names."""
    field = field or QQ
    if name in PRESENTATION_EXAMPLES:
        return PRESENTATION_EXAMPLES[name](field, params)
    if name in MAP_EXAMPLES:
        return MAP_EXAMPLES[name](field, params)
    raise KeyError(name)


def example_names() -> list:
    return sorted(PRESENTATION_EXAMPLES) + sorted(MAP_EXAMPLES)
