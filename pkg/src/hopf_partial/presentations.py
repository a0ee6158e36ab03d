"""Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras
given by structure constants on a chosen basis.

A multiplication is stored as the matrix of A (x) A -> A (columns indexed
by basis pairs under the package tensor convention), a comultiplication
as the matrix of H -> H (x) H.  Equality of presentations is exact tensor
equality; basis labels are metadata only.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .exactlin import (
    Field,
    FieldMismatchError,
    Matrix,
    ShapeError,
    inverse,
    kron,
    perm_cols,
    perm_rows,
    solve,
    vstack,
)
from .report import AxiomReport, Check, PreconditionError, compare_maps


class AlgebraPresentation:
    """Associative unital algebra by structure constants.

    mult is the n x n^2 matrix of the product map, unit the coordinate
    column of the identity element.
    """

    def __init__(self, field: Field, dim: int, mult: Matrix, unit: Matrix,
                 labels: Optional[Sequence[str]] = None):
        if mult.field != field or unit.field != field:
            raise FieldMismatchError("structure tensors must share the field")
        if mult.rows != dim or mult.cols != dim * dim:
            raise ShapeError(f"mult must be {dim}x{dim * dim}")
        if unit.rows != dim or unit.cols != 1:
            raise ShapeError("unit must be a coordinate column")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(dim))

    @classmethod
    def from_tensor(cls, field: Field, mult_tensor, unit, labels=None) -> "AlgebraPresentation":
        """Build from mu[i][j][k] = coefficient of basis k in b_i b_j."""
        n = len(mult_tensor)
        rows = [[field.zero()] * (n * n) for _ in range(n)]
        for i in range(n):
            if len(mult_tensor[i]) != n:
                raise ShapeError("mult tensor is not cubical")
            for j in range(n):
                col = mult_tensor[i][j]
                if len(col) != n:
                    raise ShapeError("mult tensor is not cubical")
                for k in range(n):
                    rows[k][i * n + j] = field.coerce(col[k])
        mult = Matrix(field, rows)
        return cls(field, n, mult, Matrix.column(list(unit), field), labels)

    def mult_coeff(self, i: int, j: int, k: int):
        return self.mult.entry(k, i * self.dim + j)

    def mult_tensor(self):
        n = self.dim
        return [[[self.mult_coeff(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]

    def product(self, v: Matrix, w: Matrix) -> Matrix:
        return self.mult @ kron(v, w)

    def left_mult(self, v: Matrix) -> Matrix:
        """Matrix of a |-> v a."""
        return self.mult @ kron(v, Matrix.identity(self.dim, self.field))

    def right_mult(self, v: Matrix) -> Matrix:
        """Matrix of a |-> a v."""
        return self.mult @ kron(Matrix.identity(self.dim, self.field), v)

    def verify(self) -> AxiomReport:
        n, F = self.dim, self.field
        i_n = Matrix.identity(n, F)
        checks = [
            compare_maps(
                "associativity",
                self.mult @ kron(self.mult, i_n),
                self.mult @ kron(i_n, self.mult),
                [n, n, n],
                [n],
            ),
            compare_maps("unit-left", self.mult @ kron(self.unit, i_n), i_n, [n], [n]),
            compare_maps("unit-right", self.mult @ kron(i_n, self.unit), i_n, [n], [n]),
        ]
        return AxiomReport(checks)

    def op(self) -> "AlgebraPresentation":
        """Opposite algebra: the product arguments swapped."""
        return AlgebraPresentation(
            self.field,
            self.dim,
            perm_cols(self.mult, [self.dim, self.dim], [1, 0]),
            self.unit,
            self.labels,
        )

    def tensor_with(self, other: "AlgebraPresentation") -> "AlgebraPresentation":
        """Componentwise product structure on the tensor product space."""
        if self.field != other.field:
            raise FieldMismatchError("tensor product over mixed fields")
        n, m = self.dim, other.dim
        raw = kron(self.mult, other.mult)
        # Reorder (a, b, h, g) inputs into the (a, h, b, g) basis of (A (x) H)^2.
        mult = perm_cols(raw, [n, m, n, m], [0, 2, 1, 3])
        labels = [f"{a}(x){b}" for a in self.labels for b in other.labels]
        return AlgebraPresentation(self.field, n * m, mult, kron(self.unit, other.unit), labels)

    def tensor_eq(self, other: "AlgebraPresentation") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
        )


class CoalgebraPresentation:
    """Coassociative counital coalgebra by structure constants.

    comult is the m^2 x m matrix of the coproduct, counit the 1 x m row.
    """

    def __init__(self, field: Field, dim: int, comult: Matrix, counit: Matrix,
                 labels: Optional[Sequence[str]] = None):
        if comult.field != field or counit.field != field:
            raise FieldMismatchError("structure tensors must share the field")
        if comult.rows != dim * dim or comult.cols != dim:
            raise ShapeError(f"comult must be {dim * dim}x{dim}")
        if counit.rows != 1 or counit.cols != dim:
            raise ShapeError("counit must be a row")
        self.field = field
        self.dim = dim
        self.comult = comult
        self.counit = counit
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(dim))

    @classmethod
    def from_tensor(cls, field: Field, comult_tensor, counit, labels=None) -> "CoalgebraPresentation":
        """Build from delta[i][j][k] = coefficient of b_j (x) b_k in the coproduct of b_i."""
        m = len(comult_tensor)
        rows = [[field.zero()] * m for _ in range(m * m)]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    rows[j * m + k][i] = field.coerce(comult_tensor[i][j][k])
        return cls(field, m, Matrix(field, rows), Matrix(field, [list(counit)]), labels)

    def comult_coeff(self, i: int, j: int, k: int):
        return self.comult.entry(j * self.dim + k, i)

    def comult_tensor(self):
        m = self.dim
        return [[[self.comult_coeff(i, j, k) for k in range(m)] for j in range(m)] for i in range(m)]

    def verify(self) -> AxiomReport:
        m, F = self.dim, self.field
        i_m = Matrix.identity(m, F)
        checks = [
            compare_maps(
                "coassociativity",
                kron(self.comult, i_m) @ self.comult,
                kron(i_m, self.comult) @ self.comult,
                [m],
                [m, m, m],
            ),
            compare_maps("counit-left", kron(self.counit, i_m) @ self.comult, i_m, [m], [m]),
            compare_maps("counit-right", kron(i_m, self.counit) @ self.comult, i_m, [m], [m]),
        ]
        return AxiomReport(checks)

    def cop(self) -> "CoalgebraPresentation":
        """Opposite coalgebra: the coproduct legs swapped."""
        return CoalgebraPresentation(
            self.field,
            self.dim,
            perm_rows(self.comult, [self.dim, self.dim], [1, 0]),
            self.counit,
            self.labels,
        )

    def tensor_eq(self, other: "CoalgebraPresentation") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.comult == other.comult
            and self.counit == other.counit
        )


class BialgebraPresentation:
    """Algebra and coalgebra on the same basis, with compatibility axioms."""

    def __init__(self, algebra: AlgebraPresentation, coalgebra: CoalgebraPresentation):
        if algebra.field != coalgebra.field:
            raise FieldMismatchError("bialgebra halves over different fields")
        if algebra.dim != coalgebra.dim:
            raise ShapeError("bialgebra halves of different dimension")
        self.algebra = algebra
        self.coalgebra = coalgebra

    # Convenience passthroughs; the two halves share basis and field.
    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def mult(self):
        return self.algebra.mult

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def comult(self):
        return self.coalgebra.comult

    @property
    def counit(self):
        return self.coalgebra.counit

    def _compat_checks(self) -> list:
        m, F = self.dim, self.field
        i_m = Matrix.identity(m, F)
        # Coproduct of a product = product of coproducts in (H (x) H).
        lhs = self.comult @ self.mult
        rhs = kron(self.mult, self.mult) @ perm_rows(
            kron(self.comult, self.comult), [m, m, m, m], [0, 2, 1, 3]
        )
        checks = [
            compare_maps("comult-multiplicative", lhs, rhs, [m, m], [m, m]),
            compare_maps(
                "comult-unit", self.comult @ self.unit, kron(self.unit, self.unit), [], [m, m]
            ),
            compare_maps(
                "counit-multiplicative",
                self.counit @ self.mult,
                kron(self.counit, self.counit),
                [m, m],
                [1],
            ),
            compare_maps(
                "counit-unit",
                self.counit @ self.unit,
                Matrix(F, [[F.one()]]),
                [],
                [1],
            ),
        ]
        return checks

    def verify(self) -> AxiomReport:
        return AxiomReport(
            list(self.algebra.verify())
            + list(self.coalgebra.verify())
            + self._compat_checks()
        )

    def cop(self) -> "BialgebraPresentation":
        return BialgebraPresentation(self.algebra, self.coalgebra.cop())

    def op(self) -> "BialgebraPresentation":
        return BialgebraPresentation(self.algebra.op(), self.coalgebra)

    def tensor_eq(self, other: "BialgebraPresentation") -> bool:
        return self.algebra.tensor_eq(other.algebra) and self.coalgebra.tensor_eq(other.coalgebra)


class HopfPresentation(BialgebraPresentation):
    """Bialgebra with an antipode matrix (and optionally its inverse)."""

    def __init__(self, algebra, coalgebra, antipode: Matrix,
                 antipode_inverse: Optional[Matrix] = None):
        super().__init__(algebra, coalgebra)
        if antipode.rows != self.dim or antipode.cols != self.dim:
            raise ShapeError("antipode must be square of the bialgebra dimension")
        if antipode.field != self.field:
            raise FieldMismatchError("antipode over the wrong field")
        self.antipode = antipode
        self.antipode_inverse = antipode_inverse

    def verify(self) -> AxiomReport:
        m, F = self.dim, self.field
        i_m = Matrix.identity(m, F)
        unit_counit = self.unit @ self.counit
        checks = list(super().verify()) + [
            compare_maps(
                "antipode-left",
                self.mult @ kron(self.antipode, i_m) @ self.comult,
                unit_counit,
                [m],
                [m],
            ),
            compare_maps(
                "antipode-right",
                self.mult @ kron(i_m, self.antipode) @ self.comult,
                unit_counit,
                [m],
                [m],
            ),
        ]
        if self.antipode_inverse is not None:
            checks.append(
                compare_maps(
                    "antipode-inverse",
                    self.antipode @ self.antipode_inverse,
                    i_m,
                    [m],
                    [m],
                )
            )
            checks.append(
                compare_maps(
                    "antipode-inverse-left",
                    self.antipode_inverse @ self.antipode,
                    i_m,
                    [m],
                    [m],
                )
            )
        return AxiomReport(checks)

    def inverse_antipode(self) -> Matrix:
        """The inverse of the antipode, computed on demand."""
        if self.antipode_inverse is not None:
            return self.antipode_inverse
        inv = inverse(self.antipode)
        if inv is None:
            raise PreconditionError("antipode-invertible", "antipode matrix is singular")
        return inv

    def cop(self) -> "HopfPresentation":
        return HopfPresentation(
            self.algebra, self.coalgebra.cop(), self.inverse_antipode(), self.antipode
        )

    def op(self) -> "HopfPresentation":
        return HopfPresentation(
            self.algebra.op(), self.coalgebra, self.inverse_antipode(), self.antipode
        )

    def tensor_eq(self, other: "BialgebraPresentation") -> bool:
        if not super().tensor_eq(other):
            return False
        if isinstance(other, HopfPresentation):
            return self.antipode == other.antipode
        return True


def verify(p) -> AxiomReport:
    """Run every axiom of the presentation's kind."""
    return p.verify()


# -- duality and twists ----------------------------------------------------------


def dual_hopf(h: BialgebraPresentation):
    """The dual presentation on the dual basis.

    Multiplication of the dual is convolution (the transpose of the
    coproduct), comultiplication the transpose of the product; the dual
    of an antipode is its transpose.  Applying this twice returns the
    original presentation tensor-exactly.
    """
    F, m = h.field, h.dim
    labels = tuple(f"{lab}*" for lab in h.labels)
    alg = AlgebraPresentation(F, m, h.comult.transpose(), h.counit.transpose(), labels)
    coalg = CoalgebraPresentation(F, m, h.mult.transpose(), h.unit.transpose(), labels)
    if isinstance(h, HopfPresentation):
        sbar = h.antipode_inverse.transpose() if h.antipode_inverse is not None else None
        return HopfPresentation(alg, coalg, h.antipode.transpose(), sbar)
    return BialgebraPresentation(alg, coalg)


def cop(h: BialgebraPresentation):
    return h.cop()


def op(h: BialgebraPresentation):
    return h.op()


def solve_antipode(b: BialgebraPresentation) -> Matrix:
    """Solve the two-sided antipode equations for a bialgebra.

    The convolution inverse of the identity is unique when it exists, so
    the stacked linear system has at most one solution.
    """
    m, F = b.dim, b.field
    i_m = Matrix.identity(m, F)
    target = b.unit @ b.counit
    # Conditions: mult (S (x) id) comult = unit counit and the mirrored one,
    # linear in the m^2 unknown entries of S.
    cols_l = []
    cols_r = []
    for i in range(m):
        for j in range(m):
            e = Matrix.zeros(m, m, F).to_lists()
            e[i][j] = F.one()
            em = Matrix(F, e)
            cols_l.append(b.mult @ kron(em, i_m) @ b.comult)
            cols_r.append(b.mult @ kron(i_m, em) @ b.comult)

    def flatten(mat: Matrix) -> list:
        return [mat.entry(r, c) for r in range(mat.rows) for c in range(mat.cols)]

    sys_l = Matrix(F, [list(col) for col in zip(*[flatten(c) for c in cols_l])])
    sys_r = Matrix(F, [list(col) for col in zip(*[flatten(c) for c in cols_r])])
    rhs = Matrix.column(flatten(target), F)
    stacked = vstack([sys_l, sys_r])
    sol = solve(stacked, vstack([rhs, rhs]))
    if sol is None:
        raise PreconditionError("antipode-exists", "the antipode equations are inconsistent")
    entries = [[sol.entry(i * m + j, 0) for j in range(m)] for i in range(m)]
    return Matrix(F, entries)


# -- Cayley tables and group algebras ---------------------------------------------


class CayleyTable:
    """Finite group as a 0-indexed multiplication table, validated on construction."""

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None):
        n = len(table)
        rows = [list(r) for r in table]
        if any(len(r) != n for r in rows):
            raise ValueError("table is not square")
        if any(not (0 <= x < n) for r in rows for x in r):
            raise ValueError("table entries out of range")
        # Identity: a two-sided neutral element.
        identity = None
        for e in range(n):
            if all(rows[e][a] == a and rows[a][e] == a for a in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity element")
        # Inverses.
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if rows[a][b] == identity and rows[b][a] == identity:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise ValueError(f"element {a} has no inverse")
        # Associativity, brute force.
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                        raise ValueError(f"table is not associative at ({a}, {b}, {c})")
        self.order = n
        self.table = tuple(tuple(r) for r in rows)
        self.identity = identity
        self.inverses = tuple(inv)
        self.names = tuple(names) if names else tuple(f"g{i}" for i in range(n))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def elements(self):
        return range(self.order)

    @classmethod
    def cyclic(cls, n: int) -> "CayleyTable":
        return cls([[(a + b) % n for b in range(n)] for a in range(n)],
                   [f"g^{i}" if i else "e" for i in range(n)])

    @classmethod
    def direct_product(cls, g: "CayleyTable", h: "CayleyTable") -> "CayleyTable":
        n, m = g.order, h.order

        def idx(a, b):
            return a * m + b

        table = [[0] * (n * m) for _ in range(n * m)]
        for a1 in range(n):
            for b1 in range(m):
                for a2 in range(n):
                    for b2 in range(m):
                        table[idx(a1, b1)][idx(a2, b2)] = idx(g.mul(a1, a2), h.mul(b1, b2))
        names = [f"({g.names[a]},{h.names[b]})" for a in range(n) for b in range(m)]
        return cls(table, names)

    @classmethod
    def dihedral(cls, n: int) -> "CayleyTable":
        """Dihedral group of order 2n: elements (r, s) = rotation r, flip s."""
        def idx(r, s):
            return r + n * s

        table = [[0] * (2 * n) for _ in range(2 * n)]
        for r1 in range(n):
            for s1 in (0, 1):
                for r2 in range(n):
                    for s2 in (0, 1):
                        # (r1, s1) (r2, s2) = (r1 + (-1)^s1 r2, s1 + s2)
                        r = (r1 + (r2 if s1 == 0 else -r2)) % n
                        table[idx(r1, s1)][idx(r2, s2)] = idx(r, (s1 + s2) % 2)
        names = [f"r{r}" for r in range(n)] + [f"sr{r}" for r in range(n)]
        return cls(table, names)

    @classmethod
    def symmetric3(cls) -> "CayleyTable":
        perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
        index = {p: i for i, p in enumerate(perms)}

        def compose(p, q):
            # (p q)(x) = p(q(x))
            return tuple(p[q[x]] for x in range(3))

        table = [[index[compose(p, q)] for q in perms] for p in perms]
        return cls(table, ["e", "(01)", "(12)", "(02)", "(012)", "(021)"])

    @classmethod
    def quaternion8(cls) -> "CayleyTable":
        # Elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign).
        names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

        def enc(axis, sign):
            return 2 * axis + (0 if sign == 1 else 1)

        def dec(x):
            return x // 2, 1 if x % 2 == 0 else -1

        mul_axis = {
            (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
            (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
            (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
            (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
        }
        table = [[0] * 8 for _ in range(8)]
        for x in range(8):
            for y in range(8):
                ax, sx = dec(x)
                ay, sy = dec(y)
                az, sz = mul_axis[(ax, ay)]
                table[x][y] = enc(az, sx * sy * sz)
        return cls(table, names)


def group_algebra(table, field: Field) -> HopfPresentation:
    """The group Hopf algebra kG: grouplike basis, antipode by inversion.

    Accepts a CayleyTable or a raw 0-indexed table (validated here).  The
    antipode is solved from the antipode equations rather than read off
    the table, then cross-checked by verify in the caller's tests.
    """
    if not isinstance(table, CayleyTable):
        table = CayleyTable(table)
    n = table.order
    mult_tensor = [[[field.one() if table.mul(i, j) == k else field.zero() for k in range(n)]
                    for j in range(n)] for i in range(n)]
    unit = [field.one() if i == table.identity else field.zero() for i in range(n)]
    alg = AlgebraPresentation.from_tensor(field, mult_tensor, unit, table.names)
    comult_tensor = [[[field.one() if i == j == k else field.zero() for k in range(n)]
                      for j in range(n)] for i in range(n)]
    counit = [field.one()] * n
    coalg = CoalgebraPresentation.from_tensor(field, comult_tensor, counit, table.names)
    bial = BialgebraPresentation(alg, coalg)
    antipode = solve_antipode(bial)
    sbar = inverse(antipode)
    return HopfPresentation(alg, coalg, antipode, sbar)


def build_sweedler4(field: Field) -> HopfPresentation:
    """The 4-dimensional Hopf algebra on basis {1, c, x, cx}.

    Relations: c^2 = 1, x^2 = 0, xc = -cx; the coproduct is grouplike on
    c and skew-primitive on x.  Needs characteristic != 2 (the sign in
    xc = -cx must differ from +1 for the presentation to be the intended
    non-semisimple one, and 1/2 shows up in its distinguished idempotents).
    """
    if field.kind == "Fp" and field.p == 2:
        raise PreconditionError("char-not-2", "this presentation degenerates in characteristic 2")
    one, zero = field.one(), field.zero()
    minus = field.neg(one)
    labels = ("1", "c", "x", "cx")
    n = 4

    def basis(k):
        v = [zero] * n
        v[k] = one
        return v

    def scaled(k, s):
        v = [zero] * n
        v[k] = s
        return v

    mult_rows = {
        (0, 0): basis(0), (0, 1): basis(1), (0, 2): basis(2), (0, 3): basis(3),
        (1, 0): basis(1), (1, 1): basis(0), (1, 2): basis(3), (1, 3): basis(2),
        (2, 0): basis(2), (2, 1): scaled(3, minus), (2, 2): [zero] * n, (2, 3): [zero] * n,
        (3, 0): basis(3), (3, 1): scaled(2, minus), (3, 2): [zero] * n, (3, 3): [zero] * n,
    }
    mult_tensor = [[mult_rows[(i, j)] for j in range(n)] for i in range(n)]
    alg = AlgebraPresentation.from_tensor(field, mult_tensor, basis(0), labels)

    comult_tensor = [[[zero] * n for _ in range(n)] for _ in range(n)]
    # 1 -> 1 (x) 1;  c -> c (x) c;  x -> c (x) x + x (x) 1;  cx -> 1 (x) cx + cx (x) c.
    comult_tensor[0][0][0] = one
    comult_tensor[1][1][1] = one
    comult_tensor[2][1][2] = one
    comult_tensor[2][2][0] = one
    comult_tensor[3][0][3] = one
    comult_tensor[3][3][1] = one
    counit = [one, one, zero, zero]
    coalg = CoalgebraPresentation.from_tensor(field, comult_tensor, counit, labels)

    bial = BialgebraPresentation(alg, coalg)
    antipode = solve_antipode(bial)
    return HopfPresentation(alg, coalg, antipode, inverse(antipode))
