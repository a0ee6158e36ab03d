"""Exact dense linear algebra over the rationals and prime fields.

Scalars are plain ``fractions.Fraction`` values (rationals, automatically
kept in lowest terms) or ints in ``[0, p)`` (residues mod a prime p); a
shared :class:`Field` tag keeps every matrix honest about where its
entries live.  Everything here is pure and exact -- floats are rejected
at construction time.

Tensor convention (fixed package-wide): basis vector i of X paired with
basis vector j of Y sits at slot ``i * dim(Y) + j`` of X (x) Y.  All
higher modules cite this convention instead of re-deriving it;
:func:`kron` and :func:`leg_perm` implement it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union


class FieldMismatchError(ValueError):
    """Raised when two operands live over different fields."""


class ShapeError(ValueError):
    """Raised on dimension mismatch in a matrix operation."""


def _is_prime(p: int) -> bool:
    # Deterministic Miller-Rabin; the fixed base set is exact for p < 3.3e24.
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, p)
        if x == 1 or x == p - 1:
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Field:
    """Descriptor of the coefficient field: the rationals or F_p.

    Scalar values themselves are bare ``Fraction``/``int`` objects; the
    Field instance supplies arithmetic, parsing and formatting so no
    scalar ever silently changes field.
    """

    __slots__ = ("kind", "p")

    _Q_SINGLETON = None
    _FP_CACHE: dict = {}

    def __init__(self, kind: str, p: Optional[int] = None):
        if kind == "Q":
            if p is not None:
                raise ValueError("rational field takes no modulus")
        elif kind == "Fp":
            if not isinstance(p, int) or not _is_prime(p):
                raise ValueError(f"modulus must be prime, got {p!r}")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("Field is immutable")

    @classmethod
    def rationals(cls) -> "Field":
        if cls._Q_SINGLETON is None:
            cls._Q_SINGLETON = cls("Q")
        return cls._Q_SINGLETON

    @classmethod
    def prime(cls, p: int) -> "Field":
        if p not in cls._FP_CACHE:
            cls._FP_CACHE[p] = cls("Fp", p)
        return cls._FP_CACHE[p]

    # -- scalar construction -------------------------------------------------

    def coerce(self, value):
        """Validate/convert a value into this field.

        Accepts ints, strings in the canonical format, and (over Q)
        Fractions.  Floats are rejected outright: exactness is part of
        the contract.
        """
        if isinstance(value, float):
            raise TypeError("floating point values are not allowed in exact matrices")
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "Q":
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise TypeError(f"cannot use {type(value).__name__} as a rational scalar")
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise TypeError("non-integral Fraction has no meaning mod p")
            value = value.numerator
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot use {type(value).__name__} as a scalar mod {self.p}")

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def from_int(self, k: int):
        return Fraction(k) if self.kind == "Q" else k % self.p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.kind == "Q" else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    # -- text ----------------------------------------------------------------

    def parse(self, s: str):
        """Parse a canonical scalar string: "p/q" or "n" over Q, "r mod p" over F_p."""
        s = s.strip()
        if "." in s or "e" in s.lower().replace("mod", ""):
            raise ValueError(f"not an exact scalar: {s!r}")
        if self.kind == "Q":
            if "/" in s:
                num, den = s.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(s))
        if "mod" in s:
            r, p = s.split("mod")
            if int(p) != self.p:
                raise ValueError(f"scalar {s!r} declared mod {p.strip()}, field is mod {self.p}")
            return int(r) % self.p
        return int(s) % self.p

    def format(self, a) -> str:
        if self.kind == "Q":
            return str(a)
        return f"{a} mod {self.p}"

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.kind == "Q" else f"GF({self.p})"


QQ = Field.rationals()


Scalarish = Union[int, str, Fraction]


class Matrix:
    """Immutable dense matrix over a fixed field.

    Linear maps are stored with columns = images of domain basis
    vectors, so composition is ``@``.  Vectors are n x 1 matrices.
    """

    __slots__ = ("field", "rows", "cols", "_rows")

    def __init__(self, field: Field, rows: Sequence[Sequence[Scalarish]]):
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)
        object.__setattr__(self, "_rows", data)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, field: Field, data: tuple, rows: int, cols: int) -> "Matrix":
        # Internal fast path: entries already known to be valid field scalars.
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "_rows", data)
        return m

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field) -> "Matrix":
        z = field.zero()
        return cls._raw(field, tuple(tuple([z] * cols) for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        z, o = field.zero(), field.one()
        return cls._raw(
            field,
            tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)),
            n,
            n,
        )

    @classmethod
    def column(cls, values: Sequence[Scalarish], field: Field) -> "Matrix":
        return cls(field, [[v] for v in values])

    @classmethod
    def basis_column(cls, n: int, i: int, field: Field) -> "Matrix":
        z = [field.zero()] * n
        z[i] = field.one()
        return cls.column(z, field)

    # -- access ---------------------------------------------------------------

    def entry(self, i: int, j: int):
        return self._rows[i][j]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row_tuple(self, i: int) -> tuple:
        return self._rows[i]

    def col(self, j: int) -> "Matrix":
        return Matrix._raw(self.field, tuple((r[j],) for r in self._rows), self.rows, 1)

    def column_entries(self, j: int) -> list:
        return [r[j] for r in self._rows]

    def to_lists(self) -> list:
        return [list(r) for r in self._rows]

    def columns(self) -> Iterable["Matrix"]:
        for j in range(self.cols):
            yield self.col(j)

    # -- elementwise ----------------------------------------------------------

    def _check(self, other: "Matrix", same_shape=True):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if same_shape and (self.rows != other.rows or self.cols != other.cols):
            raise ShapeError(f"{self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        F = self.field
        data = tuple(
            tuple(F.add(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)
        )
        return Matrix._raw(F, data, self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        F = self.field
        data = tuple(
            tuple(F.sub(a, b) for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)
        )
        return Matrix._raw(F, data, self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        F = self.field
        return Matrix._raw(
            F, tuple(tuple(F.neg(a) for a in r) for r in self._rows), self.rows, self.cols
        )

    def scale(self, s) -> "Matrix":
        F = self.field
        s = F.coerce(s)
        return Matrix._raw(
            F, tuple(tuple(F.mul(s, a) for a in r) for r in self._rows), self.rows, self.cols
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise ShapeError(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        F = self.field
        z = F.zero()
        add, mul = F.add, F.mul
        orows = other._rows
        out = []
        for arow in self._rows:
            acc = [z] * other.cols
            for k, a in enumerate(arow):
                if a == z:
                    continue
                brow = orows[k]
                for j, b in enumerate(brow):
                    if b != z:
                        acc[j] = add(acc[j], mul(a, b))
            out.append(tuple(acc))
        return Matrix._raw(F, tuple(out), self.rows, other.cols)

    def transpose(self) -> "Matrix":
        data = tuple(tuple(self._rows[i][j] for i in range(self.rows)) for j in range(self.cols))
        return Matrix._raw(self.field, data, self.cols, self.rows)

    def is_zero_matrix(self) -> bool:
        z = self.field.zero()
        return all(a == z for r in self._rows for a in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field, self._rows))

    def __repr__(self):
        if self.rows * self.cols > 64:
            return f"Matrix({self.rows}x{self.cols} over {self.field})"
        body = "; ".join(" ".join(self.field.format(a) for a in r) for r in self._rows)
        return f"Matrix[{body}]"


def hstack(mats: Sequence[Matrix]) -> Matrix:
    first = mats[0]
    for m in mats[1:]:
        if m.field != first.field:
            raise FieldMismatchError("hstack over mixed fields")
        if m.rows != first.rows:
            raise ShapeError("hstack needs equal row counts")
    data = tuple(
        tuple(x for m in mats for x in m._rows[i]) for i in range(first.rows)
    )
    return Matrix._raw(first.field, data, first.rows, sum(m.cols for m in mats))


def vstack(mats: Sequence[Matrix]) -> Matrix:
    first = mats[0]
    for m in mats[1:]:
        if m.field != first.field:
            raise FieldMismatchError("vstack over mixed fields")
        if m.cols != first.cols:
            raise ShapeError("vstack needs equal column counts")
    data = tuple(r for m in mats for r in m._rows)
    return Matrix._raw(first.field, data, sum(m.rows for m in mats), first.cols)


# -- elimination ---------------------------------------------------------------


def rref(m: Matrix):
    """Reduced row-echelon form.

    Deterministic: the pivot of each step is the first nonzero entry in
    column order.  Returns ``(R, rank, pivot_columns)``.
    """
    F = m.field
    z = F.zero()
    work = [list(r) for r in m._rows]
    pivots = []
    r = 0
    for c in range(m.cols):
        pr = None
        for i in range(r, m.rows):
            if work[i][c] != z:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = F.inv(work[r][c])
        if inv != F.one():
            work[r] = [F.mul(inv, x) for x in work[r]]
        prow = work[r]
        for i in range(m.rows):
            if i != r and work[i][c] != z:
                f = work[i][c]
                work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], prow)]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    out = Matrix._raw(F, tuple(tuple(row) for row in work), m.rows, m.cols)
    return out, r, tuple(pivots)


def solve(m: Matrix, b: Matrix) -> Optional[Matrix]:
    """One exact solution of m x = b, or None if inconsistent.

    Free variables are set to zero, so the answer is reproducible.  b may
    have several columns; all systems must be consistent.
    """
    if b.rows != m.rows:
        raise ShapeError("right-hand side has wrong length")
    if b.field != m.field:
        raise FieldMismatchError("solve over mixed fields")
    F = m.field
    z = F.zero()
    aug, rank, pivots = rref(hstack([m, b]))
    # Any pivot beyond the coefficient block certifies inconsistency.
    if any(p >= m.cols for p in pivots):
        return None
    sol = [[z] * b.cols for _ in range(m.cols)]
    for i, p in enumerate(pivots):
        for j in range(b.cols):
            sol[p][j] = aug.entry(i, m.cols + j)
    return Matrix._raw(F, tuple(tuple(r) for r in sol), m.cols, b.cols)


def kernel_basis(m: Matrix) -> "Subspace":
    """Basis of the null space {v : m v = 0}, dim = cols - rank."""
    F = m.field
    z, o = F.zero(), F.one()
    R, rank, pivots = rref(m)
    pivot_set = set(pivots)
    vecs = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [z] * m.cols
        v[f] = o
        for i, p in enumerate(pivots):
            v[p] = F.neg(R.entry(i, f))
        vecs.append(v)
    if not vecs:
        return Subspace.zero(m.cols, F)
    span = Matrix._raw(F, tuple(tuple(v[i] for v in vecs) for i in range(m.cols)), m.cols, len(vecs))
    return Subspace.from_span(span)


def inverse(m: Matrix) -> Optional[Matrix]:
    """Matrix inverse, or None if singular."""
    if m.rows != m.cols:
        raise ShapeError("inverse of a non-square matrix")
    sol = solve(m, Matrix.identity(m.rows, m.field))
    if sol is None:
        return None
    if (m @ sol) != Matrix.identity(m.rows, m.field):
        return None
    return sol


def rank(m: Matrix) -> int:
    return rref(m)[1]


# -- tensor products ------------------------------------------------------------


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product under the (i, j) -> i * dim2 + j index convention."""
    if a.field != b.field:
        raise FieldMismatchError("kron over mixed fields")
    F = a.field
    z = F.zero()
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [[z] * cols for _ in range(rows)]
    for i1, arow in enumerate(a._rows):
        for j1, x in enumerate(arow):
            if x == z:
                continue
            rbase = i1 * b.rows
            cbase = j1 * b.cols
            for i2, brow in enumerate(b._rows):
                orow = out[rbase + i2]
                for j2, y in enumerate(brow):
                    if y != z:
                        orow[cbase + j2] = F.mul(x, y)
    return Matrix._raw(F, tuple(tuple(r) for r in out), rows, cols)


def kron_all(*mats: Matrix) -> Matrix:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def _strides(dims: Sequence[int]) -> list:
    s = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        s[i] = s[i + 1] * dims[i + 1]
    return s


def leg_perm(dims: Sequence[int], perm: Sequence[int], field: Field) -> Matrix:
    """Permutation matrix reordering tensor legs.

    Sends basis vector (i_0, ..., i_{k-1}) of the dims-tensor space to
    basis vector (i_{perm[0]}, ..., i_{perm[k-1]}) of the reordered one.
    """
    if sorted(perm) != list(range(len(dims))):
        raise ValueError(f"not a permutation: {perm}")
    total = 1
    for d in dims:
        total *= d
    out_dims = [dims[p] for p in perm]
    sin, sout = _strides(dims), _strides(out_dims)
    z, o = field.zero(), field.one()
    out = [[z] * total for _ in range(total)]
    for f in range(total):
        rem = f
        digits = []
        for s in sin:
            digits.append(rem // s)
            rem %= s
        g = sum(digits[p] * sout[k] for k, p in enumerate(perm))
        out[g][f] = o
    return Matrix._raw(field, tuple(tuple(r) for r in out), total, total)


def _perm_map(dims: Sequence[int], perm: Sequence[int]):
    if sorted(perm) != list(range(len(dims))):
        raise ValueError(f"not a permutation: {perm}")
    total = 1
    for d in dims:
        total *= d
    out_dims = [dims[p] for p in perm]
    sin, sout = _strides(dims), _strides(out_dims)
    table = [0] * total
    for f in range(total):
        rem = f
        digits = []
        for s in sin:
            digits.append(rem // s)
            rem %= s
        table[f] = sum(digits[p] * sout[k] for k, p in enumerate(perm))
    return total, table


def perm_rows(m: Matrix, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Equivalent to ``leg_perm(dims, perm, field) @ m`` without the dense factor."""
    total, table = _perm_map(dims, perm)
    if m.rows != total:
        raise ShapeError("row count does not match tensor dims")
    data = [None] * total
    for f in range(total):
        data[table[f]] = m._rows[f]
    return Matrix._raw(m.field, tuple(data), m.rows, m.cols)


def perm_cols(m: Matrix, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Equivalent to ``m @ leg_perm(dims, perm, field)`` without the dense factor.

    Column (i_0, ..., i_{k-1}) of the result is column
    (i_{perm[0]}, ..., i_{perm[k-1]}) of m.
    """
    total, table = _perm_map(dims, perm)
    if m.cols != total:
        raise ShapeError("column count does not match tensor dims")
    data = tuple(
        tuple(row[table[f]] for f in range(total)) for row in m._rows
    )
    return Matrix._raw(m.field, data, m.rows, m.cols)


def unflatten(index: int, dims: Sequence[int]) -> tuple:
    """Decode a flat tensor index into its multi-index under the convention."""
    digits = []
    for s in _strides(dims):
        digits.append(index // s)
        index %= s
    return tuple(digits)


# -- subspaces -------------------------------------------------------------------


class Subspace:
    """Subspace of k^n with a canonical reduced column-echelon basis.

    The basis columns are the transposed nonzero rows of the RREF of the
    spanning set, so equal subspaces always carry identical bases.
    """

    __slots__ = ("ambient_dim", "basis", "field")

    def __init__(self, ambient_dim: int, basis: Matrix):
        if basis.rows != ambient_dim:
            raise ShapeError("basis does not live in the ambient space")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "field", basis.field)

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(ambient_dim, 0, field))

    @classmethod
    def full(cls, ambient_dim: int, field: Field) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim, field))

    @classmethod
    def from_span(cls, spanning: Matrix) -> "Subspace":
        """Canonicalize a spanning set (given as matrix columns)."""
        R, rnk, _ = rref(spanning.transpose())
        rows = R._rows[:rnk]
        basis = Matrix._raw(
            spanning.field,
            tuple(tuple(rows[j][i] for j in range(rnk)) for i in range(spanning.rows)),
            spanning.rows,
            rnk,
        )
        return cls(spanning.rows, basis)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def coords_of(self, v: Matrix) -> Optional[Matrix]:
        """Coordinates of v in the canonical basis, or None if outside."""
        if v.rows != self.ambient_dim:
            raise ShapeError("vector has wrong ambient dimension")
        if self.dim == 0:
            return Matrix.zeros(0, v.cols, self.field) if v.is_zero_matrix() else None
        return solve(self.basis, v)

    def contains(self, v: Matrix) -> bool:
        return self.coords_of(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return other.dim == 0 or self.coords_of(other.basis) is not None

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0:
            return other
        if other.dim == 0:
            return self
        return Subspace.from_span(hstack([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Exact intersection via the kernel of the stacked system U x = V y."""
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.field)
        stacked = hstack([self.basis, -other.basis])
        ker = kernel_basis(stacked)
        if ker.dim == 0:
            return Subspace.zero(self.ambient_dim, self.field)
        xpart = Matrix._raw(
            self.field,
            tuple(ker.basis._rows[i] for i in range(self.dim)),
            self.dim,
            ker.dim,
        )
        return Subspace.from_span(self.basis @ xpart)

    def _check(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatchError("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("subspaces in different ambient spaces")

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim} over {self.field})"


def image_basis(m: Matrix) -> Subspace:
    """Column space of m with the canonical echelon basis."""
    return Subspace.from_span(m)
