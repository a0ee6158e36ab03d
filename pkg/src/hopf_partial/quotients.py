"""Balanced tensor products X (x)_R Y as explicit quotient spaces.

The quotient of X (x) Y by the span of all  (x.r) (x) y  -  x (x) (r.y)
is presented by a projection matrix onto complementary coordinates and a
deterministic section chosen from the echelon form of the relation span,
so that projection @ section = identity.  Every module that needs a
tensor product over a subalgebra (or over any acting algebra) goes
through this single facility.
"""

from __future__ import annotations

from typing import Optional

from .exactlin import Matrix, ShapeError, Subspace, kron, rref


class TensorOverSub:
    """The quotient space X (x)_R Y together with projection and section.

    right_act : X (x) R -> X and left_act : R (x) Y -> Y are the action
    maps; relations is the subspace of X (x) Y they generate.
    """

    __slots__ = (
        "left_dim",
        "right_dim",
        "sub_dim",
        "right_act",
        "left_act",
        "relations",
        "projection",
        "section",
        "field",
    )

    def __init__(self, right_act: Matrix, left_act: Matrix, sub_dim: int):
        if right_act.field != left_act.field:
            raise ShapeError("action maps over different fields")
        if sub_dim == 0:
            raise ShapeError("acting algebra has dimension zero")
        x_dim = right_act.rows
        y_dim = left_act.rows
        if right_act.cols != x_dim * sub_dim:
            raise ShapeError("right action map has wrong shape")
        if left_act.cols != sub_dim * y_dim:
            raise ShapeError("left action map has wrong shape")
        field = right_act.field
        n = x_dim * y_dim

        # Columns of rel span the balanced relations, one per (x_i, r_k, y_j).
        iy = Matrix.identity(y_dim, field)
        ix = Matrix.identity(x_dim, field)
        rel = kron(right_act, iy) - kron(ix, left_act)

        echelon, rnk, pivots = rref(rel.transpose())
        pivot_set = set(pivots)
        nonpivots = [j for j in range(n) if j not in pivot_set]

        z, o = field.zero(), field.one()
        # Canonical representative: subtract pivot-coordinate multiples of
        # the echelon relation rows, then read off the non-pivot slots.
        proj_rows = []
        for j in nonpivots:
            row = [z] * n
            row[j] = o
            for i, p in enumerate(pivots):
                coeff = echelon.entry(i, j)
                if coeff != z:
                    row[p] = field.neg(coeff)
            proj_rows.append(tuple(row))
        projection = Matrix._raw(field, tuple(proj_rows), len(nonpivots), n)

        sec_rows = [[z] * len(nonpivots) for _ in range(n)]
        for q, j in enumerate(nonpivots):
            sec_rows[j][q] = o
        section = Matrix._raw(
            field, tuple(tuple(r) for r in sec_rows), n, len(nonpivots)
        )

        rel_basis = Matrix._raw(
            field,
            tuple(tuple(echelon.entry(i, j) for i in range(rnk)) for j in range(n)),
            n,
            rnk,
        )

        object.__setattr__(self, "left_dim", x_dim)
        object.__setattr__(self, "right_dim", y_dim)
        object.__setattr__(self, "sub_dim", sub_dim)
        object.__setattr__(self, "right_act", right_act)
        object.__setattr__(self, "left_act", left_act)
        object.__setattr__(self, "relations", Subspace(n, rel_basis))
        object.__setattr__(self, "projection", projection)
        object.__setattr__(self, "section", section)
        object.__setattr__(self, "field", field)

    def __setattr__(self, *a):
        raise AttributeError("TensorOverSub is immutable")

    @property
    def dim(self) -> int:
        return self.projection.rows

    @property
    def ambient_dim(self) -> int:
        return self.left_dim * self.right_dim

    def project(self, v: Matrix) -> Matrix:
        """Quotient coordinates of an X (x) Y vector (or matrix of them)."""
        return self.projection @ v

    def pure(self, x: Matrix, y: Matrix) -> Matrix:
        """Class of the pure tensor x (x) y."""
        return self.projection @ kron(x, y)

    def induce(self, concrete: Matrix, codomain: Optional["TensorOverSub"] = None):
        """Induced map on quotients from a concrete map on the ambient space.

        Returns ``(matrix, well_defined)``.  The map is well defined iff
        the concrete matrix sends the relation span of the domain into
        the relation span of the codomain (into zero, if the codomain is
        a plain space); the returned matrix always uses the canonical
        section, so callers can still inspect the ill-defined case.
        """
        if concrete.cols != self.ambient_dim:
            raise ShapeError("concrete map does not start at the ambient tensor space")
        image_of_rel = concrete @ self.relations.basis
        if codomain is None:
            well = image_of_rel.is_zero_matrix()
            return concrete @ self.section, well
        well = (codomain.projection @ image_of_rel).is_zero_matrix()
        return codomain.projection @ concrete @ self.section, well


def balanced_tensor(right_act: Matrix, left_act: Matrix, sub_dim: int) -> TensorOverSub:
    """Convenience constructor mirroring TensorOverSub.__init__."""
    return TensorOverSub(right_act, left_act, sub_dim)
