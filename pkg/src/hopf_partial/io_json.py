"""JSON file formats for presentations and (co)action maps.

Scalars are strings ("p/q" over the rationals with "/q" omitted for
integers, "r mod p" over a prime field), never floats.  Saving always
canonicalizes: sorted keys, two-space indent, normalized scalars, so
save(load(file)) is byte-identical for canonical files.
"""

from __future__ import annotations

import json
import os
from typing import Optional, Union

from .exactlin import Field, Matrix, QQ
from .presentations import (
    AlgebraPresentation,
    BialgebraPresentation,
    CayleyTable,
    CoalgebraPresentation,
    HopfPresentation,
)
from .coactions import CoactionMap
from .actions import ActionMap, PartialGroupAction


class FileFormatError(ValueError):
    """Raised for structurally invalid input documents."""


def field_from_doc(doc: dict) -> Field:
    kind = doc.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return Field.prime(int(doc["p"]))
    raise FileFormatError(f"unknown field descriptor {doc!r}")


def field_to_doc(field: Field) -> dict:
    if field.kind == "Q":
        return {"kind": "Q"}
    return {"kind": "Fp", "p": field.p}


def _matrix_from_rows(rows, field: Field) -> Matrix:
    return Matrix(field, [[field.parse(str(x)) for x in row] for row in rows])


def _matrix_to_rows(m: Matrix) -> list:
    return [[m.field.format(m.entry(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def _vector_to_list(v: Matrix) -> list:
    return [v.field.format(v.entry(i, 0)) for i in range(v.rows)]


def _tensor3_from_doc(t, field: Field):
    return [[[field.parse(str(x)) for x in row] for row in plane] for plane in t]


def load_presentation(doc: Union[dict, str], base_dir: str = "."):
    """Load a presentation from a dict or a file path."""
    if isinstance(doc, str):
        path = doc if os.path.isabs(doc) else os.path.join(base_dir, doc)
        with open(path) as fh:
            doc = json.load(fh)
    if not isinstance(doc, dict):
        raise FileFormatError("presentation document must be an object")
    try:
        field = field_from_doc(doc["field"])
        kind = doc["kind"]
        dim = int(doc["dim"])
        labels = doc.get("basis") or [f"b{i}" for i in range(dim)]
    except KeyError as exc:
        raise FileFormatError(f"missing key {exc}") from exc
    if len(labels) != dim:
        raise FileFormatError("basis labels do not match the dimension")

    def algebra():
        return AlgebraPresentation.from_tensor(
            field, _tensor3_from_doc(doc["mult"], field),
            [field.parse(str(x)) for x in doc["unit"]], labels,
        )

    def coalgebra():
        return CoalgebraPresentation.from_tensor(
            field, _tensor3_from_doc(doc["comult"], field),
            [field.parse(str(x)) for x in doc["counit"]], labels,
        )

    if kind == "algebra":
        return algebra()
    if kind == "coalgebra":
        return coalgebra()
    if kind == "bialgebra":
        return BialgebraPresentation(algebra(), coalgebra())
    if kind == "hopf":
        antipode = _matrix_from_rows(doc["antipode"], field)
        inverse_doc = doc.get("antipode_inverse")
        sbar = _matrix_from_rows(inverse_doc, field) if inverse_doc else None
        return HopfPresentation(algebra(), coalgebra(), antipode, sbar)
    raise FileFormatError(f"unknown presentation kind {kind!r}")


def save_presentation(p) -> dict:
    field = p.field
    if isinstance(p, HopfPresentation):
        kind = "hopf"
    elif isinstance(p, BialgebraPresentation):
        kind = "bialgebra"
    elif isinstance(p, CoalgebraPresentation):
        kind = "coalgebra"
    elif isinstance(p, AlgebraPresentation):
        kind = "algebra"
    else:
        raise TypeError(f"not a presentation: {type(p).__name__}")
    doc = {
        "field": field_to_doc(field),
        "kind": kind,
        "dim": p.dim,
        "basis": list(p.labels),
    }
    if kind in ("algebra", "bialgebra", "hopf"):
        alg = p if kind == "algebra" else p.algebra
        doc["mult"] = [
            [[field.format(alg.mult_coeff(i, j, k)) for k in range(p.dim)] for j in range(p.dim)]
            for i in range(p.dim)
        ]
        doc["unit"] = _vector_to_list(alg.unit)
    if kind in ("coalgebra", "bialgebra", "hopf"):
        co = p if kind == "coalgebra" else p.coalgebra
        doc["comult"] = [
            [[field.format(co.comult_coeff(i, j, k)) for k in range(p.dim)] for j in range(p.dim)]
            for i in range(p.dim)
        ]
        doc["counit"] = [field.format(co.counit.entry(0, i)) for i in range(p.dim)]
    if kind == "hopf":
        doc["antipode"] = _matrix_to_rows(p.antipode)
        if p.antipode_inverse is not None:
            doc["antipode_inverse"] = _matrix_to_rows(p.antipode_inverse)
    return doc


def load_map(doc: Union[dict, str], base_dir: str = "."):
    """Load a coaction, action or partial group action file."""
    if isinstance(doc, str):
        path = doc if os.path.isabs(doc) else os.path.join(base_dir, doc)
        base_dir = os.path.dirname(path) or "."
        with open(path) as fh:
            doc = json.load(fh)
    if not isinstance(doc, dict):
        raise FileFormatError("map document must be an object")
    kind = doc.get("kind")
    algebra = load_presentation(doc["algebra"], base_dir)
    if isinstance(algebra, BialgebraPresentation):
        algebra = algebra.algebra
    if kind == "partial-group-action":
        table = CayleyTable(doc["group"])
        field = algebra.field
        idem = [
            Matrix.column([field.parse(str(x)) for x in doc["idempotents"][str(s)]], field)
            for s in table.elements()
        ]
        alphas = [_matrix_from_rows(doc["alphas"][str(s)], field) for s in table.elements()]
        return PartialGroupAction(algebra, table, idem, alphas)
    hopf = load_presentation(doc["hopf"], base_dir)
    if isinstance(hopf, (AlgebraPresentation, CoalgebraPresentation)):
        raise FileFormatError("the acting structure must be at least a bialgebra")
    matrix_doc = doc.get("matrix") or doc.get("rho") or doc.get("kappa")
    if matrix_doc is None:
        raise FileFormatError("missing 'matrix' entry")
    matrix = _matrix_from_rows(matrix_doc, algebra.field)
    if kind == "coaction":
        return CoactionMap(algebra, hopf, matrix)
    if kind == "action":
        return ActionMap(algebra, hopf, matrix)
    raise FileFormatError(f"unknown map kind {kind!r}")


def save_map(obj) -> dict:
    if isinstance(obj, CoactionMap):
        return {
            "kind": "coaction",
            "algebra": save_presentation(obj.algebra),
            "hopf": save_presentation(obj.hopf),
            "matrix": _matrix_to_rows(obj.rho),
        }
    if isinstance(obj, ActionMap):
        return {
            "kind": "action",
            "algebra": save_presentation(obj.algebra),
            "hopf": save_presentation(obj.hopf),
            "matrix": _matrix_to_rows(obj.kappa),
        }
    if isinstance(obj, PartialGroupAction):
        return {
            "kind": "partial-group-action",
            "algebra": save_presentation(obj.algebra),
            "group": [list(r) for r in obj.table.table],
            "idempotents": {
                str(s): _vector_to_list(obj.idempotents[s]) for s in obj.table.elements()
            },
            "alphas": {str(s): _matrix_to_rows(obj.alphas[s]) for s in obj.table.elements()},
        }
    raise TypeError(f"not a serializable map: {type(obj).__name__}")


def dumps(doc: dict) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
