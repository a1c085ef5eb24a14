"""JSON interchange for algebras and Lie algebras.

Algebra: ``{"dim", "unit", "table", "involution", "label"}`` with 0-based
indices and every coefficient written as a string in the field's text form.
Lie algebra: ``{"dim", "grades", "brackets": [[i, j, k, "coeff"], ...]}``,
0-based, one entry per nonzero coefficient of ``[b_i, b_j]`` with ``i < j``.
"""

from __future__ import annotations

import json

from . import linalg as la
from .algebra import AlgebraWithInvolution
from .field import as_gr
from .lie import LieAlgebra

__all__ = [
    "FormatError",
    "algebra_to_json",
    "algebra_from_json",
    "lie_to_json",
    "lie_from_json",
    "dumps",
]


class FormatError(ValueError):
    pass


def _strs(v) -> list:
    return [str(x) for x in v]


def algebra_to_json(a: AlgebraWithInvolution) -> dict:
    out = {
        "dim": a.dim,
        "unit": a.unit_index,
        "table": [[_strs(v) for v in row] for row in a.table],
        "involution": [_strs(r) for r in a.sigma],
    }
    if a.label:
        out["label"] = a.label
    return out


def algebra_from_json(doc: dict) -> AlgebraWithInvolution:
    try:
        n = int(doc["dim"])
        table = doc["table"]
        sigma = doc["involution"]
        unit = int(doc.get("unit", 0))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"not an algebra document: {exc}") from exc
    if len(table) != n or not 0 <= unit < n:
        raise FormatError("table size or unit index does not match dim")
    try:
        return AlgebraWithInvolution.from_table(table, sigma, unit, doc.get("label"))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def lie_to_json(lie: LieAlgebra) -> dict:
    out: dict = {"dim": lie.dim}
    grades = getattr(lie, "grades", ())
    if grades:
        out["grades"] = list(grades)
    out["brackets"] = [[i, j, k, str(c)] for i, j, k, c in lie.triples()]
    provenance = getattr(lie, "provenance", ())
    if provenance:
        out["basis"] = list(provenance)
    return out


def lie_from_json(doc: dict) -> LieAlgebra:
    try:
        dim = int(doc["dim"])
        triples = [(int(i), int(j), int(k), as_gr(c)) for i, j, k, c in doc["brackets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"not a Lie algebra document: {exc}") from exc
    try:
        lie = LieAlgebra.from_brackets(dim, triples)
    except (ValueError, la.DimensionMismatch) as exc:
        raise FormatError(str(exc)) from exc
    grades = doc.get("grades")
    if grades is not None:
        from .constructions import GradedLieAlgebra

        if len(grades) != dim:
            raise FormatError("grades has the wrong length")
        lie = GradedLieAlgebra(dim, lie.table, grades=tuple(grades),
                               provenance=tuple(doc.get("basis", ())))
    return lie


def dumps(doc) -> str:
    """Deterministic serialisation: fixed key order as built, compact separators."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
