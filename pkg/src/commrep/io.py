"""JSON documents for lattices, representations, point sets and equalities.

Coordinates serialize as nonnegative integers, with the string ``"inf"``
for the unbounded coordinate.  Lattice elements serialize as their names.
All readers raise :class:`ParseError` on malformed documents, leaving
domain validation (lattice axioms, dimension checks) to the constructors.
"""

from __future__ import annotations

import math
from typing import Any

from .antitone import ExtRep, Rep
from .commutator import CommEquality, ExtCommEquality
from .lattice import Lattice
from .vectors import INF

__all__ = [
    "ParseError",
    "equalities_from_doc",
    "equalities_to_doc",
    "extrep_from_doc",
    "extrep_to_doc",
    "lattice_from_doc",
    "lattice_to_doc",
    "rep_from_doc",
    "rep_to_doc",
    "upset_to_doc",
    "vec_from_json",
    "vec_to_json",
]


class ParseError(ValueError):
    """A document does not match the expected schema."""


def vec_to_json(vec) -> list:
    return ["inf" if isinstance(c, float) and math.isinf(c) else int(c) for c in vec]


def vec_from_json(data) -> tuple:
    if not isinstance(data, list):
        raise ParseError(f"vector must be a list, got {type(data).__name__}")
    out = []
    for c in data:
        if c == "inf":
            out.append(INF)
        elif isinstance(c, int) and not isinstance(c, bool):
            out.append(c)
        else:
            raise ParseError(f"bad coordinate {c!r} (expected int or 'inf')")
    return tuple(out)


def lattice_to_doc(lat: Lattice) -> dict:
    return {
        "elements": list(lat.names),
        "meet": lat.meet_table.tolist(),
        "join": lat.join_table.tolist(),
    }


def lattice_from_doc(doc: Any) -> Lattice:
    if not isinstance(doc, dict) or "elements" not in doc:
        raise ParseError("lattice document needs an 'elements' list")
    names = doc["elements"]
    if not isinstance(names, list):
        raise ParseError("'elements' must be a list of names")
    if "meet" in doc and "join" in doc:
        return Lattice(names, doc["meet"], doc["join"])
    if "leq" in doc:
        return Lattice.from_leq(names, doc["leq"])
    raise ParseError("lattice document needs 'meet' and 'join' tables or 'leq'")


def _points_to_doc(lat: Lattice, points) -> list:
    return [
        {"vec": vec_to_json(vec), "value": lat.name(val)} for vec, val in points
    ]


def _points_from_doc(data) -> list:
    if not isinstance(data, list):
        raise ParseError("'points' must be a list")
    out = []
    for item in data:
        if not isinstance(item, dict) or "vec" not in item or "value" not in item:
            raise ParseError("each point needs 'vec' and 'value'")
        out.append((vec_from_json(item["vec"]), item["value"]))
    return out


def rep_to_doc(rep: Rep) -> dict:
    return {
        "dimension": rep.dim,
        "lattice": lattice_to_doc(rep.lattice),
        "points": _points_to_doc(rep.lattice, rep.points),
    }


def _doc_lattice(doc: dict, lattice: Lattice | None) -> Lattice:
    inline = doc.get("lattice")
    if isinstance(inline, dict):
        return lattice_from_doc(inline)
    if lattice is not None:
        return lattice
    raise ParseError(
        "document carries no inline lattice; supply one (--lattice)"
    )


def rep_from_doc(doc: Any, lattice: Lattice | None = None) -> Rep:
    if not isinstance(doc, dict) or "dimension" not in doc or "points" not in doc:
        raise ParseError("representation document needs 'dimension' and 'points'")
    lat = _doc_lattice(doc, lattice)
    return Rep(lat, int(doc["dimension"]), _points_from_doc(doc["points"]))


def extrep_to_doc(ext: ExtRep) -> dict:
    return {
        "dimension": ext.dim,
        "lattice": lattice_to_doc(ext.lattice),
        "points": _points_to_doc(ext.lattice, ext.points),
    }


def extrep_from_doc(doc: Any, lattice: Lattice | None = None) -> ExtRep:
    if not isinstance(doc, dict) or "dimension" not in doc or "points" not in doc:
        raise ParseError("point set document needs 'dimension' and 'points'")
    lat = _doc_lattice(doc, lattice)
    return ExtRep(lat, int(doc["dimension"]), _points_from_doc(doc["points"]))


def upset_to_doc(upset) -> dict:
    return {"dimension": upset.dim, "gens": [vec_to_json(g) for g in upset.gens]}


def equalities_to_doc(lat: Lattice, eqs) -> dict:
    items = []
    for e in eqs:
        item: dict = {"args": [lat.name(a) for a in e.args], "rhs": lat.name(e.rhs)}
        if isinstance(e, ExtCommEquality):
            item = {"S": sorted(lat.name(u) for u in e.unbounded), **item}
        items.append(item)
    return {"lattice": lattice_to_doc(lat), "equalities": items}


def equalities_from_doc(doc: Any, lattice: Lattice | None = None):
    """Read a (possibly mixed) list of plain and extended equalities."""
    if not isinstance(doc, dict) or "equalities" not in doc:
        raise ParseError("equality document needs an 'equalities' list")
    lat = _doc_lattice(doc, lattice)
    out = []
    for item in doc["equalities"]:
        if not isinstance(item, dict) or "args" not in item or "rhs" not in item:
            raise ParseError("each equality needs 'args' and 'rhs'")
        args = tuple(sorted(lat.resolve(a) for a in item["args"]))
        rhs = lat.resolve(item["rhs"])
        if "S" in item:
            out.append(
                ExtCommEquality(frozenset(lat.resolve(u) for u in item["S"]), args, rhs)
            )
        else:
            out.append(CommEquality(args, rhs))
    return lat, tuple(out)
