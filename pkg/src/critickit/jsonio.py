"""Witness and report (de)serialization.

Every document carries a versioned ``schema`` field.  Emission is canonical
(sorted keys, fixed separators, trailing newline) so that deterministic runs
are byte-identical and serialize/parse/serialize round-trips exactly.
"""

from __future__ import annotations

import json

from .covers import Cover, PdpResult, RobustVerdict
from .coloring import ColoringVerdict, Polynomial
from .errors import CoverError
from .graphs import Graph, parse_graph6, encode_graph6
from .listcoloring import ListAssignment, StrongVerdict

SCHEMA_ASSIGNMENT = "critickit/assignment/1"
SCHEMA_COVER = "critickit/cover/1"
SCHEMA_ROBUST = "critickit/robust-verdict/1"
SCHEMA_STRONG = "critickit/strong-verdict/1"
SCHEMA_CRITICALITY = "critickit/criticality/1"
SCHEMA_LEMMA = "critickit/lemma-report/1"
SCHEMA_ERROR = "critickit/error/1"


def dumps(document: dict) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"


def assignment_to_doc(assignment: ListAssignment) -> dict:
    return {
        "schema": SCHEMA_ASSIGNMENT,
        "lists": {str(v): sorted(l) for v, l in enumerate(assignment.lists)},
    }


def assignment_from_doc(document: dict) -> ListAssignment:
    lists = document["lists"]
    n = len(lists)
    return ListAssignment(tuple(frozenset(lists[str(v)]) for v in range(n)))


def cover_to_doc(cover: Cover) -> dict:
    document = {
        "schema": SCHEMA_COVER,
        "graph6": encode_graph6(cover.graph),
        "matchings": [
            {"u": u, "v": v, "pairs": [list(p) for p in pairs]}
            for u, v, pairs in cover.matchings
        ],
    }
    if cover.is_uniform():
        document["k"] = cover.sizes[0] if cover.sizes else 0
    else:
        document["sizes"] = list(cover.sizes)
    return document


def cover_from_doc(document: dict) -> Cover:
    graph = parse_graph6(document["graph6"])
    if "k" in document:
        sizes = (document["k"],) * graph.n
    elif "sizes" in document:
        sizes = tuple(document["sizes"])
    else:
        raise CoverError("cover document needs 'k' or 'sizes'")
    matchings = tuple(
        (
            entry["u"],
            entry["v"],
            tuple(sorted((i, j) for i, j in entry.get("pairs", []))),
        )
        for entry in document["matchings"]
    )
    return Cover(graph, sizes, matchings)


def _deletion_witness_doc(witness) -> dict:
    if isinstance(witness, tuple):
        return {"kind": "edge", "edge": list(witness)}
    return {"kind": "vertex", "vertex": witness}


def witness_to_doc(witness) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, Cover):
        return {"kind": "cover", "cover": cover_to_doc(witness)}
    if isinstance(witness, ListAssignment):
        return {"kind": "assignment", "assignment": assignment_to_doc(witness)}
    return _deletion_witness_doc(witness)


def witness_from_doc(document: dict | None):
    if document is None:
        return None
    kind = document["kind"]
    if kind == "cover":
        return cover_from_doc(document["cover"])
    if kind == "assignment":
        return assignment_from_doc(document["assignment"])
    if kind == "edge":
        return tuple(document["edge"])
    if kind == "vertex":
        return document["vertex"]
    raise ValueError(f"unknown witness kind {kind!r}")


def criticality_to_doc(verdict: ColoringVerdict) -> dict:
    return {
        "schema": SCHEMA_CRITICALITY,
        "chromatic_number": verdict.chromatic_number,
        "is_critical": verdict.is_critical,
        "is_vertex_critical": verdict.is_vertex_critical,
        "witness": witness_to_doc(verdict.witness),
    }


def robust_verdict_to_doc(verdict: RobustVerdict) -> dict:
    return {
        "schema": SCHEMA_ROBUST,
        "decision": verdict.decision,
        "k": verdict.k,
        "covers_scanned": verdict.covers_scanned,
        "witness": witness_to_doc(verdict.witness),
    }


def strong_verdict_to_doc(verdict: StrongVerdict) -> dict:
    return {
        "schema": SCHEMA_STRONG,
        "decision": verdict.decision,
        "k": verdict.k,
        "mode": verdict.mode,
        "witness": witness_to_doc(verdict.witness),
    }


def polynomial_to_doc(poly: Polynomial) -> dict:
    return {
        "schema": "critickit/polynomial/1",
        "coefficients_ascending": list(poly.coefficients),
    }
