"""JSON documents for complexes: ``{"n": int, "facets": [[int]], "coloring": [int] | null}``.

An optional ``"meta"`` object carries provenance such as the generator
family and seed. Facets are written sorted so output is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complex import ComplexError, SimplicialComplex


class ComplexFormatError(ValueError):
    pass


def to_document(cx: SimplicialComplex, meta: dict | None = None) -> dict:
    doc = {
        "n": cx.n,
        "facets": sorted(cx.facet_lists()),
        "coloring": list(cx.coloring) if cx.coloring is not None else None,
    }
    if meta:
        doc["meta"] = meta
    return doc


def dumps(cx: SimplicialComplex, meta: dict | None = None) -> str:
    return json.dumps(to_document(cx, meta), sort_keys=True) + "\n"


def loads(text: str) -> tuple[SimplicialComplex, dict]:
    """Parse a complex document; returns the complex and its metadata (possibly empty)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ComplexFormatError("top level must be an object")
    missing = {"n", "facets"} - doc.keys()
    if missing:
        raise ComplexFormatError(f"missing keys: {', '.join(sorted(missing))}")
    n, facets, coloring = doc["n"], doc["facets"], doc.get("coloring")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ComplexFormatError("'n' must be an integer")
    if not isinstance(facets, list) or not all(
        isinstance(F, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in F) for F in facets
    ):
        raise ComplexFormatError("'facets' must be a list of integer lists")
    if coloring is not None and not (
        isinstance(coloring, list) and all(isinstance(c, int) and not isinstance(c, bool) for c in coloring)
    ):
        raise ComplexFormatError("'coloring' must be null or a list of integers")
    meta = doc.get("meta") or {}
    try:
        cx = SimplicialComplex.from_facets(n, facets, coloring)
    except ComplexError as exc:
        raise ComplexFormatError(str(exc)) from exc
    return cx, meta


def read_complex(path: str | Path) -> tuple[SimplicialComplex, dict]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ComplexFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def write_complex(path: str | Path, cx: SimplicialComplex, meta: dict | None = None) -> None:
    Path(path).write_text(dumps(cx, meta))


__all__ = ["ComplexFormatError", "dumps", "loads", "read_complex", "to_document", "write_complex"]
