"""Coloring documents: canonical JSON persistence and DOT export.

The JSON form is byte-stable: fixed field order, canonical edge order
(axis-major, base vertex row-major), two-space indentation, trailing
newline.  Parsing is strict; anything that does not describe a total
coloring of the declared shape is rejected.
"""

from __future__ import annotations

import json
from typing import Optional

from .colorings import Coloring
from .errors import DocumentError, TorusRainbowError
from .planner import Plan, plan_from_dict, plan_to_dict
from .torus import Edge, make_shape

FORMAT_VERSION = "1"

# edge color attribute names for DOT export, cycled past 12 palette entries
DOT_COLORS = (
    "red",
    "blue",
    "green",
    "orange",
    "purple",
    "brown",
    "cyan",
    "magenta",
    "gold",
    "gray",
    "darkgreen",
    "navy",
)


def coloring_to_document(
    coloring: Coloring, plan: Optional[Plan] = None, provenance: Optional[str] = None
) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "dims": list(coloring.shape.dims),
        "palette_size": coloring.palette_size,
        "edges": [
            {"u": list(e.base), "axis": e.axis, "color": c} for e, c in coloring.edge_colors()
        ],
    }
    if plan is not None:
        doc["plan"] = plan_to_dict(plan)
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def document_to_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def write_document(path, doc: dict) -> None:
    with open(path, "wb") as fh:
        fh.write(document_to_bytes(doc))


def read_document(path) -> dict:
    try:
        with open(path, "rb") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DocumentError(f"{path} does not hold a JSON object")
    return data


def parse_document(doc: dict) -> tuple[Coloring, Optional[Plan], Optional[str]]:
    """Validate a document and rebuild the coloring it describes."""
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {doc.get('format_version')!r}")
    dims = doc.get("dims")
    if not isinstance(dims, list) or not all(isinstance(n, int) for n in dims):
        raise DocumentError("dims must be a list of integers")
    try:
        shape = make_shape(dims)
    except TorusRainbowError as exc:
        raise DocumentError(f"bad dims: {exc}") from exc
    palette_size = doc.get("palette_size")
    if not isinstance(palette_size, int) or palette_size < 1:
        raise DocumentError("palette_size must be a positive integer")

    records = doc.get("edges")
    if not isinstance(records, list):
        raise DocumentError("edges must be a list")
    slots = [-1] * shape.num_edge_slots
    for rec in records:
        if not isinstance(rec, dict):
            raise DocumentError(f"edge record {rec!r} is not an object")
        u = rec.get("u")
        axis = rec.get("axis")
        color = rec.get("color")
        if not isinstance(u, list) or not all(isinstance(c, int) for c in u):
            raise DocumentError(f"edge base {u!r} is not a coordinate list")
        if not isinstance(axis, int) or not 0 <= axis < shape.r:
            raise DocumentError(f"edge axis {axis!r} out of range")
        if not isinstance(color, int) or not 0 <= color < palette_size:
            raise DocumentError(f"edge color {color!r} outside [0, {palette_size})")
        try:
            shape.check_vertex(tuple(u))
        except TorusRainbowError as exc:
            raise DocumentError(f"bad edge base {u}: {exc}") from exc
        if shape.dims[axis] == 2 and u[axis] == 1:
            raise DocumentError(f"edge base {u} on axis {axis} is not canonical")
        slot = shape.edge_slot(Edge(tuple(u), axis))
        if slots[slot] != -1:
            raise DocumentError(f"duplicate edge {u} axis {axis}")
        slots[slot] = color
    for e in shape.edges():
        if slots[shape.edge_slot(e)] < 0:
            raise DocumentError(f"edge {e.base} axis {e.axis} missing from document")

    plan = None
    if "plan" in doc and doc["plan"] is not None:
        try:
            plan = plan_from_dict(doc["plan"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"bad plan: {exc}") from exc
    provenance = doc.get("provenance")
    if provenance is not None and not isinstance(provenance, str):
        raise DocumentError("provenance must be a string")
    return Coloring(shape, palette_size, tuple(slots)), plan, provenance


def _node_name(v) -> str:
    return "_".join(str(c) for c in v)


def export_dot(coloring: Coloring) -> str:
    """DOT rendering: one node per vertex, color attribute per edge."""
    shape = coloring.shape
    name = "torus_" + "x".join(str(n) for n in shape.dims)
    lines = [f'graph "{name}" {{']
    for v in shape.vertices():
        label = ",".join(str(c) for c in v)
        lines.append(f'  "{_node_name(v)}" [label="{label}"];')
    for e, c in coloring.edge_colors():
        u, w = shape.edge_endpoints(e)
        lines.append(
            f'  "{_node_name(u)}" -- "{_node_name(w)}" [color={DOT_COLORS[c % len(DOT_COLORS)]}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
