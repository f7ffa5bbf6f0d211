"""Reading region graphs and marked surfaces from JSON documents.

A manifold document carries exactly one of two top-level keys:

    {"graph":   {"regions": [{"label": ..., "chi": ...}, ...],
                 "edges":   [{"label": ..., "a": ..., "b": ...}, ...],
                 "ambient_dim": int, "orientable": bool}}

    {"surface": {"vertices": int,
                 "triangles": [[i, j, k], ...],
                 "z_edges":   [[i, j], ...]}}

Schema violations are reported with the JSON-pointer path of the offending
element.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any, List, Tuple

from .bgraph import (
    BGraph,
    HypersurfaceComponent,
    Region,
    TriangulatedSurface,
    build_graph_from_surface,
    validate_graph,
)
from .errors import ManifoldFormatError

BUNDLED_NAMES = (
    "sphere_equator",
    "torus_loop",
    "circle_3_points",
    "circle_4_points",
    "genus2_separating",
)


def bundled_path(name: str) -> Path:
    """Filesystem path of a bundled example manifold."""
    if name.endswith(".json"):
        name = name[: -len(".json")]
    if name not in BUNDLED_NAMES:
        raise KeyError(f"no bundled manifold {name!r}; have {', '.join(BUNDLED_NAMES)}")
    with resources.as_file(resources.files("btangent.data") / f"{name}.json") as p:
        return Path(p)


def _need(obj: dict, key: str, kind, pointer: str) -> Any:
    if key not in obj:
        raise ManifoldFormatError(f"missing required key {key!r}", pointer)
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise ManifoldFormatError(f"{key!r} must be an integer", f"{pointer}/{key}")
    if not isinstance(value, kind):
        raise ManifoldFormatError(
            f"{key!r} must be {getattr(kind, '__name__', kind)}", f"{pointer}/{key}"
        )
    return value


def _parse_graph(doc: dict, pointer: str) -> BGraph:
    regions_raw = _need(doc, "regions", list, pointer)
    edges_raw = _need(doc, "edges", list, pointer)
    ambient = _need(doc, "ambient_dim", int, pointer)
    orientable = _need(doc, "orientable", bool, pointer)

    regions: List[Region] = []
    for i, r in enumerate(regions_raw):
        p = f"{pointer}/regions/{i}"
        if not isinstance(r, dict):
            raise ManifoldFormatError("region must be an object", p)
        regions.append(Region(_need(r, "label", str, p), _need(r, "chi", int, p)))

    labels = {r.label for r in regions}
    edges: List[HypersurfaceComponent] = []
    for i, e in enumerate(edges_raw):
        p = f"{pointer}/edges/{i}"
        if not isinstance(e, dict):
            raise ManifoldFormatError("edge must be an object", p)
        label = _need(e, "label", str, p)
        a = _need(e, "a", str, p)
        b = _need(e, "b", str, p)
        for key, side in (("a", a), ("b", b)):
            if side not in labels:
                raise ManifoldFormatError(f"unknown region {side!r}", f"{p}/{key}")
        edges.append(HypersurfaceComponent(label, a, b))

    g = BGraph(tuple(regions), tuple(edges), ambient_dim=ambient, orientable=orientable)
    report = validate_graph(g)
    if not report.ok:
        raise ManifoldFormatError("; ".join(report.violations), pointer)
    return g


def _parse_int_list(raw: Any, length: int, pointer: str) -> Tuple[int, ...]:
    if not isinstance(raw, list) or len(raw) != length:
        raise ManifoldFormatError(f"expected a list of {length} integers", pointer)
    out = []
    for j, v in enumerate(raw):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ManifoldFormatError("expected an integer", f"{pointer}/{j}")
        out.append(v)
    return tuple(out)


def _parse_surface(doc: dict, pointer: str) -> TriangulatedSurface:
    vertices = _need(doc, "vertices", int, pointer)
    triangles_raw = _need(doc, "triangles", list, pointer)
    z_raw = doc.get("z_edges", [])
    if not isinstance(z_raw, list):
        raise ManifoldFormatError("'z_edges' must be a list", f"{pointer}/z_edges")
    triangles = [
        _parse_int_list(t, 3, f"{pointer}/triangles/{i}") for i, t in enumerate(triangles_raw)
    ]
    z_edges = [_parse_int_list(e, 2, f"{pointer}/z_edges/{i}") for i, e in enumerate(z_raw)]
    return TriangulatedSurface(vertices, tuple(triangles), tuple(z_edges))


def parse_manifold(doc: Any) -> BGraph:
    """Build a region graph from a parsed manifold document."""
    if not isinstance(doc, dict):
        raise ManifoldFormatError("document must be a JSON object", "/")
    keys = set(doc) & {"graph", "surface"}
    if len(keys) != 1:
        raise ManifoldFormatError(
            "document must contain exactly one of 'graph' or 'surface'", "/"
        )
    if "graph" in keys:
        if not isinstance(doc["graph"], dict):
            raise ManifoldFormatError("'graph' must be an object", "/graph")
        return _parse_graph(doc["graph"], "/graph")
    if not isinstance(doc["surface"], dict):
        raise ManifoldFormatError("'surface' must be an object", "/surface")
    return build_graph_from_surface(_parse_surface(doc["surface"], "/surface"))


def load_manifold(path) -> BGraph:
    """Load a manifold JSON file into a region graph.

    Raises:
        ManifoldFormatError: malformed JSON or schema violation (with the
            JSON-pointer path of the problem).
        NonClosedSurfaceError / InvalidZError: structurally invalid surface.
        OSError: unreadable path.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifoldFormatError(f"not valid JSON: {exc}", "/") from exc
    return parse_manifold(doc)
