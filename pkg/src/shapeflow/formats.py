"""File formats: polygon input, orbit CSV and SVG output.

Polygon files hold one ``x y`` vertex per line (blank lines and ``#``
comments ignored) or a JSON array of pairs.  SVG output uses a y-up world
frame; the single flip to the y-down viewport happens in :func:`_to_view`.
"""

from __future__ import annotations

import csv
import io
import json
from xml.sax.saxutils import escape

import numpy as np

from .dynamics import CycleReport, Orbit
from .errors import NotInCanonicalFamily, ParseError
from .polygeom import ConvexPolygon, make_convex_polygon
from .scan import phase_coordinates
from .shapecmp import shape_distance, triangle_param

ORBIT_HEADER = ["step", "x_or_alpha", "beta", "diameter_pre_norm", "min_ratio",
                "rect_multiplicity", "dist_to_prev"]


def parse_polygon(text: str) -> ConvexPolygon:
    """Polygon from either supported text format, through the convex hull."""
    s = text.strip()
    if s.startswith("["):
        try:
            pts = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(pts, list) or not all(
                isinstance(p, list) and len(p) == 2 for p in pts):
            raise ParseError("JSON polygon must be an array of [x, y] pairs")
    else:
        pts = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.replace(",", " ").split()
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: expected 'x y', got {line!r}")
            pts.append(fields)
    try:
        arr = np.array(pts, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"non-numeric coordinate: {exc}") from exc
    if arr.size == 0:
        raise ParseError("no vertices found")
    if not np.all(np.isfinite(arr)):
        raise ParseError("coordinates must be finite")
    return make_convex_polygon(arr)


def read_polygon(path) -> ConvexPolygon:
    with open(path, encoding="utf-8") as fh:
        return parse_polygon(fh.read())


def format_polygon(K: ConvexPolygon) -> str:
    return "".join(f"{x!r} {y!r}\n" for x, y in K.vertices.tolist())


def _g(v: float) -> str:
    return f"{v:.12g}"


def _first_columns(K: ConvexPolygon, lam: float) -> tuple:
    if K.n == 3:
        try:
            return triangle_param(K, lam, tol=1e-7).x, ""
        except NotInCanonicalFamily:
            pass
    al, be = phase_coordinates(K)
    return np.degrees(al), _g(np.degrees(be))


def orbit_rows(orb: Orbit) -> list:
    """One row per state.

    Triangles in the family ``(0,0), (1,0), (x, 1/lam)`` that the lambda
    step produces report x with an empty beta column; all other states
    report the inscribed-triangle angles (alpha, beta) in degrees.
    """
    lam = 1.0 / orb.policy.lam
    rows = []
    for k, s in enumerate(orb.states):
        first, second = _first_columns(s.rep, lam)
        step_cols = ["", "", ""]
        if k < len(orb.min_ratio):
            step_cols = [_g(orb.diameter_pre_norm[k]), _g(orb.min_ratio[k]),
                         str(orb.rect_multiplicity[k])]
        dist = "" if k == 0 else _g(shape_distance(orb.states[k - 1].rep, s.rep))
        rows.append([str(k), _g(first), second] + step_cols + [dist])
    return rows


def orbit_csv(orb: Orbit, report: CycleReport | None = None) -> str:
    """Orbit table plus a ``# cycle ...`` footer line when a report is given."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ORBIT_HEADER)
    w.writerows(orbit_rows(orb))
    if report is not None:
        buf.write(f"# cycle found={str(report.found).lower()}"
                  f" period={report.period} onset={report.onset}"
                  f" residual={report.residual:.6g}\n")
    return buf.getvalue()


# ---- SVG ---------------------------------------------------------------

def _to_view(P: np.ndarray, box, size: float, pad: float = 10.0) -> np.ndarray:
    # world (y up) -> viewport (y down)
    xmin, ymin, xmax, ymax = box
    s = (size - 2 * pad) / max(xmax - xmin, ymax - ymin, 1e-300)
    return np.column_stack([pad + (P[:, 0] - xmin) * s,
                            size - pad - (P[:, 1] - ymin) * s])


def _path(P: np.ndarray, style: str) -> str:
    d = "M " + " L ".join(f"{x:.4f} {y:.4f}" for x, y in P) + " Z"
    return f'<path d="{d}" {style}/>'


def _svg(body: list, width: float, height: float, title: str) -> str:
    return "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:g}" height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f"<title>{escape(title)}</title>",
        *body,
        "</svg>",
        "",
    ])


def polygons_svg(polys: list, title: str = "polygons", overlays: list = (),
                 size: float = 400.0) -> str:
    """Draw `polys` (outlined) and `overlays` (dashed) in one shared frame.

    Every shape becomes exactly one path element.
    """
    allv = np.vstack([p.vertices if isinstance(p, ConvexPolygon) else np.asarray(p)
                      for p in list(polys) + list(overlays)])
    box = (*allv.min(axis=0), *allv.max(axis=0))
    body = [_path(_to_view(p.vertices, box, size),
                  'fill="none" stroke="black" stroke-width="1.5"') for p in polys]
    body += [_path(_to_view(np.asarray(r), box, size),
                   'fill="none" stroke="red" stroke-dasharray="4 3"') for r in overlays]
    return _svg(body, size, size, title)


def orbit_strip_svg(polys: list, title: str = "orbit", cell: float = 80.0,
                    per_row: int = 10) -> str:
    """Normalized iterates laid out in a grid, one path each."""
    rows = (len(polys) + per_row - 1) // per_row
    body = []
    box = (-0.6, -0.6, 0.6, 0.6)
    for i, K in enumerate(polys):
        ox, oy = (i % per_row) * cell, (i // per_row) * cell
        P = _to_view(K.vertices, box, cell, pad=4.0) + [ox, oy]
        body.append(_path(P, 'fill="none" stroke="black" stroke-width="1"'))
    return _svg(body, per_row * cell, rows * cell, title)


def scatter_svg(points_deg, title: str = "phase portrait", size: float = 500.0,
                box=(0.0, 0.0, 90.0, 180.0)) -> str:
    """(alpha, beta) scatter in degrees, axes as one path."""
    xmin, ymin, xmax, ymax = box
    pad = 30.0
    sx = (size - 2 * pad) / (xmax - xmin)
    sy = (size - 2 * pad) / (ymax - ymin)
    body = [f'<path d="M {pad} {pad} L {pad} {size - pad} L {size - pad} {size - pad}" '
            'fill="none" stroke="black"/>']
    for a, b in points_deg:
        cx, cy = pad + (a - xmin) * sx, size - pad - (b - ymin) * sy
        body.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="1.2" fill="navy"/>')
    return _svg(body, size, size, title)
