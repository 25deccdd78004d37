"""Convex polygon kernel.

Polygons are immutable arrays of counterclockwise vertices. Directions are
angles in radians; a direction and its negation give the same width, so
angles are reduced modulo pi wherever that matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DegenerateInput, NotOriginSymmetric

# cross products below COLLINEAR_EPS * scale**2 count as collinear
COLLINEAR_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """Strictly convex polygon with counterclockwise vertices.

    Build instances with :func:`make_convex_polygon` (arbitrary point sets)
    or :func:`from_ccw` (vertices already in convex position).
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
            raise DegenerateInput("a polygon needs at least 3 vertices")
        if not np.all(np.isfinite(v)):
            raise DegenerateInput("non-finite vertex coordinates")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        pts = ", ".join(f"({x:.6g}, {y:.6g})" for x, y in self.vertices)
        return f"ConvexPolygon([{pts}])"

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> np.ndarray:
        return np.roll(self.vertices, -1, axis=0) - self.vertices


def unit(theta: float) -> np.ndarray:
    return np.array([np.cos(theta), np.sin(theta)])


def normalize_direction(theta: float) -> float:
    """Reduce an angle to the canonical range [0, pi)."""
    t = float(np.mod(theta, np.pi))
    return 0.0 if t >= np.pi else t


def perp(theta: float) -> float:
    return normalize_direction(theta + np.pi / 2)


def _scale(points: np.ndarray) -> float:
    ext = points.max(axis=0) - points.min(axis=0)
    return float(max(ext.max(), np.finfo(float).tiny))


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def make_convex_polygon(points: Iterable) -> ConvexPolygon:
    """Convex hull of `points`, counterclockwise, collinear vertices dropped.

    The vertex list starts at the lexicographically smallest point, so
    rebuilding a polygon from its own vertices is the identity.
    """
    pts = np.asarray(list(points) if not isinstance(points, np.ndarray) else points,
                     dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DegenerateInput("expected a sequence of (x, y) pairs")
    if len(pts) < 3:
        raise DegenerateInput("need at least 3 points")
    if not np.all(np.isfinite(pts)):
        raise DegenerateInput("non-finite coordinates")
    eps = COLLINEAR_EPS * _scale(pts) ** 2
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    srt = [tuple(p) for p in pts[order]]

    # Andrew's monotone chain
    lower: list = []
    for p in srt:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= eps:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(srt):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= eps:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear or coincident")
    V = from_ccw(np.array(hull)).vertices
    # collinear pruning may have removed the first hull vertex
    return ConvexPolygon(np.roll(V, -int(np.lexsort((V[:, 1], V[:, 0]))[0]), axis=0))


def from_ccw(vertices) -> ConvexPolygon:
    """Wrap vertices that are already in convex position.

    Clockwise input is reversed and collinear or repeated vertices are
    removed; the starting vertex is kept (or the first survivor), so vertex
    indices stay meaningful under affine maps.
    """
    v = np.asarray(vertices, dtype=float)
    if len(v) < 3:
        raise DegenerateInput("need at least 3 vertices")
    x, y = v[:, 0], v[:, 1]
    if np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y) < 0:
        v = np.concatenate([v[:1], v[:0:-1]])
    eps = COLLINEAR_EPS * _scale(v) ** 2
    while len(v) >= 3:
        prev = v - np.roll(v, 1, axis=0)
        nxt = np.roll(v, -1, axis=0) - v
        cr = prev[:, 0] * nxt[:, 1] - prev[:, 1] * nxt[:, 0]
        keep = cr > eps
        if keep.all() or len(v) == 3:
            break
        # drop one offender at a time so neighbours are re-tested
        v = np.delete(v, int(np.argmin(np.where(keep, np.inf, cr))), axis=0)
    if len(v) < 3 or not keep.all():
        raise DegenerateInput("vertices are not in strictly convex position")
    return ConvexPolygon(v)


def support(K: ConvexPolygon, u) -> float:
    """Support function: max of <v, u> over the vertices of K."""
    return float(np.max(K.vertices @ np.asarray(u, dtype=float)))


def widths(K: ConvexPolygon, thetas) -> np.ndarray:
    """Vectorized :func:`width` over an array of angles."""
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    proj = K.vertices @ np.stack([np.cos(thetas), np.sin(thetas)])
    return proj.max(axis=0) - proj.min(axis=0)


def width(K: ConvexPolygon, theta: float) -> float:
    """Width of K in direction theta, i.e. h(u) + h(-u)."""
    u = unit(theta)
    return support(K, u) + support(K, -u)


def _chord_lengths(V: np.ndarray, u: np.ndarray, offsets: np.ndarray) -> np.ndarray:
    # chord of the polygon along direction u at each offset (measured along u-perp)
    w = np.array([-u[1], u[0]])
    s = V @ w
    t = V @ u
    s2, t2 = np.roll(s, -1), np.roll(t, -1)
    out = np.empty(len(offsets))
    for k, c in enumerate(offsets):
        lo, hi = np.inf, -np.inf
        for i in range(len(V)):
            a, b = s[i] - c, s2[i] - c
            if a == 0.0:
                lo, hi = min(lo, t[i]), max(hi, t[i])
            if a * b < 0.0:
                tt = t[i] + (t2[i] - t[i]) * a / (a - b)
                lo, hi = min(lo, tt), max(hi, tt)
        out[k] = hi - lo if hi >= lo else 0.0
    return out


def longest_chord_length(K: ConvexPolygon, theta: float) -> float:
    """Length of the longest chord of K parallel to direction theta.

    Chord length is concave and piecewise linear in the offset, so the
    maximum is attained on a line through some vertex.
    """
    u = unit(theta)
    V = K.vertices
    w = np.array([-u[1], u[0]])
    return float(_chord_lengths(V, u, V @ w).max())


def chord_length(K: ConvexPolygon, theta: float, offset: float) -> float:
    """Length of K's intersection with the line {offset * u_perp + t u}."""
    return float(_chord_lengths(K.vertices, unit(theta), np.array([offset]))[0])


def diameter(K: ConvexPolygon) -> float:
    V = K.vertices
    d = V[:, None, :] - V[None, :, :]
    return float(np.sqrt((d ** 2).sum(-1).max()))


def area(K: ConvexPolygon) -> float:
    x, y = K.vertices[:, 0], K.vertices[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def centroid(K: ConvexPolygon) -> np.ndarray:
    """Area centroid."""
    V = K.vertices
    # shift for conditioning
    o = V.mean(axis=0)
    P = V - o
    Q = np.roll(P, -1, axis=0)
    cr = P[:, 0] * Q[:, 1] - Q[:, 0] * P[:, 1]
    a = cr.sum() / 2
    return o + ((P + Q) * cr[:, None]).sum(axis=0) / (6 * a)


def _bottom_left(V: np.ndarray) -> int:
    return int(np.lexsort((V[:, 0], V[:, 1]))[0])


def minkowski_sum(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """Minkowski sum by merging the two edge sequences in angular order."""
    E = np.concatenate([P.edges, Q.edges])
    ang = np.mod(np.arctan2(E[:, 1], E[:, 0]), 2 * np.pi)
    E = E[np.argsort(ang, kind="stable")]
    start = P.vertices[_bottom_left(P.vertices)] + Q.vertices[_bottom_left(Q.vertices)]
    verts = start + np.concatenate([np.zeros((1, 2)), np.cumsum(E, axis=0)[:-1]])
    return from_ccw(verts)


def central_symmetral(K: ConvexPolygon) -> ConvexPolygon:
    """Half the difference body, (K - K) / 2; origin-symmetric, same widths as K."""
    neg = ConvexPolygon(-K.vertices)
    S = minkowski_sum(K, neg)
    return ConvexPolygon(S.vertices / 2)


def _same_vertex_set(A: np.ndarray, B: np.ndarray, tol: float) -> bool:
    if len(A) != len(B):
        return False
    d = np.sqrt(((A[:, None, :] - B[None, :, :]) ** 2).sum(-1))
    return bool(d.min(axis=1).max() <= tol and d.min(axis=0).max() <= tol)


def is_origin_symmetric(K: ConvexPolygon, tol: float = 1e-9) -> bool:
    return _same_vertex_set(K.vertices, -K.vertices, tol * diameter(K))


def has_fourfold_symmetry(K: ConvexPolygon, tol: float = 1e-9) -> bool:
    """True iff a quarter turn about the origin maps K onto itself.

    `tol` is relative to the diameter of K.
    """
    if not is_origin_symmetric(K, tol):
        raise NotOriginSymmetric("polygon is not symmetric about the origin")
    V = K.vertices
    rot = np.column_stack([-V[:, 1], V[:, 0]])
    return _same_vertex_set(V, rot, tol * diameter(K))


def regular_polygon(n: int, radius: float = 1.0, phase: float = 0.0) -> ConvexPolygon:
    """Regular n-gon centered at the origin."""
    t = phase + 2 * np.pi * np.arange(n) / n
    return ConvexPolygon(radius * np.column_stack([np.cos(t), np.sin(t)]))
