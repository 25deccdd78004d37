"""Similarity classes: canonical poses, shape distance, triangle parameters.

Similarity here includes reflections.  Two polygons are compared after
normalization (area centroid at the origin, diameter 1) by the Hausdorff
distance minimized over rotations about the origin and the mirror image.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .affinity import normalize
from .errors import NotATriangle, NotInCanonicalFamily
from .polygeom import ConvexPolygon, area

ROUND_GRID = 1e-9
# coarse rotation grid backing the vertex-alignment candidates
COARSE_STEPS = 360
REFINE_TOP = 4
REFINE_ITERS = 16


@dataclass(frozen=True)
class ShapeClass:
    """Canonical representative of a similarity class.

    Equality and hashing use `key`, the rounded vertex stream of the pose.
    """

    rep: ConvexPolygon = field(compare=False)
    n_vertices: int
    key: tuple = field(repr=False)


@dataclass(frozen=True)
class TriangleParam:
    x: float
    lam: float = 1.0


def _reflect(V: np.ndarray) -> np.ndarray:
    # y -> -y, reversed to stay counterclockwise
    return (V * np.array([1.0, -1.0]))[::-1]


def _rotate(V: np.ndarray, angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return V @ np.array([[c, s], [-s, c]])


def canonicalize(K: ConvexPolygon) -> ShapeClass:
    """Canonical pose of the similarity class of K.

    Candidate poses put a farthest-from-centroid vertex on the positive
    x-axis, for both K and its mirror image; the pose whose vertex stream,
    rounded to a 1e-9 grid, is lexicographically smallest wins.
    """
    V = normalize(K).vertices
    best = None
    for W in (V, _reflect(V)):
        r = np.hypot(W[:, 0], W[:, 1])
        for i in np.flatnonzero(r >= r.max() - ROUND_GRID):
            P = np.roll(_rotate(W, -np.arctan2(W[i, 1], W[i, 0])), -i, axis=0)
            key = tuple(np.round(P / ROUND_GRID).astype(np.int64).ravel().tolist())
            if best is None or key < best[0]:
                best = (key, P)
    key, P = best
    return ShapeClass(ConvexPolygon(P), len(P), key)


def _point_polygon_distance(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Distance from points P (..., n, 2) to convex polygons Q (..., m, 2)."""
    E = np.roll(Q, -1, axis=-2) - Q
    D = P[..., :, None, :] - Q[..., None, :, :]
    Eb = E[..., None, :, :]
    cr = Eb[..., 0] * D[..., 1] - Eb[..., 1] * D[..., 0]
    inside = np.all(cr >= 0, axis=-1)
    t = np.clip((D * Eb).sum(-1) / (Eb * Eb).sum(-1), 0.0, 1.0)
    diff = D - t[..., None] * Eb
    d = np.sqrt((diff ** 2).sum(-1).min(axis=-1))
    return np.where(inside, 0.0, d)


def hausdorff(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Hausdorff distance between convex polygons given by vertex arrays.

    B may carry leading batch dimensions; for convex polygons the directed
    distance is attained at a vertex, so vertices suffice.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    Ab = np.broadcast_to(A, B.shape[:-2] + A.shape)
    h1 = _point_polygon_distance(Ab, B).max(axis=-1)
    h2 = _point_polygon_distance(B, Ab).max(axis=-1)
    return np.maximum(h1, h2)


def _rotations(B: np.ndarray, angles: np.ndarray) -> np.ndarray:
    c, s = np.cos(angles), np.sin(angles)
    R = np.stack([np.stack([c, -s], -1), np.stack([s, c], -1)], -2)
    return np.einsum("kij,mj->kmi", R, B)


def _posed(Bs: np.ndarray, which: np.ndarray, angles: np.ndarray) -> np.ndarray:
    # rotate variant Bs[which[k]] by angles[k]
    c, s = np.cos(angles), np.sin(angles)
    R = np.stack([np.stack([c, -s], -1), np.stack([s, c], -1)], -2)
    return np.einsum("kij,kmj->kmi", R, Bs[which])


def _best_pose(A: np.ndarray, Bs: list) -> float:
    """Minimum Hausdorff distance from A to rotations of any polygon in Bs."""
    Bs = np.stack(Bs)
    pa = np.arctan2(A[:, 1], A[:, 0])
    coarse = 2 * np.pi * np.arange(COARSE_STEPS) / COARSE_STEPS
    angles, which = [], []
    for w, B in enumerate(Bs):
        pb = np.arctan2(B[:, 1], B[:, 0])
        ang = np.concatenate([(pa[:, None] - pb[None, :]).ravel(), coarse])
        angles.append(ang)
        which.append(np.full(len(ang), w))
    angles = np.concatenate(angles)
    which = np.concatenate(which)
    vals = hausdorff(A, _posed(Bs, which, angles))
    best = float(vals.min())
    if best < 1e-13:
        return best

    # refine the most promising basins by repeated zooming
    centers: list = []
    for k in np.argsort(vals, kind="stable"):
        a, w = angles[k], which[k]
        if all(w != cw or abs(np.angle(np.exp(1j * (a - ca)))) > np.pi / 180
               for ca, cw in centers):
            centers.append((a, w))
        if len(centers) == REFINE_TOP:
            break
    c = np.array([a for a, _ in centers])
    cw = np.array([w for _, w in centers])
    offs = np.linspace(-1.0, 1.0, 11)
    half = np.pi / 180
    for _ in range(REFINE_ITERS):
        grid = c[:, None] + half * offs[None, :]
        posed = _posed(Bs, np.repeat(cw, len(offs)), grid.ravel())
        v = hausdorff(A, posed).reshape(len(c), -1)
        c = grid[np.arange(len(c)), v.argmin(axis=1)]
        best = min(best, float(v.min()))
        half *= 0.2
    return best


def _order_key(V: np.ndarray) -> tuple:
    return (len(V),) + tuple(V.ravel().tolist())


def shape_distance(K1: ConvexPolygon, K2: ConvexPolygon) -> float:
    """Hausdorff distance up to similarity (reflections included).

    The pair is put in a fixed order first, so the result is exactly
    symmetric in its arguments.
    """
    A = normalize(K1).vertices
    B = normalize(K2).vertices
    if _order_key(A) > _order_key(B):
        A, B = B, A
    return _best_pose(A, [B, _reflect(B)])


def shape_distance_scan(K1: ConvexPolygon, K2: ConvexPolygon, n: int = 3600) -> float:
    """Brute-force shape distance over `n` uniform rotations (test oracle)."""
    A = normalize(K1).vertices
    B = normalize(K2).vertices
    angles = 2 * np.pi * np.arange(n) / n
    return float(min(hausdorff(A, _rotations(B, angles)).min(),
                     hausdorff(A, _rotations(_reflect(B), angles)).min()))


def is_similar(K1: ConvexPolygon, K2: ConvexPolygon, tol: float = 1e-9) -> bool:
    return shape_distance(K1, K2) < tol


def canonical_triangle(x: float, lam: float = 1.0) -> ConvexPolygon:
    """Triangle (0,0), (1,0), (x, lam)."""
    return ConvexPolygon([[0.0, 0.0], [1.0, 0.0], [x, lam]])


def triangle_param(T: ConvexPolygon, lam: float = 1.0, tol: float = 1e-9) -> TriangleParam:
    """Parameter x in (0, 1/2] of a triangle similar to (0,0), (1,0), (x, lam).

    Looks for a side whose altitude equals lam times its length, then
    measures where the apex projects onto it (mirrored into [0, 1/2]).
    """
    if T.n != 3:
        raise NotATriangle(f"expected 3 vertices, got {T.n}")
    V = T.vertices
    A2 = 2 * area(T)
    best = None
    for i in range(3):
        p, q, c = V[i], V[(i + 1) % 3], V[(i + 2) % 3]
        e = q - p
        s2 = float(e @ e)
        resid = abs(A2 / s2 - lam) / lam
        t = float((c - p) @ e) / s2
        if resid <= tol and -tol <= t <= 1 + tol:
            x = min(max(t, 0.0), max(1.0 - t, 0.0))
            if best is None or resid < best[0]:
                best = (resid, x)
    if best is None:
        raise NotInCanonicalFamily(
            f"no side with altitude {lam:g} times its length")
    return TriangleParam(best[1], lam)
