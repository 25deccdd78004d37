"""Circumscribed rectangles and the extremal (minimum aspect ratio) search.

For a direction theta the circumscribed rectangle has side lengths
``w(theta)`` and ``w(theta + pi/2)``.  Between two consecutive caliper events
(angles where theta or theta + pi/2 is an edge normal) each width is a single
sinusoid ``C cos(theta - phi)``, and

    d/dtheta [C1 cos(theta - phi1) / (C2 cos(theta - phi2))]
        = (C1 / C2) sin(phi1 - phi2) / cos(theta - phi2)**2,

which has constant sign.  So ``min(w1, w2) / max(w1, w2)`` has no interior
minimum on an event interval and the global minimum sits on an event angle.
The dense scan in :func:`ratio_profile` is the brute-force check of this.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .polygeom import ConvexPolygon, diameter, widths

HALF_PI = np.pi / 2
VERIFY_GRID = 720


@dataclass(frozen=True, eq=False)
class CircumRect:
    """Rectangle circumscribed about a polygon.

    `direction` is in [0, pi/2): one side pair runs along ``unit(direction)``,
    the other along its perpendicular.  `contacts[i]` lists the polygon
    vertices touching side i, with sides ordered bottom, right, top, left in
    the rectangle's own frame (``corners[i] -> corners[i+1]``).
    """

    direction: float
    a: float
    b: float
    corners: np.ndarray
    contacts: tuple
    # angle of the line the short sides run along
    short_side_angle: float

    @property
    def ratio(self) -> float:
        return self.a / self.b

    @property
    def is_square(self) -> bool:
        return self.a == self.b


@dataclass(frozen=True, eq=False)
class ExtremalSet:
    rects: list
    min_ratio: float
    all_directions_flag: bool

    def __len__(self):
        return len(self.rects)


def _reduce_quarter(theta: float) -> float:
    t = float(np.mod(theta, HALF_PI))
    return 0.0 if t >= HALF_PI - 1e-15 else t


def circumscribed_rectangle(K: ConvexPolygon, theta: float,
                            contact_tol: float = 1e-9) -> CircumRect:
    """Rectangle about K with one side pair parallel to direction theta.

    `contact_tol` is relative to the diameter and decides which vertices
    count as touching a side.
    """
    theta = _reduce_quarter(theta)
    u = np.array([np.cos(theta), np.sin(theta)])
    v = np.array([-u[1], u[0]])
    V = K.vertices
    pu, pv = V @ u, V @ v
    umin, umax, vmin, vmax = pu.min(), pu.max(), pv.min(), pv.max()
    corners = np.array([umin * u + vmin * v, umax * u + vmin * v,
                        umax * u + vmax * v, umin * u + vmax * v])
    tol = contact_tol * diameter(K)
    contacts = (
        tuple(np.flatnonzero(pv <= vmin + tol).tolist()),
        tuple(np.flatnonzero(pu >= umax - tol).tolist()),
        tuple(np.flatnonzero(pv >= vmax - tol).tolist()),
        tuple(np.flatnonzero(pu <= umin + tol).tolist()),
    )
    w_u, w_v = umax - umin, vmax - vmin
    # sides parallel to u have length w_u
    if w_u <= w_v:
        a, b, short = w_u, w_v, theta
    else:
        a, b, short = w_v, w_u, theta + HALF_PI
    return CircumRect(theta, float(a), float(b), corners, contacts, float(short))


def candidate_directions(K: ConvexPolygon) -> list:
    """Edge normals and edge directions of K, sorted and deduplicated mod pi."""
    E = K.edges
    ang = np.arctan2(E[:, 1], E[:, 0])
    cand = np.mod(np.concatenate([ang, ang + HALF_PI]), np.pi)
    cand[cand >= np.pi - 1e-13] = 0.0
    cand = np.sort(cand)
    out = [float(cand[0])]
    for c in cand[1:]:
        if c - out[-1] > 1e-12:
            out.append(float(c))
    return out


def _ratios(K: ConvexPolygon, thetas: np.ndarray) -> np.ndarray:
    w1 = widths(K, thetas)
    w2 = widths(K, thetas + HALF_PI)
    return np.minimum(w1, w2) / np.maximum(w1, w2)


def _rect_directions(K: ConvexPolygon) -> np.ndarray:
    # theta and theta + pi/2 describe the same rectangle
    q = sorted(_reduce_quarter(t) for t in candidate_directions(K))
    out = [q[0]]
    for t in q[1:]:
        if t - out[-1] > 1e-12:
            out.append(t)
    if len(out) > 1 and out[-1] > HALF_PI - 1e-12 and out[0] < 1e-12:
        out.pop()
    return np.array(out)


def extremal_rectangles(K: ConvexPolygon, tol: float = 1e-9) -> ExtremalSet:
    """All circumscribed rectangles of minimum aspect ratio a/b.

    Ratios within a relative `tol` of the minimum count as ties and are all
    returned, ordered by direction angle.
    """
    cand = _rect_directions(K)
    r = _ratios(K, cand)
    rmin = float(r.min())
    rmax = float(r.max())
    flag = False
    if rmax - rmin < tol * rmin:
        grid = _ratios(K, np.arange(VERIFY_GRID) * np.pi / VERIFY_GRID)
        flag = bool(max(rmax, grid.max()) - min(rmin, grid.min()) < tol * rmin)
    picked = np.flatnonzero(r - rmin <= tol * rmin)
    rects = [circumscribed_rectangle(K, cand[i]) for i in picked]
    rects.sort(key=lambda R: R.direction)
    return ExtremalSet(rects, rmin, flag)


def ratio_profile(K: ConvexPolygon, n: int) -> list:
    """Aspect ratio a/b at n uniformly spaced directions in [0, pi)."""
    if n < 4:
        raise ValueError("need n >= 4")
    th = np.arange(n) * np.pi / n
    return list(zip(th.tolist(), _ratios(K, th).tolist()))
