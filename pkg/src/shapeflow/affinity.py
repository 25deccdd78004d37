"""Orthogonal affinities built from extremal rectangles, and normalization."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .calipers import CircumRect
from .errors import InvalidParameter
from .polygeom import ConvexPolygon, centroid, diameter, from_ccw


@dataclass(frozen=True, eq=False)
class AffineMap:
    """x -> linear @ x + translation."""

    linear: np.ndarray
    translation: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def __post_init__(self):
        L = np.array(self.linear, dtype=float).reshape(2, 2)
        t = np.array(self.translation, dtype=float).reshape(2)
        if abs(np.linalg.det(L)) == 0.0:
            raise InvalidParameter("affine map must be invertible")
        L.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "linear", L)
        object.__setattr__(self, "translation", t)

    def __call__(self, points) -> np.ndarray:
        return np.asarray(points, dtype=float) @ self.linear.T + self.translation

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.linear))

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other."""
        return AffineMap(self.linear @ other.linear,
                         self.linear @ other.translation + self.translation)


IDENTITY = AffineMap(np.eye(2))


def orthogonal_affinity(axis_angle: float, ratio: float) -> AffineMap:
    """Fix the line through the origin at `axis_angle`; scale distances from it by `ratio`."""
    e = np.array([np.cos(axis_angle), np.sin(axis_angle)])
    n = np.array([-e[1], e[0]])
    return AffineMap(np.outer(e, e) + ratio * np.outer(n, n))


def squash_map(R: CircumRect) -> AffineMap:
    """Orthogonal affinity sending R to a square of side a(R).

    The axis runs through the origin parallel to the short sides of R;
    the long extent b(R) is compressed by a(R)/b(R).
    """
    if R.a == R.b:
        return IDENTITY
    return orthogonal_affinity(R.short_side_angle, R.a / R.b)


def lambda_map(R: CircumRect, lam: float) -> AffineMap:
    """Same axis as :func:`squash_map`, ratio ``lam * a / b``.

    The image of R is an a(R) by lam * a(R) rectangle.
    """
    if not lam > 0:
        raise InvalidParameter(f"lambda must be positive, got {lam}")
    if lam == 1.0:
        return squash_map(R)
    return orthogonal_affinity(R.short_side_angle, lam * R.a / R.b)


def apply_map(m: AffineMap, K: ConvexPolygon) -> ConvexPolygon:
    """Vertex-wise image; orientation is restored when det < 0."""
    return from_ccw(m(K.vertices))


def normalize(K: ConvexPolygon) -> ConvexPolygon:
    """Translate the area centroid to the origin and scale to diameter 1."""
    V = K.vertices - centroid(K)
    V = V / diameter(ConvexPolygon(V))
    # second pass removes the rounding left by the first
    V = V - centroid(ConvexPolygon(V))
    return ConvexPolygon(V)


def similarity(angle: float = 0.0, scale: float = 1.0, shift=(0.0, 0.0),
               reflect: bool = False) -> AffineMap:
    """Rotation by `angle` and uniform scaling, optionally after y -> -y."""
    c, s = np.cos(angle), np.sin(angle)
    L = scale * np.array([[c, -s], [s, c]])
    if reflect:
        L = L @ np.diag([1.0, -1.0])
    return AffineMap(L, np.asarray(shift, dtype=float))
