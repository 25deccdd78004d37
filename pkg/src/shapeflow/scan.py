"""Phase-space experiments.

Within one affine class, similarity classes of a polygon are coordinatized
by two angles of its maximum-area inscribed triangle.  The triangle is
preserved by affine maps, so a meshpoint (alpha, beta) is realized by the
affine map taking that triangle to one with angles alpha and beta.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .affinity import AffineMap, apply_map
from .closedform import lambda_triangle_map, triangle_map
from .dynamics import DEFAULT_POLICY, StepPolicy, orbit
from .errors import DomainError, UnrealizableMeshpoint
from .polygeom import ConvexPolygon

THREADS_ENV = "SHAPEFLOW_THREADS"


@dataclass(frozen=True)
class InscribedTriangle:
    vertex_indices: tuple
    area: float
    alpha: float
    beta: float
    unique: bool


@dataclass(frozen=True)
class GridSpec:
    """Uniform (alpha, beta) mesh in degrees, both ends inclusive."""

    alpha_range: tuple = (5.0, 85.0)
    beta_range: tuple = (5.0, 175.0)
    spacing: float = 5.0

    def axis(self, lo_hi) -> np.ndarray:
        lo, hi = lo_hi
        n = int(round((hi - lo) / self.spacing)) + 1
        return lo + self.spacing * np.arange(n)

    def meshpoints(self) -> list:
        return [(float(a), float(b)) for a in self.axis(self.alpha_range)
                for b in self.axis(self.beta_range)]


@dataclass
class PhasePortrait:
    """Post-burn-in (alpha, beta) samples of every orbit, angles in radians.

    `points` rows are ``(alpha, beta, orbit_index, step_index)``;
    `mesh[orbit_index]` is the starting meshpoint in degrees.
    """

    points: list
    grid_spec: GridSpec
    burn_in: int
    n_steps: int
    mesh: list = field(default_factory=list)
    skipped: int = 0


def _angles(P: np.ndarray) -> np.ndarray:
    out = np.empty(3)
    for i in range(3):
        u = P[(i + 1) % 3] - P[i]
        v = P[(i + 2) % 3] - P[i]
        out[i] = np.arctan2(abs(u[0] * v[1] - u[1] * v[0]), u @ v)
    return out


def max_area_inscribed_triangle(K: ConvexPolygon, tol: float = 1e-9) -> InscribedTriangle:
    """Largest triangle on the vertices of K, by brute force over all triples.

    Ties within a relative `tol` are reported through `unique` and broken by
    the lexicographically smallest index triple.
    """
    V = K.vertices
    idx = np.array(list(combinations(range(len(V)), 3)))
    a, b, c = V[idx[:, 0]], V[idx[:, 1]], V[idx[:, 2]]
    areas = 0.5 * np.abs((b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1])
                         - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0]))
    amax = areas.max()
    near = np.flatnonzero(areas >= amax * (1 - tol))
    k = int(near[0])
    ang = np.sort(_angles(V[idx[k]]))
    return InscribedTriangle(tuple(int(i) for i in idx[k]), float(areas[k]),
                             float(ang[0]), float(ang[1]), len(near) == 1)


def phase_coordinates(K: ConvexPolygon) -> tuple:
    t = max_area_inscribed_triangle(K)
    return t.alpha, t.beta


def _affine_from_triangles(src: np.ndarray, dst: np.ndarray) -> AffineMap:
    S = np.column_stack([src[1] - src[0], src[2] - src[0]])
    D = np.column_stack([dst[1] - dst[0], dst[2] - dst[0]])
    L = D @ np.linalg.inv(S)
    return AffineMap(L, dst[0] - L @ src[0])


def realize_meshpoint(K: ConvexPolygon, alpha: float, beta: float) -> ConvexPolygon:
    """Affine image of K whose inscribed triangle has angle alpha at its first
    vertex and beta at its second (radians)."""
    if not (alpha > 0 and beta > 0 and alpha + beta < np.pi):
        raise UnrealizableMeshpoint(f"angles {alpha}, {beta} do not form a triangle")
    tri = max_area_inscribed_triangle(K)
    src = K.vertices[list(tri.vertex_indices)]
    r = np.sin(beta) / np.sin(alpha + beta)
    dst = np.array([[0.0, 0.0], [1.0, 0.0], [r * np.cos(alpha), r * np.sin(alpha)]])
    # indices are increasing along a counterclockwise polygon, so src is counterclockwise too
    return apply_map(_affine_from_triangles(src, dst), K)


def scan_triangle_phase_space(x_grid, n_steps: int = 60, burn_in: int = 10,
                              lam: float = 1.0) -> list:
    """(x_start, x_k) pairs for every k >= burn_in of the scalar triangle map."""
    rows = []
    for x in x_grid:
        if not 0 < x <= 0.5:
            raise DomainError(f"parameter must lie in (0, 1/2], got {x}")
        xk = float(x)
        for k in range(n_steps + 1):
            if k >= burn_in:
                rows.append((float(x), xk))
            if k < n_steps:
                xk = triangle_map(xk) if lam == 1.0 else lambda_triangle_map(xk, lam)
    return rows


def _run_meshpoint(args):
    K, alpha, beta, n_steps, burn_in, policy = args
    start = realize_meshpoint(K, alpha, beta)
    orb = orbit(start, n_steps, policy)
    return [phase_coordinates(s.rep) + (k,)
            for k, s in enumerate(orb.states) if k >= burn_in]


def _workers(workers) -> int:
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, int(workers))


def scan_polygon_phase_space(K: ConvexPolygon, grid: GridSpec = GridSpec(),
                             n_steps: int = 60, burn_in: int = 10,
                             policy: StepPolicy = DEFAULT_POLICY,
                             workers=None) -> PhasePortrait:
    """Run an orbit from every realizable meshpoint and collect the tails.

    Meshpoints with alpha + beta >= 180 degrees are skipped and counted.
    Work is spread over `workers` processes (default: $SHAPEFLOW_THREADS or
    1); results are gathered in meshpoint order.
    """
    if n_steps <= burn_in:
        raise ValueError("n_steps must exceed burn_in")
    jobs, mesh, skipped = [], [], 0
    for a, b in grid.meshpoints():
        if a + b >= 180.0:
            skipped += 1
            continue
        mesh.append((a, b))
        jobs.append((K, np.radians(a), np.radians(b), n_steps, burn_in, policy))
    n = _workers(workers)
    if n == 1:
        results = [_run_meshpoint(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n) as ex:
            results = list(ex.map(_run_meshpoint, jobs, chunksize=8))
    points = [(al, be, i, k) for i, res in enumerate(results) for al, be, k in res]
    return PhasePortrait(points, grid, burn_in, n_steps, mesh, skipped)


def cluster_points(points, radius: float = 1e-4) -> list:
    """Group (alpha, beta) points by single linkage within `radius`.

    Returns ``(center, size)`` pairs, largest cluster first; the center is
    the member from the latest step, i.e. the most converged one.
    """
    pts = np.array([(p[0], p[1]) for p in points])
    steps = np.array([p[3] if len(p) > 3 else 0 for p in points])
    label = -np.ones(len(pts), dtype=int)
    n = 0
    for i in range(len(pts)):
        if label[i] >= 0:
            continue
        label[i] = n
        stack = [i]
        while stack:
            j = stack.pop()
            near = np.flatnonzero((label < 0)
                                  & (np.abs(pts - pts[j]).max(axis=1) <= radius))
            label[near] = n
            stack.extend(near.tolist())
        n += 1
    out = []
    for c in range(n):
        members = np.flatnonzero(label == c)
        best = members[np.argmax(steps[members])]
        out.append((tuple(pts[best].tolist()), len(members)))
    out.sort(key=lambda t: (-t[1], t[0]))
    return out


def write_portrait_csv(portrait: PhasePortrait, path) -> None:
    """CSV with header mesh_alpha,mesh_beta,orbit_index,step,alpha,beta (degrees)."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["mesh_alpha", "mesh_beta", "orbit_index", "step", "alpha", "beta"])
        for al, be, i, k in portrait.points:
            ma, mb = portrait.mesh[i]
            w.writerow([f"{ma:.9g}", f"{mb:.9g}", i, k,
                        f"{np.degrees(al):.9g}", f"{np.degrees(be):.9g}"])
