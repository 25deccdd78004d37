"""The shape map K -> f_{K,R}(K) on similarity classes.

One step circumscribes an extremal rectangle, applies the orthogonal
affinity that squares it (or the lambda variant) and renormalizes.  When a
polygon has several extremal rectangles the step branches; orbits follow
the rectangle with the smallest direction angle, the invariance
classifiers look at every branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .affinity import apply_map, lambda_map, normalize
from .calipers import extremal_rectangles
from .errors import InsufficientOrbit, InternalInconsistency, InvalidParameter
from .polygeom import (ConvexPolygon, central_symmetral, diameter,
                       has_fourfold_symmetry, is_origin_symmetric)
from .shapecmp import canonicalize, is_similar, shape_distance

BRANCH_MODES = ("first", "all")


@dataclass(frozen=True)
class StepPolicy:
    branch_mode: str = "first"
    lam: float = 1.0
    ratio_tol: float = 1e-9

    def __post_init__(self):
        if self.branch_mode not in BRANCH_MODES:
            raise InvalidParameter(f"branch_mode must be one of {BRANCH_MODES}")
        if not self.lam > 0:
            raise InvalidParameter("lambda must be positive")
        if not self.ratio_tol > 0:
            raise InvalidParameter("ratio_tol must be positive")


DEFAULT_POLICY = StepPolicy()
ALL_BRANCHES = StepPolicy("all")


@dataclass
class Orbit:
    """Normalized iterates of one path of the dynamics.

    `rect_multiplicity[k]`, `min_ratio[k]` and `diameter_pre_norm[k]`
    describe the step from ``states[k]`` to ``states[k + 1]``.
    """

    states: list
    rect_multiplicity: list = field(default_factory=list)
    min_ratio: list = field(default_factory=list)
    diameter_pre_norm: list = field(default_factory=list)
    policy: StepPolicy = DEFAULT_POLICY

    def __len__(self):
        return len(self.states)

    @property
    def polygons(self) -> list:
        return [s.rep for s in self.states]


@dataclass
class CycleReport:
    found: bool
    period: int = 0
    onset: int = 0
    residual: float = float("inf")
    cycle_reps: list = field(default_factory=list)


def _images(K: ConvexPolygon, policy: StepPolicy):
    ext = extremal_rectangles(K, policy.ratio_tol)
    rects = ext.rects if policy.branch_mode == "all" else ext.rects[:1]
    return ext, [apply_map(lambda_map(R, policy.lam), K) for R in rects]


def step(K: ConvexPolygon, policy: StepPolicy = DEFAULT_POLICY) -> list:
    """Normalized images of K, one per extremal rectangle, similar ones merged."""
    _, imgs = _images(K, policy)
    out: list = []
    for img in imgs:
        img = normalize(img)
        if not any(is_similar(img, o, 1e-9) for o in out):
            out.append(img)
    return out


def orbit(K: ConvexPolygon, n_steps: int,
          policy: StepPolicy = DEFAULT_POLICY) -> Orbit:
    """Iterate the map `n_steps` times following the lowest-angle rectangle."""
    if n_steps < 1:
        raise InvalidParameter("n_steps must be >= 1")
    if policy.branch_mode != "first":
        raise InvalidParameter("orbits follow a single branch; use step() to branch")
    cur = canonicalize(K)
    orb = Orbit([cur], policy=policy)
    for _ in range(n_steps):
        ext, (img,) = _images(cur.rep, policy)
        orb.rect_multiplicity.append(len(ext.rects))
        orb.min_ratio.append(ext.min_ratio)
        orb.diameter_pre_norm.append(diameter(img))
        cur = canonicalize(img)
        orb.states.append(cur)
    return orb


def detect_cycle(orb: Orbit, burn_in: int = 10, max_period: int = 12,
                 tol: float = 1e-7) -> CycleReport:
    """Smallest period p <= max_period with d(state_k, state_{k+p}) < tol
    for every k past the burn-in."""
    states = orb.states
    if burn_in < 0 or max_period < 1 or burn_in + 2 * max_period > len(states):
        raise InsufficientOrbit(
            f"need burn_in + 2 * max_period <= {len(states)} states")
    for p in range(1, max_period + 1):
        worst = 0.0
        for k in range(burn_in, len(states) - p):
            d = shape_distance(states[k].rep, states[k + p].rep)
            worst = max(worst, d)
            if worst >= tol:
                break
        if worst < tol:
            return CycleReport(True, p, burn_in, worst, states[burn_in:burn_in + p])
    return CycleReport(False)


def strong_invariance(K: ConvexPolygon, tol: float = 1e-9) -> bool:
    """Every circumscribed rectangle is a square.

    Decided from the aspect-ratio profile and cross-checked against
    quarter-turn symmetry of the central symmetral; the two criteria are
    equivalent, so disagreement means a bug.
    """
    by_ratio = extremal_rectangles(K, tol).all_directions_flag
    by_symmetry = has_fourfold_symmetry(central_symmetral(K), tol)
    if by_ratio != by_symmetry:
        raise InternalInconsistency(
            f"ratio profile says {by_ratio}, symmetral symmetry says {by_symmetry}")
    return by_ratio


def weak_invariance(K: ConvexPolygon, tol: float = 1e-7) -> bool:
    """Some branch of the step lands in the similarity class of K."""
    return any(is_similar(img, K, tol) for img in step(K, ALL_BRANCHES))


def invariance(K: ConvexPolygon, tol: float = 1e-7) -> bool:
    """Every branch of the step lands in the similarity class of K."""
    return all(is_similar(img, K, tol) for img in step(K, ALL_BRANCHES))


def invariance_report(K: ConvexPolygon, tol: float = 1e-7) -> dict:
    ext = extremal_rectangles(K)
    return {
        "weakly_invariant": weak_invariance(K, tol),
        "invariant": invariance(K, tol),
        "strongly_invariant": strong_invariance(K),
        "n_extremal": len(ext.rects),
        "min_ratio": ext.min_ratio,
    }


def is_affinely_regular_hexagon(H: ConvexPolygon, tol: float = 1e-9) -> bool:
    """Origin-symmetric hexagon with a3 = a2 - a1 for consecutive a1, a2, a3.

    All six starting vertices and both orientations are tried; `tol` is
    relative to the diameter.
    """
    if H.n != 6 or not is_origin_symmetric(H, tol):
        return False
    scale = diameter(H)
    for V, s in product((H.vertices, H.vertices[::-1]), range(6)):
        a1, a2, a3 = np.roll(V, -s, axis=0)[:3]
        if np.linalg.norm(a3 - (a2 - a1)) <= tol * scale:
            return True
    return False

