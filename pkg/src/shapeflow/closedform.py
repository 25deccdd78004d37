"""Closed-form triangle dynamics.

After one step every triangle is similar to ``(0,0), (1,0), (x, 1)`` with
``0 < x <= 1/2``, and the map acts on the parameter x by

    f(x) = (1 - x) / (1 + (1 - x)**2),

whose unique fixed point x0 is the real root of x**3 - 2x**2 + 3x - 1.

The lambda family ``(0,0), (1,0), (x, lam)`` is closed under the lambda
affinity with parameter ``1 / lam``: that map turns the extremal rectangle
into one whose side across the longest triangle side is ``lam`` times the
side along it.  The geometric step is the reference definition of the
scalar map for lam != 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .affinity import apply_map, lambda_map, normalize
from .calipers import extremal_rectangles
from .errors import DomainError, InternalInconsistency, InvalidParameter
from .polygeom import ConvexPolygon, central_symmetral
from .shapecmp import canonical_triangle, triangle_param

SQRT3_2 = np.sqrt(3) / 2
INV_SQRT2 = 1 / np.sqrt(2)
GOLDEN_THRESHOLD = np.sqrt((np.sqrt(5) - 1) / 2)
CONTRACTION = 12 / 25


class Regime(Enum):
    FIXED = "fixed"
    CONVERGE_INTERIOR = "converge_interior"
    CONVERGE_BOUNDARY = "converge_boundary"
    EVENTUALLY_CONSTANT = "eventually_constant"


@dataclass(frozen=True)
class LambdaRegime:
    tag: Regime
    limit_x: float


def _check_x(x: float) -> None:
    if not 0 < x <= 0.5:
        raise DomainError(f"parameter must lie in (0, 1/2], got {x}")


def triangle_map(x: float) -> float:
    """Parameter of the image triangle; maps (0, 1/2] into [2/5, 1/2)."""
    _check_x(x)
    y = (1 - x) / (1 + (1 - x) ** 2)
    return min(y, 1 - y)


def triangle_map_derivative(x: float) -> float:
    return (x * x - 2 * x) / (1 + (1 - x) ** 2) ** 2


def _cubic(x: float) -> float:
    return x ** 3 - 2 * x ** 2 + 3 * x - 1


@lru_cache(maxsize=None)
def triangle_fixed_point() -> float:
    """Fixed point x0 ~ 0.43016 from the radical formula, checked on the cubic."""
    c = np.cbrt(44 + 12 * np.sqrt(69))
    x0 = float(2 / 3 - c / 6 + 10 / (3 * c))
    if abs(_cubic(x0)) > 1e-10:
        raise InternalInconsistency(f"radical root {x0} misses the cubic")
    return x0


def t0_triangle() -> ConvexPolygon:
    """The invariant triangle (0,0), (1,0), (x0, 1)."""
    return canonical_triangle(triangle_fixed_point(), 1.0)


def h0_hexagon() -> ConvexPolygon:
    """Central symmetral of the invariant triangle."""
    return central_symmetral(t0_triangle())


# Near the boundary parameter two sides give almost the same ratio; a loose
# tie tolerance would freeze a convergent sequence about 1e-9 short of it.
TIE_TOL = 1e-13


def lambda_step(T: ConvexPolygon, lam: float) -> ConvexPolygon:
    """One step of the lambda-family dynamics (affinity parameter 1/lam)."""
    if not lam > 0:
        raise InvalidParameter("lambda must be positive")
    R = extremal_rectangles(T, TIE_TOL).rects[0]
    return normalize(apply_map(lambda_map(R, 1.0 / lam), T))


def lambda_triangle_map(x: float, lam: float) -> float:
    """Image parameter of (0,0), (1,0), (x, lam), computed geometrically."""
    _check_x(x)
    img = lambda_step(canonical_triangle(x, lam), lam)
    return triangle_param(img, lam).x


def _lambda_radical(lam: float) -> float:
    l2 = lam * lam
    disc = 9 - 12 * l2 + 60 * l2 ** 2 + 12 * l2 ** 3
    if disc < 0:
        raise InternalInconsistency(f"negative discriminant at lambda={lam}")
    c = np.cbrt(28 - 72 * l2 + 12 * np.sqrt(disc))
    return float(c / 6 - (4 / 3 + 2 * l2) / c + 2 / 3)


def lambda_fixed_point(lam: float) -> float:
    """Fixed parameter x^lam of the lambda dynamics, lam >= sqrt(3)/2.

    Evaluated from the radical formula and rejected if it is not a fixed
    point of the geometric map.
    """
    if lam < SQRT3_2 - 1e-15:
        raise DomainError(f"fixed point formula needs lambda >= sqrt(3)/2, got {lam}")
    x = _lambda_radical(lam)
    x_in = min(x, 0.5)
    resid = abs(lambda_triangle_map(x_in, lam) - x)
    if resid > 1e-8:
        raise InternalInconsistency(
            f"x^lambda={x} is not fixed (residual {resid:.3g}) at lambda={lam}")
    return x


def boundary_param(lam: float) -> float:
    """1 - sqrt(1 - lam^2): above it the base is a longest side and the step is the identity."""
    if not 0 < lam <= 1:
        raise DomainError("boundary parameter is defined for 0 < lambda <= 1")
    return 1 - np.sqrt(1 - lam * lam)


def secondary_threshold(lam: float) -> float:
    """1 - lam^2 / sqrt(1 - lam^2), the other range bound in the lambda theorem."""
    if not 0 < lam < 1:
        raise DomainError("defined for 0 < lambda < 1")
    return 1 - lam * lam / np.sqrt(1 - lam * lam)


def lambda_orbit(x: float, lam: float, n: int) -> list:
    xs = [x]
    for _ in range(n):
        xs.append(triangle_map(xs[-1]) if lam == 1.0 else lambda_triangle_map(xs[-1], lam))
    return xs


def classify_lambda_regime(lam: float, x: float, n_iter: int = 200) -> LambdaRegime:
    """Label the behaviour of the lambda sequence started at x by running it.

    FIXED: x is already fixed.  EVENTUALLY_CONSTANT: the sequence jumps onto
    a fixed value after finitely many steps.  Otherwise it converges, to the
    boundary value 1 - sqrt(1 - lam^2) (CONVERGE_BOUNDARY) or to an interior
    fixed point (CONVERGE_INTERIOR).
    """
    if not lam > 0:
        raise InvalidParameter("lambda must be positive")
    _check_x(x)
    xs = lambda_orbit(x, lam, n_iter)
    steps = np.abs(np.diff(xs))
    still = 1e-12
    if steps[0] <= still and steps[1] <= still:
        return LambdaRegime(Regime.FIXED, x)
    settled = np.flatnonzero(steps <= still)
    if len(settled):
        k = int(settled[0])
        # a jump lands exactly on a fixed value; a convergent tail creeps in
        if k >= 1 and steps[k - 1] > 1e-9 and np.all(steps[k:] <= still):
            return LambdaRegime(Regime.EVENTUALLY_CONSTANT, xs[k])
    limit = xs[-1]
    if lam < SQRT3_2 and abs(limit - boundary_param(lam)) < 1e-6:
        return LambdaRegime(Regime.CONVERGE_BOUNDARY, limit)
    return LambdaRegime(Regime.CONVERGE_INTERIOR, limit)
