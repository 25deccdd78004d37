"""Shipped sample shapes.

The sample heptagon was drawn by :func:`random_heptagon` with seed 174 and
its coordinates are frozen below, so results never depend on the RNG
implementation.  Under the default dynamics it has a period-5 attractor
that every 5-degree meshpoint of its affine class falls into.
"""

from __future__ import annotations

import numpy as np

from .polygeom import ConvexPolygon, make_convex_polygon

SAMPLE_HEPTAGON_SEED = 174
SAMPLE_HEPTAGON_PERIOD = 5

_SAMPLE_HEPTAGON = (
    (-0.9408818561432896, 0.22705386764506236),
    (-0.829127567724004, -0.07685655412300099),
    (-0.6129005703769712, -0.6165465203793923),
    (0.7360759989508423, -0.4840011044155209),
    (0.8712162572246114, -0.19564510885193412),
    (0.8565735095058641, -0.03627772355133511),
    (-0.4119465495305671, 0.7610611643610123),
)


def random_heptagon(seed: int) -> ConvexPolygon:
    """Seven points at sorted random angles, radii in [0.6, 1); redrawn until
    all seven are hull vertices."""
    rng = np.random.default_rng(seed)
    while True:
        t = np.sort(rng.uniform(0, 2 * np.pi, 7))
        r = rng.uniform(0.6, 1.0, 7)
        K = make_convex_polygon(np.column_stack([r * np.cos(t), r * np.sin(t)]))
        if K.n == 7:
            return K


def sample_heptagon() -> ConvexPolygon:
    return ConvexPolygon(np.array(_SAMPLE_HEPTAGON))
