"""Shared generators for random convex shapes."""

import numpy as np
import pytest
from hypothesis import assume, strategies as st

from shapeflow import area, diameter, make_convex_polygon
from shapeflow.dynamics import is_affinely_regular_hexagon
from shapeflow.errors import DegenerateInput


def random_polygon(rng, n_min=3, n_max=12):
    """Hull of n random points on a jittered circle; at least 3 vertices."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        t = np.sort(rng.uniform(0, 2 * np.pi, n))
        r = rng.uniform(0.5, 1.0, n)
        pts = np.column_stack([r * np.cos(t), r * np.sin(t)])
        pts = pts * rng.uniform(0.2, 5.0) + rng.normal(size=2)
        try:
            return make_convex_polygon(pts)
        except DegenerateInput:
            continue


def random_triangle(rng):
    while True:
        try:
            return make_convex_polygon(rng.normal(size=(3, 2)))
        except DegenerateInput:
            continue


def random_affine(rng):
    while True:
        L = rng.normal(size=(2, 2))
        if abs(np.linalg.det(L)) > 0.1:
            return L, rng.normal(size=2)


def random_symmetric_hexagon(rng, allow_regular=False):
    while True:
        t = np.sort(rng.uniform(0, np.pi, 3))
        r = rng.uniform(0.5, 1.0, 3)
        P = np.column_stack([r * np.cos(t), r * np.sin(t)])
        H = make_convex_polygon(np.vstack([P, -P]))
        if H.n == 6 and (allow_regular or not is_affinely_regular_hexagon(H)):
            return H


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def polygons(draw, min_points=3, max_points=10):
    pts = draw(st.lists(st.tuples(coords, coords), min_size=min_points,
                        max_size=max_points))
    arr = np.array(pts)
    try:
        K = make_convex_polygon(arr)
    except DegenerateInput:
        K = None
    assume(K is not None)
    # keep away from slivers, where tolerances dominate
    assume(area(K) > 1e-3 * diameter(K) ** 2)
    return K
