import numpy as np
import pytest

from shapeflow.closedform import (CONTRACTION, GOLDEN_THRESHOLD, INV_SQRT2, SQRT3_2,
                                  Regime, boundary_param, classify_lambda_regime,
                                  h0_hexagon, lambda_fixed_point, lambda_orbit,
                                  lambda_triangle_map, secondary_threshold, t0_triangle,
                                  triangle_fixed_point, triangle_map,
                                  triangle_map_derivative)
from shapeflow.dynamics import step
from shapeflow.errors import DomainError
from shapeflow.polygeom import is_origin_symmetric
from shapeflow.shapecmp import canonical_triangle, triangle_param

X0 = triangle_fixed_point()
# frozen: 200 iterations of the geometric lambda map from x = 0.3
X_LAMBDA_2 = 0.17609282675202562


# ---- scalar map ------------------------------------------------------------

def test_map_examples():
    assert triangle_map(0.5) == pytest.approx(0.4, abs=1e-15)
    assert triangle_map(0.4) == pytest.approx(0.6 / 1.36, abs=1e-15)
    assert abs(triangle_map(X0) - X0) < 1e-12


@pytest.mark.parametrize("x", [0.0, -0.1, 0.5000001, 1.0])
def test_map_domain(x):
    with pytest.raises(DomainError):
        triangle_map(x)


def test_map_range(rng):
    ys = [triangle_map(x) for x in rng.uniform(1e-9, 0.5, 1000)]
    assert min(ys) >= 0.4 - 1e-15 and max(ys) <= 0.5


def test_fixed_point_value():
    assert 0.42 < X0 < 0.44
    assert abs(X0 ** 3 - 2 * X0 ** 2 + 3 * X0 - 1) < 1e-12


def test_cubic_has_one_real_root():
    roots = np.roots([1, -2, 3, -1])
    real = roots[np.abs(roots.imag) < 1e-12].real
    assert len(real) == 1
    assert real[0] == pytest.approx(X0, abs=1e-12)


def test_contraction(rng):
    for x in rng.uniform(1e-9, 0.5, 1000):
        assert abs(triangle_map(x) - X0) <= CONTRACTION * abs(x - X0) + 1e-12


def test_derivative_bounds():
    xs = np.linspace(1e-6, 0.5, 100)
    h = 1e-7
    fd = [(triangle_map(min(x + h, 0.5)) - triangle_map(x - h)) / (min(x + h, 0.5) - x + h)
          for x in xs]
    assert min(fd) >= -CONTRACTION - 1e-6
    assert max(fd) <= 1e-6
    np.testing.assert_allclose(fd, [triangle_map_derivative(x) for x in xs], atol=1e-5)


def test_scalar_matches_geometric_step(rng):
    for x in rng.uniform(1e-3, 0.5, 200):
        (img,) = step(canonical_triangle(x))
        assert abs(triangle_param(img).x - triangle_map(x)) < 1e-9


def test_misprinted_recurrence_disagrees_with_geometry():
    # (1 - x) / (1 + (2 - x)**2) is not the step; the geometry decides
    x = 0.3
    (img,) = step(canonical_triangle(x))
    got = triangle_param(img).x
    assert abs(got - (1 - x) / (1 + (2 - x) ** 2)) > 0.1
    assert got == pytest.approx(triangle_map(x), abs=1e-12)


# ---- special shapes --------------------------------------------------------

def test_t0_and_h0():
    np.testing.assert_array_equal(t0_triangle().vertices, [[0, 0], [1, 0], [X0, 1]])
    H = h0_hexagon()
    assert H.n == 6 and is_origin_symmetric(H)


# ---- lambda family ---------------------------------------------------------

def test_lambda_one_matches_scalar(rng):
    for x in rng.uniform(1e-3, 0.5, 50):
        assert lambda_triangle_map(x, 1.0) == pytest.approx(triangle_map(x), abs=1e-10)


def test_lambda_regular_triangle_fixed():
    assert lambda_triangle_map(0.5, SQRT3_2) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("lam", [SQRT3_2, 0.95, 1.0, 1.5, 2.0, 3.0])
def test_lambda_fixed_point_is_fixed(lam):
    xl = lambda_fixed_point(lam)
    assert 0 < xl <= 0.5 + 1e-12
    assert abs(lambda_triangle_map(min(xl, 0.5), lam) - xl) < 1e-9


def test_lambda_fixed_point_examples():
    assert abs(lambda_fixed_point(SQRT3_2) - 0.5) < 1e-10
    assert abs(lambda_fixed_point(1.0) - X0) < 1e-9
    assert lambda_fixed_point(2.0) == pytest.approx(X_LAMBDA_2, abs=1e-9)


def test_lambda_fixed_point_domain():
    with pytest.raises(DomainError):
        lambda_fixed_point(0.8)


def test_lambda_fixed_point_continuous():
    lams = np.linspace(SQRT3_2, 3.0, 100)
    xs = np.array([lambda_fixed_point(l) for l in lams])
    jumps = np.abs(np.diff(xs))
    slope = np.median(jumps)
    assert np.all(jumps < 10 * max(slope, 1e-12) + 1e-3)
    assert np.all(np.diff(xs) < 0)


def test_thresholds():
    assert boundary_param(0.8) == pytest.approx(0.4)
    assert INV_SQRT2 < GOLDEN_THRESHOLD < SQRT3_2
    # the secondary bound meets the boundary at 1/sqrt2 and vanishes at the golden threshold
    assert secondary_threshold(INV_SQRT2 + 1e-12) == pytest.approx(
        boundary_param(INV_SQRT2), abs=1e-9)
    assert secondary_threshold(GOLDEN_THRESHOLD) == pytest.approx(0.0, abs=1e-12)


def test_regime_examples():
    r = classify_lambda_regime(1.0, 0.2)
    assert r.tag is Regime.CONVERGE_INTERIOR
    assert r.limit_x == pytest.approx(X0, abs=1e-9)
    r = classify_lambda_regime(0.8, 0.1)
    assert r.tag is Regime.CONVERGE_BOUNDARY
    assert r.limit_x == pytest.approx(0.4, abs=1e-6)
    r = classify_lambda_regime(0.5, 0.05)
    assert r.tag is Regime.EVENTUALLY_CONSTANT


def test_regime_fixed():
    assert classify_lambda_regime(1.0, X0).tag is Regime.FIXED
    assert classify_lambda_regime(SQRT3_2, 0.5).tag is Regime.FIXED
    # at or above the boundary the base is already a longest side
    assert classify_lambda_regime(0.6, 0.3).tag is Regime.FIXED


def test_eventually_constant_region(rng):
    for _ in range(10):
        lam = rng.uniform(0.2, INV_SQRT2 - 0.01)
        x = rng.uniform(0.01, 0.99) * boundary_param(lam)
        r = classify_lambda_regime(lam, x)
        assert r.tag is Regime.EVENTUALLY_CONSTANT
        xs = lambda_orbit(x, lam, 20)
        assert xs[-1] == xs[-2]


def test_orbit_helper():
    xs = lambda_orbit(0.5, 1.0, 2)
    assert xs == [0.5, triangle_map(0.5), triangle_map(triangle_map(0.5))]
