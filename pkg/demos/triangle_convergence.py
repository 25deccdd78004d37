"""Triangles: every orbit collapses onto one shape.

Iterates the geometric step from a few random triangles, tracks the
canonical parameter x_k and compares it with the scalar recurrence.
"""
# %%
import numpy as np

from shapeflow import orbit, triangle_fixed_point, triangle_map, triangle_param
from shapeflow.polygeom import make_convex_polygon

x0 = triangle_fixed_point()
print(f"fixed point x0 = {x0:.15f}")

# %%
rng = np.random.default_rng(0)
for trial in range(3):
    T = make_convex_polygon(rng.normal(size=(3, 2)))
    orb = orbit(T, 25)
    xs = [triangle_param(s.rep, tol=1e-7).x for s in orb.states[1:]]
    errs = np.abs(np.array(xs) - x0)
    print(f"trial {trial}: x_1 = {xs[0]:.6f}, |x_25 - x0| = {errs[-1]:.2e}, "
          f"worst ratio {np.max(errs[1:] / np.maximum(errs[:-1], 1e-300)):.3f}")

# %% the scalar map reproduces the geometry
x = 0.12
for k in range(6):
    print(k, f"{x:.12f}")
    x = triangle_map(x)
