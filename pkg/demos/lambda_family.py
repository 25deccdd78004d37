"""The one-parameter family of maps: where do triangle orbits go?

For lambda above sqrt(3)/2 orbits converge to an interior fixed point;
below it they drift to the boundary or stop after finitely many steps.
"""
# %%
import numpy as np

from shapeflow import boundary_param, classify_lambda_regime, lambda_fixed_point

for lam in (2.0, 1.0, np.sqrt(3) / 2):
    print(f"lambda {lam:.4f}: interior fixed point {lambda_fixed_point(lam):.12f}")

# %%
for lam, x in [(1.5, 0.1), (0.8, 0.1), (0.75, 0.2), (0.5, 0.05)]:
    r = classify_lambda_regime(lam, x)
    print(f"lambda {lam:4.2f}, x {x:4.2f}: {r.tag.name:20s} limit {r.limit_x:.9f} "
          f"(boundary {boundary_param(lam) if lam <= 1 else float('nan'):.9f})")
