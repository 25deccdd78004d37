"""Centrally symmetric hexagons: one special shape and many wanderers.

The special hexagon maps to a similar copy of itself; random symmetric
hexagons keep changing shape long after the start.
"""
# %%
import numpy as np

from shapeflow import h0_hexagon, invariance_report, make_convex_polygon, orbit
from shapeflow.shapecmp import shape_distance

print("special hexagon:", invariance_report(h0_hexagon()))

# %%
rng = np.random.default_rng(1)
ang = np.sort(rng.uniform(0, np.pi, 3))
half = rng.uniform(0.5, 1.5, (3, 1)) * np.column_stack([np.cos(ang), np.sin(ang)])
H = make_convex_polygon(np.vstack([half, -half]))
orb = orbit(H, 60)
moves = [shape_distance(orb.states[k].rep, orb.states[k + 1].rep) for k in range(50, 60)]
print("step-to-step shape distance after step 50:", np.round(moves, 4))
