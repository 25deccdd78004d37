"""Circumscribed rectangles of minimum aspect ratio.

Shows the ratio profile of a polygon over all directions, the exact
minimum found from the finite candidate set, and the full-degeneracy
flag for shapes with four-fold symmetric central symmetral.
"""
# %%
import numpy as np

from shapeflow import extremal_rectangles, make_convex_polygon, ratio_profile, regular_polygon

K = make_convex_polygon([(0, 0), (3, 0), (3.5, 1.2), (1, 2.2), (-0.4, 1)])
ex = extremal_rectangles(K)
print(f"exact minimum ratio {ex.min_ratio:.12f} from {len(ex.rects)} rectangle(s)")
for R in ex.rects:
    print(f"  direction {np.degrees(R.direction):8.4f} deg, sides {R.a:.6f} x {R.b:.6f}")

# %% a dense sweep only approaches the minimum from above
prof = np.array([r for _, r in ratio_profile(K, 3600)])
print(f"3600-direction sweep minimum {prof.min():.12f} (gap {prof.min() - ex.min_ratio:.1e})")

# %%
for name, P in [("square", regular_polygon(4)), ("octagon", regular_polygon(8)),
                ("hexagon", regular_polygon(6))]:
    print(f"{name:8s} every direction extremal: {extremal_rectangles(P).all_directions_flag}")
