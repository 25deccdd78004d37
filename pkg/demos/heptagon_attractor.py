"""A heptagon whose orbit settles on a 5-cycle, and its phase portrait.

Writes heptagon_orbit.svg and heptagon_portrait.svg in the working directory.
"""
# %%
from pathlib import Path

import numpy as np

from shapeflow import GridSpec, cluster_points, detect_cycle, orbit, sample_heptagon
from shapeflow import scan_polygon_phase_space
from shapeflow.formats import orbit_strip_svg, scatter_svg

K = sample_heptagon()
orb = orbit(K, 60)
rep = detect_cycle(orb, burn_in=10, max_period=12, tol=1e-6)
print(f"cycle found: {rep.found}, period {rep.period}, residual {rep.residual:.1e}")
Path("heptagon_orbit.svg").write_text(orbit_strip_svg([s.rep for s in orb.states[:20]]))

# %% a coarse grid keeps the demo quick; the acceptance suite uses 5 degrees
portrait = scan_polygon_phase_space(K, GridSpec(spacing=10.0), 40, 10)
clusters = cluster_points(portrait.points)
print(f"{len(portrait.mesh)} start shapes, {len(clusters)} clusters")
for (a, b), size in clusters:
    print(f"  ({np.degrees(a):7.3f}, {np.degrees(b):7.3f}) deg  x{size}")
pts = np.degrees([(a, b) for a, b, _, _ in portrait.points])
Path("heptagon_portrait.svg").write_text(scatter_svg(pts))
