"""Command-line front end.

Exit status: 0 success, 2 unreadable or malformed input, 3 invalid
configuration, 4 degenerate polygon.  Settings come from defaults, then an
optional ``--config`` file of ``key=value`` lines, then explicit flags.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .calipers import extremal_rectangles
from .closedform import SQRT3_2, lambda_fixed_point, lambda_orbit, triangle_fixed_point
from .dynamics import StepPolicy, detect_cycle, invariance_report, orbit
from .errors import DegenerateInput, ParseError, ShapeflowError
from .formats import orbit_csv, orbit_strip_svg, polygons_svg, read_polygon, scatter_svg
from .scan import GridSpec, cluster_points, scan_polygon_phase_space, write_portrait_csv

COMMANDS = ("orbit", "scan", "invariance", "triangle-map", "render")
EXIT_OK, EXIT_PARSE, EXIT_CONFIG, EXIT_DEGENERATE = 0, 2, 3, 4


class ConfigError(ShapeflowError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    n_steps: int = 60
    burn_in: int = 10
    max_period: int = 12
    lam: float = 1.0
    tol: float = 1e-7
    out_prefix: str = "shapeflow"
    x: float = 0.1
    spacing: float = 5.0

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.n_steps < 1:
            raise ConfigError("steps must be >= 1")
        if self.command in ("orbit", "scan") and not self.n_steps > self.burn_in >= 0:
            raise ConfigError("need steps > burn-in >= 0")
        if self.max_period < 1:
            raise ConfigError("max-period must be >= 1")
        if not self.lam > 0:
            raise ConfigError("lambda must be positive")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if not self.spacing > 0:
            raise ConfigError("spacing must be positive")
        if self.command == "triangle-map" and not 0 < self.x <= 0.5:
            raise ConfigError("x must lie in (0, 1/2]")
        if self.command != "triangle-map" and not self.input_path:
            raise ConfigError(f"{self.command} needs a polygon file")
        return self


# config-file key -> RunConfig field
_KEYS = {"input": "input_path", "input_path": "input_path", "steps": "n_steps",
         "n_steps": "n_steps", "burn-in": "burn_in", "burn_in": "burn_in",
         "max-period": "max_period", "max_period": "max_period", "lambda": "lam",
         "lam": "lam", "tol": "tol", "out-prefix": "out_prefix",
         "out_prefix": "out_prefix", "x": "x", "spacing": "spacing"}


def read_config_file(path) -> dict:
    types = {f.name: f.type for f in fields(RunConfig)}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ParseError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in _KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            name = _KEYS[key]
            conv = {"int": int, "float": float}.get(types[name], str)
            try:
                out[name] = conv(value)
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}") from exc
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shapeflow",
                                description="Extremal-rectangle shape dynamics.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        if name != "triangle-map":
            sp.add_argument("input_path", nargs="?", help="polygon file (text or JSON)")
        sp.add_argument("--config", help="key=value settings file")
        sp.add_argument("--steps", dest="n_steps", type=int)
        sp.add_argument("--burn-in", dest="burn_in", type=int)
        sp.add_argument("--max-period", dest="max_period", type=int)
        sp.add_argument("--lambda", dest="lam", type=float)
        sp.add_argument("--tol", type=float)
        sp.add_argument("--out-prefix", dest="out_prefix")
        if name == "triangle-map":
            sp.add_argument("--x", type=float)
        if name == "scan":
            sp.add_argument("--spacing", type=float, help="grid spacing in degrees")
    return p


def config_from_args(argv) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    settings = read_config_file(ns["config"]) if ns.get("config") else {}
    settings.update({k: v for k, v in ns.items()
                     if k not in ("command", "config") and v is not None})
    return RunConfig(ns["command"], **settings).validate()


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def _run_orbit(cfg: RunConfig) -> None:
    K = read_polygon(cfg.input_path)
    policy = StepPolicy(lam=cfg.lam)
    orb = orbit(K, cfg.n_steps, policy)
    report = None
    if cfg.burn_in + 2 * cfg.max_period <= len(orb):
        report = detect_cycle(orb, cfg.burn_in, cfg.max_period, cfg.tol)
        print(f"cycle found={str(report.found).lower()} period={report.period} "
              f"residual={report.residual:.3g}")
    else:
        print("cycle check skipped: orbit shorter than burn-in + 2 * max-period")
    _write(Path(f"{cfg.out_prefix}_orbit.csv"), orbit_csv(orb, report))
    _write(Path(f"{cfg.out_prefix}_orbit.svg"), orbit_strip_svg(orb.polygons))


def _run_scan(cfg: RunConfig) -> None:
    K = read_polygon(cfg.input_path)
    grid = GridSpec(spacing=cfg.spacing)
    portrait = scan_polygon_phase_space(K, grid, cfg.n_steps, cfg.burn_in,
                                        StepPolicy(lam=cfg.lam))
    clusters = cluster_points(portrait.points)
    print(f"meshpoints={len(portrait.mesh)} skipped={portrait.skipped} "
          f"clusters={len(clusters)}")
    csv_path = Path(f"{cfg.out_prefix}_portrait.csv")
    write_portrait_csv(portrait, csv_path)
    print(f"wrote {csv_path}")
    pts = [(np.degrees(a), np.degrees(b)) for a, b, _, _ in portrait.points]
    _write(Path(f"{cfg.out_prefix}_portrait.svg"), scatter_svg(pts))


def _run_invariance(cfg: RunConfig) -> None:
    rep = invariance_report(read_polygon(cfg.input_path), cfg.tol)
    print(" ".join(f"{k}={str(rep[k]).lower()}"
                   for k in ("weakly_invariant", "invariant", "strongly_invariant")))
    print(f"n_extremal={rep['n_extremal']} min_ratio={rep['min_ratio']:.12g}")


def _run_triangle_map(cfg: RunConfig) -> None:
    target = None
    if cfg.lam == 1.0:
        target = triangle_fixed_point()
    elif cfg.lam >= SQRT3_2:
        target = lambda_fixed_point(cfg.lam)
    print("k,x_k" + (",abs_err" if target is not None else ""))
    for k, xk in enumerate(lambda_orbit(cfg.x, cfg.lam, cfg.n_steps)):
        tail = f",{abs(xk - target):.6e}" if target is not None else ""
        print(f"{k},{xk:.17g}{tail}")


def _run_render(cfg: RunConfig) -> None:
    K = read_polygon(cfg.input_path)
    ext = extremal_rectangles(K)
    _write(Path(f"{cfg.out_prefix}_render.svg"),
           polygons_svg([K], "polygon with extremal rectangles",
                        overlays=[R.corners for R in ext.rects]))
    print(f"n_extremal={len(ext.rects)} min_ratio={ext.min_ratio:.12g}")


_HANDLERS = {"orbit": _run_orbit, "scan": _run_scan, "invariance": _run_invariance,
             "triangle-map": _run_triangle_map, "render": _run_render}


def run(cfg: RunConfig) -> int:
    try:
        _HANDLERS[cfg.validate().command](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateInput as exc:
        print(f"error: degenerate polygon: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ShapeflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors with status 2
        return int(exc.code or 0)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
