"""Command line entry point: ``convex-depth <command> [options]``.

Exit status is 0 on success, 1 for invalid input or a failed check and 2 for
internal failures (LP solver errors, witness search exhausted).
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import io
from .centers import (TripleConditionError, WitnessNotFound, center_region_2d,
                      compute_plank, holmsen_depth_check, max_depth_2d,
                      simplex_witness_2d)
from .depth import depth_exact_2d, depth_sampled_upper, min_transversal_count_2d
from .geometry import Family, LPError
from .hitting import (BlemishParams, HittingInstance, SearchTooLarge,
                      beta_exhaustive_small, blemish_feasible, blemish_margin,
                      blemish_optimize, bounds_table, bounds_table_csv)
from .reduction import ReductionError, equivalence_roundtrip_2d, hitting_to_family
from .scenarios import run_scenario
from .tukey import NotKIntersecting, PointSet, rado_centerpoint_2d, tukey_depth_2d

logger = logging.getLogger(__name__)

COMMANDS = ("depth", "max-depth", "plank", "region", "witness", "transversal",
            "tukey", "beta", "blemish", "table", "reduce", "verify")

REQUIRED = {
    "depth": ("input", "point"),
    "max-depth": ("input",),
    "plank": ("input", "direction", "r"),
    "region": ("input", "r"),
    "witness": ("input", "r"),
    "transversal": ("input", "point"),
    "tukey": ("input",),
    "beta": ("m", "k", "maxN"),
    "blemish": ("m", "k"),
    "table": ("dmax",),
    "reduce": ("input",),
    "verify": ("scenario",),
}


class CheckFailed(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input_path: str = None
    params: dict = field(default_factory=dict)
    output_path: str = None
    format: str = "json"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        self.params.setdefault("seed", 42)
        if self.format not in ("json", "csv", "svg"):
            raise ValueError(f"unknown format {self.format!r}")
        for name in REQUIRED[self.command]:
            if name == "input":
                if not self.input_path:
                    raise ValueError(f"{self.command} needs an input file")
            elif self.params.get(name) is None:
                raise ValueError(f"{self.command} needs --{name}")


def _vector(text):
    return np.array([float(t) for t in str(text).split(",")])


def _load_family(path):
    return Family.from_json(io.load_json(path))


def _emit(cfg, text, suffix=None):
    if cfg.output_path is None:
        sys.stdout.write(text)
        return
    path = Path(cfg.output_path)
    if suffix is not None:
        path = path.with_suffix(suffix)
    path.write_text(text)


def _cmd_depth(cfg):
    F = _load_family(cfg.input_path)
    p = _vector(cfg.params["point"])
    if F.dim == 2 and not cfg.params.get("directions"):
        cert = depth_exact_2d(F, p)
    else:
        cert = depth_sampled_upper(F, p, int(cfg.params.get("directions") or 10000),
                                   int(cfg.params["seed"]))
    return {"value": cert.value, "witness_direction": cert.witness_direction,
            "method": cert.method}


def _cmd_max_depth(cfg):
    depth, point = max_depth_2d(_load_family(cfg.input_path))
    return {"max_depth": depth, "point": point}


def _cmd_plank(cfg):
    F = _load_family(cfg.input_path)
    pl = compute_plank(F, _vector(cfg.params["direction"]), int(cfg.params["r"]))
    return {"direction": pl.direction, "interval": pl.interval, "empty": pl.empty}


def _cmd_region(cfg):
    F = _load_family(cfg.input_path)
    region = center_region_2d(F, int(cfg.params["r"]), int(cfg.params.get("steps") or 360))
    if cfg.output_path is not None:
        _emit(cfg, io.dumps(region.to_json()), ".json")
        _emit(cfg, io.region_svg(region, F, bool(cfg.params.get("debug_planks"))), ".svg")
        return None
    if cfg.format == "svg":
        sys.stdout.write(io.region_svg(region, F, bool(cfg.params.get("debug_planks"))))
        return None
    return region.to_json()


def _cmd_witness(cfg):
    F = _load_family(cfg.input_path)
    found = simplex_witness_2d(F, int(cfg.params["r"]),
                               int(cfg.params.get("steps") or 720))
    if isinstance(found, np.ndarray):
        return {"point": found}
    return {"halfspaces": [{"normal": h.normal, "offset": h.offset} for h in found.halfspaces],
            "contain_counts": found.contain_counts}


def _cmd_transversal(cfg):
    F = _load_family(cfg.input_path)
    return {"min_transversal_count": min_transversal_count_2d(F, _vector(cfg.params["point"]))}


def _cmd_tukey(cfg):
    S = PointSet.from_json(io.load_json(cfg.input_path))
    if cfg.params.get("point") is not None:
        return {"tukey_depth": tukey_depth_2d(S, _vector(cfg.params["point"]))}
    point, depth = rado_centerpoint_2d(S)
    return {"centerpoint": point, "tukey_depth": depth}


def _cmd_beta(cfg):
    value = beta_exhaustive_small(int(cfg.params["m"]), int(cfg.params["k"]),
                                  int(cfg.params["maxN"]))
    if cfg.output_path is None and cfg.format == "json" and not cfg.params.get("json"):
        sys.stdout.write(f"{value}\n")
        return None
    return {"beta": value}


def _cmd_blemish(cfg):
    m, k = int(cfg.params["m"]), int(cfg.params["k"])
    if cfg.params.get("ell") is not None and cfg.params.get("beta") is not None:
        p = BlemishParams(m, k, int(cfg.params["ell"]), float(cfg.params["beta"]))
        return {"feasible": blemish_feasible(p), "margin": blemish_margin(p)}
    ell, beta = blemish_optimize(m, k)
    return {"ell": ell, "beta": beta}


def _cmd_table(cfg):
    rows = bounds_table(int(cfg.params["dmax"]))
    if cfg.format == "csv":
        _emit(cfg, bounds_table_csv(rows))
        return None
    return {"rows": rows}


def _cmd_reduce(cfg):
    inst = HittingInstance.from_json(io.load_json(cfg.input_path))
    if cfg.params.get("k") is not None:
        return equivalence_roundtrip_2d(inst, int(cfg.params["k"]))
    d = cfg.params.get("d") or inst.m - 1
    family, sidecar = hitting_to_family(inst, int(d)).to_json()
    return {"family": family, **sidecar}


def _cmd_verify(cfg):
    name = cfg.params["scenario"]
    if name == "holmsen":
        ok, point = holmsen_depth_check(_load_family(cfg.input_path))
        result = {"depth_at_least_half": ok, "point": point, "ok": ok}
    else:
        result = run_scenario(name)
    if not result["ok"]:
        _emit(cfg, io.dumps(result))
        raise CheckFailed(f"scenario {name} failed")
    return result


HANDLERS = {
    "depth": _cmd_depth, "max-depth": _cmd_max_depth, "plank": _cmd_plank,
    "region": _cmd_region, "witness": _cmd_witness, "transversal": _cmd_transversal,
    "tukey": _cmd_tukey, "beta": _cmd_beta, "blemish": _cmd_blemish,
    "table": _cmd_table, "reduce": _cmd_reduce, "verify": _cmd_verify,
}


def run(cfg):
    """Execute one command; returns the process exit code."""
    try:
        result = HANDLERS[cfg.command](cfg)
        if result is not None:
            _emit(cfg, io.dumps(result))
        return 0
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON in {cfg.input_path} at line {exc.lineno} "
              f"column {exc.colno}: {exc.msg}", file=sys.stderr)
        return 1
    except (LPError, WitnessNotFound) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (CheckFailed, ValueError, KeyError, TypeError, OSError,
            ReductionError, TripleConditionError, NotKIntersecting, SearchTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are input errors (exit 1), not argparse's default 2
        raise ValueError(message)


def build_parser():
    parser = _Parser(prog="convex-depth",
                                     description="Depth of points relative to families of polytopes.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("scenario", nargs="?", help="scenario name for 'verify'")
    parser.add_argument("-i", "--input", dest="input_path")
    parser.add_argument("-o", "--output", dest="output_path")
    parser.add_argument("--format", default="json", choices=("json", "csv", "svg"))
    parser.add_argument("--point")
    parser.add_argument("--direction")
    parser.add_argument("--r", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--d", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--maxN", type=int)
    parser.add_argument("--dmax", type=int)
    parser.add_argument("--ell", type=int)
    parser.add_argument("--beta", type=float)
    parser.add_argument("--steps", type=int)
    parser.add_argument("--directions", type=int)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--threads", type=int, default=None,
                        help="accepted for compatibility; computations run serially")
    parser.add_argument("--debug-planks", action="store_true")
    parser.add_argument("--json", action="store_true", help="force JSON output for 'beta'")
    return parser


def parse_config(argv=None):
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "input_path", "output_path", "format")}
    return RunConfig(args.command, args.input_path, params, args.output_path, args.format)


def main(argv=None):
    logging.basicConfig(level=logging.WARNING)
    try:
        cfg = parse_config(argv)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
