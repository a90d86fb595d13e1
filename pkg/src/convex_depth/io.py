"""JSON/CSV/SVG serialization with byte-stable number formatting."""

import json
from fractions import Fraction
from xml.sax.saxutils import quoteattr

import numpy as np

__all__ = ["normalize", "dumps", "load_json", "region_svg"]

SIG_DIGITS = 12


def _fmt(x):
    return float(format(float(x), f".{SIG_DIGITS}g"))


def normalize(obj):
    """Plain JSON-ready copy: floats at 12 significant digits, Fractions as "p/q"."""
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return normalize(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = _fmt(obj)
        return 0.0 if x == 0 else x
    return obj


def dumps(obj):
    return json.dumps(normalize(obj), indent=2) + "\n"


def load_json(path):
    """Parse a JSON file; decode errors keep their line/column information."""
    with open(path) as fh:
        return json.load(fh)


def _pts(poly):
    return " ".join(f"{x:.12g},{y:.12g}" for x, y in poly)


def region_svg(region, family=None, debug_planks=False, size=480):
    """SVG drawing of a center region, optionally with the family and planks."""
    shapes = [np.asarray(region.outer_polygon).reshape(-1, 2),
              np.asarray(region.certified_points).reshape(-1, 2)]
    if family is not None:
        shapes += [P.vertices for P in family]
    allpts = np.vstack([s for s in shapes if len(s)] or [np.zeros((1, 2))])
    lo, hi = allpts.min(axis=0), allpts.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    lo = lo - 0.1 * span
    span *= 1.2
    scale = size / span

    def tr(p):
        p = np.atleast_2d(p)
        return np.column_stack([(p[:, 0] - lo[0]) * scale, size - (p[:, 1] - lo[1]) * scale])

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">',
           f"<title>{'empty ' if region.empty_flag else ''}center region r={int(region.r)}</title>"]
    if debug_planks:
        box = np.array([lo, lo + span])
        for pl in region.planks:
            if pl.empty:
                continue
            u = np.asarray(pl.direction)
            w = np.array([-u[1], u[0]])
            a, b = pl.interval
            far = 2 * span + float(np.abs(box).max())
            strip = [a * u - far * w, b * u - far * w, b * u + far * w, a * u + far * w]
            out.append(f'<polygon class="plank" points={quoteattr(_pts(tr(np.array(strip))))} '
                       'fill="steelblue" fill-opacity="0.03" stroke="none"/>')
    if family is not None:
        for P in family:
            v = tr(P.vertices)
            if len(v) == 1:
                out.append(f'<circle class="set" cx="{v[0, 0]:.12g}" cy="{v[0, 1]:.12g}" r="2" fill="black"/>')
            else:
                out.append(f'<polygon class="set" points={quoteattr(_pts(v))} '
                           'fill="none" stroke="black" stroke-width="1.5"/>')
    if len(shapes[0]):
        out.append(f'<polygon class="region" points={quoteattr(_pts(tr(shapes[0])))} '
                   'fill="orange" fill-opacity="0.5" stroke="darkorange"/>')
    for x, y in (tr(shapes[1]) if len(shapes[1]) else []):
        out.append(f'<circle class="certified" cx="{x:.12g}" cy="{y:.12g}" r="3" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
