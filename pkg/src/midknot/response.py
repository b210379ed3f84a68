"""Curve responses shared by the CLI and the HTTP service.

Both front ends build the same dict and serialize it through the same
``dumps``, so a fit written by the CLI is byte-identical to the body the
service returns for the same inputs.  Floats serialize via Python's repr,
the shortest digit string that round-trips.
"""
from __future__ import annotations

import json

import numpy as np

from .curve import PiecewiseCurve, build_curve, evaluate
from .errors import InvalidRequest
from .estimators import estimate_interior_knots
from .grid import KnotPlacement, PrimaryGrid

DEFAULT_SAMPLES = 201


def _segment_dict(seg) -> dict:
    return {
        "x_lo": seg.x_lo,
        "x_hi": seg.x_hi,
        "f_lo": seg.f_lo,
        "f_hi": seg.f_hi,
        "d_lo": seg.d_lo,
        "d_hi": seg.d_hi,
        "A": seg.A,
        "B": seg.B,
    }


def sample_curve(curve: PiecewiseCurve, samples: int) -> list[list[float]]:
    """Evenly spaced [x, S, S', S''] rows across the curve's domain."""
    xs = np.linspace(curve.x_min, curve.x_max, samples)
    return [
        [float(x)] + [evaluate(curve, float(x), order) for order in (0, 1, 2)]
        for x in xs
    ]


def build_curve_response(
    grid: PrimaryGrid, placement: KnotPlacement, samples: int = DEFAULT_SAMPLES
) -> dict:
    """Fit a curve and project it into the wire format."""
    if isinstance(samples, bool) or not isinstance(samples, int):
        raise InvalidRequest(f"samples must be an integer, got {samples!r}")
    if samples < 2:
        raise InvalidRequest(f"samples must be at least 2, got {samples}")
    curve = build_curve(grid, placement)
    return {
        "knots": [float(x) for x in curve.secondary.x],
        "segments": [_segment_dict(s) for s in curve.segments],
        "samples": sample_curve(curve, samples),
        "knot_estimates": [e.to_dict() for e in estimate_interior_knots(curve)],
    }


def dumps(obj) -> str:
    """Canonical JSON: compact separators, insertion-ordered keys."""
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)
