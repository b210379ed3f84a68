"""Local C1 piecewise polynomial curves on secondary knot grids.

Fit a variable-degree piecewise polynomial through blended chord data over
a freely placed secondary knot grid, then recover first- and second-
derivative estimates at the original data sites from the curve's known
deviation there.
"""
from .convergence import (
    ConvergenceRow,
    TestFunction,
    eoc,
    function_names,
    get_function,
    register,
    run_experiment,
)
from .curve import (
    PiecewiseCurve,
    Segment,
    build_curve,
    build_segment,
    chord_data,
    evaluate,
    locate_segment,
)
from .datasets import DataSet, Fixture, fixture_names, get_fixture, parse_dataset
from .errors import (
    CurveError,
    DegeneratePlacement,
    DegenerateSegment,
    IndexOutOfRange,
    InvalidGrid,
    InvalidPlacement,
    InvalidRequest,
    KnotOutOfInterval,
    LengthMismatch,
    NonPositiveError,
    NotStrictlyIncreasing,
    OutOfDomain,
    ParseError,
    UnknownFunction,
    UnstableC1,
)
from .estimators import (
    KnotDerivativeEstimate,
    compute_C1,
    compute_C2,
    estimate_at_knot,
    estimate_interior_knots,
)
from .grid import (
    KnotPlacement,
    PrimaryGrid,
    SecondaryGrid,
    build_secondary_grid,
    default_placement,
    placement_from_knots,
)
from .response import build_curve_response, dumps, sample_curve

__version__ = "0.1.0"

__all__ = [
    "ConvergenceRow",
    "CurveError",
    "DataSet",
    "DegeneratePlacement",
    "DegenerateSegment",
    "Fixture",
    "IndexOutOfRange",
    "InvalidGrid",
    "InvalidPlacement",
    "InvalidRequest",
    "KnotDerivativeEstimate",
    "KnotOutOfInterval",
    "KnotPlacement",
    "LengthMismatch",
    "NonPositiveError",
    "NotStrictlyIncreasing",
    "OutOfDomain",
    "ParseError",
    "PiecewiseCurve",
    "PrimaryGrid",
    "SecondaryGrid",
    "Segment",
    "TestFunction",
    "UnknownFunction",
    "UnstableC1",
    "build_curve",
    "build_curve_response",
    "build_secondary_grid",
    "build_segment",
    "chord_data",
    "compute_C1",
    "compute_C2",
    "default_placement",
    "dumps",
    "eoc",
    "estimate_at_knot",
    "estimate_interior_knots",
    "evaluate",
    "fixture_names",
    "function_names",
    "get_fixture",
    "get_function",
    "locate_segment",
    "parse_dataset",
    "placement_from_knots",
    "register",
    "run_experiment",
    "sample_curve",
]
