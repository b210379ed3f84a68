"""Convergence experiments: observed error decay of the nodal estimators.

Each experiment fits a three-site stencil {c - H, c, c + r H} sampled from a
registered test function, halves H across a range of levels, and records
three errors at the centre site: the raw value deviation |S(c) - F(c)|, the
corrected slope error |f1_est - F'(c)|, and the curvature estimate error
|f2_est - F''(c)|.  Observed orders come from consecutive error ratios,
eoc = log2(err_coarse / err_fine).

On a uniform stencil (r = 1) all three errors decay at second order; with a
fixed step ratio r != 1 the value and slope errors stay second order while
the curvature error drops to first order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curve import build_curve, evaluate
from .errors import NonPositiveError, UnknownFunction
from .estimators import estimate_at_knot
from .grid import KnotPlacement, PrimaryGrid

__all__ = [
    "TestFunction",
    "register",
    "get_function",
    "function_names",
    "ConvergenceRow",
    "eoc",
    "run_experiment",
    "rows_to_table",
    "rows_to_csv",
    "rows_to_dicts",
]


@dataclass(frozen=True)
class TestFunction:
    """A smooth scalar function with its first two derivatives."""

    __test__ = False  # keep pytest from collecting this as a test class

    name: str
    f: Callable[[float], float]
    d1: Callable[[float], float]
    d2: Callable[[float], float]


_REGISTRY: dict[str, TestFunction] = {}

#: abscissas where registered derivatives are checked against differences
_CHECK_POINTS = (0.25, 0.5, 0.75, 1.25)


def register(fn: TestFunction) -> TestFunction:
    """Add a test function to the registry.

    The supplied derivatives are spot-checked against central differences
    (relative tolerance 1e-6) so a mistyped derivative fails at registration
    time, not deep inside an experiment.
    """
    for x in _CHECK_POINTS:
        e1 = 1e-5 * max(1.0, abs(x))
        cd1 = (fn.f(x + e1) - fn.f(x - e1)) / (2.0 * e1)
        if abs(cd1 - fn.d1(x)) > 1e-6 * (1.0 + abs(fn.d1(x))):
            raise ValueError(
                f"{fn.name}: d1({x}) = {fn.d1(x)!r} disagrees with the"
                f" central difference {cd1!r}"
            )
        e2 = 1e-4 * max(1.0, abs(x))
        cd2 = (fn.f(x + e2) - 2.0 * fn.f(x) + fn.f(x - e2)) / e2**2
        if abs(cd2 - fn.d2(x)) > 1e-6 * (1.0 + abs(fn.d2(x))):
            raise ValueError(
                f"{fn.name}: d2({x}) = {fn.d2(x)!r} disagrees with the"
                f" central difference {cd2!r}"
            )
    _REGISTRY[fn.name] = fn
    return fn


def get_function(name: str) -> TestFunction:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownFunction(
            f"no test function named {name!r};"
            f" known: {', '.join(sorted(_REGISTRY))}"
        ) from None


def function_names() -> list[str]:
    return sorted(_REGISTRY)


register(TestFunction(
    name="quartic-sine",
    f=lambda x: x**4 + math.sin(x),
    d1=lambda x: 4.0 * x**3 + math.cos(x),
    d2=lambda x: 12.0 * x**2 - math.sin(x),
))

register(TestFunction(
    name="quadratic",
    f=lambda x: x**2,
    d1=lambda x: 2.0 * x,
    d2=lambda x: 2.0,
))


@dataclass(frozen=True)
class ConvergenceRow:
    """Errors at one refinement level, with orders against the previous level."""

    j: int
    H: float
    err1: float
    err2: float
    err3: float
    eoc1: float | None
    eoc2: float | None
    eoc3: float | None


def eoc(err_coarse: float, err_fine: float) -> float:
    """Observed order from one halving step: log2(err_coarse / err_fine)."""
    if not (err_coarse > 0.0 and err_fine > 0.0):
        raise NonPositiveError(
            f"orders need positive errors, got {err_coarse!r} and {err_fine!r}"
        )
    return math.log2(err_coarse / err_fine)


def _safe_eoc(prev: float, cur: float) -> float | None:
    if prev > 0.0 and cur > 0.0:
        return eoc(prev, cur)
    return None


def run_experiment(
    fn: TestFunction,
    mode: str = "uniform",
    ratio: float = 1.0,
    j_range: range = range(5, 10),
    center: float = 0.5,
) -> list[ConvergenceRow]:
    """Run one refinement study and return a row per level.

    ``mode`` is "uniform" (ratio forced to 1) or "ratio" (right step is
    ``ratio`` times the left step, ratio > 0).  Level j uses H = 2^-j and
    the stencil {center - H, center, center + ratio H} with both secondary
    knots at their interval midpoints.
    """
    if mode == "uniform":
        if ratio != 1.0:
            raise ValueError("uniform mode fixes ratio = 1")
        r = 1.0
    elif mode == "ratio":
        if not ratio > 0.0:
            raise ValueError(f"ratio must be positive, got {ratio!r}")
        r = float(ratio)
    else:
        raise ValueError(f"mode must be 'uniform' or 'ratio', got {mode!r}")
    placement = KnotPlacement(alpha2=0.5, beta=np.array([0.5]))
    rows: list[ConvergenceRow] = []
    prev: tuple[float, float, float] | None = None
    for j in j_range:
        H = 2.0**-j
        tau = [center - H, center, center + r * H]
        grid = PrimaryGrid(tau=np.array(tau), F=np.array([fn.f(t) for t in tau]))
        curve = build_curve(grid, placement)
        est = estimate_at_knot(curve, 2)
        err1 = abs(evaluate(curve, center, 0) - fn.f(center))
        err2 = abs(est.f1_est - fn.d1(center))
        err3 = abs(est.f2_est - fn.d2(center))
        if prev is None:
            orders: tuple[float | None, ...] = (None, None, None)
        else:
            orders = tuple(
                _safe_eoc(p, e) for p, e in zip(prev, (err1, err2, err3))
            )
        rows.append(ConvergenceRow(
            j=j, H=H, err1=err1, err2=err2, err3=err3,
            eoc1=orders[0], eoc2=orders[1], eoc3=orders[2],
        ))
        prev = (err1, err2, err3)
    return rows


def _fmt_eoc(v: float | None) -> str:
    return "-" if v is None else f"{v:.4f}"


def rows_to_table(rows: list[ConvergenceRow]) -> str:
    """Fixed-width human-readable table."""
    header = (
        f"{'H':>10}  {'err1':>11} {'eoc1':>7}  {'err2':>11} {'eoc2':>7}"
        f"  {'err3':>11} {'eoc3':>7}"
    )
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.H:>10.3e}  {r.err1:>11.4e} {_fmt_eoc(r.eoc1):>7}"
            f"  {r.err2:>11.4e} {_fmt_eoc(r.eoc2):>7}"
            f"  {r.err3:>11.4e} {_fmt_eoc(r.eoc3):>7}"
        )
    return "\n".join(lines) + "\n"


def rows_to_csv(rows: list[ConvergenceRow]) -> str:
    lines = ["j,H,err1,eoc1,err2,eoc2,err3,eoc3"]
    for r in rows:
        cells = [str(r.j), repr(r.H)]
        for err, order in ((r.err1, r.eoc1), (r.err2, r.eoc2), (r.err3, r.eoc3)):
            cells.append(repr(err))
            cells.append("" if order is None else repr(order))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def rows_to_dicts(rows: list[ConvergenceRow]) -> list[dict]:
    return [
        {
            "j": r.j,
            "H": r.H,
            "err1": r.err1,
            "eoc1": r.eoc1,
            "err2": r.err2,
            "eoc2": r.eoc2,
            "err3": r.err3,
            "eoc3": r.eoc3,
        }
        for r in rows
    ]
