"""Segment construction and evaluation of the piecewise curve.

Segment i spans [x_i, x_{i+1}] and is the unique cubic matching prescribed
endpoint values f and slopes d (the chord data): a straight chord between
the endpoint values plus the two-zero correction

    s_i(x) = chord(x) + (x - x_i)(x - x_{i+1}) (A x + B).

The chord data comes from the primary values F by linear blending,

    f_i  = alpha_i F_{i-1} + (1 - alpha_i) F_i       (value at x_i)
    d_i  = (F_i - F_{i-1}) / H_i                     (slope at x_i)

so both segments meeting at an interior knot read the *same* stored floats
and the assembled curve is C1 by construction.  With equal half-lengths on
both sides of tau_i the linear factor degenerates (A = 0) and the segment
is a genuine quadratic.

Internally the correction's linear factor is carried around the segment
midpoint c = (x_i + x_{i+1})/2 as A (x - c) + b_c with b_c = (d_hi - d_lo)
/ (2 L): this form is free of the catastrophic cancellation that the
global-coordinate pair (A, B = b_c - A c) suffers for abscissas far from
the origin.  The exported A and B stay in the global convention.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSegment, IndexOutOfRange, InvalidPlacement, OutOfDomain
from .grid import (
    REL_EPS,
    KnotPlacement,
    PrimaryGrid,
    SecondaryGrid,
    build_secondary_grid,
)

__all__ = [
    "Segment",
    "PiecewiseCurve",
    "chord_data",
    "build_segment",
    "build_curve",
    "locate_segment",
    "evaluate",
]


def _check_segment_index(n_sites: int, i: int) -> None:
    if not 2 <= i <= n_sites - 1:
        raise IndexOutOfRange(
            f"segment/knot number {i} is outside 2..{n_sites - 1}", index=i
        )


def _knot_value(grid: PrimaryGrid, placement: KnotPlacement, i: int) -> float:
    # blended value at x_i; i ranges over 2..N here (knots, not segments)
    if i == 2:
        a = placement.alpha2
        return a * grid.value(1) + (1.0 - a) * grid.value(2)
    b = placement.beta_at(i - 1)
    return b * grid.value(i) + (1.0 - b) * grid.value(i - 1)


def _knot_slope(grid: PrimaryGrid, i: int) -> float:
    # divided difference of the interval containing x_i
    return (grid.value(i) - grid.value(i - 1)) / grid.step(i)


def chord_data(
    grid: PrimaryGrid, placement: KnotPlacement, i: int
) -> tuple[float, float, float, float]:
    """Endpoint values and slopes (f_lo, f_hi, d_lo, d_hi) for segment i."""
    _check_segment_index(grid.N, i)
    if placement.segment_count != grid.N - 2:
        raise InvalidPlacement(
            f"placement has {placement.segment_count} beta entries"
            f" but a {grid.N}-site grid needs {grid.N - 2}"
        )
    return (
        _knot_value(grid, placement, i),
        _knot_value(grid, placement, i + 1),
        _knot_slope(grid, i),
        _knot_slope(grid, i + 1),
    )


@dataclass(frozen=True)
class Segment:
    """One cubic piece on [x_lo, x_hi] with its defining chord data.

    ``A`` and ``B`` are the global-coordinate coefficients of the correction
    factor A x + B; ``center`` and ``b_c`` carry the same factor in the
    midpoint-shifted form actually used for evaluation.
    """

    x_lo: float
    x_hi: float
    f_lo: float
    f_hi: float
    d_lo: float
    d_hi: float
    A: float
    B: float
    center: float
    b_c: float

    @classmethod
    def from_chords(
        cls,
        x_lo: float,
        x_hi: float,
        f_lo: float,
        f_hi: float,
        d_lo: float,
        d_hi: float,
    ) -> "Segment":
        L = x_hi - x_lo
        scale = max(1.0, abs(x_lo), abs(x_hi))
        if not L > REL_EPS * scale:
            raise DegenerateSegment(
                f"segment [{x_lo!r}, {x_hi!r}] is too short to fit"
            )
        A = (d_lo + d_hi) / L**2 - 2.0 * (f_hi - f_lo) / L**3
        b_c = (d_hi - d_lo) / (2.0 * L)
        center = 0.5 * (x_lo + x_hi)
        return cls(
            x_lo=float(x_lo),
            x_hi=float(x_hi),
            f_lo=float(f_lo),
            f_hi=float(f_hi),
            d_lo=float(d_lo),
            d_hi=float(d_hi),
            A=float(A),
            B=float(b_c - A * center),
            center=float(center),
            b_c=float(b_c),
        )

    def value(self, x: float) -> float:
        """s(x).  Exact at the endpoints: the stored f is returned as-is."""
        if x == self.x_lo:
            return self.f_lo
        if x == self.x_hi:
            return self.f_hi
        L = self.x_hi - self.x_lo
        chord = (self.f_hi * (x - self.x_lo) + self.f_lo * (self.x_hi - x)) / L
        corr = self.A * (x - self.center) + self.b_c
        return chord + (x - self.x_lo) * (x - self.x_hi) * corr

    def slope(self, x: float) -> float:
        """s'(x).  Exact at the endpoints: the stored d is returned as-is."""
        if x == self.x_lo:
            return self.d_lo
        if x == self.x_hi:
            return self.d_hi
        L = self.x_hi - self.x_lo
        corr = self.A * (x - self.center) + self.b_c
        return (
            (self.f_hi - self.f_lo) / L
            + ((x - self.x_lo) + (x - self.x_hi)) * corr
            + (x - self.x_lo) * (x - self.x_hi) * self.A
        )

    def second(self, x: float) -> float:
        """s''(x), linear across the segment."""
        return 6.0 * self.A * (x - self.center) + 2.0 * self.b_c


def build_segment(grid: PrimaryGrid, placement: KnotPlacement, i: int) -> Segment:
    """Assemble segment i directly from grid and placement."""
    secondary = build_secondary_grid(grid, placement)
    f_lo, f_hi, d_lo, d_hi = chord_data(grid, placement, i)
    return Segment.from_chords(
        secondary.knot(i), secondary.knot(i + 1), f_lo, f_hi, d_lo, d_hi
    )


@dataclass(frozen=True)
class PiecewiseCurve:
    """The assembled curve: all segments plus the grids they were built from."""

    grid: PrimaryGrid
    placement: KnotPlacement
    secondary: SecondaryGrid
    segments: tuple[Segment, ...]

    @property
    def x_min(self) -> float:
        return float(self.secondary.x[0])

    @property
    def x_max(self) -> float:
        return float(self.secondary.x[-1])

    def segment(self, i: int) -> Segment:
        """Segment i for i = 2..N-1."""
        _check_segment_index(self.grid.N, i)
        return self.segments[i - 2]

    def __call__(self, x: float, order: int = 0) -> float:
        return evaluate(self, x, order)


def build_curve(grid: PrimaryGrid, placement: KnotPlacement) -> PiecewiseCurve:
    """Build all segments over the secondary grid.

    Chord values and slopes are computed once per knot and handed to both
    adjacent segments, so shared endpoint data is bitwise identical.
    """
    secondary = build_secondary_grid(grid, placement)
    n = grid.N
    f = [_knot_value(grid, placement, i) for i in range(2, n + 1)]
    d = [_knot_slope(grid, i) for i in range(2, n + 1)]
    segments = tuple(
        Segment.from_chords(
            float(secondary.x[k]),
            float(secondary.x[k + 1]),
            f[k],
            f[k + 1],
            d[k],
            d[k + 1],
        )
        for k in range(n - 2)
    )
    return PiecewiseCurve(
        grid=grid, placement=placement, secondary=secondary, segments=segments
    )


def locate_segment(curve: PiecewiseCurve, x: float) -> int:
    """Segment number i = 2..N-1 whose [x_i, x_{i+1}] contains x.

    Interior knots break ties to the left segment; x must already be inside
    the curve's domain.
    """
    if not curve.x_min <= x <= curve.x_max:
        raise OutOfDomain(
            f"x = {x!r} is outside the curve domain"
            f" [{curve.x_min!r}, {curve.x_max!r}]"
        )
    idx = int(np.searchsorted(curve.secondary.x, x, side="left"))
    # side="left": an exact hit on knot x_i returns its array position, and
    # stepping back one lands on the segment ending there (left tie-break)
    if idx > 0:
        idx -= 1
    return idx + 2


def evaluate(curve: PiecewiseCurve, x: float, order: int = 0) -> float:
    """Evaluate the curve or one of its first two derivatives at x.

    No extrapolation: abscissas outside [x_2, x_N] raise OutOfDomain.
    """
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order!r}")
    x = float(x)
    seg = curve.segment(locate_segment(curve, x))
    if order == 0:
        return seg.value(x)
    if order == 1:
        return seg.slope(x)
    return seg.second(x)
