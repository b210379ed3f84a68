"""Nodal derivative estimation from the curve's deviation at the data sites.

Segment i interpolates blended chord data rather than the data value F_i
itself, so the curve generally misses F_i at tau_i by a small, *known*
multiple of the second derivative:

    S(tau_i) - F_i ~ C1 F''(tau_i),      C1 = h_i^2 h_{i+1}^2 (H_i + H_{i+1}) / L^3

(exact for quadratic data).  Dividing the observed deviation by C1 yields a
second-derivative estimate; subtracting C2 times that estimate from the raw
slope S'(tau_i) removes the slope's leading error term and yields a
first-derivative estimate one order more accurate than the raw slope.

Both error constants exist in two algebraically equivalent forms: the
"literal" bracket form mirroring the half-length/fraction quotients of the
derivation, and the collapsed form used in production (for C1 a product of
positive factors, so positivity is robust under rounding).  Tests pin the
two forms against each other.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curve import PiecewiseCurve, evaluate
from .errors import DegeneratePlacement, IndexOutOfRange, UnstableC1
from .grid import REL_EPS, KnotPlacement, PrimaryGrid

__all__ = [
    "KnotDerivativeEstimate",
    "compute_C1",
    "compute_C2",
    "estimate_at_knot",
    "estimate_interior_knots",
]


def _segment_scales(grid: PrimaryGrid, placement: KnotPlacement, i: int):
    if not 2 <= i <= grid.N - 1:
        raise IndexOutOfRange(
            f"knot number {i} is outside 2..{grid.N - 1}", index=i
        )
    a = placement.alpha_at(i)
    b = placement.beta_at(i)
    if a < REL_EPS or b < REL_EPS:
        raise DegeneratePlacement(
            f"placement fractions at knot {i} (alpha = {a!r}, beta = {b!r})"
            " are too small for stable error constants",
            index=i,
        )
    Hi = grid.step(i)
    Hip1 = grid.step(i + 1)
    h_lo = a * Hi
    h_hi = b * Hip1
    return a, b, h_lo, h_hi, Hi, Hip1, h_lo + h_hi


def compute_C1(
    grid: PrimaryGrid, placement: KnotPlacement, i: int, *, literal: bool = False
) -> float:
    """Leading constant of the value deviation S(tau_i) - F_i at knot i."""
    a, b, h_lo, h_hi, Hi, Hip1, L = _segment_scales(grid, placement, i)
    if literal:
        return h_lo * h_hi * (
            (h_hi / b + h_lo / a) / (4.0 * L)
            + (h_hi / b - h_lo / a) * (h_hi - h_lo) / (4.0 * L**2)
            - (h_hi**2 / b - h_lo**2 / a) * (h_hi - h_lo) / (2.0 * L**3)
        )
    return h_lo**2 * h_hi**2 * (Hi + Hip1) / L**3


def compute_C2(
    grid: PrimaryGrid, placement: KnotPlacement, i: int, *, literal: bool = False
) -> float:
    """Leading constant of the slope deviation S'(tau_i) - F'(tau_i) at knot i."""
    a, b, h_lo, h_hi, Hi, Hip1, L = _segment_scales(grid, placement, i)
    Q = h_hi**2 + h_lo**2 - 4.0 * h_lo * h_hi
    if literal:
        return (
            (h_hi**2 / b - h_lo**2 / a) / (2.0 * L)
            + Q * (h_hi / b - h_lo / a) / (4.0 * L**2)
            - Q * (h_hi**2 / b - h_lo**2 / a) / (2.0 * L**3)
            - (h_hi - h_lo) * (h_hi / b + h_lo / a) / (4.0 * L)
        )
    return (
        (h_hi * Hip1 - h_lo * Hi) / (2.0 * L)
        - (h_hi - h_lo) * (Hi + Hip1) / (4.0 * L)
        - Q * (h_hi - h_lo) * (Hi + Hip1) / (4.0 * L**3)
    )


@dataclass(frozen=True)
class KnotDerivativeEstimate:
    """Derivative estimates and their ingredients at one data site."""

    i: int
    tau: float
    C1: float
    C2: float
    f2_est: float
    f1_est: float
    delta1: float
    delta2_raw: float
    h_bar: float

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "tau": self.tau,
            "C1": self.C1,
            "C2": self.C2,
            "f1_est": self.f1_est,
            "f2_est": self.f2_est,
            "delta1": self.delta1,
            "delta2_raw": self.delta2_raw,
            "h_bar": self.h_bar,
        }


def estimate_at_knot(curve: PiecewiseCurve, i: int) -> KnotDerivativeEstimate:
    """Estimate F' and F'' at interior data site tau_i, i = 2..N-1.

    delta1 is the observed value deviation S(tau_i) - F_i and delta2_raw the
    raw slope S'(tau_i); the estimates are f2 = delta1 / C1 and
    f1 = delta2_raw - C2 f2.
    """
    grid = curve.grid
    _, _, _, _, Hi, Hip1, _ = _segment_scales(grid, curve.placement, i)
    C1 = compute_C1(grid, curve.placement, i)
    C2 = compute_C2(grid, curve.placement, i)
    h_bar = max(Hi, Hip1)
    if not C1 > REL_EPS * h_bar**2:
        raise UnstableC1(
            f"C1 = {C1!r} at knot {i} is too small to divide by", index=i
        )
    tau_i = grid.site(i)
    delta1 = evaluate(curve, tau_i, 0) - grid.value(i)
    delta2_raw = evaluate(curve, tau_i, 1)
    f2_est = delta1 / C1
    f1_est = delta2_raw - C2 * f2_est
    return KnotDerivativeEstimate(
        i=i,
        tau=tau_i,
        C1=C1,
        C2=C2,
        f2_est=f2_est,
        f1_est=f1_est,
        delta1=delta1,
        delta2_raw=delta2_raw,
        h_bar=h_bar,
    )


def estimate_interior_knots(curve: PiecewiseCurve) -> list[KnotDerivativeEstimate]:
    """Estimates at every interior data site, i = 2..N-1."""
    return [estimate_at_knot(curve, i) for i in range(2, curve.grid.N)]
