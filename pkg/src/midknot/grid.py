"""Primary data grids, secondary knot grids, and the placement linking them.

A primary grid carries data sites tau_1 < ... < tau_N with values F_i
(1-based numbering, as is conventional for grid functions).  Every interior
interval receives one secondary knot: x_i lies in (tau_{i-1}, tau_i), with
the two end knots x_2 and x_N allowed to reach tau_1 and tau_N.  Segment i
of the fitted curve spans [x_i, x_{i+1}] and contains the data site tau_i,
so valid segment numbers are i = 2..N-1.

Placement is parameterized by fractions rather than raw abscissas:

    x_2     = alpha_2 tau_1 + (1 - alpha_2) tau_2
    x_i+1   = beta_i tau_i+1 + (1 - beta_i) tau_i      for i = 2..N-1

with the coupling alpha_i+1 = 1 - beta_i, which makes neighbouring segments
share their endpoint knot (and later their endpoint chord data) by
construction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidGrid, InvalidPlacement, KnotOutOfInterval

#: relative guard for degenerate lengths and fractions
REL_EPS = 1e-14


def _as_float_vector(values, name: str, err=InvalidGrid) -> np.ndarray:
    try:
        arr = np.asarray(values, dtype=float)
    except (TypeError, ValueError):
        raise err(f"{name} must be a sequence of numbers") from None
    if arr.ndim != 1:
        raise err(f"{name} must be a one-dimensional sequence")
    if not np.all(np.isfinite(arr)):
        k = int(np.nonzero(~np.isfinite(arr))[0][0])
        raise err(f"{name} contains a non-finite entry", index=k + 1)
    return arr


def _freeze(obj, **arrays) -> None:
    # frozen dataclass: bypass __setattr__ to store validated copies
    for key, arr in arrays.items():
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(obj, key, arr)


@dataclass(frozen=True)
class PrimaryGrid:
    """Strictly increasing data sites ``tau`` with values ``F``."""

    tau: np.ndarray
    F: np.ndarray

    def __post_init__(self):
        tau = _as_float_vector(self.tau, "tau")
        F = _as_float_vector(self.F, "F")
        if len(tau) != len(F):
            raise InvalidGrid(
                f"tau has {len(tau)} entries but F has {len(F)}"
            )
        if len(tau) < 3:
            raise InvalidGrid("at least 3 data sites are required")
        steps = np.diff(tau)
        scale = max(1.0, float(np.max(np.abs(tau))))
        bad = np.nonzero(steps <= 0)[0]
        if bad.size:
            k = int(bad[0])
            raise InvalidGrid(
                f"tau must be strictly increasing: tau_{k + 2} <= tau_{k + 1}",
                index=k + 2,
            )
        tight = np.nonzero(steps <= REL_EPS * scale)[0]
        if tight.size:
            k = int(tight[0])
            raise InvalidGrid(
                f"tau_{k + 1} and tau_{k + 2} are too close to separate"
                " at working precision",
                index=k + 2,
            )
        _freeze(self, tau=tau, F=F)

    @property
    def N(self) -> int:
        """Number of data sites."""
        return len(self.tau)

    def __len__(self) -> int:
        return len(self.tau)

    def site(self, i: int) -> float:
        """tau_i for 1-based i."""
        return float(self.tau[i - 1])

    def value(self, i: int) -> float:
        """F_i for 1-based i."""
        return float(self.F[i - 1])

    def step(self, i: int) -> float:
        """Interval length H_i = tau_i - tau_{i-1}, valid for i = 2..N."""
        return float(self.tau[i - 1] - self.tau[i - 2])


@dataclass(frozen=True)
class KnotPlacement:
    """Fractions fixing one secondary knot per primary interval.

    ``beta`` holds beta_2 .. beta_{N-1} in order.  All fractions must lie in
    (0, 1); the two exceptions are alpha_2 and the final beta, which may
    equal 1 so that the curve's domain can reach tau_1 and tau_N.
    """

    alpha2: float
    beta: np.ndarray

    def __post_init__(self):
        beta = _as_float_vector(self.beta, "beta", err=InvalidPlacement)
        try:
            a2 = float(self.alpha2)
        except (TypeError, ValueError):
            raise InvalidPlacement(
                f"alpha2 must be a number, got {self.alpha2!r}"
            ) from None
        if not np.isfinite(a2):
            raise InvalidPlacement("alpha2 must be finite")
        if not 0.0 < a2 <= 1.0:
            raise InvalidPlacement(f"alpha2 = {a2!r} is outside (0, 1]")
        if len(beta) < 1:
            raise InvalidPlacement("beta must contain at least one entry")
        interior = beta[:-1]
        bad = np.nonzero((interior <= 0.0) | (interior >= 1.0))[0]
        if bad.size:
            k = int(bad[0])
            raise InvalidPlacement(
                f"beta_{k + 2} = {float(interior[k])!r} is outside (0, 1)",
                index=k + 2,
            )
        last = float(beta[-1])
        if not 0.0 < last <= 1.0:
            raise InvalidPlacement(
                f"beta_{len(beta) + 1} = {last!r} is outside (0, 1]",
                index=len(beta) + 1,
            )
        object.__setattr__(self, "alpha2", a2)
        _freeze(self, beta=beta)

    @property
    def segment_count(self) -> int:
        return len(self.beta)

    def beta_at(self, i: int) -> float:
        """beta_i for i = 2..N-1."""
        return float(self.beta[i - 2])

    def alpha_at(self, i: int) -> float:
        """alpha_i for i = 2..N-1, where alpha_{i+1} = 1 - beta_i."""
        if i == 2:
            return self.alpha2
        return 1.0 - float(self.beta[i - 3])


def default_placement(n_sites: int) -> KnotPlacement:
    """Midpoint knots on interior intervals, end knots clamped to the data ends.

    alpha_2 = 1 and beta_{N-1} = 1 pin x_2 = tau_1 and x_N = tau_N, so the
    curve covers the full data range; every other knot sits at its interval
    midpoint.
    """
    if n_sites < 3:
        raise InvalidGrid("at least 3 data sites are required")
    beta = np.full(n_sites - 2, 0.5)
    beta[-1] = 1.0
    return KnotPlacement(alpha2=1.0, beta=beta)


@dataclass(frozen=True)
class SecondaryGrid:
    """Secondary knots x_2..x_N plus the per-segment half-lengths.

    For segment i (spanning [x_i, x_{i+1}] around tau_i), ``h_lo`` holds
    h_i = alpha_i H_i = tau_i - x_i and ``h_hi`` holds
    h_{i+1} = beta_i H_{i+1} = x_{i+1} - tau_i.  Note the right half of one
    segment and the left half of the next are different quantities: they
    partition H_{i+1} between them.
    """

    x: np.ndarray
    h_lo: np.ndarray
    h_hi: np.ndarray

    def __post_init__(self):
        _freeze(self, x=np.asarray(self.x, dtype=float),
                h_lo=np.asarray(self.h_lo, dtype=float),
                h_hi=np.asarray(self.h_hi, dtype=float))

    @property
    def segment_count(self) -> int:
        return len(self.h_lo)

    def knot(self, i: int) -> float:
        """x_i for i = 2..N."""
        return float(self.x[i - 2])


def build_secondary_grid(grid: PrimaryGrid, placement: KnotPlacement) -> SecondaryGrid:
    """Place one secondary knot per interval and record segment half-lengths."""
    n = grid.N
    if placement.segment_count != n - 2:
        raise InvalidPlacement(
            f"placement has {placement.segment_count} beta entries"
            f" but a {n}-site grid needs {n - 2}"
        )
    tau = grid.tau
    beta = placement.beta
    x = np.empty(n - 1)
    x[0] = placement.alpha2 * tau[0] + (1.0 - placement.alpha2) * tau[1]
    x[1:] = beta * tau[2:] + (1.0 - beta) * tau[1:-1]
    alphas = np.empty(n - 2)
    alphas[0] = placement.alpha2
    alphas[1:] = 1.0 - beta[:-1]
    h_lo = alphas * (tau[1:-1] - tau[:-2])
    h_hi = beta * (tau[2:] - tau[1:-1])
    return SecondaryGrid(x=x, h_lo=h_lo, h_hi=h_hi)


def placement_from_knots(grid: PrimaryGrid, knots) -> KnotPlacement:
    """Invert prescribed secondary knots x_2..x_N into placement fractions.

    Each x_i must lie strictly inside (tau_{i-1}, tau_i) except at the ends:
    x_2 may equal tau_1 and x_N may equal tau_N.
    """
    x = _as_float_vector(knots, "knots", err=InvalidPlacement)
    n = grid.N
    if len(x) != n - 1:
        raise InvalidPlacement(
            f"expected {n - 1} knots for a {n}-site grid, got {len(x)}"
        )
    tau = grid.tau
    if not tau[0] <= x[0] < tau[1]:
        raise KnotOutOfInterval(
            f"x_2 = {float(x[0])!r} is outside [tau_1, tau_2) ="
            f" [{float(tau[0])!r}, {float(tau[1])!r})",
            index=2,
        )
    for k in range(1, n - 2):
        if not tau[k] < x[k] < tau[k + 1]:
            raise KnotOutOfInterval(
                f"x_{k + 2} = {float(x[k])!r} is outside"
                f" (tau_{k + 1}, tau_{k + 2}) ="
                f" ({float(tau[k])!r}, {float(tau[k + 1])!r})",
                index=k + 2,
            )
    if not tau[-2] < x[-1] <= tau[-1]:
        raise KnotOutOfInterval(
            f"x_{n} = {float(x[-1])!r} is outside (tau_{n - 1}, tau_{n}] ="
            f" ({float(tau[-2])!r}, {float(tau[-1])!r}]",
            index=n,
        )
    alpha2 = (tau[1] - x[0]) / (tau[1] - tau[0])
    beta = (x[1:] - tau[1:-1]) / (tau[2:] - tau[1:-1])
    return KnotPlacement(alpha2=float(alpha2), beta=beta)
