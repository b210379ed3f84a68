"""Shared test helpers: random draws and an independent interpolation oracle.

The oracle solves the four endpoint conditions of a segment directly as a
4x4 linear system in shifted coordinates, bypassing the closed-form
coefficients used in production.  Tests compare the two paths so an
algebra slip in either cannot hide.
"""
from __future__ import annotations

import numpy as np

from midknot import KnotPlacement, PrimaryGrid


def random_grid(rng: np.random.Generator, n: int | None = None) -> PrimaryGrid:
    """Tame random grid: moderate offsets, step ratios at most 4."""
    if n is None:
        n = int(rng.integers(3, 10))
    start = rng.uniform(-10.0, 10.0)
    steps = rng.uniform(0.5, 2.0, size=n - 1)
    tau = start + np.concatenate(([0.0], np.cumsum(steps)))
    F = rng.uniform(-5.0, 5.0, size=n)
    return PrimaryGrid(tau=tau, F=F)


def random_placement(
    rng: np.random.Generator, n: int, lo: float = 0.1, hi: float = 0.9
) -> KnotPlacement:
    """Admissible placement with fractions bounded away from 0 and 1."""
    beta = rng.uniform(lo, hi, size=n - 2)
    return KnotPlacement(alpha2=rng.uniform(lo, 1.0), beta=beta)


def clamped_placement(rng: np.random.Generator, n: int) -> KnotPlacement:
    """Placement with alpha_2 = beta_{N-1} = 1, interior fractions random."""
    beta = rng.uniform(0.1, 0.9, size=n - 2)
    beta[-1] = 1.0
    return KnotPlacement(alpha2=1.0, beta=beta)


def hermite_oracle(x_lo, x_hi, f_lo, f_hi, d_lo, d_hi):
    """Independent two-point Hermite solve.

    Returns (value, slope, second) callables for the cubic
    p(u) = c0 + c1 u + c2 u^2 + c3 u^3, u = x - x_lo, found by solving the
    endpoint conditions numerically.
    """
    L = x_hi - x_lo
    M = np.array([
        [1.0, 0.0, 0.0, 0.0],
        [1.0, L, L**2, L**3],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 1.0, 2.0 * L, 3.0 * L**2],
    ])
    c = np.linalg.solve(M, np.array([f_lo, f_hi, d_lo, d_hi]))

    def value(x):
        u = x - x_lo
        return c[0] + u * (c[1] + u * (c[2] + u * c[3]))

    def slope(x):
        u = x - x_lo
        return c[1] + u * (2.0 * c[2] + u * 3.0 * c[3])

    def second(x):
        u = x - x_lo
        return 2.0 * c[2] + 6.0 * c[3] * u

    return value, slope, second


def segment_poly(seg, x: float, order: int = 0) -> float:
    """Evaluate a segment's polynomial with no endpoint special-casing.

    Uses the midpoint-shifted correction exactly as production evaluation
    does, so continuity and endpoint checks measure the construction, not
    the convenience shortcuts in Segment.value/slope.
    """
    L = seg.x_hi - seg.x_lo
    corr = seg.A * (x - seg.center) + seg.b_c
    if order == 0:
        chord = (seg.f_hi * (x - seg.x_lo) + seg.f_lo * (seg.x_hi - x)) / L
        return chord + (x - seg.x_lo) * (x - seg.x_hi) * corr
    if order == 1:
        return (
            (seg.f_hi - seg.f_lo) / L
            + ((x - seg.x_lo) + (x - seg.x_hi)) * corr
            + (x - seg.x_lo) * (x - seg.x_hi) * seg.A
        )
    return 6.0 * seg.A * (x - seg.center) + 2.0 * seg.b_c


def rel_close(a: float, b: float, tol: float) -> bool:
    """|a - b| within tol relative to the larger magnitude (floored at 1)."""
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
