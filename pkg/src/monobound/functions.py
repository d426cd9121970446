"""Catalog of monotone functions on [0, 1] and a monotonicity probe.

Catalog members (all strictly decreasing):

    power_complement(k)   1 - x^k, k > 0          integral k/(k+1)
    exponential(lam)      exp(-lam*x), lam > 0    integral (1 - exp(-lam))/lam
    logarithmic()         ln(2 - x)               integral 2*ln(2) - 1
    reciprocal()          1/(1 + x)               integral ln(2)
    trigonometric()       cos(pi*x/2)             integral 2/pi

plus ``constant(c)`` and ``linear(m, b)`` for equality audits, and
``tabulated(points)`` for user data, evaluated by linear interpolation
between knots.  Analytic members carry their direction as a fact;
:func:`probe_monotonicity` is a sampling heuristic meant to guard inputs,
not a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import DomainViolation
from .quadrature import adaptive_quadrature

#: Differences smaller than this are treated as ties by the probe.
PROBE_TOLERANCE = 1e-14

DECREASING = "decreasing"
INCREASING = "increasing"
CONSTANT = "constant"
NON_MONOTONE = "non_monotone"


@dataclass(frozen=True)
class MonotoneFunction:
    """Descriptor for a function g on [0, 1] with known monotonicity.

    ``closed_form_integral`` is the analytic value of the integral of g
    over [0, 1], or None when no closed form is available (tabulated data).
    Instances are immutable; evaluation is pure.
    """

    kind: str
    direction: str
    strictly_monotone: bool
    formula: str
    closed_form_integral: float | None
    params: tuple[tuple[str, float], ...] = ()
    kinks: tuple[float, ...] = ()
    _fn: Callable = field(repr=False, compare=False, default=None)

    def __call__(self, x: float) -> float:
        """Evaluate at a scalar point of [0, 1]; raises DomainViolation."""
        if not 0.0 <= x <= 1.0:
            raise DomainViolation(x)
        return float(self._fn(x))

    def values(self, xs) -> np.ndarray:
        """Vectorized evaluation; callers guarantee xs lies in [0, 1]."""
        return np.asarray(self._fn(np.asarray(xs, dtype=float)), dtype=float)


@dataclass(frozen=True)
class MonotonicityVerdict:
    """Probe outcome; ``witness`` is set only for non-monotone samples."""

    direction: str
    strict: bool
    witness: tuple[float, float] | None = None


def power_complement(k: float) -> MonotoneFunction:
    """g(x) = 1 - x^k for real k > 0."""
    k = float(k)
    if not (math.isfinite(k) and k > 0.0):
        raise ValueError(f"k must be a positive real, got {k!r}")
    return MonotoneFunction(
        kind="power_complement",
        direction=DECREASING,
        strictly_monotone=True,
        formula=f"1 - x^{k:g}",
        closed_form_integral=k / (k + 1.0),
        params=(("k", k),),
        _fn=lambda x: 1.0 - x**k,
    )


def exponential(lam: float) -> MonotoneFunction:
    """g(x) = exp(-lam*x) for lam > 0."""
    lam = float(lam)
    if not (math.isfinite(lam) and lam > 0.0):
        raise ValueError(f"lambda must be a positive real, got {lam!r}")
    return MonotoneFunction(
        kind="exponential",
        direction=DECREASING,
        strictly_monotone=True,
        formula=f"exp(-{lam:g}*x)",
        closed_form_integral=(1.0 - math.exp(-lam)) / lam,
        params=(("lambda", lam),),
        _fn=lambda x: np.exp(-lam * x),
    )


def logarithmic() -> MonotoneFunction:
    """g(x) = ln(2 - x)."""
    return MonotoneFunction(
        kind="logarithmic",
        direction=DECREASING,
        strictly_monotone=True,
        formula="ln(2 - x)",
        closed_form_integral=2.0 * math.log(2.0) - 1.0,
        _fn=lambda x: np.log(2.0 - x),
    )


def reciprocal() -> MonotoneFunction:
    """g(x) = 1/(1 + x)."""
    return MonotoneFunction(
        kind="reciprocal",
        direction=DECREASING,
        strictly_monotone=True,
        formula="1/(1 + x)",
        closed_form_integral=math.log(2.0),
        _fn=lambda x: 1.0 / (1.0 + x),
    )


def trigonometric() -> MonotoneFunction:
    """g(x) = cos(pi*x/2)."""
    return MonotoneFunction(
        kind="trigonometric",
        direction=DECREASING,
        strictly_monotone=True,
        formula="cos(pi*x/2)",
        closed_form_integral=2.0 / math.pi,
        _fn=lambda x: np.cos((math.pi / 2.0) * x),
    )


def constant(c: float) -> MonotoneFunction:
    """g(x) = c."""
    c = float(c)
    if not math.isfinite(c):
        raise ValueError(f"c must be finite, got {c!r}")
    return MonotoneFunction(
        kind="constant",
        direction=CONSTANT,
        strictly_monotone=False,
        formula=f"{c:g}",
        closed_form_integral=c,
        params=(("c", c),),
        _fn=lambda x: c + 0.0 * x,
    )


def linear(m: float, b: float) -> MonotoneFunction:
    """g(x) = m*x + b; direction follows the sign of m."""
    m, b = float(m), float(b)
    if not (math.isfinite(m) and math.isfinite(b)):
        raise ValueError(f"m and b must be finite, got {m!r}, {b!r}")
    if m < 0.0:
        direction, strict = DECREASING, True
    elif m > 0.0:
        direction, strict = INCREASING, True
    else:
        direction, strict = CONSTANT, False
    return MonotoneFunction(
        kind="linear",
        direction=direction,
        strictly_monotone=strict,
        formula=f"{m:g}*x + {b:g}",
        closed_form_integral=m / 2.0 + b,
        params=(("m", m), ("b", b)),
        _fn=lambda x: m * x + b,
    )


def tabulated(points: Sequence[tuple[float, float]]) -> MonotoneFunction:
    """Piecewise-linear function through (x, y) knots spanning [0, 1].

    Knot x-values must be strictly increasing with the first at 0 and the
    last at 1.  Direction is classified from the exact signs of successive
    y-differences; knot data that rises and falls yields a function whose
    direction is "non_monotone", which bound operations reject.
    """
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < 2:
        raise ValueError("tabulated function needs at least 2 knots")
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    if xs[0] != 0.0 or xs[-1] != 1.0:
        raise ValueError("tabulated knots must span [0, 1] exactly")
    for i in range(1, len(xs)):
        if not xs[i] > xs[i - 1]:
            raise ValueError(f"knot x-values must be strictly increasing at index {i}")
    if not all(math.isfinite(y) for y in ys):
        raise ValueError("knot y-values must be finite")

    diffs = [ys[i + 1] - ys[i] for i in range(len(ys) - 1)]
    has_up = any(d > 0.0 for d in diffs)
    has_down = any(d < 0.0 for d in diffs)
    if has_up and has_down:
        direction, strict = NON_MONOTONE, False
    elif has_down:
        direction, strict = DECREASING, all(d < 0.0 for d in diffs)
    elif has_up:
        direction, strict = INCREASING, all(d > 0.0 for d in diffs)
    else:
        direction, strict = CONSTANT, False

    xa = np.array(xs)
    ya = np.array(ys)
    return MonotoneFunction(
        kind="tabulated",
        direction=direction,
        strictly_monotone=strict,
        formula=f"piecewise linear through {len(pts)} knots",
        closed_form_integral=None,
        kinks=tuple(xs[1:-1]),
        _fn=lambda x: np.interp(x, xa, ya),
    )


def evaluate(g: MonotoneFunction, x: float) -> float:
    """Evaluate g at x in [0, 1]; raises DomainViolation outside."""
    return g(x)


def closed_form_integral(g: MonotoneFunction) -> float | None:
    """Analytic value of the integral of g over [0, 1], if one is known."""
    return g.closed_form_integral


def quadrature_integral(g: MonotoneFunction, tol: float = 1e-10) -> float:
    """Integral of g over [0, 1] by adaptive quadrature, error <= tol.

    Independent of :func:`closed_form_integral`; the two agree within tol
    for every catalog member, which the test suite cross-checks.  Raises
    ToleranceNotReached when the error estimate cannot be certified.
    """
    return adaptive_quadrature(g._fn, 0.0, 1.0, tol=tol, breakpoints=g.kinks).value


def probe_monotonicity(g: MonotoneFunction, grid_size: int = 101) -> MonotonicityVerdict:
    """Classify g by the signs of successive differences on a uniform grid.

    The grid has ``grid_size`` points and additionally includes every knot
    of a tabulated function.  Differences within :data:`PROBE_TOLERANCE`
    count as ties; ``strict`` is set only when every difference is signed
    beyond the tolerance.  A sampling heuristic, not a proof.
    """
    if grid_size < 2:
        raise ValueError(f"grid_size must be >= 2, got {grid_size}")
    grid = np.linspace(0.0, 1.0, grid_size)
    if g.kinks:
        grid = np.union1d(grid, np.array(g.kinks))
    vals = g.values(grid)
    diffs = np.diff(vals)

    up = diffs > PROBE_TOLERANCE
    down = diffs < -PROBE_TOLERANCE
    if up.any() and down.any():
        first_up = int(np.argmax(up))
        first_down = int(np.argmax(down))
        # witness the pair that contradicts the trend established first
        j = max(first_up, first_down)
        return MonotonicityVerdict(
            direction=NON_MONOTONE,
            strict=False,
            witness=(float(grid[j]), float(grid[j + 1])),
        )
    if down.any():
        return MonotonicityVerdict(DECREASING, strict=bool(down.all()))
    if up.any():
        return MonotonicityVerdict(INCREASING, strict=bool(up.all()))
    return MonotonicityVerdict(CONSTANT, strict=False)
