"""Riemann-sum bounds for monotone functions over a cumulative partition.

For a decreasing g and any cumulative partition 0 = S_0 < ... < S_n = 1,
the right-endpoint sum

    T_n(g) = sum_i (S_i - S_{i-1}) * g(S_i)

never exceeds the integral of g over [0, 1]: every rectangle lies below
the graph.  The same sum has a discrete integration-by-parts form

    T_n(g) = g(1) + sum_{i=1}^{n-1} S_i * (g(S_i) - g(S_{i+1}))

whose terms are all non-negative for decreasing g.  Both routes are
computed independently here and must agree to machine precision, which is
one of the library's standing cross-checks.  The left-endpoint sum
over-estimates instead, so the pair brackets the integral, and the gap is
provably at most (g(0) - g(1)) * max_i a_i.

Increasing g is handled by applying the same argument to -g, turning the
upper bound into a lower one; reports carry a ``direction`` field saying
which way the inequality runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonMonotoneFunction
from .functions import CONSTANT, DECREASING, INCREASING, MonotoneFunction, probe_monotonicity
from .partitions import CumulativePartition, bisect_all
from .quadrature import adaptive_quadrature

#: Default absolute tolerance for quadrature fallbacks.
DEFAULT_QUAD_TOL = 1e-10
#: Float slack granted to algebraic identities (Abel equality, enclosure).
IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class BoundReport:
    """Everything the main inequality says about one (g, partition) pair.

    ``gap`` is integral - t_n: non-negative for decreasing g, non-positive
    for increasing g.  ``strict`` is True when the gap clears 10x the
    quadrature tolerance, False when equality is genuinely attainable
    (g not strictly monotone), and None when g is strictly monotone but the
    computed gap sits inside numerical noise (indeterminate at tolerance).
    """

    t_n: float
    integral: float
    integral_source: str
    gap: float
    gap_bound: float
    strict: bool | None
    abel_value: float
    n: int
    direction: str
    evaluation_count: int

    def to_dict(self) -> dict:
        return {
            "t_n": self.t_n,
            "integral": self.integral,
            "integral_source": self.integral_source,
            "gap": self.gap,
            "gap_bound": self.gap_bound,
            "strict": self.strict,
            "abel_value": self.abel_value,
            "n": self.n,
        }

    def invariant_violations(self) -> list[str]:
        """Mathematical invariants this report must satisfy; empty means OK.

        A non-empty list signals a bug in the library, never valid math.
        """
        out = []
        if abs(self.abel_value - self.t_n) > IDENTITY_TOL * max(1.0, abs(self.t_n)):
            out.append(
                f"Abel route {self.abel_value!r} disagrees with direct sum {self.t_n!r}"
            )
        signed_gap = self.gap if self.direction != INCREASING else -self.gap
        signed_bound = self.gap_bound if self.direction != INCREASING else -self.gap_bound
        if signed_gap < -IDENTITY_TOL:
            side = "exceeds" if self.direction != INCREASING else "undercuts"
            out.append(f"discrete sum {self.t_n!r} {side} the integral {self.integral!r}")
        if signed_gap > signed_bound + IDENTITY_TOL:
            out.append(f"gap {self.gap!r} exceeds its bound {self.gap_bound!r}")
        return out


class _CountingFunction:
    """Forwards evaluations to g while counting how many points were used."""

    def __init__(self, g: MonotoneFunction):
        self._g = g
        self.count = 0

    def values(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        self.count += xs.size
        return self._g.values(xs)

    def scalar(self, x: float) -> float:
        self.count += 1
        return float(self._g._fn(x))


def _require_weakly_decreasing(g: MonotoneFunction, op: str) -> None:
    if g.direction in (DECREASING, CONSTANT):
        return
    if g.direction == INCREASING:
        raise NonMonotoneFunction(f"{op} requires a decreasing function; got an increasing one")
    verdict = probe_monotonicity(g)
    raise NonMonotoneFunction(f"{op} requires a monotone function", witness=verdict.witness)


def riemann_sum_right(g, p: CumulativePartition) -> float:
    """sum_i (S_i - S_{i-1}) * g(S_i), compensated, in index order.

    A plain sum with no monotonicity hypothesis; it is a lower bound of the
    integral only when g is decreasing.
    """
    bps = np.asarray(p.breakpoints)
    vals = g.values(bps[1:])
    return math.fsum((np.diff(bps) * vals).tolist())


def riemann_sum_left(g, p: CumulativePartition) -> float:
    """sum_i (S_i - S_{i-1}) * g(S_{i-1}); over-estimates for decreasing g."""
    bps = np.asarray(p.breakpoints)
    vals = g.values(bps[:-1])
    return math.fsum((np.diff(bps) * vals).tolist())


def abel_terms(g, p: CumulativePartition) -> list[float]:
    """The terms S_i * (g(S_i) - g(S_{i+1})) for i = 1..n-1.

    Each is non-negative when g is decreasing, which is the discrete
    reason the right sum cannot exceed the integral.
    """
    bps = p.breakpoints
    vals = g.values(np.asarray(bps[1:]))
    return [bps[i] * (float(vals[i - 1]) - float(vals[i])) for i in range(1, p.n)]


def abel_sum(g, p: CumulativePartition) -> float:
    """T_n via discrete integration by parts: g(1) + sum of Abel terms.

    Evaluated in this literal form, not by reduction to the direct sum, so
    agreement with :func:`riemann_sum_right` is a real cross-check.
    """
    bps = p.breakpoints
    vals = g.values(np.asarray(bps[1:]))
    terms = [float(vals[-1])]
    terms += [bps[i] * (float(vals[i - 1]) - float(vals[i])) for i in range(1, p.n)]
    return math.fsum(terms)


def gap_bound(g, p: CumulativePartition) -> float:
    """(g(0) - g(1)) * max_i a_i, a provable ceiling on integral - t_n.

    Follows from bounding each rectangle deficit by its width times the
    function's drop over the interval, then telescoping the drops.
    Requires g decreasing (constant gives 0).
    """
    if isinstance(g, MonotoneFunction):
        _require_weakly_decreasing(g, "gap_bound")
    ends = g.values(np.array([0.0, 1.0]))
    return (float(ends[0]) - float(ends[1])) * max(p.widths())


def bound_report(
    g: MonotoneFunction, p: CumulativePartition, tol: float = DEFAULT_QUAD_TOL
) -> BoundReport:
    """Full report: T_n, integral, gap, gap bound, Abel value, strictness.

    The integral comes from the closed form when the catalog knows one,
    otherwise from adaptive quadrature at ``tol``.  Raises
    NonMonotoneFunction for functions that rise and fall, and propagates
    ToleranceNotReached from the quadrature fallback.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    if g.direction not in (DECREASING, CONSTANT, INCREASING):
        verdict = probe_monotonicity(g)
        raise NonMonotoneFunction(
            "bound_report requires a monotone function", witness=verdict.witness
        )

    counter = _CountingFunction(g)
    t_n = riemann_sum_right(counter, p)
    abel_value = abel_sum(counter, p)

    if g.closed_form_integral is not None:
        integral, source = g.closed_form_integral, "closed_form"
    else:
        integral = adaptive_quadrature(counter.scalar, 0.0, 1.0, tol=tol, breakpoints=g.kinks).value
        source = "quadrature"

    ends = counter.values(np.array([0.0, 1.0]))
    mesh = max(p.widths())
    bound = (float(ends[0]) - float(ends[1])) * mesh

    gap = integral - t_n
    signed_gap = gap if g.direction != INCREASING else -gap
    if signed_gap > 10.0 * tol:
        strict: bool | None = True
    elif not g.strictly_monotone:
        strict = False
    else:
        strict = None

    return BoundReport(
        t_n=t_n,
        integral=integral,
        integral_source=source,
        gap=gap,
        gap_bound=bound,
        strict=strict,
        abel_value=abel_value,
        n=p.n,
        direction=g.direction,
        evaluation_count=counter.count,
    )


def refinement_chain(g: MonotoneFunction, p: CumulativePartition, depth: int) -> list[float]:
    """T_n values along ``depth`` successive uniform bisections of p.

    The first entry is T_n on p itself.  For decreasing g the sequence is
    non-decreasing and bounded above by the integral: refining can only
    raise rectangles toward the graph.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    _require_weakly_decreasing(g, "refinement_chain")
    values = [riemann_sum_right(g, p)]
    current = p
    for _ in range(depth):
        current = bisect_all(current)
        values.append(riemann_sum_right(g, current))
    return values
