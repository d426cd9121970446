"""Weight vectors and the cumulative partitions they induce on [0, 1].

A weight vector holds positive weights a_1..a_n with sum 1.  Its running
totals S_i = a_1 + ... + a_i form the strictly increasing breakpoints

    0 = S_0 < S_1 < ... < S_n = 1,

computed with compensated summation so the partition is reproducible bit
for bit and accurate to ~1 ulp per breakpoint even for thousands of
weights.  All types are immutable and all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._summation import running_totals
from .errors import EmptyInput, NonPositiveWeight, PointOutsideInterval, SumOutOfTolerance

#: Accepted deviation of an un-normalized weight sum from 1.
SUM_TOLERANCE = 1e-9
#: Deviation after opt-in normalization (a handful of ulps).
NORMALIZED_SUM_TOLERANCE = 1e-15


@dataclass(frozen=True)
class WeightVector:
    """Positive weights summing to 1 within :data:`SUM_TOLERANCE`."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.weights) == 0:
            raise EmptyInput("weight vector")
        for i, w in enumerate(self.weights):
            if not (math.isfinite(w) and w > 0.0):
                raise NonPositiveWeight(i, w)
        total = math.fsum(self.weights)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise SumOutOfTolerance(total, SUM_TOLERANCE)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def mesh(self) -> float:
        """Largest weight, i.e. the widest interval of the partition."""
        return max(self.weights)


@dataclass(frozen=True)
class CumulativePartition:
    """Breakpoints 0 = S_0 < S_1 < ... < S_n = 1.

    A final breakpoint within :data:`SUM_TOLERANCE` of 1 is snapped to
    exactly 1.0 on construction, so catalog functions with special values
    at the right endpoint are evaluated there exactly.
    """

    breakpoints: tuple[float, ...]

    def __post_init__(self) -> None:
        bps = self.breakpoints
        if len(bps) < 2:
            raise ValueError("a partition needs at least the two endpoints")
        if bps[0] != 0.0:
            raise ValueError(f"first breakpoint must be exactly 0.0, got {bps[0]!r}")
        if bps[-1] != 1.0:
            if abs(bps[-1] - 1.0) > SUM_TOLERANCE:
                raise ValueError(f"last breakpoint {bps[-1]!r} is not within {SUM_TOLERANCE:g} of 1")
            object.__setattr__(self, "breakpoints", bps[:-1] + (1.0,))
            bps = self.breakpoints
        for i in range(1, len(bps)):
            if not bps[i] > bps[i - 1]:
                raise ValueError(
                    f"breakpoints must be strictly increasing; "
                    f"S_{i - 1}={bps[i - 1]!r} >= S_{i}={bps[i]!r}"
                )

    @property
    def n(self) -> int:
        """Number of intervals."""
        return len(self.breakpoints) - 1

    def widths(self) -> tuple[float, ...]:
        """Interval widths S_i - S_{i-1}."""
        bps = self.breakpoints
        return tuple(bps[i] - bps[i - 1] for i in range(1, len(bps)))


@dataclass(frozen=True)
class RefinementPlan:
    """Points to insert, as (interval index, interior point) pairs.

    Interval indices are 1-based: interval i spans [S_{i-1}, S_i].
    """

    insertions: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        points = [m for _, m in self.insertions]
        if len(set(points)) != len(points):
            raise ValueError("refinement plan contains duplicate insertion points")


def from_weights(weights: Iterable[float], normalize: bool = False) -> WeightVector:
    """Build a WeightVector, optionally rescaling the input by its sum.

    Without ``normalize`` the sum must already be within 1e-9 of 1; with it,
    any positive weights are accepted and divided by their compensated sum,
    leaving a sum within 1e-15 of 1.
    """
    seq = [float(w) for w in weights]
    if not seq:
        raise EmptyInput("weight list")
    for i, w in enumerate(seq):
        if not (math.isfinite(w) and w > 0.0):
            raise NonPositiveWeight(i, w)
    total = math.fsum(seq)
    if normalize:
        seq = [w / total for w in seq]
    elif abs(total - 1.0) > SUM_TOLERANCE:
        raise SumOutOfTolerance(total, SUM_TOLERANCE)
    return WeightVector(tuple(seq))


def cumulative(w: WeightVector) -> CumulativePartition:
    """Cumulative partition of ``w`` via running compensated summation."""
    return CumulativePartition((0.0, *running_totals(w.weights)))


def weights_of(p: CumulativePartition) -> WeightVector:
    """Inverse construction: successive differences a_i = S_i - S_{i-1}."""
    return WeightVector(p.widths())


def refine(p: CumulativePartition, plan: RefinementPlan) -> CumulativePartition:
    """Insert the plan's points; existing breakpoints are all retained."""
    bps = p.breakpoints
    extra = []
    for index, point in plan.insertions:
        if not 1 <= index <= p.n:
            raise PointOutsideInterval(index, point)
        if not bps[index - 1] < point < bps[index]:
            raise PointOutsideInterval(index, point)
        extra.append(float(point))
    return CumulativePartition(tuple(sorted(bps + tuple(extra))))


def uniform_weights(n: int) -> WeightVector:
    """n equal weights 1/n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return WeightVector((1.0 / n,) * n)


def bisect_all(p: CumulativePartition) -> CumulativePartition:
    """Refinement inserting the midpoint of every interval."""
    bps = p.breakpoints
    plan = RefinementPlan(
        tuple((i, 0.5 * (bps[i - 1] + bps[i])) for i in range(1, p.n + 1))
    )
    return refine(p, plan)


def partition_from_sequence(breakpoints: Sequence[float]) -> CumulativePartition:
    """Partition from raw breakpoints (must start at 0 and end at 1)."""
    return CumulativePartition(tuple(float(b) for b in breakpoints))
