"""Compensated floating-point accumulation.

One-shot sums use :func:`math.fsum`, which is exact up to the final
rounding.  Running prefix totals need every intermediate value, so they use
a Neumaier accumulator instead: a Kahan-style compensated sum whose branch
also handles addends larger than the running total.  Both are deterministic
for a fixed input order.
"""

from __future__ import annotations

from typing import Iterable


class NeumaierSum:
    """Running compensated sum; ``value`` is accurate to ~1 ulp throughout."""

    __slots__ = ("_total", "_compensation")

    def __init__(self) -> None:
        self._total = 0.0
        self._compensation = 0.0

    def add(self, value: float) -> None:
        t = self._total + value
        if abs(self._total) >= abs(value):
            self._compensation += (self._total - t) + value
        else:
            self._compensation += (value - t) + self._total
        self._total = t

    @property
    def value(self) -> float:
        return self._total + self._compensation


def running_totals(values: Iterable[float]) -> list[float]:
    """Prefix sums of ``values`` with Neumaier compensation at every step."""
    acc = NeumaierSum()
    out = []
    for v in values:
        acc.add(v)
        out.append(acc.value)
    return out
