"""Densities on [0, 1], their CDFs, and the change-of-variables identity.

For any probability density f on [0, 1] with CDF F, substituting u = F(x)
gives the distribution-free identity

    integral_0^1 f(x) g(F(x)) dx  =  integral_0^1 g(u) du

for integrable g.  The right side is the expectation of g(U) for U uniform
on [0, 1], so the discrete right-endpoint sum over any cumulative partition
is an approximation of that expectation from below (for decreasing g).
This module verifies the identity numerically as a residual check and
builds weight partitions from empirical data for the expectation bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ._summation import running_totals
from .bounds import DEFAULT_QUAD_TOL, IDENTITY_TOL, riemann_sum_right
from .errors import DomainViolation, EmptyInput, LengthMismatch, NonMonotoneFunction, NotNormalized
from .functions import CONSTANT, DECREASING, MonotoneFunction, quadrature_integral
from .partitions import WeightVector, cumulative, from_weights, uniform_weights
from .quadrature import adaptive_quadrature

_MASS_TOLERANCE = 1e-9
_NONNEG_GRID = 1001


@dataclass(frozen=True)
class Density:
    """Probability density on [0, 1]; mass is verified at construction."""

    kind: str
    formula: str
    params: tuple[tuple[str, float], ...] = ()
    kinks: tuple[float, ...] = ()
    _pdf: Callable = field(repr=False, compare=False, default=None)

    def __call__(self, x: float) -> float:
        if not 0.0 <= x <= 1.0:
            raise DomainViolation(x)
        return float(self._pdf(x))

    def values(self, xs) -> np.ndarray:
        return np.asarray(self._pdf(np.asarray(xs, dtype=float)), dtype=float)


@dataclass(frozen=True)
class CDF:
    """F(x) = integral of the density from 0 to x, clamped into [0, 1]."""

    density: Density
    _fn: Callable = field(repr=False, compare=False, default=None)

    def __call__(self, x: float) -> float:
        if not 0.0 <= x <= 1.0:
            raise DomainViolation(x)
        return float(self._fn(x))

    def values(self, xs) -> np.ndarray:
        return np.asarray(self._fn(np.asarray(xs, dtype=float)), dtype=float)


@dataclass(frozen=True)
class TransformReport:
    """Residual check of the substitution identity at a given tolerance."""

    lhs: float
    rhs: float
    residual: float
    tol: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ExpectationBound:
    """E[g(U)] for uniform U plus the verified discrete-sum inequality."""

    expectation: float
    discrete_sum: float
    holds: bool


def _check_density(pdf: Callable, kinks: tuple[float, ...]) -> None:
    # nonnegativity on a sampled grid (heuristic guard, like the probe)
    grid = np.linspace(0.0, 1.0, _NONNEG_GRID)
    if kinks:
        grid = np.union1d(grid, np.array(kinks))
    vals = np.asarray(pdf(grid), dtype=float)
    if (vals < -1e-12).any():
        i = int(np.argmin(vals))
        raise ValueError(f"density is negative: f({grid[i]!r}) = {vals[i]!r}")
    # unit mass, verified by the quadrature oracle
    mass = adaptive_quadrature(pdf, 0.0, 1.0, tol=1e-10, breakpoints=kinks).value
    if abs(mass - 1.0) > _MASS_TOLERANCE:
        raise NotNormalized(mass)


def uniform_density() -> Density:
    """f(x) = 1."""
    d = Density(kind="uniform", formula="1", _pdf=lambda x: 1.0 + 0.0 * x)
    _check_density(d._pdf, d.kinks)
    return d


def polynomial_density(coefficients: Sequence[float]) -> Density:
    """f(x) = c0 + c1*x + ... ; must be nonnegative with unit mass."""
    coeffs = tuple(float(c) for c in coefficients)
    if not coeffs:
        raise EmptyInput("polynomial coefficients")
    if not all(math.isfinite(c) for c in coeffs):
        raise ValueError("polynomial coefficients must be finite")
    terms = " + ".join(f"{c:g}*x^{j}" if j else f"{c:g}" for j, c in enumerate(coeffs))
    d = Density(
        kind="polynomial",
        formula=terms,
        params=tuple((f"c{j}", c) for j, c in enumerate(coeffs)),
        _pdf=lambda x: np.polynomial.polynomial.polyval(x, coeffs),
    )
    _check_density(d._pdf, d.kinks)
    return d


def triangular_density(peak: float) -> Density:
    """Triangle on [0, 1] with apex f(peak) = 2."""
    p = float(peak)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"peak must lie in [0, 1], got {p!r}")
    if p == 0.0:
        pdf = lambda x: 2.0 * (1.0 - x)
    elif p == 1.0:
        pdf = lambda x: 2.0 * x
    else:
        def pdf(x, _p=p):
            x = np.asarray(x, dtype=float)
            with np.errstate(invalid="ignore"):
                return np.where(x <= _p, 2.0 * x / _p, 2.0 * (1.0 - x) / (1.0 - _p))
    kinks = (p,) if 0.0 < p < 1.0 else ()
    d = Density(
        kind="triangular",
        formula=f"triangle with peak at {p:g}",
        params=(("peak", p),),
        kinks=kinks,
        _pdf=pdf,
    )
    _check_density(d._pdf, d.kinks)
    return d


def tabulated_density(knots: Sequence[tuple[float, float]]) -> Density:
    """Piecewise-linear density through knots spanning [0, 1].

    Knot values are rescaled so the trapezoid mass is exactly 1; negative
    values are rejected before rescaling.
    """
    pts = [(float(x), float(y)) for x, y in knots]
    if len(pts) < 2:
        raise ValueError("tabulated density needs at least 2 knots")
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    if xs[0] != 0.0 or xs[-1] != 1.0:
        raise ValueError("tabulated density knots must span [0, 1] exactly")
    for i in range(1, len(xs)):
        if not xs[i] > xs[i - 1]:
            raise ValueError(f"knot x-values must be strictly increasing at index {i}")
    if any(y < 0.0 or not math.isfinite(y) for y in ys):
        raise ValueError("tabulated density values must be finite and nonnegative")
    mass = math.fsum(
        (xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]) / 2.0 for i in range(len(xs) - 1)
    )
    if mass <= 0.0:
        raise NotNormalized(mass)
    ys = [y / mass for y in ys]
    xa, ya = np.array(xs), np.array(ys)
    d = Density(
        kind="tabulated",
        formula=f"piecewise linear through {len(pts)} knots (renormalized)",
        kinks=tuple(xs[1:-1]),
        _pdf=lambda x: np.interp(x, xa, ya),
    )
    _check_density(d._pdf, d.kinks)
    return d


def cdf_of(f: Density) -> CDF:
    """CDF with a closed-form antiderivative per density kind.

    Tabulated densities use the cumulative trapezoid table at the knots
    with the exact quadratic interpolant of the linear segments in between,
    which is monotone and cannot overshoot [0, 1].
    """
    if f.kind == "uniform":
        fn = lambda x: np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    elif f.kind == "polynomial":
        coeffs = tuple(v for _, v in f.params)
        anti = (0.0,) + tuple(c / (j + 1.0) for j, c in enumerate(coeffs))
        mass = math.fsum(anti)
        fn = lambda x: np.clip(np.polynomial.polynomial.polyval(x, anti) / mass, 0.0, 1.0)
    elif f.kind == "triangular":
        p = f.params[0][1]
        if p == 0.0:
            fn = lambda x: np.clip(x * (2.0 - x), 0.0, 1.0)
        elif p == 1.0:
            fn = lambda x: np.clip(np.square(x), 0.0, 1.0)
        else:
            def fn(x, _p=p):
                x = np.asarray(x, dtype=float)
                with np.errstate(invalid="ignore"):
                    out = np.where(
                        x <= _p,
                        np.square(x) / _p,
                        1.0 - np.square(1.0 - x) / (1.0 - _p),
                    )
                return np.clip(out, 0.0, 1.0)
    elif f.kind == "tabulated":
        xa = np.array((0.0,) + f.kinks + (1.0,))
        fa = f.values(xa)
        areas = (np.diff(xa) * (fa[:-1] + fa[1:]) / 2.0).tolist()
        table = np.array([0.0, *running_totals(areas)])
        table[-1] = 1.0

        def fn(x, _xa=xa, _fa=fa, _table=table):
            x = np.asarray(x, dtype=float)
            idx = np.clip(np.searchsorted(_xa, x, side="right") - 1, 0, len(_xa) - 2)
            t = x - _xa[idx]
            h = _xa[idx + 1] - _xa[idx]
            out = _table[idx] + t * _fa[idx] + t * t * (_fa[idx + 1] - _fa[idx]) / (2.0 * h)
            return np.clip(out, 0.0, 1.0)
    else:
        raise ValueError(f"unknown density kind {f.kind!r}")
    return CDF(density=f, _fn=fn)


def pit_identity_check(f: Density, g: MonotoneFunction, tol: float) -> TransformReport:
    """Verify integral of f*g(F) equals integral of g, within ``tol``.

    The left side is integrated adaptively with panel edges at the
    density's kinks; the right side uses g's closed form when available.
    The check is numerical: a passing report certifies the residual, not
    the identity in the abstract.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    F = cdf_of(f)
    pdf, cdf_fn, gfn = f._pdf, F._fn, g._fn
    lhs = adaptive_quadrature(
        lambda x: float(pdf(x)) * float(gfn(cdf_fn(x))),
        0.0,
        1.0,
        tol=tol / 2.0,
        breakpoints=f.kinks,
    ).value
    if g.closed_form_integral is not None:
        rhs = g.closed_form_integral
    else:
        rhs = quadrature_integral(g, tol / 2.0)
    residual = abs(lhs - rhs)
    return TransformReport(lhs=lhs, rhs=rhs, residual=residual, tol=tol, passed=residual <= tol)


def empirical_partition(
    data: Sequence[float], weights: Sequence[float] | None = None
) -> WeightVector:
    """Weight vector for a sample: equal jumps 1/n, or given weights.

    The data values themselves only fix the count and ordering; uniform
    weighting reproduces the empirical CDF's jump sizes.  Explicit weights
    must match the sample length and are normalized by their sum.
    """
    if len(data) == 0:
        raise EmptyInput("data")
    if weights is None:
        return uniform_weights(len(data))
    if len(weights) != len(data):
        raise LengthMismatch(len(data), len(weights))
    return from_weights(weights, normalize=True)


def expectation_upper_bound(
    g: MonotoneFunction, w: WeightVector, tol: float = DEFAULT_QUAD_TOL
) -> ExpectationBound:
    """E[g(U)] for uniform U, with the discrete sum checked against it.

    For decreasing g the cumulative-sum estimate sum_i a_i g(S_i) can never
    exceed the expectation; ``holds`` records the verified comparison.
    """
    if g.direction not in (DECREASING, CONSTANT):
        raise NonMonotoneFunction("expectation_upper_bound requires a decreasing function")
    p = cumulative(w)
    s = riemann_sum_right(g, p)
    if g.closed_form_integral is not None:
        e = g.closed_form_integral
    else:
        e = quadrature_integral(g, tol)
    return ExpectationBound(expectation=e, discrete_sum=s, holds=s <= e + IDENTITY_TOL)
