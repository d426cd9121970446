"""
The function catalog and its two integral routes
================================================

Every catalog constructor records a closed-form value of its integral
over [0, 1] when one exists.  The adaptive quadrature oracle recomputes
the same number independently, so the two routes cross-check each other.
"""

import math

from monobound import (
    constant,
    exponential,
    linear,
    logarithmic,
    power_complement,
    quadrature_integral,
    reciprocal,
    trigonometric,
)

catalog = [
    power_complement(1),
    power_complement(2),
    power_complement(3),
    exponential(0.5),
    exponential(1.0),
    exponential(2.0),
    logarithmic(),
    reciprocal(),
    trigonometric(),
    constant(1.0),
    linear(-1.0, 1.0),
]

print(f"{'formula':<22} {'direction':<11} {'closed form':<20} {'quadrature':<20}")
for g in catalog:
    quad = quadrature_integral(g, tol=1e-10)
    print(f"{g.formula:<22} {g.direction:<11} {g.closed_form_integral:<20.15f} {quad:<20.15f}")
    assert abs(quad - g.closed_form_integral) <= 1e-9

# A few of these closed forms are old friends.
print()
print("ln 2          ", math.log(2.0), "= integral of 1/(1+x)")
print("2/pi          ", 2.0 / math.pi, "= integral of cos(pi x / 2)")
print("2 ln 2 - 1    ", 2.0 * math.log(2.0) - 1.0, "= integral of ln(2-x)")
