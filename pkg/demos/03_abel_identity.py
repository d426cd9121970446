"""
Why the bound holds: discrete integration by parts
==================================================

Abel summation rewrites T_n as g(1) plus a tail of terms
S_i * (g(S_i) - g(S_{i+1})).  For decreasing g every tail term is a
product of nonnegative factors, which proves T_n >= g(1) and, dually,
that the area deficit against the integral is a sum of one-signed
pieces.  The rewrite is an exact algebraic identity, so both routes
must agree to the last bit of rounding even on nasty weights.
"""

from monobound import (
    abel_sum,
    abel_terms,
    cumulative,
    from_weights,
    power_complement,
    riemann_sum_right,
)

g = power_complement(2)

p = cumulative(from_weights([0.2, 0.3, 0.5]))
direct = riemann_sum_right(g, p)
via_abel = abel_sum(g, p)

print("direct sum   ", direct)
print("abel route   ", via_abel)
print("terms        ", abel_terms(g, p), "  (each >= 0, plus g(1) =", f"{g(1.0)})")
assert abs(direct - via_abel) <= 1e-14

# Adversarial weights: one interval of width 1 - 1e-8 and one of 1e-8.
# Naive accumulation loses digits here; compensated summation does not.
p_skew = cumulative(from_weights([1.0 - 1e-8, 1e-8]))
direct = riemann_sum_right(g, p_skew)
via_abel = abel_sum(g, p_skew)

print()
print("skewed weights (1 - 1e-8, 1e-8)")
print("direct sum   ", direct)
print("abel route   ", via_abel)
print("difference   ", abs(direct - via_abel))
assert abs(direct - via_abel) <= 1e-14
assert all(t >= -1e-14 for t in abel_terms(g, p_skew))
