"""
A first bound: three weights and g(x) = 1 - x^2
===============================================

Positive weights a_1, ..., a_n summing to 1 turn into a partition of
[0, 1] through their running totals S_i.  For a decreasing function g,
the weighted sum T_n = sum a_i * g(S_i) can never exceed the integral
of g over [0, 1]: each term a_i * g(S_i) is the area of a rectangle
that fits under the graph.
"""

from monobound import bound_report, cumulative, from_weights, power_complement

weights = from_weights([0.2, 0.3, 0.5])
partition = cumulative(weights)

print("weights     ", weights.weights)
print("breakpoints ", partition.breakpoints)

# g(x) = 1 - x^2 is strictly decreasing on [0, 1] with integral 2/3
g = power_complement(2)
print("function    ", g.formula)

report = bound_report(g, partition)

print()
print(f"T_n          = {report.t_n:.6f}")
print(f"integral     = {report.integral:.6f}  ({report.integral_source})")
print(f"gap          = {report.gap:.6f}")
print(f"gap bound    = {report.gap_bound:.6f}   (g(0) - g(1)) * widest interval")
print(f"strict       = {report.strict}")

# The three rectangles, term by term: 0.192 + 0.225 + 0 = 0.417.
print()
for a, s in zip(weights.weights, partition.breakpoints[1:]):
    print(f"  a = {a:.1f}  g(S) = g({s:.1f}) = {g(s):.2f}  area {a * g(s):.3f}")

assert report.t_n <= report.integral
assert report.invariant_violations() == []
