import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from monobound.bounds import (
    BoundReport,
    abel_sum,
    abel_terms,
    bound_report,
    gap_bound,
    refinement_chain,
    riemann_sum_left,
    riemann_sum_right,
)
from monobound.errors import NonMonotoneFunction
from monobound.functions import (
    DECREASING,
    INCREASING,
    constant,
    exponential,
    linear,
    logarithmic,
    power_complement,
    reciprocal,
    tabulated,
    trigonometric,
)
from monobound.partitions import (
    RefinementPlan,
    cumulative,
    from_weights,
    partition_from_sequence,
    refine,
    uniform_weights,
)

WORKED_WEIGHTS = [0.2, 0.3, 0.5]
CATALOG = [
    power_complement(2),
    exponential(1),
    logarithmic(),
    reciprocal(),
    trigonometric(),
]

weight_lists = st.lists(
    st.floats(min_value=1e-6, max_value=1.0), min_size=1, max_size=64
)


def worked_partition():
    return cumulative(from_weights(WORKED_WEIGHTS))


class TestRiemannSums:
    def test_worked_example_right_sum(self):
        t = riemann_sum_right(power_complement(2), worked_partition())
        assert t == pytest.approx(0.417, abs=1e-12)

    def test_single_interval_right_sum_is_g_at_1(self):
        g = exponential(1)
        assert riemann_sum_right(g, cumulative(from_weights([1.0]))) == g(1.0)

    def test_linear_half_weights(self):
        p = cumulative(from_weights([0.5, 0.5]))
        assert riemann_sum_right(linear(-1, 1), p) == 0.25
        assert riemann_sum_left(linear(-1, 1), p) == 0.75

    def test_single_interval_left_sum_is_g_at_0(self):
        g = trigonometric()
        assert riemann_sum_left(g, cumulative(from_weights([1.0]))) == g(0.0)

    def test_worked_example_left_sum(self):
        t = riemann_sum_left(power_complement(2), worked_partition())
        assert t == pytest.approx(0.863, abs=1e-12)


class TestAbel:
    def test_worked_example_terms_and_sum(self):
        g = power_complement(2)
        p = worked_partition()
        terms = abel_terms(g, p)
        assert terms == pytest.approx([0.042, 0.375], abs=1e-15)
        assert abel_sum(g, p) == pytest.approx(0.417, abs=1e-12)

    def test_constant_collapses_to_c(self):
        assert abel_sum(constant(2.5), worked_partition()) == 2.5

    def test_single_interval_has_empty_tail(self):
        g = logarithmic()
        p = cumulative(from_weights([1.0]))
        assert abel_terms(g, p) == []
        assert abel_sum(g, p) == g(1.0)

    def test_adversarial_weights_agree(self):
        p = cumulative(from_weights([1.0 - 1e-8, 1e-8]))
        for g in CATALOG:
            t = riemann_sum_right(g, p)
            assert abs(abel_sum(g, p) - t) <= 1e-12 * max(1.0, abs(t))

    @given(weight_lists)
    def test_abel_equals_direct_sum(self, raw):
        p = cumulative(from_weights(raw, normalize=True))
        g = reciprocal()
        t = riemann_sum_right(g, p)
        assert abs(abel_sum(g, p) - t) <= 1e-12 * max(1.0, abs(t))

    @given(weight_lists)
    def test_abel_terms_nonnegative_for_decreasing(self, raw):
        p = cumulative(from_weights(raw, normalize=True))
        terms = abel_terms(trigonometric(), p)
        assert all(t >= -1e-14 for t in terms)


class TestBoundReport:
    def test_worked_example_report(self):
        r = bound_report(power_complement(2), worked_partition())
        assert r.t_n == pytest.approx(0.417, abs=1e-12)
        assert r.integral == pytest.approx(2.0 / 3.0, abs=1e-15)
        assert r.integral_source == "closed_form"
        assert r.gap == pytest.approx(2.0 / 3.0 - 0.417, abs=1e-12)
        assert r.strict is True
        assert r.n == 3
        assert r.evaluation_count > 0
        assert r.invariant_violations() == []

    def test_constant_equality_case(self):
        r = bound_report(constant(3.0), worked_partition())
        assert abs(r.gap) <= 1e-14
        assert r.strict is False
        assert r.invariant_violations() == []

    def test_linear_uniform_gap_is_m_over_2n(self):
        r = bound_report(linear(-1, 1), cumulative(uniform_weights(4)))
        assert r.gap == pytest.approx(1.0 / 8.0, abs=1e-12)

    def test_tabulated_goes_through_quadrature(self):
        g = tabulated([(0.0, 1.0), (0.5, 0.5), (1.0, 0.0)])
        r = bound_report(g, worked_partition())
        assert r.integral_source == "quadrature"
        assert r.integral == pytest.approx(0.5, abs=1e-9)
        assert r.invariant_violations() == []

    def test_non_monotone_rejected_with_witness(self):
        g = tabulated([(0.0, 0.0), (0.5, 1.0), (1.0, 0.0)])
        with pytest.raises(NonMonotoneFunction) as info:
            bound_report(g, worked_partition())
        assert info.value.witness is not None

    def test_increasing_function_flips_the_bound(self):
        r = bound_report(linear(1, 0), cumulative(uniform_weights(4)))
        assert r.direction == INCREASING
        assert r.t_n >= r.integral  # right sum over-estimates an increasing g
        assert r.gap <= 0.0
        assert r.invariant_violations() == []

    def test_to_dict_has_exactly_the_wire_fields(self):
        r = bound_report(power_complement(2), worked_partition())
        assert list(r.to_dict().keys()) == [
            "t_n",
            "integral",
            "integral_source",
            "gap",
            "gap_bound",
            "strict",
            "abel_value",
            "n",
        ]

    def test_invalid_tolerance(self):
        with pytest.raises(ValueError):
            bound_report(power_complement(2), worked_partition(), tol=-1e-9)

    @given(weight_lists)
    def test_reports_clean_on_random_weights(self, raw):
        p = cumulative(from_weights(raw, normalize=True))
        r = bound_report(exponential(1), p)
        assert r.invariant_violations() == []
        assert r.gap >= -1e-12


class TestGapBound:
    def test_worked_example_value(self):
        b = gap_bound(power_complement(2), worked_partition())
        assert b == 0.5
        assert b >= 2.0 / 3.0 - 0.417

    def test_constant_gives_zero(self):
        assert gap_bound(constant(9), worked_partition()) == 0.0

    def test_reciprocal_uniform_10(self):
        b = gap_bound(reciprocal(), cumulative(uniform_weights(10)))
        assert b == pytest.approx(0.05, abs=1e-15)

    def test_increasing_rejected(self):
        with pytest.raises(NonMonotoneFunction):
            gap_bound(linear(1, 0), worked_partition())

    @given(weight_lists)
    def test_gap_never_exceeds_bound(self, raw):
        p = cumulative(from_weights(raw, normalize=True))
        for g in (power_complement(2), trigonometric()):
            gap = g.closed_form_integral - riemann_sum_right(g, p)
            assert gap <= gap_bound(g, p) + 1e-12


class TestEnclosure:
    @given(weight_lists)
    def test_right_below_left_above(self, raw):
        p = cumulative(from_weights(raw, normalize=True))
        for g in CATALOG:
            i = g.closed_form_integral
            assert riemann_sum_right(g, p) <= i + 1e-12
            assert i <= riemann_sum_left(g, p) + 1e-12


class TestRefinementChain:
    def test_bisection_values_from_trivial_partition(self):
        chain = refinement_chain(power_complement(2), partition_from_sequence([0.0, 1.0]), 3)
        # brute-force bisection sums: all breakpoints are exact dyadics
        assert chain == [0.0, 0.375, 0.53125, 0.6015625]

    def test_constant_chain_is_flat(self):
        chain = refinement_chain(constant(2.0), worked_partition(), 3)
        assert chain == [2.0, 2.0, 2.0, 2.0]

    def test_depth_1_on_worked_partition(self):
        chain = refinement_chain(power_complement(2), worked_partition(), 1)
        assert chain[0] == pytest.approx(0.417, abs=1e-12)
        assert chain[1] >= chain[0]

    def test_chain_is_monotone_and_bounded(self):
        g = reciprocal()
        chain = refinement_chain(g, worked_partition(), 5)
        assert all(b >= a - 1e-12 for a, b in zip(chain, chain[1:]))
        assert all(v <= g.closed_form_integral + 1e-12 for v in chain)

    def test_depth_validated(self):
        with pytest.raises(ValueError):
            refinement_chain(reciprocal(), worked_partition(), 0)

    def test_increasing_rejected(self):
        with pytest.raises(NonMonotoneFunction):
            refinement_chain(linear(2, 0), worked_partition(), 1)

    @given(weight_lists, st.integers(min_value=0, max_value=4), st.floats(min_value=0.2, max_value=0.8))
    def test_single_point_refinement_never_decreases(self, raw, offset, frac):
        p = cumulative(from_weights(raw, normalize=True))
        i = offset % p.n + 1
        lo, hi = p.breakpoints[i - 1], p.breakpoints[i]
        m = lo + (hi - lo) * frac
        if not lo < m < hi:
            return
        q = refine(p, RefinementPlan(((i, m),)))
        g = trigonometric()
        assert riemann_sum_right(g, q) >= riemann_sum_right(g, p) - 1e-12
