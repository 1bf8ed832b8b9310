from fractions import Fraction

import numpy as np
import pytest

from coupons.core import make_distribution
from coupons.distribution import random_distribution
from coupons.majorization import (
    check_expectation_order,
    check_flatten_trace,
    check_full_collection_order,
    check_mixing_step,
    check_pair_collection_order,
    convexity_equal_sum_gap,
    convexity_gap,
    flatten_step,
    flatten_to_v,
    full_cdf_v_mixture_margin,
    inverse_sum_residual,
    mix_pair,
    null_profile_min_increment,
    parse_schedule,
    scan_conjecture,
)

EXAMPLE = ["1/16", "1/6", "1/4", "1/8", "7/24"]


def F(a, b):
    return Fraction(a, b)


# ------------------------------------------------------------------------------


def test_mix_pair_identity_and_swap():
    p = make_distribution(EXAMPLE)

    assert mix_pair(p, 2, 4, 1).after == p

    swapped = mix_pair(p, 2, 4, 0).after

    assert swapped.weights == (F(1, 16), F(1, 8), F(1, 4), F(1, 6), F(7, 24))
    assert swapped.null_mass == p.null_mass


def test_mix_pair_conserves_mass():
    p = make_distribution(EXAMPLE)

    after = mix_pair(p, 1, 5, "1/3").after

    assert after.total_mass == p.total_mass
    assert after[1] + after[5] == p[1] + p[5]
    assert after[1] == F(1, 3) * F(1, 16) + F(2, 3) * F(7, 24)


def test_mix_pair_invalid():
    p = make_distribution(EXAMPLE)

    with pytest.raises(ValueError):
        mix_pair(p, 1, 1, "1/2")

    with pytest.raises(ValueError):
        mix_pair(p, 0, 2, "1/2")

    with pytest.raises(ValueError):
        mix_pair(p, 1, 2, "3/2")


def test_flatten_worked_example():
    p = make_distribution(EXAMPLE)

    trace = flatten_to_v(p, parse_schedule("4:5,2:5,1:3,5:3"))

    assert trace.target == F(43, 240)
    assert trace.steps[0].mixing == F(27, 40)
    assert trace.vectors == [
        (F(1, 16), F(1, 6), F(1, 4), F(43, 240), F(19, 80)),
        (F(1, 16), F(43, 240), F(1, 4), F(43, 240), F(9, 40)),
        (F(43, 240), F(43, 240), F(2, 15), F(43, 240), F(9, 40)),
        (F(43, 240),) * 5,
    ]
    assert trace.final == p.almost_uniform()


def test_flatten_default_schedule():
    p = make_distribution(EXAMPLE)

    trace = flatten_to_v(p)

    assert len(trace) <= p.n - 1
    assert trace.final == p.almost_uniform()

    on_target = [
        sum(1 for w in vector if w == trace.target) for vector in trace.vectors]

    assert on_target == sorted(on_target)


def test_flatten_already_flat():
    v = make_distribution(["1/5"] * 4)

    trace = flatten_to_v(v)

    assert len(trace) == 0
    assert trace.final == v
    assert check_flatten_trace(trace, 10) is None


def test_flatten_errors():
    p = make_distribution(EXAMPLE)

    with pytest.raises(ValueError):
        flatten_step(p, 3, 5)

    with pytest.raises(ValueError):
        flatten_to_v(p, [(4, 5)])

    with pytest.raises(ValueError, match="position 2"):
        parse_schedule("4:5,2-5")


def test_flatten_dataframe():
    trace = flatten_to_v(make_distribution(EXAMPLE),
                         parse_schedule("4:5,2:5,1:3,5:3"))

    frame = trace.to_dataframe()

    assert list(frame.columns) == [
        "step", "i", "j", "lambda", "p_1", "p_2", "p_3", "p_4", "p_5"]
    assert frame.shape == (5, 9)
    assert frame["p_3"].iloc[3] == "2/15"


def test_flatten_float_mode():
    p = make_distribution([0.1, 0.2, 0.3], mode="float")

    trace = flatten_to_v(p)

    assert all(abs(w - 0.2) < 1e-12 for w in trace.final.weights)


# ------------------------------------------------------------------------------


def test_mixing_margins_random():
    rng = np.random.RandomState(31)

    for n in range(2, 5):
        for _ in range(4):
            p = random_distribution(n, 60, random_state=rng)
            i, j = rng.choice(np.arange(1, n + 1), size=2, replace=False)
            lam = F(int(rng.randint(0, 11)), 10)
            assert check_mixing_step(p, int(i), int(j), lam, 15) >= 0


def test_flatten_trace_margins():
    p = make_distribution(EXAMPLE)

    trace = flatten_to_v(p, parse_schedule("4:5,2:5,1:3,5:3"))

    assert check_flatten_trace(trace, 15) >= 0

    rng = np.random.RandomState(5)

    for n in (3, 4):
        q = random_distribution(n, 48, random_state=rng)
        assert check_flatten_trace(flatten_to_v(q), 12) >= 0


def test_expectation_order():
    rng = np.random.RandomState(77)

    for n in range(1, 6):
        p = random_distribution(n, 120, random_state=rng)
        margins = check_expectation_order(p)
        assert margins.holds()
        assert [row[0] for row in margins.rows] == list(range(1, n + 1))


def test_expectation_order_equality_cases():
    v = make_distribution(["1/4"] * 3)

    margins = check_expectation_order(v)

    assert all(first == 0 for _, first, _ in margins.rows)
    assert margins.second > 0

    p = make_distribution(["1/2", "1/3", "1/6"])

    assert all(second == 0 for _, _, second in
               check_expectation_order(p).rows)


def test_full_collection_order():
    rng = np.random.RandomState(2)

    for n in range(1, 5):
        p = random_distribution(n, 40, random_state=rng)
        assert check_full_collection_order(p, 20).holds()

    margins = check_full_collection_order(make_distribution(EXAMPLE), 25)

    assert margins.holds()
    assert list(margins.to_dataframe().columns) == ["k", "first", "second"]


def test_pair_collection_order():
    rng = np.random.RandomState(3)

    for n in range(2, 6):
        p = random_distribution(n, 60, random_state=rng)
        assert check_pair_collection_order(p, 20).holds()

    with pytest.raises(ValueError):
        check_pair_collection_order(make_distribution(["1/2"]), 5)


def test_mixture_margin():
    residual, margin = full_cdf_v_mixture_margin("1/5", 3, 12)

    assert residual == 0
    assert margin >= 0

    residual, margin = full_cdf_v_mixture_margin(0, 4, 10)

    assert residual == 0
    assert margin == 0


# ------------------------------------------------------------------------------


def test_inverse_sum_residual():
    assert inverse_sum_residual(["1/3", "2/3"]) == F(1, 2)
    assert inverse_sum_residual(["1/4"] * 4) == 0

    with pytest.raises(ValueError):
        inverse_sum_residual(["1/3", "1/3"])

    with pytest.raises(ValueError):
        inverse_sum_residual(["0", "1"])


def test_convexity_gap():
    assert convexity_gap(1, "0", "1/4", "1/2", "3/4") == 0
    assert convexity_gap(2, "0", "1/4", "1/2", "3/4") == F(1, 8)
    assert convexity_equal_sum_gap(2, "0", "1/4", "1/2", "3/4") == F(1, 4)
    assert convexity_gap(5, "1/10", "1/2", "1/3", "9/10") >= 0

    with pytest.raises(ValueError):
        convexity_gap(2, "1/2", "1/4", "1/2", "3/4")

    with pytest.raises(ValueError):
        convexity_gap(2, "0", "9/10", "1/10", "1/5")

    with pytest.raises(ValueError):
        convexity_gap(2, "1/5", "1/2", "1/5", "3/4")

    with pytest.raises(ValueError):
        convexity_equal_sum_gap(2, "0", "1/4", "1/2", "7/8")


def test_null_profile_increment():
    grid = [F(i, 10) for i in range(11)]

    assert null_profile_min_increment(3, 0, grid) == 0
    assert null_profile_min_increment(4, 1, grid) == 0
    assert null_profile_min_increment(
        3, 5, [F(i, 100) for i in range(101)]) >= 0

    with pytest.raises(ValueError):
        null_profile_min_increment(3, 5, [F(1, 2), F(3, 2)])


# ------------------------------------------------------------------------------


def test_scan_single_coupon_target():
    report = scan_conjecture(3, 1, 10, scheme="grid", resolution=6)

    assert report.samples > 0
    assert report.min_first == 0
    assert report.min_second >= 0
    assert not report.counterexample


def test_scan_single_coupon_grid():
    report = scan_conjecture(1, 1, 5, scheme="grid", resolution=4)

    assert report.samples == 3
    assert report.min_first == 0
    assert report.min_second == 0
    assert report.certificate is None

    with pytest.raises(ValueError):
        scan_conjecture(1, 1, 5, scheme="grid", resolution=1)


def test_scan_pairs():
    report = scan_conjecture(4, 2, 15, scheme="random", samples=10, seed=4)

    assert report.samples == 10
    assert report.min_first >= 0
    assert report.min_second >= 0


def test_scan_three_of_four():
    report = scan_conjecture(4, 3, 20, scheme="grid", resolution=10)

    assert report.certificate is None
    assert report.to_dataframe()["counterexample"].iloc[0] == False  # noqa: E712


def test_scan_determinism():
    first = scan_conjecture(3, 2, 8, scheme="random", samples=5, seed=12)
    second = scan_conjecture(3, 2, 8, scheme="random", samples=5, seed=12)

    assert first.dumps() == second.dumps()


def test_scan_invalid():
    with pytest.raises(ValueError):
        scan_conjecture(7, 3, 10)

    with pytest.raises(ValueError):
        scan_conjecture(4, 3, 10, scheme="sobol")

    with pytest.raises(ValueError):
        scan_conjecture(4, 5, 10)
