from fractions import Fraction

import numpy as np
import pytest

from coupons.core import (
    expectation,
    expectation_almost_uniform,
    expectation_recurrence,
    expectation_uniform,
    expectation_uniform_recurrence,
    harmonic,
    limit_gap_almost_uniform,
    limit_gap_uniform,
    make_distribution,
    moment_r,
    moments,
    second_moment,
    tail_curve,
    variance,
)
from coupons.distribution import random_distribution

EXAMPLE = ["1/16", "1/6", "1/4", "1/8", "7/24"]


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(5) == Fraction(137, 60)

    with pytest.raises(ValueError):
        harmonic(-1)


def test_expectation_examples():
    assert expectation(make_distribution(["1/4", "1/4"]), 1) == 2
    assert expectation(make_distribution(["1/2", "1/2"]), 2) == 3
    assert expectation(make_distribution(["1/3"] * 3), 3) == Fraction(11, 2)


def test_expectation_uniform():
    assert expectation_uniform(3, 3) == Fraction(11, 2)
    assert expectation_almost_uniform(5, 1, 0) == 1
    assert expectation_almost_uniform(4, 2, "1/2") == Fraction(14, 3)


def test_second_moment_geometric():
    p = make_distribution([0.7], mode="exact")

    # (2 - q)/q^2 with q = 7/10
    assert second_moment(p, 1) == Fraction(130, 49)
    assert variance(p, 1) == Fraction(30, 49)


def test_second_moment_two_coupons():
    p = make_distribution(["1/2", "1/2"], mode="exact")

    assert second_moment(p, 2) == 11

    curve = tail_curve(p, 2, 80)

    partial = sum(
        ((2 * k + 1) * tail for k, tail in enumerate(curve.tail)), Fraction(0))

    assert 0 <= 11 - partial < Fraction(1, 10 ** 18)


def test_moment_r_brackets_closed_forms():
    p = make_distribution(EXAMPLE, mode="exact")

    for c in (1, 3, 5):
        first, bound = moment_r(p, c, 1, epsilon=1e-9)
        assert bound < 1e-9
        assert first <= expectation(p, c) <= first + Fraction(bound)

        second, bound = moment_r(p, c, 2, epsilon=1e-9)
        assert second <= second_moment(p, c) <= second + Fraction(bound)


def test_moment_r_third_geometric():
    p = make_distribution([0.7], mode="exact")

    q = Fraction(7, 10)
    exact = (6 - 6 * q + q * q) / q ** 3

    value, bound = moment_r(p, 1, 3, epsilon=1e-12)

    assert value <= exact <= value + Fraction(bound)


def test_moment_r_invalid():
    p = make_distribution([0.7], mode="exact")

    with pytest.raises(ValueError):
        moment_r(p, 1, 0)

    with pytest.raises(ValueError):
        moment_r(p, 1, 2, epsilon=0)


def test_moments_report():
    p = make_distribution(EXAMPLE, mode="exact")

    report = moments(p, 3, r_max=4, epsilon=1e-8)

    assert report.expectation >= 3
    assert report.variance >= 0
    assert [r for r, _, _ in report.higher] == [3, 4]
    assert report.to_json()["expectation"]["denominator"] > 0

    frame = report.to_dataframe()

    assert list(frame["r"]) == [1, 2, 3, 4]


def test_moments_float_mode():
    p = make_distribution([0.3, 0.5], mode="float")

    report = moments(p, 2)

    assert report.expectation == pytest.approx(
        float(expectation(p.as_exact(), 2)), rel=1e-12)


def test_expectation_recurrence():
    rng = np.random.RandomState(42)

    for n in range(1, 6):
        p = random_distribution(n, 120, rng)
        for c in range(1, n + 1):
            assert expectation_recurrence(p, c) == expectation(p, c)


def test_expectation_almost_uniform_closed_form():
    for n in range(1, 9):
        for c in range(1, n + 1):
            v = make_distribution([Fraction(3, 4 * n)] * n)
            assert expectation(v, c) == \
                expectation_almost_uniform(n, c, Fraction(1, 4))


def test_uniform_recurrence():
    for n in range(1, 13):
        for c in range(1, n + 1):
            assert expectation_uniform_recurrence(n, c) == \
                expectation_uniform(n, c)


def test_limit_gap_uniform():
    assert limit_gap_uniform(7, 1) == 0
    assert limit_gap_uniform(2, 2) == 1
    assert limit_gap_uniform(10, 2) == Fraction(1, 9)

    for c in (2, 3, 4):
        gaps = [limit_gap_uniform(n, c) for n in range(c, 41)]
        assert all(gap > 0 for gap in gaps)
        assert all(a > b for a, b in zip(gaps, gaps[1:]))


def test_limit_gap_almost_uniform():
    assert limit_gap_almost_uniform(4, 1, "1/2") == 0
    assert limit_gap_almost_uniform(4, 2, "1/2") == Fraction(14, 3) - 4
