from fractions import Fraction

import numpy as np
import pytest

from coupons.core import (
    make_distribution,
    pmf,
    tail_almost_uniform,
    tail_closed_form,
    tail_curve,
    tail_recurrence,
)
from coupons.combinatorics import CapExceededError
from coupons.distribution import random_distribution

EXAMPLE = ["1/16", "1/6", "1/4", "1/8", "7/24"]


def test_tail_single_coupon():
    p = make_distribution([0.7], mode="exact")

    assert tail_closed_form(p, 1, 3) == Fraction(27, 1000)
    assert tail_recurrence(p, 1, 0) == 1


def test_tail_two_coupons():
    p = make_distribution([0.3, 0.5], mode="exact")

    assert tail_closed_form(p, 2, 2) == Fraction(7, 10)
    assert tail_recurrence(p, 2, 2) == Fraction(7, 10)
    assert tail_recurrence(p, 2, 1) == 1


def test_tail_is_one_below_c():
    p = make_distribution(["1/2", "1/2"], mode="exact")

    assert tail_closed_form(p, 2, 1) == 1

    q = make_distribution(EXAMPLE, mode="exact")

    for k in range(5):
        assert tail_closed_form(q, 5, k) == 1


def test_tail_float_mode():
    p = make_distribution([0.3, 0.5], mode="float")

    assert tail_closed_form(p, 2, 2) == pytest.approx(0.70, abs=1e-12)
    assert tail_recurrence(p, 2, 2) == pytest.approx(0.70, abs=1e-12)


def test_tail_almost_uniform():
    assert tail_almost_uniform(2, 2, 0, 2, mode="exact") == Fraction(1, 2)
    assert tail_almost_uniform(5, 1, "1/4", 2, mode="exact") == Fraction(1, 16)
    assert tail_almost_uniform(3, 3, 0, 3, mode="exact") == Fraction(7, 9)


def test_tail_almost_uniform_matches_closed_form():
    for n in range(1, 6):
        v = make_distribution([Fraction(2, 3 * n)] * n, mode="exact")
        for c in range(1, n + 1):
            for k in range(12):
                assert tail_almost_uniform(n, c, Fraction(1, 3), k) == \
                    tail_closed_form(v, c, k)


def test_pmf():
    p = make_distribution([0.3, 0.5], mode="exact")

    assert pmf(p, 2, 2) == Fraction(3, 10)
    assert pmf(p, 2, 1) == 0

    q = make_distribution([0.7], mode="exact")

    assert pmf(q, 1, 2) == Fraction(21, 100)

    with pytest.raises(ValueError):
        pmf(q, 1, 0)


def test_closed_form_equals_recurrence():
    rng = np.random.RandomState(2309)

    for n in range(1, 6):
        for _ in range(4):
            p = random_distribution(n, 60, rng)
            for c in range(1, n + 1):
                closed = tail_curve(p, c, 15, method="closed-form")
                recurrence = tail_curve(p, c, 15, method="recurrence")
                assert closed.tail == recurrence.tail
                assert closed.check() == []


def test_tail_monotone_in_c():
    p = make_distribution(EXAMPLE, mode="exact")

    for k in range(15):
        tails = [tail_closed_form(p, c, k) for c in range(1, 6)]
        assert tails == sorted(tails)


def test_tail_symmetric_under_permutation():
    p = make_distribution(EXAMPLE, mode="exact")
    q = p.permuted([5, 3, 1, 4, 2])

    for k in range(12):
        assert tail_closed_form(p, 3, k) == tail_closed_form(q, 3, k)


def test_tail_curve_dataframe():
    p = make_distribution(EXAMPLE, mode="exact")

    curve = tail_curve(p, 5, 20)

    frame = curve.to_dataframe()

    assert list(frame.columns) == ["k", "tail", "pmf"]
    assert frame.shape == (21, 3)
    assert (frame["tail"][:5] == "1").all()
    assert frame["pmf"][0] == "0"


def test_partial_pmf_sums():
    p = make_distribution([0.3, 0.5], mode="exact")

    curve = tail_curve(p, 2, 60)

    total = sum(curve.pmf(), Fraction(0))

    assert total == 1 - curve.tail[-1]
    assert 1 - total < Fraction(1, 10 ** 8)


def test_invalid_arguments():
    p = make_distribution([0.3, 0.5], mode="exact")

    with pytest.raises(ValueError):
        tail_closed_form(p, 3, 1)

    with pytest.raises(ValueError):
        tail_closed_form(p, 0, 1)

    with pytest.raises(ValueError):
        tail_closed_form(p, 1, -1)

    with pytest.raises(ValueError):
        tail_curve(p, 1, 3, method="monte-carlo")


def test_subset_cap(monkeypatch):
    import coupons

    monkeypatch.setattr(coupons, "max_subsets", 3)

    p = make_distribution(EXAMPLE, mode="exact")

    with pytest.raises(CapExceededError):
        tail_closed_form(p, 3, 4)
