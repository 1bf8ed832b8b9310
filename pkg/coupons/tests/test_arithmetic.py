from fractions import Fraction

import pytest

from coupons import arithmetic, combinatorics, modes


def test_parse_rational():
    assert arithmetic.parse_rational("7/24") == Fraction(7, 24)
    assert arithmetic.parse_rational(" 0.25 ") == Fraction(1, 4)

    for text in ("", "1/0", "a/b", "1//2"):
        with pytest.raises(ValueError):
            arithmetic.parse_rational(text)


def test_to_number():
    assert arithmetic.to_number(0.3, modes.Exact) == Fraction(3, 10)
    assert arithmetic.to_number("1/3", modes.Float) == pytest.approx(1 / 3)

    with pytest.raises(TypeError):
        arithmetic.to_number(True, modes.Exact)

    with pytest.raises(ValueError):
        arithmetic.to_number(float("nan"), modes.Float)


def test_signed_sum_warns_on_cancellation():
    with pytest.warns(RuntimeWarning):
        arithmetic.signed_sum([1e20, 1.0, -1e20], modes.Float)

    assert arithmetic.signed_sum(
        [Fraction(1, 3), Fraction(-1, 6)], modes.Exact) == Fraction(1, 6)


def test_rendering():
    assert arithmetic.to_json_value(Fraction(43, 240)) == {
        "numerator": 43, "denominator": 240}
    assert arithmetic.to_json_value(True) is True
    assert arithmetic.to_text(Fraction(43, 240)) == "43/240"
    assert arithmetic.to_text(Fraction(2)) == "2"


def test_resolve_mode():
    assert modes.resolve("float") == modes.Float

    with pytest.raises(ValueError):
        modes.resolve("decimal")


def test_binomial_and_multinomial():
    assert combinatorics.binomial(5, 2) == 10
    assert combinatorics.binomial(3, 4) == 0
    assert combinatorics.multinomial([2, 1, 1]) == 12

    with pytest.raises(ValueError):
        combinatorics.binomial(-1, 0)


def test_iter_masks():
    masks = list(combinatorics.iter_masks(4, 2))

    assert masks == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
    assert list(combinatorics.iter_masks(3, 0)) == [0]


def test_iter_subset_masses():
    weights = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 7)]

    masses = {
        mask: mass
        for _, mask, mass in combinatorics.iter_subset_masses(weights, 4, 0)
    }

    assert len(masses) == 8
    assert masses[0b101] == Fraction(1, 2) + Fraction(1, 7)
    assert masses[0b111] == sum(weights)


def test_mask_indices():
    assert combinatorics.mask_from_indices([1, 3], 3) == 0b101
    assert combinatorics.indices_from_mask(0b101) == [1, 3]

    with pytest.raises(ValueError):
        combinatorics.mask_from_indices([0], 3)


def test_subset_budget():
    with pytest.raises(combinatorics.CapExceededError):
        combinatorics.check_subset_budget(30, 15, cap=1000)

    with pytest.raises(combinatorics.CapExceededError):
        combinatorics.check_subset_budget(70, 1)
