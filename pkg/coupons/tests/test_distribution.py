from fractions import Fraction

import numpy as np
import pytest

import coupons
from coupons.distribution import (
    DrawDistribution,
    make_distribution,
    parse_weights,
    random_distribution,
    subset_mass,
)


def test_make_distribution():
    p = make_distribution([0.5, 0.5], mode="exact")

    assert p.n == 2
    assert p.null_mass == 0

    q = make_distribution("1/16,1/6,1/4,1/8,7/24")

    assert q.n == 5
    assert q.null_mass == Fraction(5, 48)


def test_mass_exceeds_one():
    with pytest.raises(ValueError, match="exceeds 1"):
        make_distribution([0.5, 0.6], mode="exact")

    with pytest.raises(ValueError, match="exceeds 1"):
        make_distribution([0.5, 0.6], mode="float")


def test_boundary_weights_rejected():
    with pytest.raises(ValueError, match="p_2"):
        make_distribution(["1/2", "0"])

    with pytest.raises(ValueError):
        make_distribution([1])

    with pytest.raises(ValueError):
        make_distribution([])


def test_float_tolerance():
    with pytest.warns(RuntimeWarning):
        p = make_distribution([0.5, 0.5 + 1e-14], mode="float")

    assert p.null_mass == 0.0


def test_parse_weights_position():
    assert parse_weights("1/2, 0.25") == [Fraction(1, 2), Fraction(1, 4)]

    with pytest.raises(ValueError, match="position 2"):
        parse_weights("1/2,x/3")


def test_subset_mass():
    p = make_distribution([0.3, 0.5], mode="exact")

    assert subset_mass(p, []) == 0
    assert subset_mass(p, [1, 2]) == Fraction(4, 5)
    assert subset_mass(p, 0b10) == Fraction(1, 2)

    q = make_distribution("1/16,1/6,1/4,1/8,7/24")

    assert subset_mass(q, {4, 5}) == Fraction(5, 12)

    with pytest.raises(ValueError):
        subset_mass(p, [3])

    with pytest.raises(ValueError):
        subset_mass(p, 0b100)


def test_removed_and_almost_uniform():
    p = make_distribution("1/16,1/6,1/4,1/8,7/24")

    assert p.removed(2).weights == (
        Fraction(1, 16), Fraction(1, 4), Fraction(1, 8), Fraction(7, 24))

    v = p.almost_uniform()

    assert v.weights == (Fraction(43, 240),) * 5
    assert v.null_mass == p.null_mass
    assert v.is_almost_uniform()
    assert p.uniform().weights == (Fraction(1, 5),) * 5

    with pytest.raises(IndexError):
        p.removed(6)


def test_mode_conversion():
    p = make_distribution([0.3, 0.5], mode="float")

    assert p.as_exact().weights == (Fraction(3, 10), Fraction(1, 2))
    assert p.as_exact().as_float() == p


def test_default_mode(monkeypatch):
    monkeypatch.setattr(coupons, "mode", "float")

    assert make_distribution([0.5]).mode == "float"


def test_cumulative():
    table = make_distribution([0.3, 0.5]).cumulative()

    assert np.allclose(table, [0.2, 0.5, 1.0])


def test_random_distribution():
    rng = np.random.RandomState(2309)

    for n in range(1, 7):
        p = random_distribution(n, 50, rng)
        assert isinstance(p, DrawDistribution)
        assert p.n == n
        assert all((w * 50).denominator == 1 for w in p.weights)
        assert p.null_mass >= 0

    q = random_distribution(4, 40, random_state=3, null=False)

    assert q.null_mass == 0

    assert random_distribution(3, 30, 11) == random_distribution(3, 30, 11)

    with pytest.raises(ValueError):
        random_distribution(1, 10, null=False)
