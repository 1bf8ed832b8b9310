# Copyright 2026 The coupons developers

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to
# deal in the Software without restriction, including without limitation the
# rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
# sell copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

"""
The drawing distribution p = (p_1, ..., p_n) with its null mass
p_0 = 1 - (p_1 + ... + p_n).
"""

import warnings

from fractions import Fraction

import numpy as np

import coupons
import coupons.arithmetic as arithmetic
import coupons.combinatorics as combinatorics
import coupons.modes as modes

# ------------------------------------------------------------------------------


class DrawDistribution(object):
    """
    Drawing probabilities of the non-null coupons 1, ..., n.

    The null coupon 0 is drawn with the remaining probability
    :attr:`null_mass`, which is always derived from the weights and never
    stored on its own.

    Args:
        weights (List): Probabilities p_1, ..., p_n, each strictly between
            0 and 1. Accepts ints, floats, Fractions and strings "a/b".
        mode (str, optional): Arithmetic mode, see :mod:`coupons.modes`.
            Defaults to `coupons.mode`.

    Raises:
        ValueError: If the list is empty, an entry is not in (0, 1), or the
            entries sum to more than one.
    """

    # -------------------------------------------------------------------------

    def __init__(self, weights, mode=None):

        self.mode = modes.resolve(mode)

        weights = list(weights)

        if len(weights) == 0:
            raise ValueError("A distribution needs at least one coupon.")

        converted = []

        for position, weight in enumerate(weights):

            value = arithmetic.to_number(weight, self.mode)

            if value <= 0 or value >= 1:
                raise ValueError(
                    "Weight p_" + str(position + 1) + " = " +
                    arithmetic.to_text(value) +
                    " must lie strictly between 0 and 1. Drop coupons "
                    "with zero probability and reduce n.")

            converted.append(value)

        self.weights = tuple(converted)

        total = self.total_mass

        if self.mode == modes.Exact:
            if total > 1:
                raise ValueError(
                    "Weights sum to " + arithmetic.to_text(total) +
                    ", the mass exceeds 1.")
        else:
            if total > 1.0 + coupons.sum_tolerance:
                raise ValueError(
                    "Weights sum to " + repr(total) + ", the mass exceeds 1.")
            if total > 1.0:
                warnings.warn(
                    "Weights sum to {0!r}; null mass set to 0.".format(total),
                    RuntimeWarning)

    # -------------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DrawDistribution):
            return NotImplemented
        return self.mode == other.mode and self.weights == other.weights

    def __hash__(self):
        return hash((self.mode, self.weights))

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, ell):
        """p_ell, 1-based."""
        if ell < 1 or ell > self.n:
            raise IndexError(
                "Coupon index " + str(ell) + " out of range 1.." +
                str(self.n) + ".")
        return self.weights[ell - 1]

    def __repr__(self):
        return "DrawDistribution([" + ", ".join(
            arithmetic.to_text(w) for w in self.weights) + "], mode='" + \
            self.mode + "')"

    # -------------------------------------------------------------------------

    @property
    def n(self):
        """Number of non-null coupons."""
        return len(self.weights)

    @property
    def total_mass(self):
        """p_1 + ... + p_n."""
        return sum(self.weights, arithmetic.zero(self.mode))

    @property
    def null_mass(self):
        """p_0 = 1 - (p_1 + ... + p_n), clipped at 0 in float mode."""

        rest = arithmetic.one(self.mode) - self.total_mass

        if self.mode == modes.Float:
            return max(0.0, rest)

        return rest

    # -------------------------------------------------------------------------

    def almost_uniform(self):
        """The almost-uniform distribution v with the same null mass:
        v_i = (1 - p_0)/n."""

        share = (arithmetic.one(self.mode) - self.null_mass) / self.n

        return DrawDistribution([share] * self.n, mode=self.mode)

    # -------------------------------------------------------------------------

    def as_exact(self):
        """Copy in exact mode. Floats go through their decimal repr."""
        return DrawDistribution(self.weights, mode=modes.Exact)

    def as_float(self):
        """Copy in float mode."""
        return DrawDistribution([float(w) for w in self.weights], mode=modes.Float)

    def with_mode(self, mode):
        """Copy in `mode`; returns `self` if the mode already matches."""
        mode = modes.resolve(mode)
        if mode == self.mode:
            return self
        return self.as_exact() if mode == modes.Exact else self.as_float()

    # -------------------------------------------------------------------------

    def cumulative(self):
        """Cumulative table (p_0, p_0 + p_1, ..., 1) as a float array, coupon
        0 first, for inverse-CDF sampling."""

        table = np.cumsum(
            [float(self.null_mass)] + [float(w) for w in self.weights])

        table[-1] = 1.0

        return table

    # -------------------------------------------------------------------------

    def is_almost_uniform(self):
        return all(w == self.weights[0] for w in self.weights)

    # -------------------------------------------------------------------------

    def permuted(self, order):
        """Distribution with entries reordered; `order` lists 1-based
        indices."""

        if sorted(order) != list(range(1, self.n + 1)):
            raise ValueError("Not a permutation of 1.." + str(self.n) + ": " +
                             str(list(order)) + ".")

        return DrawDistribution([self[i] for i in order], mode=self.mode)

    # -------------------------------------------------------------------------

    def removed(self, ell):
        """p^(ell): the vector with entry ell (1-based) removed.

        Raises:
            ValueError: If n = 1, leaving no coupon.
        """

        self[ell]

        if self.n == 1:
            raise ValueError("Cannot remove the only coupon.")

        rest = self.weights[:ell - 1] + self.weights[ell:]

        return DrawDistribution(rest, mode=self.mode)

    # -------------------------------------------------------------------------

    def to_json(self):
        return {
            "weights": [arithmetic.to_json_value(w) for w in self.weights],
            "null_mass": arithmetic.to_json_value(self.null_mass),
            "mode": self.mode
        }

    def to_text(self):
        """Comma-separated weights, the format accepted by the CLI."""
        return ",".join(arithmetic.to_text(w) for w in self.weights)

    # -------------------------------------------------------------------------

    @classmethod
    def uniform_of(cls, n, mode=None):
        """The uniform distribution u = (1/n, ..., 1/n)."""
        mode = modes.resolve(mode)
        return cls([arithmetic.one(mode) / n] * n, mode=mode)

    @classmethod
    def almost_uniform_of(cls, n, v0, mode=None):
        """The almost-uniform distribution with null mass `v0`."""
        mode = modes.resolve(mode)
        v0 = arithmetic.to_number(v0, mode)
        return cls([(arithmetic.one(mode) - v0) / n] * n, mode=mode)

    def uniform(self):
        """The uniform distribution u of the same dimension."""
        return DrawDistribution.uniform_of(self.n, mode=self.mode)

# ------------------------------------------------------------------------------


def make_distribution(weights, mode=None):
    """Validates `weights` and returns a :class:`DrawDistribution`.

    Args:
        weights (List): Probabilities p_1, ..., p_n.
        mode (str, optional): Arithmetic mode.

    Returns:
        :class:`DrawDistribution`
    """

    if isinstance(weights, str):
        weights = parse_weights(weights)

    return DrawDistribution(weights, mode=mode)

# ------------------------------------------------------------------------------


def parse_weights(text):
    """Splits a comma-separated list of rationals or decimals.

    Raises:
        ValueError: Naming the 1-based position of a malformed field.
    """

    fields = text.split(",")

    weights = []

    for position, field in enumerate(fields):
        try:
            weights.append(arithmetic.parse_rational(field))
        except ValueError as err:
            raise ValueError(
                "Weight at position " + str(position + 1) + ": " + str(err))

    return weights

# ------------------------------------------------------------------------------


def random_distribution(n, denominator, random_state=None, null=True):
    """Draws a random exact distribution whose weights are multiples of
    1/`denominator`.

    The weights (and the null mass, if `null` is True) are the parts of a
    random composition of `denominator`, so the result stays in exact
    arithmetic. With `null`, the null mass may be zero unless n = 1.

    Args:
        n (int): Number of non-null coupons.
        denominator (int): Common denominator of all weights.
        random_state (int or :class:`numpy.random.RandomState`, optional):
            Seed or generator.
        null (bool): Whether the null coupon gets a share.

    Returns:
        :class:`DrawDistribution` in exact mode.

    Raises:
        ValueError: If the denominator is too small for n positive weights
            below one.
    """

    if isinstance(random_state, np.random.RandomState):
        rng = random_state
    else:
        rng = np.random.RandomState(random_state)

    if n < 1:
        raise ValueError("n must be positive, got " + str(n) + ".")

    if not null and n == 1:
        raise ValueError("A single coupon without null mass has weight 1.")

    # Compositions into positive parts. Without a forced null share, one
    # extra unit is borrowed and returned by the null part.
    forced = null and n == 1
    parts = n + 1 if null else n
    total = denominator + (1 if null and not forced else 0)

    if total - 1 < parts - 1 or denominator < n + (1 if forced else 0):
        raise ValueError(
            "Denominator " + str(denominator) + " is too small for n = " +
            str(n) + ".")

    cuts = np.sort(rng.choice(np.arange(1, total), size=parts - 1, replace=False))

    sizes = np.diff(np.concatenate([[0], cuts, [total]])).tolist()

    weights = [Fraction(int(size), denominator) for size in sizes[:n]]

    return DrawDistribution(weights, mode=modes.Exact)

# ------------------------------------------------------------------------------


def subset_mass(p, J):
    """P_J, the total probability of the coupons in J. P_empty = 0.

    Args:
        p (:class:`DrawDistribution`): The distribution.
        J (int or iterable): Bitmask or 1-based indices.

    Raises:
        ValueError: If an index is out of range.
    """

    if isinstance(J, int):
        if J < 0 or J >> p.n:
            raise ValueError(
                "Bitmask " + bin(J) + " has bits outside 1.." + str(p.n) + ".")
        indices = combinatorics.indices_from_mask(J)
    else:
        indices = combinatorics.indices_from_mask(
            combinatorics.mask_from_indices(J, p.n))

    return sum((p[i] for i in indices), arithmetic.zero(p.mode))

# ------------------------------------------------------------------------------
