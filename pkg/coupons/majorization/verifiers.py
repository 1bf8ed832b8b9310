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
Numerical checks of the ordering results: mixing two entries, and moving
from p to the almost-uniform v and on to the uniform u, never slows the
collection down. Every check returns margins that are nonnegative when the
ordering holds; in exact mode they are exact.
"""

import coupons.arithmetic as arithmetic
import coupons.core as core
import coupons.modes as modes
import coupons.oracle as oracle

from coupons.reports import _Report

from .mixing import mix_pair

# ------------------------------------------------------------------------------


class ChainMargins(_Report):
    """
    Margins of a two-link chain A >= B >= C.

    Every row is (key, first, second) with first = A - B and
    second = B - C, where the key is c for expectations and k for tails.
    :attr:`first` and :attr:`second` are the minima over the rows.
    """

    def __init__(self, kind, key_name, rows, distribution=None):
        super(ChainMargins, self).__init__()

        self.thisptr["type_"] = "ChainMargins"
        self.thisptr["kind_"] = kind
        self.thisptr["key_name_"] = key_name
        self.thisptr["rows_"] = [
            {"key_": key, "first_": first, "second_": second}
            for key, first, second in rows
        ]
        self.thisptr["first_"] = min(first for _, first, _ in rows)
        self.thisptr["second_"] = min(second for _, _, second in rows)
        self.thisptr["distribution_"] = distribution

    # -------------------------------------------------------------------------

    @property
    def first(self):
        return self.thisptr["first_"]

    @property
    def second(self):
        return self.thisptr["second_"]

    @property
    def rows(self):
        return [
            (row["key_"], row["first_"], row["second_"])
            for row in self.thisptr["rows_"]
        ]

    def holds(self):
        """Whether both links are nonnegative everywhere."""
        return self.first >= 0 and self.second >= 0

    # -------------------------------------------------------------------------

    def to_json(self):
        payload = super(ChainMargins, self).to_json()
        payload["rows"] = [
            {
                self.thisptr["key_name_"]: key,
                "first": arithmetic.to_json_value(first),
                "second": arithmetic.to_json_value(second)
            }
            for key, first, second in self.rows
        ]
        return payload

    def to_dataframe(self):

        import pandas as pd

        return pd.DataFrame(
            [[key, arithmetic.to_text(first), arithmetic.to_text(second)]
             for key, first, second in self.rows],
            columns=[self.thisptr["key_name_"], "first", "second"])

# ------------------------------------------------------------------------------


def tail_chain_margins(p, c, k_max, mode=modes.Exact):
    """Margins of Pr{T(p) > k} >= Pr{T(v) > k} >= Pr{T(u) > k} for
    k = 0, ..., k_max, with v the almost-uniform distribution of the same
    null mass and u the uniform one.

    Returns:
        :class:`ChainMargins`
    """

    p = p.with_mode(mode)

    if not isinstance(k_max, int) or k_max < 0:
        raise ValueError("k_max must be an int >= 0.")

    tails = core.tail_curve(p, c, k_max, mode=mode).tail

    p0 = p.null_mass

    rows = []

    for k in range(k_max + 1):
        almost = core.tail_almost_uniform(p.n, c, p0, k, mode=mode)
        uniform = core.tail_almost_uniform(p.n, c, 0, k, mode=mode)
        rows.append((k, tails[k] - almost, almost - uniform))

    return ChainMargins("tail", "k", rows, distribution=p)

# ------------------------------------------------------------------------------


def check_expectation_order(p, c=None, mode=modes.Exact):
    """Margins of E(T_{c,n}(p)) >= E(T_{c,n}(v)) >= E(T_{c,n}(u)) for the
    given c, or for every c = 1, ..., n if `c` is None.

    Returns:
        :class:`ChainMargins`
    """

    p = p.with_mode(mode)

    targets = range(1, p.n + 1) if c is None else [c]

    rows = []

    for target in targets:
        value = core.expectation(p, target, mode=mode)
        almost = core.expectation_almost_uniform(
            p.n, target, p.null_mass, mode=mode)
        uniform = core.expectation_uniform(p.n, target, mode=mode)
        rows.append((target, value - almost, almost - uniform))

    return ChainMargins("expectation", "c", rows, distribution=p)

# ------------------------------------------------------------------------------


def check_mixing_step(p, i, j, lambda_, k_max):
    """Minimum over k <= k_max of

    Pr{T_{n,n}(p') <= k} - Pr{T_{n,n}(p) <= k},

    where p' mixes entries i and j of p with coefficient `lambda_`. The
    mixed distribution collects all coupons at least as fast, so the
    result is nonnegative. Exact.
    """

    p = p.as_exact()

    step = mix_pair(p, i, j, lambda_)

    return check_step(step, k_max)


def check_step(step, k_max):
    """Minimum CDF margin of a :class:`~coupons.majorization.MixingStep`."""

    n = step.before.n

    before = core.tail_curve(
        step.before.as_exact(), n, k_max, mode=modes.Exact).tail
    after = core.tail_curve(
        step.after.as_exact(), n, k_max, mode=modes.Exact).tail

    # CDF(after) - CDF(before) = tail(before) - tail(after)
    return min(b - a for b, a in zip(before, after))


def check_flatten_trace(trace, k_max):
    """Minimum CDF margin over all steps of a
    :class:`~coupons.majorization.FlattenTrace`; None for an empty trace."""

    if not trace.steps:
        return None

    return min(check_step(step, k_max) for step in trace.steps)

# ------------------------------------------------------------------------------


def check_full_collection_order(p, k_max, mode=modes.Exact):
    """Tail chain margins with c = n."""
    return tail_chain_margins(p, p.n, k_max, mode=mode)


def check_pair_collection_order(p, k_max, mode=modes.Exact):
    """Tail chain margins with c = 2.

    Raises:
        ValueError: If n < 2.
    """

    if p.n < 2:
        raise ValueError("Collecting two coupons needs n >= 2.")

    return tail_chain_margins(p, 2, k_max, mode=mode)

# ------------------------------------------------------------------------------


def almost_uniform_mixture_margins(p0, n, k_max):
    """Checks the full-collection CDF of the almost-uniform v against its
    binomial mixture over the null draws, and the link
    Pr{T_{n,n}(u) <= k} >= Pr{T_{n,n}(v) <= k}.

    Returns:
        tuple: (largest absolute mixture residual, minimum link margin),
            both exact. The residual is zero.
    """

    p0 = arithmetic.to_number(p0, modes.Exact)

    residuals = []
    margins = []

    for k in range(k_max + 1):
        mixture = oracle.almost_uniform_cdf_mixture(n, p0, k, mode=modes.Exact)
        direct = 1 - core.tail_almost_uniform(n, n, p0, k, mode=modes.Exact)
        uniform = oracle.full_uniform_cdf(n, k, mode=modes.Exact)
        residuals.append(abs(mixture - direct))
        margins.append(uniform - mixture)

    return max(residuals), min(margins)

# ------------------------------------------------------------------------------


def inverse_sum_residual(r, mode=modes.Exact):
    """sum_ell 1/r_ell - n^2 for positive r summing to one. Nonnegative,
    zero exactly when all r_ell are equal.

    Raises:
        ValueError: If an entry is not positive or the sum is not one.
    """

    r = [arithmetic.to_number(value, mode) for value in r]

    if not r or any(value <= 0 for value in r):
        raise ValueError("All entries must be positive.")

    total = sum(r, arithmetic.zero(mode))

    if (mode == modes.Exact and total != 1) or \
            (mode == modes.Float and abs(total - 1.0) > 1e-12):
        raise ValueError(
            "Entries sum to " + arithmetic.to_text(total) + ", not to 1.")

    one = arithmetic.one(mode)

    return sum((one / value for value in r), arithmetic.zero(mode)) - len(r) ** 2

# ------------------------------------------------------------------------------


def convexity_gap(s, x, y, z, t, mode=modes.Exact):
    """(t - y) f(x) + (z - x) f(t) - (t - y) f(z) - (z - x) f(y) for
    f(w) = w^s, where x lies below both y and z and both lie below t in
    [0, 1]. Nonnegative for s >= 1 since f is convex.

    Raises:
        ValueError: If the ordering is violated or an argument lies
            outside [0, 1].
    """

    if not isinstance(s, int) or s < 0:
        raise ValueError("Exponent s must be an int >= 0.")

    x, y, z, t = [arithmetic.to_number(v, mode) for v in (x, y, z, t)]

    if any(v < 0 or v > 1 for v in (x, y, z, t)):
        raise ValueError("Arguments must lie in [0, 1].")

    if not (x < y < t and x < z < t):
        raise ValueError(
            "Arguments must satisfy x < y < t and x < z < t.")

    return (t - y) * x ** s + (z - x) * t ** s - (t - y) * z ** s - \
        (z - x) * y ** s


def convexity_equal_sum_gap(s, x, y, z, t, mode=modes.Exact):
    """f(x) + f(t) - f(z) - f(y) when additionally t + x = y + z; then the
    gap above equals this value times t - y = z - x.

    Raises:
        ValueError: If t + x != y + z.
    """

    values = [arithmetic.to_number(v, mode) for v in (x, y, z, t)]

    x, y, z, t = values

    if mode == modes.Exact and t + x != y + z:
        raise ValueError("Arguments must satisfy t + x = y + z.")

    convexity_gap(s, x, y, z, t, mode=mode)

    return x ** s + t ** s - z ** s - y ** s

# ------------------------------------------------------------------------------


def null_profile(n, k, x, mode=modes.Exact):
    """-(n - 1) x^k + n (x + (1 - x)/n)^k."""

    x = arithmetic.to_number(x, mode)
    one = arithmetic.one(mode)

    return -(n - 1) * x ** k + n * (x + (one - x) / n) ** k


def null_profile_min_increment(n, k, grid, mode=modes.Exact):
    """Smallest forward difference of :func:`null_profile` over the sorted
    grid. The profile is increasing on [0, 1], so the result is
    nonnegative.

    Raises:
        ValueError: If n < 2, k < 0, the grid has fewer than two points or
            a point lies outside [0, 1].
    """

    if not isinstance(n, int) or n < 2:
        raise ValueError("n must be an int >= 2.")

    if not isinstance(k, int) or k < 0:
        raise ValueError("k must be an int >= 0.")

    points = sorted(arithmetic.to_number(x, mode) for x in grid)

    if len(points) < 2:
        raise ValueError("The grid needs at least two points.")

    if points[0] < 0 or points[-1] > 1:
        raise ValueError("Grid points must lie in [0, 1].")

    values = [null_profile(n, k, x, mode=mode) for x in points]

    return min(b - a for a, b in zip(values, values[1:]))

# ------------------------------------------------------------------------------

# Aliases named after the statements the operations check.
check_theorem2 = check_expectation_order
check_theorem3 = check_mixing_step
check_theorem4 = check_full_collection_order
check_theorem5 = check_pair_collection_order
lemma2_residual = inverse_sum_residual
lemma3_gap = convexity_gap
lemma3_equal_sum_gap = convexity_equal_sum_gap
check_fnk_monotone = null_profile_min_increment
full_cdf_v_mixture_margin = almost_uniform_mixture_margins
