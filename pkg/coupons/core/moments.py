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
Moments of the coupon collector time T_{c,n}(p).
"""

from fractions import Fraction

import coupons.arithmetic as arithmetic
import coupons.combinatorics as combinatorics
import coupons.modes as modes

from coupons.reports import _Report

from .tail import _check_target, _evaluate_terms, closed_form_terms

# ------------------------------------------------------------------------------


def _resolve(p, mode):
    mode = p.mode if mode is None else modes.resolve(mode)
    return p.with_mode(mode), mode

# ------------------------------------------------------------------------------


def expectation(p, c, mode=None):
    """E(T_{c,n}(p)) in closed form:

    sum_{i=0}^{c-1} (-1)^(c-1-i) C(n-i-1, n-c) sum_{|J|=i} 1/(1 - (p_0 + P_J)).

    All denominators are positive because every weight is positive and
    |J| < n.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        c (int): Collection target.
        mode (str, optional): Arithmetic mode. Defaults to the mode of `p`.
    """

    p, mode = _resolve(p, mode)

    terms = closed_form_terms(p, c)

    one = arithmetic.one(mode)

    return arithmetic.signed_sum(
        [coef * (one / (one - base)) for base, coef in terms.items()], mode)

# ------------------------------------------------------------------------------


def second_moment(p, c, mode=None):
    """E(T_{c,n}(p)^2) in closed form, summing (1 + x)/(1 - x)^2 over the
    inclusion-exclusion terms with x = p_0 + P_J.

    (1 + x)/(1 - x)^2 is the value of sum_k (2k + 1) x^k, the generating
    sum that turns tail probabilities into the second moment.
    """

    p, mode = _resolve(p, mode)

    terms = closed_form_terms(p, c)

    one = arithmetic.one(mode)

    return arithmetic.signed_sum(
        [coef * (one + base) / (one - base) ** 2 for base, coef in terms.items()],
        mode)

# ------------------------------------------------------------------------------


def variance(p, c, mode=None):
    """Var(T_{c,n}(p)) = E(T^2) - E(T)^2."""

    first = expectation(p, c, mode)
    second = second_moment(p, c, mode)

    return second - first * first

# ------------------------------------------------------------------------------


def _decay(p, c):
    """(A, rho) with Pr{T_{c,n}(p) > k} <= A rho^k for every k.

    Fewer than c distinct coupons after k draws means all draws fell into
    J plus the null coupon for some J of size c - 1, so the union bound
    gives A = C(n, c-1) and rho = max over |J| = c-1 of p_0 + P_J.
    """

    rho = max(
        base
        for size, _, base in combinatorics.iter_subset_masses(
            p.weights, c, p.null_mass)
        if size == c - 1
    )

    return combinatorics.binomial(p.n, c - 1), float(rho)

# ------------------------------------------------------------------------------


def _remainder_bound(amplitude, rho, r, K):
    """Bound on sum_{k > K} ((k+1)^r - k^r) A rho^k, or None if the terms
    are not yet decreasing geometrically after K."""

    ratio = ((K + 3.0) / (K + 2.0)) ** (r - 1) * rho

    if ratio >= 1.0:
        return None

    if rho == 0.0:
        return 0.0

    first = r * (K + 2.0) ** (r - 1) * rho ** (K + 1)

    return amplitude * first / (1.0 - ratio)

# ------------------------------------------------------------------------------


def moment_r(p, c, r, epsilon=1e-12, mode=None):
    """The r-th moment E(T_{c,n}(p)^r) from the tail expansion

    sum_{l=0}^{r-1} C(r, l) sum_{k>=0} k^l Pr{T_{c,n}(p) > k},

    truncated at the first K whose certified remainder bound drops below
    `epsilon`.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        c (int): Collection target.
        r (int): Order of the moment, r >= 1.
        epsilon (float): Target bound on the truncation error.
        mode (str, optional): Arithmetic mode of the partial sum.

    Returns:
        tuple: (value, truncation_bound); the exact moment lies in
            [value, value + truncation_bound].

    Raises:
        ValueError: If r < 1 or epsilon <= 0.
    """

    if not isinstance(r, int) or r < 1:
        raise ValueError("Order r must be an int >= 1, got " + repr(r) + ".")

    if not epsilon > 0:
        raise ValueError("epsilon must be positive, got " + repr(epsilon) + ".")

    p, mode = _resolve(p, mode)

    terms = closed_form_terms(p, c)

    amplitude, rho = _decay(p, c)

    if rho >= 1.0:
        raise ValueError("Tail does not decay: rho = " + repr(rho) + ".")

    value = arithmetic.zero(mode)

    K = 0

    while True:

        tail = arithmetic.clamp(_evaluate_terms(terms, K, mode), mode)

        value += ((K + 1) ** r - K ** r) * tail

        bound = _remainder_bound(amplitude, rho, r, K)

        if bound is not None and bound < epsilon:
            return value, bound

        K += 1

# ------------------------------------------------------------------------------


def expectation_recurrence(p, c, mode=None):
    """E(T_{c,n}(p)) from the first-draw recurrence

    E(T_{c,n}(p)) = (1 + sum_ell p_ell E(T_{c-1,n-1}(p^(ell)))) / (1 - p_0),

    with E(T_{1,m}(q)) = 1/(1 - q_0). Involves no alternating signs.
    """

    p, mode = _resolve(p, mode)

    _check_target(p.n, c)
    combinatorics.check_subset_budget(p.n, c)

    one = arithmetic.one(mode)

    states = sorted(
        combinatorics.iter_subset_masses(p.weights, c, p.null_mass),
        key=lambda state: -state[0])

    values = dict()

    for size, mask, null in states:

        if size == c - 1:
            values[mask] = one / (one - null)
            continue

        total = one

        for ell in range(p.n):
            bit = 1 << ell
            if not mask & bit:
                total += p.weights[ell] * values[mask | bit]

        values[mask] = total / (one - null)

    return values[0]

# ------------------------------------------------------------------------------


def harmonic(ell):
    """H_ell as an exact Fraction; H_0 = 0."""
    return combinatorics.harmonic(ell)

# ------------------------------------------------------------------------------


def expectation_uniform(n, c, mode=None):
    """E(T_{c,n}(u)) = n (H_n - H_{n-c}) for the uniform u."""

    mode = modes.resolve(mode)

    _check_target(n, c)

    value = n * (harmonic(n) - harmonic(n - c))

    return value if mode == modes.Exact else float(value)

# ------------------------------------------------------------------------------


def expectation_almost_uniform(n, c, v0, mode=None):
    """E(T_{c,n}(v)) = n (H_n - H_{n-c}) / (1 - v0)."""

    mode = modes.resolve(mode)

    v0 = arithmetic.to_number(v0, mode)

    if v0 < 0 or v0 >= 1:
        raise ValueError(
            "Null mass v0 = " + arithmetic.to_text(v0) + " must lie in [0, 1).")

    return expectation_uniform(n, c, mode) / (arithmetic.one(mode) - v0)

# ------------------------------------------------------------------------------


def expectation_uniform_recurrence(n, c):
    """E(T_{c,n}(u)) from E(T_{c,n}(u)) = 1 + n/(n-1) E(T_{c-1,n-1}(u)),
    starting at E(T_{1,m}(u)) = 1. Exact."""

    _check_target(n, c)

    value = Fraction(1)

    # m is the dimension after (c - j) removals
    for j in range(2, c + 1):
        m = n - c + j
        value = 1 + Fraction(m, m - 1) * value

    return value

# ------------------------------------------------------------------------------


def limit_gap_uniform(n, c):
    """E(T_{c,n}(u)) - c, exact. Decreases to 0 as n grows."""
    return expectation_uniform(n, c, modes.Exact) - c


def limit_gap_almost_uniform(n, c, v0):
    """E(T_{c,n}(v)) - c/(1 - v0), exact."""

    v0 = arithmetic.to_number(v0, modes.Exact)

    return expectation_almost_uniform(n, c, v0, modes.Exact) - c / (1 - v0)

# ------------------------------------------------------------------------------


class MomentReport(_Report):
    """
    Expectation, second moment and variance of T_{c,n}(p), plus optional
    higher moments with their truncation bounds.
    """

    def __init__(self, c, expectation, second_moment, higher=None, mode=None,
                 distribution=None):
        super(MomentReport, self).__init__()

        self.thisptr["type_"] = "MomentReport"
        self.thisptr["c_"] = c
        self.thisptr["mode_"] = mode
        self.thisptr["expectation_"] = expectation
        self.thisptr["second_moment_"] = second_moment
        self.thisptr["variance_"] = second_moment - expectation * expectation
        self.thisptr["higher_"] = [
            {"r_": r, "value_": value, "truncation_bound_": bound}
            for r, value, bound in (higher or [])
        ]
        self.thisptr["distribution_"] = distribution

    # -------------------------------------------------------------------------

    @property
    def expectation(self):
        return self.thisptr["expectation_"]

    @property
    def second_moment(self):
        return self.thisptr["second_moment_"]

    @property
    def variance(self):
        return self.thisptr["variance_"]

    @property
    def higher(self):
        return [
            (entry["r_"], entry["value_"], entry["truncation_bound_"])
            for entry in self.thisptr["higher_"]
        ]

    # -------------------------------------------------------------------------

    def to_json(self):
        payload = super(MomentReport, self).to_json()
        payload["higher"] = [
            {
                "r": r,
                "value": arithmetic.to_json_value(value),
                "truncation_bound": bound
            }
            for r, value, bound in self.higher
        ]
        return payload

    def to_dataframe(self):
        """Columns r, value, truncation_bound; r = 1 and 2 are closed form
        with bound 0."""

        import pandas as pd

        rows = [
            {"r": 1, "value": arithmetic.to_text(self.expectation),
             "truncation_bound": 0.0},
            {"r": 2, "value": arithmetic.to_text(self.second_moment),
             "truncation_bound": 0.0},
        ]

        for r, value, bound in self.higher:
            rows.append({"r": r, "value": arithmetic.to_text(value),
                         "truncation_bound": bound})

        return pd.DataFrame(rows, columns=["r", "value", "truncation_bound"])

# ------------------------------------------------------------------------------


def moments(p, c, r_max=2, epsilon=1e-12, mode=None):
    """Collects the moments of T_{c,n}(p) up to order `r_max`.

    Orders 1 and 2 come from their closed forms; orders 3 and above from
    :func:`moment_r`.

    Returns:
        :class:`MomentReport`
    """

    p, mode = _resolve(p, mode)

    higher = []

    for r in range(3, r_max + 1):
        value, bound = moment_r(p, c, r, epsilon=epsilon, mode=mode)
        higher.append((r, value, bound))

    return MomentReport(
        c,
        expectation(p, c, mode),
        second_moment(p, c, mode),
        higher=higher,
        mode=mode,
        distribution=p)

# ------------------------------------------------------------------------------
