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
Tail distribution Pr{T_{c,n}(p) > k} and probability mass function of the
coupon collector time with a null coupon.
"""

import coupons.arithmetic as arithmetic
import coupons.combinatorics as combinatorics
import coupons.modes as modes

from coupons.reports import _Report

# ------------------------------------------------------------------------------


def _check_target(n, c):

    if not isinstance(c, int) or isinstance(c, bool):
        raise TypeError("c must be an int, got " + repr(c) + ".")

    if c < 1 or c > n:
        raise ValueError(
            "Collection target c = " + str(c) + " must satisfy 1 <= c <= n = " +
            str(n) + ".")


def _check_draws(k, lowest=0):

    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("k must be an int, got " + repr(k) + ".")

    if k < lowest:
        raise ValueError(
            "Number of draws k = " + str(k) + " must be at least " +
            str(lowest) + ".")

# ------------------------------------------------------------------------------


def closed_form_terms(p, c):
    """Collects the inclusion-exclusion terms of the tail of T_{c,n}(p).

    Pr{T_{c,n}(p) > k} = sum over the returned items (base, coefficient)
    of coefficient * base**k, where base = p_0 + P_J runs over the subsets
    J of size below c. Equal bases are merged.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution,
            already in the arithmetic mode wanted.
        c (int): Collection target.

    Returns:
        dict: Mapping base -> integer coefficient.

    Raises:
        :class:`~coupons.combinatorics.CapExceededError`: If more than
            `coupons.max_subsets` subsets would be enumerated.
    """

    _check_target(p.n, c)

    combinatorics.check_subset_budget(p.n, c)

    coefficients = [
        combinatorics.inclusion_exclusion_coefficient(p.n, c, i)
        for i in range(c)
    ]

    terms = dict()

    for size, _, base in combinatorics.iter_subset_masses(
            p.weights, c, p.null_mass):

        coefficient = coefficients[size]

        if coefficient != 0:
            terms[base] = terms.get(base, 0) + coefficient

    return {base: coef for base, coef in terms.items() if coef != 0}

# ------------------------------------------------------------------------------


def _evaluate_terms(terms, k, mode):

    return arithmetic.signed_sum(
        [coefficient * base ** k for base, coefficient in terms.items()],
        mode)

# ------------------------------------------------------------------------------


def tail_closed_form(p, c, k, mode=None):
    """Pr{T_{c,n}(p) > k} by inclusion-exclusion over the subsets of
    {1, ..., n} with fewer than c elements:

    sum_{i=0}^{c-1} (-1)^(c-1-i) C(n-i-1, n-c) sum_{|J|=i} (p_0 + P_J)^k.

    The formula is evaluated as is, also for k < c where it equals one. In
    float mode the result is clamped to [0, 1]; exact results are never
    clamped.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        c (int): Collection target, 1 <= c <= n.
        k (int): Number of draws, k >= 0.
        mode (str, optional): Arithmetic mode. Defaults to the mode of `p`.

    Raises:
        ValueError: If `c` or `k` are out of range.
        :class:`~coupons.combinatorics.CapExceededError`: If the subset
            enumeration exceeds `coupons.max_subsets`.
    """

    mode = p.mode if mode is None else modes.resolve(mode)

    p = p.with_mode(mode)

    _check_draws(k)

    terms = closed_form_terms(p, c)

    return arithmetic.clamp(_evaluate_terms(terms, k, mode), mode)

# ------------------------------------------------------------------------------


def _recurrence_table(p, c, k_max):
    """Tails of every sub-problem reached from (p, c) by conditioning on
    the first draw, for k = 0, ..., k_max.

    A sub-problem is identified by the bitmask R of coupons already drawn:
    it is T_{c-|R|, n-|R|}(p^(R)) whose null mass is p_0 + P_R. Yields the
    tail of the full problem (R empty) for each k.
    """

    n = p.n

    combinatorics.check_subset_budget(n, c)

    one = arithmetic.one(p.mode)

    states = [
        (size, mask, null)
        for size, mask, null in combinatorics.iter_subset_masses(
            p.weights, c, p.null_mass)
    ]

    previous = {mask: one for _, mask, _ in states}

    yield previous[0]

    for k in range(1, k_max + 1):

        current = dict()

        for size, mask, null in states:

            if size == c - 1:
                # T_{1,m} > k iff only null coupons were drawn.
                current[mask] = null ** k
                continue

            value = null * previous[mask]

            for ell in range(n):
                bit = 1 << ell
                if not mask & bit:
                    value += p.weights[ell] * previous[mask | bit]

            current[mask] = value

        previous = current

        yield previous[0]

# ------------------------------------------------------------------------------


def tail_recurrence(p, c, k, mode=None):
    """Pr{T_{c,n}(p) > k} from the first-draw recurrence

    Pr{T_{c,n}(p) > k} = p_0 Pr{T_{c,n}(p) > k-1}
        + sum_ell p_ell Pr{T_{c-1,n-1}(p^(ell)) > k-1},

    with base Pr{T_{1,m}(q) > k} = q_0^k. No alternating signs are
    involved.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        c (int): Collection target.
        k (int): Number of draws.
        mode (str, optional): Arithmetic mode. Defaults to the mode of `p`.
    """

    mode = p.mode if mode is None else modes.resolve(mode)

    p = p.with_mode(mode)

    _check_target(p.n, c)
    _check_draws(k)

    value = None

    for value in _recurrence_table(p, c, k):
        pass

    return value

# ------------------------------------------------------------------------------


def tail_almost_uniform(n, c, v0, k, mode=None):
    """Pr{T_{c,n}(v) > k} for the almost-uniform v with null mass `v0`:

    sum_{i=0}^{c-1} (-1)^(c-1-i) C(n-i-1, n-c) C(n, i) (v0 (1 - i/n) + i/n)^k.

    Uses binomial weights only, so large n is feasible.

    Args:
        n (int): Number of non-null coupons.
        c (int): Collection target.
        v0 (float, str, Fraction): Null mass in [0, 1).
        k (int): Number of draws.
        mode (str, optional): Arithmetic mode. Defaults to `coupons.mode`.
    """

    mode = modes.resolve(mode)

    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive int, got " + repr(n) + ".")

    _check_target(n, c)
    _check_draws(k)

    v0 = arithmetic.to_number(v0, mode)
    one = arithmetic.one(mode)

    if v0 < 0 or v0 >= 1:
        raise ValueError(
            "Null mass v0 = " + arithmetic.to_text(v0) + " must lie in [0, 1).")

    terms = []

    for i in range(c):
        share = one * i / n
        base = v0 * (one - share) + share
        terms.append(
            combinatorics.inclusion_exclusion_coefficient(n, c, i) *
            combinatorics.binomial(n, i) * base ** k)

    return arithmetic.clamp(arithmetic.signed_sum(terms, mode), mode)

# ------------------------------------------------------------------------------


def pmf(p, c, k, mode=None):
    """Pr{T_{c,n}(p) = k} = Pr{T > k-1} - Pr{T > k}.

    Raises:
        ValueError: If k < 1.
    """

    _check_draws(k, lowest=1)

    mode = p.mode if mode is None else modes.resolve(mode)

    terms = closed_form_terms(p.with_mode(mode), c)

    value = _evaluate_terms(terms, k - 1, mode) - _evaluate_terms(terms, k, mode)

    return arithmetic.clamp(value, mode)

# ------------------------------------------------------------------------------


class TailCurve(_Report):
    """
    Pr{T_{c,n}(p) > k} for k = 0, ..., k_max.

    Args:
        c (int): Collection target.
        tail (List): Tail values, index k.
        method (str): Evaluation method, see :mod:`coupons.modes`.
        mode (str): Arithmetic mode.
        distribution (:class:`~coupons.distribution.DrawDistribution`,
            optional): The distribution the curve belongs to.
    """

    def __init__(self, c, tail, method, mode, distribution=None):
        super(TailCurve, self).__init__()

        if method not in modes.METHODS:
            raise ValueError("Unknown method '" + str(method) + "'.")

        self.thisptr["type_"] = "TailCurve"
        self.thisptr["c_"] = c
        self.thisptr["k_values_"] = list(range(len(tail)))
        self.thisptr["tail_"] = list(tail)
        self.thisptr["method_"] = method
        self.thisptr["mode_"] = mode
        self.thisptr["distribution_"] = distribution

    # -------------------------------------------------------------------------

    @property
    def c(self):
        return self.thisptr["c_"]

    @property
    def k_values(self):
        return self.thisptr["k_values_"]

    @property
    def tail(self):
        return self.thisptr["tail_"]

    @property
    def method(self):
        return self.thisptr["method_"]

    @property
    def mode(self):
        return self.thisptr["mode_"]

    # -------------------------------------------------------------------------

    def pmf(self):
        """Pr{T = k} for k = 0, ..., k_max; zero at k = 0."""

        values = [arithmetic.zero(self.mode)]

        for k in range(1, len(self.tail)):
            values.append(
                arithmetic.clamp(self.tail[k - 1] - self.tail[k], self.mode))

        return values

    # -------------------------------------------------------------------------

    def check(self):
        """Returns the list of violated curve invariants (empty if none):
        values in [0, 1], tail = 1 for k < c, non-increasing in k."""

        problems = []

        for k, value in enumerate(self.tail):
            if value < 0 or value > 1:
                problems.append("tail[" + str(k) + "] outside [0, 1]")
            if k < self.c and self.mode == modes.Exact and value != 1:
                problems.append("tail[" + str(k) + "] != 1 below c")
            if k > 0 and value > self.tail[k - 1] and self.mode == modes.Exact:
                problems.append("tail increases at k = " + str(k))

        return problems

    # -------------------------------------------------------------------------

    def to_dataframe(self):
        """Columns k, tail, pmf. Exact values are rendered as "a/b"."""

        import pandas as pd

        return pd.DataFrame({
            "k": self.k_values,
            "tail": [arithmetic.to_text(v) for v in self.tail],
            "pmf": [arithmetic.to_text(v) for v in self.pmf()]
        })

# ------------------------------------------------------------------------------


def tail_curve(p, c, k_max, method=modes.ClosedForm, mode=None):
    """Evaluates the tail for k = 0, ..., k_max in one pass.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        c (int): Collection target.
        k_max (int): Largest k.
        method (str): :const:`~coupons.modes.ClosedForm`,
            :const:`~coupons.modes.Recurrence` or
            :const:`~coupons.modes.OracleDP`.
        mode (str, optional): Arithmetic mode. Defaults to the mode of `p`.

    Returns:
        :class:`TailCurve`
    """

    mode = p.mode if mode is None else modes.resolve(mode)

    p = p.with_mode(mode)

    _check_target(p.n, c)
    _check_draws(k_max)

    if method == modes.ClosedForm:
        terms = closed_form_terms(p, c)
        tail = [
            arithmetic.clamp(_evaluate_terms(terms, k, mode), mode)
            for k in range(k_max + 1)
        ]

    elif method == modes.Recurrence:
        tail = list(_recurrence_table(p, c, k_max))

    elif method == modes.OracleDP:
        from coupons.oracle import markov_tail_curve
        tail = markov_tail_curve(p, c, k_max)

    else:
        raise ValueError(
            "Method '" + str(method) + "' cannot produce an exact curve. Use "
            "coupons.montecarlo for simulated tails.")

    return TailCurve(c, tail, method, mode, distribution=p)

# ------------------------------------------------------------------------------
