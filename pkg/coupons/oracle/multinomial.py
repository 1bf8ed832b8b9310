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
Full-collection probabilities Pr{T_{n,n}(p) <= k} from the multinomial law
of the draw counts (N_0, ..., N_n) after k draws.
"""

from fractions import Fraction

import coupons.arithmetic as arithmetic
import coupons.combinatorics as combinatorics
import coupons.modes as modes

from coupons.combinatorics import CapExceededError

# ------------------------------------------------------------------------------

MAX_COMPOSITIONS = 10 ** 6
"""Largest number of count vectors (k_1, ..., k_{n-2}) visited."""

# ------------------------------------------------------------------------------


def _iter_positive_counts(length, k):
    """Yields the tuples of `length` positive ints with sum <= k together
    with their sum, in odometer order."""

    if length == 0:
        yield (), 0
        return

    if length > k:
        return

    counts = [1] * length
    total = length

    while True:

        yield tuple(counts), total

        position = length - 1

        while position >= 0:
            counts[position] += 1
            total += 1
            if total <= k:
                break
            total -= counts[position] - 1
            counts[position] = 1
            position -= 1

        if position < 0:
            return

# ------------------------------------------------------------------------------


def full_collection_cdf_multinomial(p, k, mode=None):
    """Pr{T_{n,n}(p) <= k} summed over the counts of coupons 1, ..., n-2.

    For positive counts k_1, ..., k_{n-2} with s = k - (k_1 + ... + k_{n-2})
    the joint probability that these counts occur and coupons n-1 and n
    both appear is

        k!/(k_1! ... k_{n-2}! s!) p_1^k_1 ... p_{n-2}^k_{n-2} R^s
            (1 - (q_0 + q_{n-1})^s - (q_0 + q_n)^s + q_0^s),

    with R = p_0 + p_{n-1} + p_n and (q_0, q_{n-1}, q_n) the triple
    (p_0, p_{n-1}, p_n) divided by R. For n = 2 this is
    1 - (p_0 + p_1)^k - (p_0 + p_2)^k + p_0^k.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution
            with n >= 2.
        k (int): Number of draws.
        mode (str, optional): Arithmetic mode. Defaults to the mode of `p`.

    Raises:
        ValueError: If n < 2 or k < 0.
        :class:`~coupons.combinatorics.CapExceededError`: If more than
            :const:`MAX_COMPOSITIONS` count vectors would be visited.
    """

    mode = p.mode if mode is None else modes.resolve(mode)

    p = p.with_mode(mode)

    n = p.n

    if n < 2:
        raise ValueError("The multinomial form needs n >= 2, got " + str(n) + ".")

    if not isinstance(k, int) or k < 0:
        raise ValueError("Number of draws k = " + repr(k) + " must be >= 0.")

    zero = arithmetic.zero(mode)
    one = arithmetic.one(mode)

    if k < n:
        return zero

    p0 = p.null_mass

    if n == 2:
        return arithmetic.clamp(
            one - (p0 + p.weights[0]) ** k - (p0 + p.weights[1]) ** k + p0 ** k,
            mode)

    length = n - 2

    if combinatorics.binomial(k, length) > MAX_COMPOSITIONS:
        raise CapExceededError(
            "Summing over " + str(combinatorics.binomial(k, length)) +
            " count vectors exceeds the cap of " + str(MAX_COMPOSITIONS) + ".")

    head = p.weights[:length]
    rest = p0 + p.weights[-2] + p.weights[-1]

    q0 = p0 / rest
    first = q0 + p.weights[-2] / rest
    second = q0 + p.weights[-1] / rest

    terms = []

    for counts, used in _iter_positive_counts(length, k):

        s = k - used

        if s < 2:
            continue

        weight = combinatorics.multinomial(list(counts) + [s]) * rest ** s

        for count, p_ell in zip(counts, head):
            weight = weight * p_ell ** count

        terms.append(weight * (one - first ** s - second ** s + q0 ** s))

    return arithmetic.clamp(arithmetic.signed_sum(terms, mode), mode)

# ------------------------------------------------------------------------------


def full_uniform_cdf(n, k, mode=None):
    """Pr{T_{n,n}(u) <= k} = n^-k sum over the compositions (k_1, ..., k_n)
    of k into positive parts of k!/(k_1! ... k_n!).

    The multinomial sum is the number of surjections of k draws onto n
    coupons, accumulated with sur(k, j) = j (sur(k-1, j) + sur(k-1, j-1)).
    """

    mode = modes.resolve(mode)

    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive int, got " + repr(n) + ".")

    if not isinstance(k, int) or k < 0:
        raise ValueError("Number of draws k = " + repr(k) + " must be >= 0.")

    if k < n:
        return arithmetic.zero(mode)

    row = [1] + [0] * n

    for _ in range(k):
        row = [0] + [j * (row[j] + row[j - 1]) for j in range(1, n + 1)]

    value = Fraction(row[n], n ** k)

    return value if mode == modes.Exact else float(value)

# ------------------------------------------------------------------------------


def almost_uniform_cdf_mixture(n, v0, k, mode=None):
    """Pr{T_{n,n}(v) <= k} as a binomial mixture over the number k_0 of
    null draws:

    sum_{k_0=0}^{k-n} C(k, k_0) v0^k_0 (1 - v0)^(k-k_0) Pr{T_{n,n}(u) <= k - k_0}.
    """

    mode = modes.resolve(mode)

    v0 = arithmetic.to_number(v0, mode)

    if v0 < 0 or v0 >= 1:
        raise ValueError(
            "Null mass v0 = " + arithmetic.to_text(v0) + " must lie in [0, 1).")

    if not isinstance(k, int) or k < 0:
        raise ValueError("Number of draws k = " + repr(k) + " must be >= 0.")

    one = arithmetic.one(mode)

    terms = [
        combinatorics.binomial(k, k0) * v0 ** k0 * (one - v0) ** (k - k0) *
        full_uniform_cdf(n, k - k0, mode)
        for k0 in range(0, k - n + 1)
    ]

    return arithmetic.signed_sum(terms, mode) if terms else arithmetic.zero(mode)

# ------------------------------------------------------------------------------
