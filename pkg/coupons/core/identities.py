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
Residuals of the combinatorial identities behind the tail formula. In
exact mode every residual is exactly zero.
"""

import coupons.arithmetic as arithmetic
import coupons.combinatorics as combinatorics
import coupons.modes as modes

from .tail import _check_target, tail_closed_form

# ------------------------------------------------------------------------------


def binomial_identity_residual(n, c):
    """sum_{i=0}^{c-1} (-1)^(c-1-i) C(n-i-1, n-c) C(n, i) - 1.

    This is the tail formula evaluated at k = 0, and must vanish.

    Returns:
        int
    """

    _check_target(n, c)

    return sum(
        combinatorics.inclusion_exclusion_coefficient(n, c, i) *
        combinatorics.binomial(n, i)
        for i in range(c)
    ) - 1

# ------------------------------------------------------------------------------


def corollary_identity_residual(p, c, mode=modes.Exact):
    """tail_closed_form(p, c, k) - 1 for k = 0, ..., c - 1.

    T_{c,n}(p) >= c always, so the tail equals one below c whatever the
    null mass.

    Returns:
        list
    """

    one = arithmetic.one(mode)

    return [tail_closed_form(p, c, k, mode=mode) - one for k in range(c)]

# ------------------------------------------------------------------------------


def lemma1_residual(y, a, i, k, mode=modes.Exact):
    """Difference of the two sides of

    sum_ell y_ell sum_{J in S_{i-1,n}(ell)} (a + y_ell + Y_J)^k
        = sum_{J in S_{i,n}} Y_J (a + Y_J)^k,

    where S_{i,n} are the i-element subsets of {1, ..., n},
    S_{i-1,n}(ell) those of size i - 1 that avoid ell, and Y_J is the sum
    of y over J.

    Args:
        y (List): Positive reals y_1, ..., y_n.
        a: Non-negative offset.
        i (int): Subset size, 1 <= i <= n.
        k (int): Exponent, k >= 0.
        mode (str): Arithmetic mode, exact by default.

    Raises:
        ValueError: On range violations.
    """

    y = [arithmetic.to_number(value, mode) for value in y]
    a = arithmetic.to_number(a, mode)

    n = len(y)

    if n == 0:
        raise ValueError("y must not be empty.")

    if any(value <= 0 for value in y):
        raise ValueError("All entries of y must be positive.")

    if a < 0:
        raise ValueError("Offset a must be non-negative.")

    if not isinstance(i, int) or i < 1 or i > n:
        raise ValueError(
            "Subset size i = " + repr(i) + " must satisfy 1 <= i <= " +
            str(n) + ".")

    if not isinstance(k, int) or k < 0:
        raise ValueError("Exponent k = " + repr(k) + " must be >= 0.")

    combinatorics.check_subset_budget(n, i + 1)

    masses = {
        mask: mass
        for _, mask, mass in combinatorics.iter_subset_masses(
            y, i + 1, arithmetic.zero(mode))
    }

    left = []

    for ell in range(n):
        bit = 1 << ell
        for mask in combinatorics.iter_masks(n, i - 1):
            if not mask & bit:
                left.append(y[ell] * (a + y[ell] + masses[mask]) ** k)

    right = [
        masses[mask] * (a + masses[mask]) ** k
        for mask in combinatorics.iter_masks(n, i)
    ]

    return arithmetic.signed_sum(left, mode) - arithmetic.signed_sum(right, mode)

# ------------------------------------------------------------------------------
