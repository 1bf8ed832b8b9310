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
Exact integer combinatorics and bitmask subset enumeration.

Index sets J over {1, ..., n} are represented as integer bitmasks: bit
ell - 1 is set when coupon ell belongs to J.
"""

import math

from fractions import Fraction

import coupons

# ------------------------------------------------------------------------------

WORD_WIDTH = 64
"""Largest n for which index sets are enumerated as bitmasks."""

# ------------------------------------------------------------------------------


class CapExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured cap."""

# ------------------------------------------------------------------------------


def binomial(n, k):
    """Exact binomial coefficient C(n, k), zero outside 0 <= k <= n.

    Args:
        n (int): Upper index, non-negative.
        k (int): Lower index.

    Raises:
        ValueError: If `n` is negative.
    """

    if n < 0:
        raise ValueError("binomial: n must be non-negative, got " + str(n) + ".")

    if k < 0 or k > n:
        return 0

    return math.comb(n, k)

# ------------------------------------------------------------------------------


def multinomial(counts):
    """Exact multinomial coefficient (sum counts)! / prod(counts!).

    Built as a product of binomials so every intermediate is an integer.
    """

    total = 0
    result = 1

    for count in counts:
        if count < 0:
            raise ValueError("multinomial: negative count " + str(count) + ".")
        total += count
        result *= math.comb(total, count)

    return result

# ------------------------------------------------------------------------------


def harmonic(ell):
    """The harmonic number H_ell = 1 + 1/2 + ... + 1/ell as a Fraction.

    H_0 = 0.

    Raises:
        ValueError: If `ell` is negative.
    """

    if ell < 0:
        raise ValueError("harmonic: ell must be non-negative, got " + str(ell) + ".")

    return sum((Fraction(1, i) for i in range(1, ell + 1)), Fraction(0))

# ------------------------------------------------------------------------------


def inclusion_exclusion_coefficient(n, c, i):
    """(-1)^(c-1-i) C(n-i-1, n-c), the weight of the subsets of size i in
    the tail of T_{c,n}."""

    sign = -1 if (c - 1 - i) % 2 else 1

    return sign * binomial(n - i - 1, n - c)

# ------------------------------------------------------------------------------


def subset_count(n, c):
    """Number of subsets of {1, ..., n} of size smaller than c."""

    return sum(binomial(n, i) for i in range(c))

# ------------------------------------------------------------------------------


def check_subset_budget(n, c, cap=None):
    """Raises :class:`CapExceededError` if enumerating all subsets of size
    below `c` would visit more than `cap` subsets (default
    `coupons.max_subsets`) or if `n` exceeds the word width."""

    cap = coupons.max_subsets if cap is None else cap

    if n > WORD_WIDTH:
        raise CapExceededError(
            "n = " + str(n) + " exceeds the bitmask width of " +
            str(WORD_WIDTH) + ". Use tail_almost_uniform or Monte Carlo.")

    needed = subset_count(n, c)

    if needed > cap:
        raise CapExceededError(
            "Enumerating " + str(needed) + " subsets exceeds the cap of " +
            str(cap) + ". Use tail_almost_uniform or Monte Carlo, or raise "
            "coupons.max_subsets.")

# ------------------------------------------------------------------------------


def iter_masks(n, size):
    """Yields the bitmasks of all subsets of {1, ..., n} with `size`
    elements in increasing numeric order (Gosper's hack)."""

    if size < 0 or size > n:
        return

    if size == 0:
        yield 0
        return

    mask = (1 << size) - 1
    limit = 1 << n

    while mask < limit:
        yield mask
        lowest = mask & -mask
        ripple = mask + lowest
        mask = (((ripple ^ mask) >> 2) // lowest) | ripple

# ------------------------------------------------------------------------------


def iter_subset_masses(weights, max_size, start):
    """Yields (size, mask, start + P_J) for every subset J of size
    0, ..., max_size - 1.

    The mass of J is obtained from the mass of J without its highest
    element, which was produced at the previous size, so each subset costs
    one addition.

    Args:
        weights (list): Coupon probabilities p_1, ..., p_n.
        max_size (int): Exclusive upper bound on the subset size.
        start: Offset added to every mass (typically p_0).
    """

    n = len(weights)

    previous = {0: start}

    if max_size > 0:
        yield 0, 0, start

    for size in range(1, min(max_size, n + 1)):

        current = dict()

        for mask in iter_masks(n, size):
            top = mask.bit_length() - 1
            mass = previous[mask ^ (1 << top)] + weights[top]
            current[mask] = mass
            yield size, mask, mass

        previous = current

# ------------------------------------------------------------------------------


def mask_from_indices(indices, n):
    """Bitmask of 1-based `indices`.

    Raises:
        ValueError: If an index lies outside 1..n.
    """

    mask = 0

    for index in indices:
        if index < 1 or index > n:
            raise ValueError(
                "Index " + str(index) + " out of range 1.." + str(n) + ".")
        mask |= 1 << (index - 1)

    return mask


def indices_from_mask(mask):
    """Sorted 1-based indices of the bits set in `mask`."""

    indices = []
    position = 1

    while mask:
        if mask & 1:
            indices.append(position)
        mask >>= 1
        position += 1

    return indices

# ------------------------------------------------------------------------------
