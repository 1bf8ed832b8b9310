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
Exhaustive enumeration of draw sequences.
"""

import coupons.arithmetic as arithmetic
import coupons.modes as modes

from coupons.combinatorics import CapExceededError

# ------------------------------------------------------------------------------

MAX_SEQUENCES = 10 ** 7
"""Largest number (n + 1)^k of sequences enumerated."""

# ------------------------------------------------------------------------------


def sequence_enumeration_tail(p, c, k, mode=None):
    """Pr{T_{c,n}(p) > k} by listing all (n + 1)^k sequences of k draws over
    {0, 1, ..., n} and adding up the probabilities of those with fewer than
    c distinct non-null coupons.

    Sequences are expanded depth first so a shared prefix is multiplied
    out only once; prefixes that already hold c coupons are dropped.

    Raises:
        :class:`~coupons.combinatorics.CapExceededError`: If (n + 1)^k
            exceeds :const:`MAX_SEQUENCES`.
    """

    mode = p.mode if mode is None else modes.resolve(mode)

    p = p.with_mode(mode)

    if not isinstance(c, int) or c < 1 or c > p.n:
        raise ValueError(
            "Collection target c = " + repr(c) + " must satisfy 1 <= c <= " +
            str(p.n) + ".")

    if not isinstance(k, int) or k < 0:
        raise ValueError("Number of draws k = " + repr(k) + " must be >= 0.")

    if (p.n + 1) ** k > MAX_SEQUENCES:
        raise CapExceededError(
            str(p.n + 1) + "^" + str(k) + " sequences exceed the cap of " +
            str(MAX_SEQUENCES) + ".")

    outcomes = [(0, p.null_mass)] + [
        (1 << ell, weight) for ell, weight in enumerate(p.weights)
    ]

    total = []

    # (draws left, collected mask, number collected, prefix probability)
    stack = [(k, 0, 0, arithmetic.one(mode))]

    while stack:

        left, collected, count, probability = stack.pop()

        if count >= c:
            continue

        if left == 0:
            total.append(probability)
            continue

        for bit, weight in outcomes:
            if bit and not collected & bit:
                stack.append((left - 1, collected | bit, count + 1,
                              probability * weight))
            else:
                stack.append((left - 1, collected, count,
                              probability * weight))

    return arithmetic.signed_sum(total, mode)

# ------------------------------------------------------------------------------
