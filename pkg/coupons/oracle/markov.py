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
Mass propagation of the collection process over the subset lattice.

The state after m draws is the set X_m of non-null coupons seen so far.
From state J the chain moves to J + {ell} with probability p_ell for every
ell outside J and stays in J with probability p_0 + P_J. The full set is
absorbing. States are bitmasks and the mass vector is dense.
"""

import numpy as np

import coupons.arithmetic as arithmetic
import coupons.modes as modes

# ------------------------------------------------------------------------------

MAX_STATES_N = 20
"""Largest n for which the 2^n mass vector is built."""

# ------------------------------------------------------------------------------


def _check(p, c=None, k=None):

    if p.n > MAX_STATES_N:
        from coupons.combinatorics import CapExceededError
        raise CapExceededError(
            "The subset-lattice chain needs 2^n states; n = " + str(p.n) +
            " exceeds " + str(MAX_STATES_N) + ".")

    if c is not None and (not isinstance(c, int) or c < 1 or c > p.n):
        raise ValueError(
            "Collection target c = " + repr(c) + " must satisfy 1 <= c <= " +
            str(p.n) + ".")

    if k is not None and (not isinstance(k, int) or k < 0):
        raise ValueError("Number of draws k = " + repr(k) + " must be >= 0.")

# ------------------------------------------------------------------------------


class _Chain(object):
    """
    Transition structure of the chain for a fixed p.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution,
            already in the arithmetic mode wanted.
    """

    def __init__(self, p):

        self.n = p.n
        self.size = 1 << p.n
        self.dtype = object if p.mode == modes.Exact else np.float64

        states = np.arange(self.size)

        # P_J for every J, built from J without its highest element.
        masses = np.empty(self.size, dtype=self.dtype)
        masses[0] = arithmetic.zero(p.mode)

        for ell in range(p.n):
            low = 1 << ell
            masses[low:2 * low] = masses[0:low] + p.weights[ell]

        self.stay = masses + p.null_mass

        self.moves = []

        for ell in range(p.n):
            bit = 1 << ell
            sources = states[(states & bit) == 0]
            self.moves.append((sources, sources | bit, p.weights[ell]))

        self.sizes = np.array([bin(state).count("1") for state in states])

        self.mode = p.mode

    # -------------------------------------------------------------------------

    def initial(self):
        mass = np.empty(self.size, dtype=self.dtype)
        mass[:] = arithmetic.zero(self.mode)
        mass[0] = arithmetic.one(self.mode)
        return mass

    # -------------------------------------------------------------------------

    def step(self, mass):
        """One draw: returns the mass vector after it."""

        following = mass * self.stay

        for sources, targets, weight in self.moves:
            following[targets] = following[targets] + mass[sources] * weight

        return following

    # -------------------------------------------------------------------------

    def tail(self, mass, c):
        """Mass on the states with fewer than c coupons."""
        below = mass[self.sizes < c]
        return sum(below.tolist(), arithmetic.zero(self.mode))

# ------------------------------------------------------------------------------


def markov_mass_vector(p, k, mode=None):
    """Distribution of the state X_k, started from the empty collection.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        k (int): Number of draws.
        mode (str, optional): Arithmetic mode. Defaults to the mode of `p`.

    Returns:
        List: 2^n masses, entry J is Pr{X_k = J} for the bitmask J.

    Raises:
        :class:`~coupons.combinatorics.CapExceededError`: If n > 20.
    """

    mode = p.mode if mode is None else modes.resolve(mode)

    p = p.with_mode(mode)

    _check(p, k=k)

    chain = _Chain(p)

    mass = chain.initial()

    for _ in range(k):
        mass = chain.step(mass)

    return mass.tolist()

# ------------------------------------------------------------------------------


def markov_tail_curve(p, c, k_max, mode=None):
    """Pr{T_{c,n}(p) > k} for k = 0, ..., k_max from a single run of the
    chain.

    Returns:
        List
    """

    mode = p.mode if mode is None else modes.resolve(mode)

    p = p.with_mode(mode)

    _check(p, c, k_max)

    chain = _Chain(p)

    mass = chain.initial()

    tails = [chain.tail(mass, c)]

    for _ in range(k_max):
        mass = chain.step(mass)
        tails.append(chain.tail(mass, c))

    return tails

# ------------------------------------------------------------------------------


def markov_tail_dp(p, c, k, mode=None):
    """Pr{T_{c,n}(p) > k}: the mass left on states with fewer than c
    coupons after k draws.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution,
            n <= 20.
        c (int): Collection target.
        k (int): Number of draws.
        mode (str, optional): Arithmetic mode. Defaults to the mode of `p`.
    """

    return markov_tail_curve(p, c, k, mode=mode)[-1]

# ------------------------------------------------------------------------------
