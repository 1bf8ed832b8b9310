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
Pairwise mixing of two entries of a distribution and the flattening of a
distribution to the almost-uniform v with the same null mass.

All indices are 1-based.
"""

import coupons.arithmetic as arithmetic
import coupons.modes as modes

from coupons.distribution import DrawDistribution
from coupons.reports import _Report

# ------------------------------------------------------------------------------

FLOAT_TOLERANCE = 1e-12
"""Entries this close to the target count as flattened in float mode."""

# ------------------------------------------------------------------------------


def _check_pair(p, i, j):

    for index in (i, j):
        if not isinstance(index, int) or index < 1 or index > p.n:
            raise ValueError(
                "Index " + repr(index) + " out of range 1.." + str(p.n) + ".")

    if i == j:
        raise ValueError("Mixing needs two different entries, got i = j = " +
                         str(i) + ".")

# ------------------------------------------------------------------------------


class MixingStep(_Report):
    """
    One mixing of entries i and j:

    p'_i = lambda p_i + (1 - lambda) p_j,
    p'_j = (1 - lambda) p_i + lambda p_j.

    All other entries, the sum p_i + p_j and the null mass are unchanged.
    """

    def __init__(self, i, j, lambda_, before, after):
        super(MixingStep, self).__init__()

        self.thisptr["type_"] = "MixingStep"
        self.thisptr["i_"] = i
        self.thisptr["j_"] = j
        self.thisptr["lambda_"] = lambda_
        self.thisptr["before_"] = before
        self.thisptr["after_"] = after

    # -------------------------------------------------------------------------

    @property
    def i(self):
        return self.thisptr["i_"]

    @property
    def j(self):
        return self.thisptr["j_"]

    @property
    def mixing(self):
        """The coefficient lambda."""
        return self.thisptr["lambda_"]

    @property
    def before(self):
        return self.thisptr["before_"]

    @property
    def after(self):
        return self.thisptr["after_"]

# ------------------------------------------------------------------------------


def mix_pair(p, i, j, lambda_):
    """Mixes entries i and j of `p` with coefficient `lambda_`.

    lambda_ = 1 returns p itself, lambda_ = 0 swaps the two entries.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        i (int): First index, 1-based.
        j (int): Second index, 1-based, different from i.
        lambda_: Coefficient in [0, 1]; strings "a/b" are accepted.

    Returns:
        :class:`MixingStep`

    Raises:
        ValueError: If an index is out of range, i = j, or lambda_ lies
            outside [0, 1].
    """

    _check_pair(p, i, j)

    lam = arithmetic.to_number(lambda_, p.mode)

    if lam < 0 or lam > 1:
        raise ValueError(
            "Mixing coefficient " + arithmetic.to_text(lam) +
            " must lie in [0, 1].")

    one = arithmetic.one(p.mode)

    weights = list(p.weights)

    p_i, p_j = weights[i - 1], weights[j - 1]

    weights[i - 1] = lam * p_i + (one - lam) * p_j
    weights[j - 1] = (one - lam) * p_i + lam * p_j

    return MixingStep(i, j, lam, p, DrawDistribution(weights, mode=p.mode))

# ------------------------------------------------------------------------------


class FlattenTrace(_Report):
    """
    The mixing steps that turn p into the almost-uniform v, in order.
    """

    def __init__(self, start, steps, target):
        super(FlattenTrace, self).__init__()

        self.thisptr["type_"] = "FlattenTrace"
        self.thisptr["start_"] = start
        self.thisptr["target_"] = target
        self.thisptr["steps_"] = list(steps)

    # -------------------------------------------------------------------------

    @property
    def start(self):
        return self.thisptr["start_"]

    @property
    def steps(self):
        return self.thisptr["steps_"]

    @property
    def target(self):
        """The common value (1 - p_0)/n of the entries of v."""
        return self.thisptr["target_"]

    @property
    def final(self):
        """The last distribution of the trace."""
        if not self.steps:
            return self.start
        return self.steps[-1].after

    @property
    def vectors(self):
        """Weights after each step."""
        return [step.after.weights for step in self.steps]

    # -------------------------------------------------------------------------

    def __len__(self):
        return len(self.steps)

    # -------------------------------------------------------------------------

    def to_dataframe(self):
        """One row per step: step, i, j, lambda and the entries p_1..p_n
        after the step. Row 0 holds the start vector."""

        import pandas as pd

        n = self.start.n

        columns = ["step", "i", "j", "lambda"] + [
            "p_" + str(ell) for ell in range(1, n + 1)]

        rows = [[0, None, None, None] + [
            arithmetic.to_text(w) for w in self.start.weights]]

        for number, step in enumerate(self.steps, start=1):
            rows.append([number, step.i, step.j, arithmetic.to_text(step.mixing)] + [
                arithmetic.to_text(w) for w in step.after.weights])

        frame = pd.DataFrame(rows, columns=columns)

        frame["i"] = frame["i"].astype("Int64")
        frame["j"] = frame["j"].astype("Int64")

        return frame

# ------------------------------------------------------------------------------


def _on_target(value, target, mode):
    if mode == modes.Exact:
        return value == target
    return abs(value - target) <= FLOAT_TOLERANCE


def _straddles(low, target, high, mode):
    """low < target < high, strictly and beyond the float tolerance."""
    if _on_target(low, target, mode) or _on_target(high, target, mode):
        return False
    return low < target < high

# ------------------------------------------------------------------------------


def flatten_step(p, i, j):
    """Mixes entries i and j so that entry i becomes the target
    (1 - p_0)/n and entry j becomes p_i + p_j - (1 - p_0)/n.

    The target must lie strictly between p_i and p_j, in either order.

    Raises:
        ValueError: If the pair does not straddle the target.
    """

    _check_pair(p, i, j)

    target = (arithmetic.one(p.mode) - p.null_mass) / p.n

    p_i, p_j = p[i], p[j]

    if not (_straddles(p_i, target, p_j, p.mode) or
            _straddles(p_j, target, p_i, p.mode)):
        raise ValueError(
            "Pair (" + str(i) + ", " + str(j) + ") does not straddle the "
            "target " + arithmetic.to_text(target) + ": p_" + str(i) + " = " +
            arithmetic.to_text(p_i) + ", p_" + str(j) + " = " +
            arithmetic.to_text(p_j) + ".")

    step = mix_pair(p, i, j, (p_j - target) / (p_j - p_i))

    if p.mode == modes.Exact:
        return step

    # Pin the entry that reached the target against rounding.
    weights = list(step.after.weights)
    weights[j - 1] = p_i + p_j - target
    weights[i - 1] = target

    return MixingStep(i, j, step.mixing, p, DrawDistribution(weights, mode=p.mode))

# ------------------------------------------------------------------------------


def _default_pair(p, target):

    below = [ell for ell in range(1, p.n + 1)
             if p[ell] < target and not _on_target(p[ell], target, p.mode)]
    above = [ell for ell in range(1, p.n + 1)
             if p[ell] > target and not _on_target(p[ell], target, p.mode)]

    if not below or not above:
        return None

    return below[0], above[0]

# ------------------------------------------------------------------------------


def flatten_to_v(p, schedule=None):
    """Flattens p to the almost-uniform v with the same null mass in at
    most n - 1 mixing steps.

    Each step mixes a pair straddling the target (1 - p_0)/n and moves the
    first entry of the pair onto it. Without a schedule the pair is the
    lowest index below the target with the lowest index above it.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        schedule (List, optional): Pairs (i, j), 1-based; entry i is moved
            onto the target.

    Returns:
        :class:`FlattenTrace`

    Raises:
        ValueError: If a scheduled pair does not straddle the target, or
            the schedule ends before v is reached.
    """

    target = (arithmetic.one(p.mode) - p.null_mass) / p.n

    steps = []
    current = p

    if schedule is not None:

        for pair in schedule:
            i, j = pair
            step = flatten_step(current, int(i), int(j))
            steps.append(step)
            current = step.after

        if not all(_on_target(w, target, p.mode) for w in current.weights):
            raise ValueError(
                "Schedule ends at " + repr(current) + ", not at the "
                "almost-uniform distribution.")

        return FlattenTrace(p, steps, target)

    while True:

        pair = _default_pair(current, target)

        if pair is None:
            break

        step = flatten_step(current, *pair)
        steps.append(step)
        current = step.after

    return FlattenTrace(p, steps, target)

# ------------------------------------------------------------------------------


def parse_schedule(text):
    """Parses "i:j,i:j,..." into a list of 1-based pairs.

    Raises:
        ValueError: Naming the position of a malformed pair.
    """

    pairs = []

    for position, field in enumerate(text.split(","), start=1):
        parts = field.strip().split(":")
        try:
            if len(parts) != 2:
                raise ValueError
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(
                "Schedule pair at position " + str(position) + " is not of "
                "the form i:j: '" + field + "'.")

    return pairs

# ------------------------------------------------------------------------------
