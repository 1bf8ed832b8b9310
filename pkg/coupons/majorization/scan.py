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
Numerical evidence for the tail ordering

Pr{T_{c,n}(p) > k} >= Pr{T_{c,n}(v) > k} >= Pr{T_{c,n}(u) > k}

for collection targets where it is not known to hold. The scanner reports
margins and, on a strictly negative exact margin, a certificate; it never
asserts the ordering.
"""

from fractions import Fraction

import numpy as np

import coupons.arithmetic as arithmetic
import coupons.core as core
import coupons.modes as modes

from coupons.distribution import DrawDistribution, random_distribution
from coupons.reports import _Report

from .verifiers import tail_chain_margins

# ------------------------------------------------------------------------------

SCHEMES = ("grid", "random")

SCREEN_TOLERANCE = 1e-9
"""Float margins below this value are recomputed exactly."""

# ------------------------------------------------------------------------------


class ScanReport(_Report):
    """
    Outcome of :func:`scan_conjecture`.

    The minimum margins are taken over all samples and all k <= k_max.
    Samples whose float margins came close to zero were recomputed in
    exact arithmetic; their exact margins enter the minima. `certificate`
    is None unless an exact margin is strictly negative, in which case it
    holds the distribution, c, k and both margins.
    """

    def __init__(self, params, samples, min_first, min_second, confirmed,
                 certificate=None):
        super(ScanReport, self).__init__()

        self.thisptr["type_"] = "ScanReport"
        self.thisptr["n_"] = params["n"]
        self.thisptr["c_"] = params["c"]
        self.thisptr["k_max_"] = params["k_max"]
        self.thisptr["scheme_"] = params["scheme"]
        self.thisptr["seed_"] = params["seed"]
        self.thisptr["resolution_"] = params["resolution"]
        self.thisptr["samples_"] = samples
        self.thisptr["min_first_"] = min_first
        self.thisptr["min_second_"] = min_second
        self.thisptr["confirmed_"] = confirmed
        self.thisptr["certificate_"] = certificate

    # -------------------------------------------------------------------------

    @property
    def samples(self):
        """Number of distributions evaluated."""
        return self.thisptr["samples_"]

    @property
    def min_first(self):
        return self.thisptr["min_first_"]

    @property
    def min_second(self):
        return self.thisptr["min_second_"]

    @property
    def confirmed(self):
        """Number of samples recomputed in exact arithmetic."""
        return self.thisptr["confirmed_"]

    @property
    def certificate(self):
        return self.thisptr["certificate_"]

    @property
    def counterexample(self):
        return self.certificate is not None

    # -------------------------------------------------------------------------

    def to_dataframe(self):

        import pandas as pd

        return pd.DataFrame([{
            "n": self.thisptr["n_"],
            "c": self.thisptr["c_"],
            "k_max": self.thisptr["k_max_"],
            "scheme": self.thisptr["scheme_"],
            "samples": self.samples,
            "min_first": arithmetic.to_text(self.min_first),
            "min_second": arithmetic.to_text(self.min_second),
            "confirmed": self.confirmed,
            "counterexample": self.counterexample
        }])

# ------------------------------------------------------------------------------


def _sorted_compositions(parts, total, lowest=1, highest=None):
    """Nondecreasing tuples of `parts` ints in [lowest, highest] with
    sum <= total."""

    if parts == 0:
        yield ()
        return

    top = total // parts if highest is None else min(total // parts, highest)

    for first in range(lowest, top + 1):
        for rest in _sorted_compositions(
                parts - 1, total - first, first, highest):
            yield (first,) + rest


def _grid(n, resolution):
    # a single weight may not reach 1
    for counts in _sorted_compositions(n, resolution, highest=resolution - 1):
        yield DrawDistribution(
            [Fraction(count, resolution) for count in counts],
            mode=modes.Exact)


def _random(n, samples, denominator, seed):
    rng = np.random.RandomState(seed)
    for _ in range(samples):
        yield random_distribution(n, denominator, random_state=rng)

# ------------------------------------------------------------------------------


def _screen(p, c, k_max):
    """Float margins (first, second) minimized over k."""

    q = p.as_float()

    tails = core.tail_curve(q, c, k_max, mode=modes.Float).tail

    first, second = [], []

    for k in range(k_max + 1):
        almost = core.tail_almost_uniform(
            q.n, c, q.null_mass, k, mode=modes.Float)
        uniform = core.tail_almost_uniform(q.n, c, 0.0, k, mode=modes.Float)
        first.append(tails[k] - almost)
        second.append(almost - uniform)

    return min(first), min(second)


def _certificate(p, c, margins):
    for k, first, second in margins.rows:
        if first < 0 or second < 0:
            return {
                "distribution": p.to_json(),
                "c": c,
                "k": k,
                "first": arithmetic.to_json_value(first),
                "second": arithmetic.to_json_value(second)
            }

# ------------------------------------------------------------------------------


def scan_conjecture(n, c, k_max, scheme="grid", resolution=10, samples=100,
                    seed=0, denominator=720, max_n=6, silent=True):
    """Evaluates both links of the tail ordering on a set of distributions.

    The grid scheme takes every distribution whose weights are positive
    multiples of 1/`resolution` (null mass >= 0); since both links are
    symmetric in the coupons only nondecreasing weight vectors are
    evaluated. The random scheme draws `samples` distributions with
    denominator `denominator` from a generator seeded with `seed`.

    Every sample is screened in float arithmetic. Samples with a margin
    below :const:`SCREEN_TOLERANCE` are recomputed exactly, and a strictly
    negative exact margin yields a certificate.

    Args:
        n (int): Number of non-null coupons, at most `max_n`.
        c (int): Collection target.
        k_max (int): Largest number of draws checked.
        scheme (str): "grid" or "random".
        resolution (int): Grid denominator.
        samples (int): Number of random samples.
        seed (int): Seed of the random scheme.
        denominator (int): Denominator of random samples.
        max_n (int): Largest n for which exact evaluation is attempted.
        silent (bool): Print progress if False.

    Returns:
        :class:`ScanReport`

    Raises:
        ValueError: If n is infeasible, the scheme unknown, or a size
            parameter invalid.
    """

    if scheme not in SCHEMES:
        raise ValueError(
            "Unknown scheme '" + str(scheme) + "'. Choose from " +
            ", ".join(SCHEMES) + ".")

    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive int, got " + repr(n) + ".")

    if n > max_n:
        raise ValueError(
            "n = " + str(n) + " exceeds max_n = " + str(max_n) + "; exact "
            "evaluation is infeasible.")

    if not isinstance(c, int) or c < 1 or c > n:
        raise ValueError("c must satisfy 1 <= c <= n = " + str(n) + ".")

    if not isinstance(k_max, int) or k_max < 0:
        raise ValueError("k_max must be an int >= 0.")

    if scheme == "grid":
        if resolution < max(n, 2):
            raise ValueError(
                "Resolution " + str(resolution) + " is too small for n = " +
                str(n) + ".")
        points = _grid(n, resolution)
    else:
        if samples < 1:
            raise ValueError("samples must be positive.")
        points = _random(n, samples, denominator, seed)

    params = {
        "n": n,
        "c": c,
        "k_max": k_max,
        "scheme": scheme,
        "seed": seed if scheme == "random" else None,
        "resolution": resolution if scheme == "grid" else denominator
    }

    count = 0
    confirmed = 0
    min_first = None
    min_second = None
    certificate = None

    for p in points:

        count += 1

        first, second = _screen(p, c, k_max)

        if min(first, second) < SCREEN_TOLERANCE:
            confirmed += 1
            margins = tail_chain_margins(p, c, k_max, mode=modes.Exact)
            first, second = margins.first, margins.second
            if certificate is None and not margins.holds():
                certificate = _certificate(p, c, margins)

        min_first = first if min_first is None else min(min_first, first)
        min_second = second if min_second is None else min(min_second, second)

        if not silent and count % 100 == 0:
            print("Scanned " + str(count) + " distributions...")

    if not silent:
        print("Scanned " + str(count) + " distributions, " + str(confirmed) +
              " confirmed exactly.")

    return ScanReport(params, count, min_first, min_second, confirmed,
                      certificate=certificate)

# ------------------------------------------------------------------------------
