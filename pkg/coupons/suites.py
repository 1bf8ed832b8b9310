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
Verification sweeps over seeded random distributions. Every suite checks
one family of exact statements on all sampled instances and records the
instances where a check fails.
"""

from fractions import Fraction

import numpy as np

import coupons.core as core
import coupons.majorization as majorization
import coupons.modes as modes
import coupons.oracle as oracle

from coupons.distribution import random_distribution
from coupons.reports import _Report

# ------------------------------------------------------------------------------

SEQUENCE_BUDGET = 10 ** 4
"""Default budget: sequence enumeration joins the oracle suite while
(n + 1)^k stays below it."""

MAX_LISTED_FAILURES = 20

# ------------------------------------------------------------------------------


class SuiteReport(_Report):
    """
    Outcome of one verification suite: the number of checks run and the
    failed ones, of which the first :const:`MAX_LISTED_FAILURES` are
    listed.
    """

    def __init__(self, suite, params):
        super(SuiteReport, self).__init__()

        self.thisptr["type_"] = "SuiteReport"
        self.thisptr["suite_"] = suite
        self.thisptr["params_"] = params
        self.thisptr["checks_"] = 0
        self.thisptr["failed_"] = 0
        self.thisptr["failures_"] = []

    # -------------------------------------------------------------------------

    def record(self, ok, **details):
        self.thisptr["checks_"] += 1
        if not ok:
            self.thisptr["failed_"] += 1
            if len(self.thisptr["failures_"]) < MAX_LISTED_FAILURES:
                self.thisptr["failures_"].append(details)

    # -------------------------------------------------------------------------

    @property
    def checks(self):
        return self.thisptr["checks_"]

    @property
    def failed(self):
        return self.thisptr["failed_"]

    @property
    def failures(self):
        return self.thisptr["failures_"]

    @property
    def passed(self):
        return self.failed == 0

    # -------------------------------------------------------------------------

    def to_dataframe(self):

        import pandas as pd

        return pd.DataFrame([{
            "suite": self.thisptr["suite_"],
            "checks": self.checks,
            "failed": self.failed,
            "passed": self.passed
        }])

# ------------------------------------------------------------------------------


def _denominator(n):
    return max(120, 2 * (n + 1))


def _samples(params, rng, lowest=1, highest=None):
    """Yields (n, p) for every n in range and `samples` draws per n."""

    highest = params["n_max"] if highest is None else min(
        highest, params["n_max"])

    for n in range(lowest, highest + 1):
        for _ in range(params["samples"]):
            yield n, random_distribution(n, _denominator(n), random_state=rng)

# ------------------------------------------------------------------------------


def _theorem1(report, params, rng):

    for n in range(1, params["n_max"] + 1):
        for c in range(1, n + 1):
            residual = core.binomial_identity_residual(n, c)
            report.record(residual == 0, check="binomial", n=n, c=c,
                          residual=residual)

    for n, p in _samples(params, rng):
        for c in range(1, n + 1):
            closed = core.tail_curve(p, c, params["k_max"]).tail
            recursive = core.tail_curve(
                p, c, params["k_max"], method=modes.Recurrence).tail
            report.record(closed == recursive, check="closed-form=recurrence",
                          p=p.to_text(), c=c)


def _oracles(report, params, rng):

    for n, p in _samples(params, rng):
        for c in range(1, n + 1):

            closed = core.tail_curve(p, c, params["k_max"]).tail
            recursive = core.tail_curve(
                p, c, params["k_max"], method=modes.Recurrence).tail
            chain = oracle.markov_tail_curve(p, c, params["k_max"])

            report.record(closed == recursive == chain,
                          check="closed-form=recurrence=markov",
                          p=p.to_text(), c=c)

            k = 0
            while k <= params["k_max"] and \
                    (n + 1) ** k <= params["sequence_budget"]:
                value = oracle.sequence_enumeration_tail(p, c, k)
                report.record(value == closed[k], check="sequences",
                              p=p.to_text(), c=c, k=k)
                k += 1


def _lemma1(report, params, rng):

    for _ in range(params["samples"]):

        n = int(rng.randint(1, min(params["n_max"], 6) + 1))

        y = [Fraction(int(rng.randint(1, 20)), int(rng.randint(1, 20)))
             for _ in range(n)]
        a = Fraction(int(rng.randint(0, 10)), int(rng.randint(1, 10)))
        i = int(rng.randint(1, n + 1))
        k = int(rng.randint(0, min(params["k_max"], 6) + 1))

        residual = core.lemma1_residual(y, a, i, k)

        report.record(residual == 0, check="lemma1",
                      y=[str(v) for v in y], a=str(a), i=i, k=k)


def _corollary1(report, params, rng):

    for n, p in _samples(params, rng):
        for c in range(1, n + 1):
            residuals = core.corollary_identity_residual(p, c)
            report.record(all(r == 0 for r in residuals), check="corollary",
                          p=p.to_text(), c=c)


def _theorem2(report, params, rng):

    for n, p in _samples(params, rng):
        margins = majorization.check_expectation_order(p)
        report.record(margins.holds(), check="expectation-order",
                      p=p.to_text(), first=margins.first,
                      second=margins.second)


def _theorem3(report, params, rng):

    for n, p in _samples(params, rng, lowest=2, highest=5):

        i, j = [int(v) for v in rng.choice(np.arange(1, n + 1), size=2,
                                           replace=False)]
        lam = Fraction(int(rng.randint(0, 21)), 20)

        margin = majorization.check_mixing_step(p, i, j, lam, params["k_max"])

        report.record(margin >= 0, check="mixing-step", p=p.to_text(), i=i,
                      j=j, mixing=lam, margin=margin)

        trace = majorization.flatten_to_v(p)

        report.record(
            trace.final == p.almost_uniform() and len(trace) <= n - 1,
            check="flatten-endpoint", p=p.to_text())

        margin = majorization.check_flatten_trace(trace, params["k_max"])

        report.record(margin is None or margin >= 0, check="flatten-margins",
                      p=p.to_text(), margin=margin)


def _theorem4(report, params, rng):

    for n, p in _samples(params, rng):

        margins = majorization.check_full_collection_order(p, params["k_max"])

        report.record(margins.holds(), check="full-collection-order",
                      p=p.to_text(), first=margins.first,
                      second=margins.second)

        residual, margin = majorization.almost_uniform_mixture_margins(
            p.null_mass, n, params["k_max"])

        report.record(residual == 0 and margin >= 0, check="mixture",
                      p=p.to_text(), residual=residual, margin=margin)


def _theorem5(report, params, rng):

    for n, p in _samples(params, rng, lowest=2):

        margins = majorization.check_pair_collection_order(p, params["k_max"])

        report.record(margins.holds(), check="pair-collection-order",
                      p=p.to_text(), first=margins.first,
                      second=margins.second)

# ------------------------------------------------------------------------------

SUITES = {
    "theorem1": _theorem1,
    "lemma1": _lemma1,
    "corollary1": _corollary1,
    "theorem2": _theorem2,
    "theorem3": _theorem3,
    "theorem4": _theorem4,
    "theorem5": _theorem5,
    "oracles": _oracles
}

# ------------------------------------------------------------------------------


def run_suite(suite, n_max=6, k_max=20, samples=50, seed=0,
              sequence_budget=SEQUENCE_BUDGET, silent=True):
    """Runs one verification suite.

    Args:
        suite (str): One of the keys of :const:`SUITES`.
        n_max (int): Largest number of coupons, at most
            :const:`~coupons.oracle.MAX_STATES_N`.
        k_max (int): Largest number of draws.
        samples (int): Random distributions per n.
        seed (int): Seed of the sampling.
        sequence_budget (int): Largest number of draw sequences the
            oracle suite enumerates per instance, at most
            :const:`~coupons.oracle.MAX_SEQUENCES`.
        silent (bool): Print a summary if False.

    Returns:
        :class:`SuiteReport`

    Raises:
        ValueError: If the suite is unknown or a parameter out of range.
    """

    if suite not in SUITES:
        raise ValueError(
            "Unknown suite '" + str(suite) + "'. Choose from " +
            ", ".join(sorted(SUITES)) + ".")

    if not isinstance(n_max, int) or n_max < 1 or \
            n_max > oracle.MAX_STATES_N:
        raise ValueError(
            "n_max must lie in 1.." + str(oracle.MAX_STATES_N) + ".")

    if not isinstance(k_max, int) or k_max < 0:
        raise ValueError("k_max must be an int >= 0.")

    if not isinstance(samples, int) or samples < 1:
        raise ValueError("samples must be a positive int.")

    if not isinstance(seed, int) or seed < 0 or seed >= 2 ** 32:
        raise ValueError("seed must lie in [0, 2^32).")

    if not isinstance(sequence_budget, int) or sequence_budget < 1 or \
            sequence_budget > oracle.MAX_SEQUENCES:
        raise ValueError(
            "sequence_budget must lie in 1.." + str(oracle.MAX_SEQUENCES) +
            ".")

    params = {
        "n_max": n_max,
        "k_max": k_max,
        "samples": samples,
        "seed": seed,
        "sequence_budget": sequence_budget
    }

    report = SuiteReport(suite, params)

    SUITES[suite](report, params, np.random.RandomState(seed))

    if not silent:
        print("Suite " + suite + ": " + str(report.checks) + " checks, " +
              str(report.failed) + " failed.")

    return report

# ------------------------------------------------------------------------------
