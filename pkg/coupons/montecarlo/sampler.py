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
Seeded simulation of the collector time T_{c,n}(p).

Random numbers come from numpy's counter-based Philox generator. The
replications of one estimate are cut into blocks of equal size and block b
always draws from substream b of the seed, so a report only depends on
its configuration and never on how many threads produced it.
"""

import math

from concurrent.futures import ThreadPoolExecutor

import numpy as np

import coupons
import coupons.modes as modes

from coupons.combinatorics import CapExceededError
from coupons.distribution import DrawDistribution, make_distribution
from coupons.reports import _Report

# ------------------------------------------------------------------------------

GENERATOR = "philox-4x64/1"
"""Name and version of the stream layout recorded in every report."""

# ------------------------------------------------------------------------------


def make_stream(seed, index=0):
    """Substream `index` of `seed`.

    Args:
        seed (int): Non-negative seed, at most 64 bits.
        index (int or tuple): Substream number, or a path of substream
            numbers for nested streams.

    Returns:
        :class:`numpy.random.Generator`
    """

    if isinstance(index, tuple):
        key = index
    else:
        key = (index,)

    sequence = np.random.SeedSequence(entropy=seed, spawn_key=key)

    return np.random.Generator(np.random.Philox(sequence))

# ------------------------------------------------------------------------------


def sample_waiting_time(p, c, rng, max_draws=None):
    """Draws coupons from {0, 1, ..., n} until c distinct non-null coupons
    have been seen.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution`): Distribution.
        c (int): Collection target.
        rng (:class:`numpy.random.Generator`): Random stream, see
            :func:`make_stream`.
        max_draws (int, optional): Guard on the number of draws. Defaults
            to `coupons.max_draws`.

    Returns:
        int: The number of draws, at least c; None if the replication was
            aborted by the guard.
    """

    if c < 1 or c > p.n:
        raise ValueError(
            "Collection target c = " + str(c) + " must satisfy 1 <= c <= " +
            str(p.n) + ".")

    max_draws = coupons.max_draws if max_draws is None else max_draws

    cumulative = p.cumulative()

    collected = np.zeros(p.n + 1, dtype=bool)
    count = 0
    draws = 0

    chunk = max(16, 2 * c)

    while draws < max_draws:

        drawn = np.searchsorted(cumulative, rng.random(chunk), side="right")

        for coupon in drawn.tolist():

            draws += 1

            if coupon and not collected[coupon]:
                collected[coupon] = True
                count += 1
                if count == c:
                    return draws

            if draws >= max_draws:
                break

    return None

# ------------------------------------------------------------------------------


def _simulate_block(cumulative, n, c, size, rng, max_draws):
    """Collector times of `size` replications drawn in lockstep; -1 marks
    replications aborted by the guard."""

    times = np.full(size, -1, dtype=np.int64)

    collected = np.zeros((size, n + 1), dtype=bool)
    counts = np.zeros(size, dtype=np.int64)

    active = np.arange(size)
    draws = 0

    while active.size and draws < max_draws:

        draws += 1

        drawn = np.searchsorted(cumulative, rng.random(active.size), side="right")

        fresh = (drawn > 0) & ~collected[active, drawn]

        collected[active, drawn] = True
        counts[active] += fresh

        done = counts[active] >= c

        times[active[done]] = draws

        active = active[~done]

    return times

# ------------------------------------------------------------------------------


class SimulationConfig(object):
    """
    Configuration of a Monte Carlo estimate.

    Args:
        p (:class:`~coupons.distribution.DrawDistribution` or List):
            Distribution. Lists are validated with
            :func:`~coupons.distribution.make_distribution`.
        c (int): Collection target, 1 <= c <= n.
        replications (int): Number of independent replications.
        seed (int): Non-negative seed below 2^64.
        k_max (int, optional): Largest k of the tail estimate. If None, the
            largest simulated time is used.
        block_size (int): Replications per random substream.
        n_jobs (int): Number of threads simulating blocks.

    Raises:
        ValueError: If a parameter is invalid (see :meth:`validate`).
    """

    def __init__(self, p, c=1, replications=10000, seed=0, k_max=None,
                 block_size=8192, n_jobs=1):

        if not isinstance(p, DrawDistribution):
            p = make_distribution(p, mode=modes.Float)

        self.distribution = p

        self.params = {
            "c": c,
            "replications": replications,
            "seed": seed,
            "k_max": k_max,
            "block_size": block_size,
            "n_jobs": n_jobs
        }

        self.validate()

    # -------------------------------------------------------------------------

    def __repr__(self):
        return "SimulationConfig(" + repr(self.distribution) + ", " + \
            ", ".join(
                key + "=" + repr(value)
                for key, value in sorted(self.params.items())) + ")"

    # -------------------------------------------------------------------------

    @property
    def c(self):
        return self.params["c"]

    @property
    def replications(self):
        return self.params["replications"]

    @property
    def seed(self):
        return self.params["seed"]

    @property
    def k_max(self):
        return self.params["k_max"]

    # -------------------------------------------------------------------------

    def get_params(self):
        """
        Returns the parameters of the simulation.
        """
        return self.params

    # -------------------------------------------------------------------------

    def set_params(self, params=None, **kwargs):
        """
        Sets parameters of the simulation.

        Args:
            params (dict): Parameters as returned by :meth:`get_params`.

        Raises:
            ValueError: If a key is unknown or a value invalid.
        """

        if params is not None:
            items = params.items()
        else:
            items = kwargs.items()

        for key, value in items:

            if key not in self.params:
                raise ValueError("Invalid parameter " + str(key) + ".")

            self.params[key] = value

        self.validate()

        return self

    # -------------------------------------------------------------------------

    def validate(self):
        """Checks every parameter.

        Raises:
            ValueError: If a parameter is out of range.
            TypeError: If a parameter is not an int.
        """

        for key in ("c", "replications", "seed", "block_size", "n_jobs"):
            value = self.params[key]
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise TypeError(
                    "Parameter " + key + " must be an int, got " +
                    repr(value) + ".")

        if self.params["c"] < 1 or self.params["c"] > self.distribution.n:
            raise ValueError(
                "Collection target c = " + str(self.params["c"]) +
                " must satisfy 1 <= c <= n = " + str(self.distribution.n) + ".")

        if self.params["replications"] < 1:
            raise ValueError("replications must be at least 1.")

        if self.params["seed"] < 0 or self.params["seed"] >= 2 ** 64:
            raise ValueError("seed must lie in [0, 2^64).")

        if self.params["block_size"] < 1:
            raise ValueError("block_size must be at least 1.")

        if self.params["n_jobs"] < 1:
            raise ValueError("n_jobs must be at least 1.")

        k_max = self.params["k_max"]

        if k_max is not None and (not isinstance(k_max, int) or k_max < 0):
            raise ValueError("k_max must be None or an int >= 0.")

# ------------------------------------------------------------------------------


def _sample(config, silent=True):
    """Collector times of all replications in replication order."""

    p = config.distribution
    cumulative = p.cumulative()

    block_size = config.params["block_size"]
    replications = config.replications

    blocks = [
        (b, min(block_size, replications - b * block_size))
        for b in range(int(math.ceil(replications / float(block_size))))
    ]

    def run(block):
        index, size = block
        return _simulate_block(
            cumulative, p.n, config.c, size,
            make_stream(config.seed, index), coupons.max_draws)

    if not silent:
        print("Simulating " + str(replications) + " replications in " +
              str(len(blocks)) + " blocks...")

    if config.params["n_jobs"] > 1:
        with ThreadPoolExecutor(max_workers=config.params["n_jobs"]) as pool:
            results = list(pool.map(run, blocks))
    else:
        results = [run(block) for block in blocks]

    return np.concatenate(results)

# ------------------------------------------------------------------------------


class EstimateReport(_Report):
    """
    Simulated tail Pr{T_{c,n}(p) > k} with binomial standard errors, and
    the sample mean and variance of T.

    The estimates are raw relative frequencies; they need not be
    monotone in k.
    """

    def __init__(self, config, times):
        super(EstimateReport, self).__init__()

        valid = times[times > 0]
        aborted = int(times.size - valid.size)
        m = valid.size

        if m == 0:
            raise CapExceededError(
                "Every replication was aborted after " +
                str(coupons.max_draws) + " draws.")

        k_max = config.k_max if config.k_max is not None else int(valid.max())

        # survival[k] = number of samples with T > k
        histogram = np.bincount(valid, minlength=k_max + 2)
        survival = m - np.cumsum(histogram)[:k_max + 1]

        tail = survival / float(m)
        stderr = np.sqrt(tail * (1.0 - tail) / m)

        mean = float(valid.mean())
        variance = float(valid.var(ddof=1)) if m > 1 else 0.0

        self.thisptr["type_"] = "EstimateReport"
        self.thisptr["c_"] = config.c
        self.thisptr["replications_"] = config.replications
        self.thisptr["seed_"] = config.seed
        self.thisptr["generator_"] = GENERATOR
        self.thisptr["method_"] = modes.MonteCarlo
        self.thisptr["k_values_"] = list(range(k_max + 1))
        self.thisptr["tail_"] = tail.tolist()
        self.thisptr["stderr_"] = stderr.tolist()
        self.thisptr["mean_"] = mean
        self.thisptr["variance_"] = variance
        self.thisptr["mean_stderr_"] = math.sqrt(variance / m)
        self.thisptr["second_moment_"] = float(np.mean(valid.astype(np.float64) ** 2))
        self.thisptr["aborted_"] = aborted
        self.thisptr["distribution_"] = config.distribution

    # -------------------------------------------------------------------------

    @property
    def k_values(self):
        return self.thisptr["k_values_"]

    @property
    def tail(self):
        return self.thisptr["tail_"]

    @property
    def stderr(self):
        return self.thisptr["stderr_"]

    @property
    def mean(self):
        return self.thisptr["mean_"]

    @property
    def variance(self):
        return self.thisptr["variance_"]

    @property
    def mean_stderr(self):
        return self.thisptr["mean_stderr_"]

    @property
    def second_moment(self):
        return self.thisptr["second_moment_"]

    @property
    def aborted(self):
        return self.thisptr["aborted_"]

    # -------------------------------------------------------------------------

    def covers(self, k, value, width=3.0):
        """Whether `value` lies within `width` standard errors of the tail
        estimate at k."""

        return abs(self.tail[k] - float(value)) <= width * self.stderr[k]

    def mean_covers(self, value, width=3.0):
        """Whether `value` lies within `width` standard errors of the
        sample mean."""

        return abs(self.mean - float(value)) <= width * self.mean_stderr

    # -------------------------------------------------------------------------

    def to_dataframe(self):
        """Columns k, tail, stderr."""

        import pandas as pd

        return pd.DataFrame({
            "k": self.k_values,
            "tail": self.tail,
            "stderr": self.stderr
        })

# ------------------------------------------------------------------------------


def estimate_tail(config, silent=True):
    """Estimates Pr{T_{c,n}(p) > k} for k = 0, ..., k_max.

    Identical configurations give identical reports.

    Args:
        config (:class:`SimulationConfig`): The simulation.
        silent (bool): If False, prints a progress line.

    Returns:
        :class:`EstimateReport`

    Raises:
        CapExceededError: If every replication hits `coupons.max_draws`.
    """

    if not isinstance(config, SimulationConfig):
        raise TypeError("config must be a SimulationConfig.")

    times = _sample(config, silent=silent)

    report = EstimateReport(config, times)

    if not silent:
        print("Mean collector time: {0:.6g} +/- {1:.2g}".format(
            report.mean, report.mean_stderr))

    return report

# ------------------------------------------------------------------------------


def estimate_moments(config, silent=True):
    """Sample mean (with its standard error), second moment and variance
    of T_{c,n}(p).

    Returns:
        dict: Keys mean, mean_stderr, second_moment, variance,
            replications, aborted.
    """

    params = dict(config.params)
    params["k_max"] = 0

    report = estimate_tail(
        SimulationConfig(config.distribution, **params), silent=silent)

    return {
        "mean": report.mean,
        "mean_stderr": report.mean_stderr,
        "second_moment": report.second_moment,
        "variance": report.variance,
        "replications": config.replications,
        "aborted": report.aborted
    }

# ------------------------------------------------------------------------------


def coverage(config, exact_value, k, runs=100, width=3.0):
    """Counts the runs whose tail estimate at `k` covers `exact_value`
    within `width` standard errors. Run r uses seed `config.seed + r`.

    Returns:
        int
    """

    covered = 0

    for run in range(runs):

        params = dict(config.params)
        params["seed"] = config.seed + run
        params["k_max"] = k

        report = estimate_tail(SimulationConfig(config.distribution, **params))

        if report.covers(k, exact_value, width=width):
            covered += 1

    return covered

# ------------------------------------------------------------------------------
