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
Desk-scale model of routers that measure how long it takes to see c
distinct frequent items, and of the server that aggregates their reports
and compares them with the exact expectations.

Only the measurement of the collection time is modeled: there is no
alarm logic and no transport.
"""

import json
import math
import warnings

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd

import coupons.arithmetic as arithmetic
import coupons.core as core
import coupons.modes as modes

from coupons.combinatorics import CapExceededError
from coupons.distribution import DrawDistribution, make_distribution
from coupons.montecarlo.sampler import GENERATOR, _simulate_block, make_stream
from coupons.reports import _Report, _jsonify

# ------------------------------------------------------------------------------

SCHEMA_VERSION = 1

# ------------------------------------------------------------------------------


class RouterConfig(object):
    """
    One router: the distribution of the items it observes, the number c
    of distinct frequent items it waits for, and the longest stream it
    watches in one epoch.

    Args:
        name (str): Name used in reports.
        p (:class:`~coupons.distribution.DrawDistribution` or List): The
            frequent items; the remaining mass p_0 is the share of
            infrequent items the router throws away.
        c (int): Collection target, 1 <= c <= n.
        stream_cap (int): Epochs that have not collected c items after
            this many items are aborted.
    """

    def __init__(self, name, p, c=1, stream_cap=10 ** 6):

        if not isinstance(p, DrawDistribution):
            p = make_distribution(p, mode=modes.Exact)

        self.distribution = p.as_exact()

        self.params = {
            "name": name,
            "c": c,
            "stream_cap": stream_cap
        }

        self.validate()

    # -------------------------------------------------------------------------

    def __repr__(self):
        return "RouterConfig(" + repr(self.name) + ", " + \
            repr(self.distribution) + ", c=" + str(self.c) + \
            ", stream_cap=" + str(self.stream_cap) + ")"

    # -------------------------------------------------------------------------

    @property
    def name(self):
        return self.params["name"]

    @property
    def c(self):
        return self.params["c"]

    @property
    def stream_cap(self):
        return self.params["stream_cap"]

    @property
    def signature(self):
        """(n, c, p_0); routers with equal signatures are comparable."""
        return (self.distribution.n, self.c, self.distribution.null_mass)

    # -------------------------------------------------------------------------

    def get_params(self):
        """
        Returns the parameters of the router.
        """
        return self.params

    # -------------------------------------------------------------------------

    def set_params(self, params=None, **kwargs):
        """
        Sets parameters of the router.

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

        if not isinstance(self.name, str) or not self.name:
            raise TypeError("Router name must be a non-empty str.")

        for key in ("c", "stream_cap"):
            value = self.params[key]
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(
                    "Parameter " + key + " of router '" + self.name +
                    "' must be an int, got " + repr(value) + ".")

        if self.c < 1 or self.c > self.distribution.n:
            raise ValueError(
                "Router '" + self.name + "': collection target c = " +
                str(self.c) + " must satisfy 1 <= c <= n = " +
                str(self.distribution.n) + ".")

        if self.stream_cap < self.c:
            raise ValueError(
                "Router '" + self.name + "': stream_cap must be at least c.")

# ------------------------------------------------------------------------------


def _router_from_json(entry, position):

    if not isinstance(entry, dict):
        raise ValueError("Router " + str(position) + " must be an object.")

    unknown = set(entry) - {"name", "weights", "c", "stream_cap"}

    if unknown:
        raise ValueError(
            "Router " + str(position) + " has unknown keys: " +
            ", ".join(sorted(unknown)) + ".")

    if "weights" not in entry:
        raise ValueError("Router " + str(position) + " has no weights.")

    kwargs = {
        key: entry[key] for key in ("c", "stream_cap") if key in entry}

    return RouterConfig(
        entry.get("name", "router-" + str(position)),
        make_distribution(entry["weights"], mode=modes.Exact),
        **kwargs)


def load_config(path):
    """Reads an experiment from a JSON file.

    The file holds an object with the keys

    * `schema_version`: must be 1
    * `routers`: list of objects with `name`, `weights` (strings "a/b" or
      decimals, or numbers), `c` and optionally `stream_cap`
    * `rounds`: number of epochs per router
    * `seed`: seed of the experiment

    Args:
        path (str): Path of the file.

    Returns:
        dict: Keys routers (list of :class:`RouterConfig`), rounds, seed.

    Raises:
        ValueError: If the file does not follow the schema.
    """

    with open(path) as f:
        try:
            raw = json.load(f)
        except ValueError as error:
            raise ValueError("Config " + str(path) + " is no valid JSON: " +
                             str(error))

    if not isinstance(raw, dict):
        raise ValueError("Config must be a JSON object.")

    if raw.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(
            "Unsupported schema_version " + repr(raw.get("schema_version")) +
            ", expected " + str(SCHEMA_VERSION) + ".")

    unknown = set(raw) - {"schema_version", "routers", "rounds", "seed"}

    if unknown:
        raise ValueError(
            "Unknown keys in config: " + ", ".join(sorted(unknown)) + ".")

    routers = raw.get("routers")

    if not isinstance(routers, list) or not routers:
        raise ValueError("Config needs a non-empty list of routers.")

    return {
        "routers": [
            _router_from_json(entry, position)
            for position, entry in enumerate(routers, start=1)
        ],
        "rounds": raw.get("rounds", 10000),
        "seed": raw.get("seed", 0)
    }

# ------------------------------------------------------------------------------


def _baseline(router):
    try:
        return core.expectation(router.distribution, router.c, mode=modes.Exact)
    except CapExceededError:
        warnings.warn(
            "Exact baseline of router '" + router.name + "' exceeds the "
            "subset cap; reported as None.", RuntimeWarning)
        return None


def _summary(name, times, rounds, exact_mean, uniform_mean):

    m = times.size

    mean = float(times.mean())
    std = float(times.std(ddof=1)) if m > 1 else 0.0
    stderr = std / math.sqrt(m)
    q50, q90, q99 = np.quantile(times, [0.5, 0.9, 0.99]).tolist()

    if exact_mean is not None and stderr > 0:
        z_score = (mean - float(exact_mean)) / stderr
    else:
        z_score = None

    return {
        "name_": name,
        "rounds_": rounds,
        "aborted_": rounds - m,
        "mean_": mean,
        "std_": std,
        "q50_": q50,
        "q90_": q90,
        "q99_": q99,
        "stderr_": stderr,
        "exact_mean_": exact_mean,
        "uniform_mean_": uniform_mean,
        "z_score_": z_score
    }


class AggregateReport(_Report):
    """
    What the server learns from all routers: per-router statistics of the
    collection time next to the exact expectation E(T_{c,n}(p)) and the
    uniform baseline n (H_n - H_{n-c})/(1 - p_0), plus a pooled row over
    all epochs of all routers.
    """

    def __init__(self, routers, times, rounds, seed):
        super(AggregateReport, self).__init__()

        rows = []

        for router, sample in zip(routers, times):

            if sample.size == 0:
                raise CapExceededError(
                    "Every epoch of router '" + router.name + "' was aborted "
                    "after " + str(router.stream_cap) + " items.")

            n, c, p0 = router.signature

            row = _summary(
                router.name, sample, rounds, _baseline(router),
                core.expectation_almost_uniform(n, c, p0, mode=modes.Exact))

            row["n_"] = n
            row["c_"] = c
            row["p0_"] = p0
            row["almost_uniform_"] = router.distribution.is_almost_uniform()

            rows.append(row)

        pooled_sample = np.concatenate(times)

        exact = [row["exact_mean_"] for row in rows]
        uniform = [row["uniform_mean_"] for row in rows]
        counts = [sample.size for sample in times]

        def weighted(values):
            if any(value is None for value in values):
                return None
            return sum(
                value * count for value, count in zip(values, counts)
            ) / sum(counts)

        pooled = _summary("pooled", pooled_sample, rounds * len(routers),
                          weighted(exact), weighted(uniform))

        signatures = set(router.signature for router in routers)

        if len(signatures) == 1:
            pooled["n_"], pooled["c_"], pooled["p0_"] = signatures.pop()
        else:
            pooled["n_"], pooled["c_"], pooled["p0_"] = None, None, None

        pooled["almost_uniform_"] = None

        self.thisptr["type_"] = "AggregateReport"
        self.thisptr["rounds_"] = rounds
        self.thisptr["seed_"] = seed
        self.thisptr["generator_"] = GENERATOR
        self.thisptr["routers_"] = rows
        self.thisptr["pooled_"] = pooled

    # -------------------------------------------------------------------------

    @property
    def routers(self):
        """Per-router rows as dicts without trailing underscores."""
        return [
            {key.rstrip("_"): value for key, value in row.items()}
            for row in self.thisptr["routers_"]
        ]

    @property
    def pooled(self):
        return {
            key.rstrip("_"): value
            for key, value in self.thisptr["pooled_"].items()
        }

    # -------------------------------------------------------------------------

    def to_json(self):
        payload = super(AggregateReport, self).to_json()
        payload["routers"] = _jsonify(self.routers)
        payload["pooled"] = _jsonify(self.pooled)
        return payload

    # -------------------------------------------------------------------------

    def to_dataframe(self):
        """One row per router plus the pooled row, columns name, n, c, p0,
        rounds, mean, std, q50, q90, q99, stderr, exact_mean, uniform_mean,
        z_score. Exact values are rendered as "a/b"."""

        columns = ["name", "n", "c", "p0", "rounds", "mean", "std", "q50",
                   "q90", "q99", "stderr", "exact_mean", "uniform_mean",
                   "z_score"]

        def render(value):
            if value is None:
                return None
            if isinstance(value, (int, float)):
                return value
            return arithmetic.to_text(value)

        data = [
            [render(row[column]) for column in columns]
            for row in self.routers + [self.pooled]
        ]

        return pd.DataFrame(data, columns=columns)

# ------------------------------------------------------------------------------


def run_simulation(routers, rounds, seed=0, block_size=8192, n_jobs=1,
                   silent=True):
    """Runs `rounds` independent collection epochs on every router and
    aggregates them.

    Epochs of router r are cut into blocks; block b draws from substream
    (r, b) of `seed`, so the report depends only on the inputs. Routers run
    concurrently when `n_jobs` > 1 and are merged in their given order.

    Args:
        routers (List[:class:`RouterConfig`]): The routers.
        rounds (int): Epochs per router.
        seed (int): Seed of the experiment.
        block_size (int): Epochs per random substream.
        n_jobs (int): Number of threads.
        silent (bool): Print progress if False.

    Returns:
        :class:`AggregateReport`

    Raises:
        ValueError: If there are no routers or a parameter is invalid.
        TypeError: If a router is not a :class:`RouterConfig`.
        CapExceededError: If every epoch of a router hits its stream cap.
    """

    if not routers:
        raise ValueError("At least one router is needed.")

    for router in routers:
        if not isinstance(router, RouterConfig):
            raise TypeError("Routers must be RouterConfig objects.")

    names = [router.name for router in routers]

    if len(set(names)) != len(names):
        raise ValueError("Router names must be unique.")

    for key, value in (("rounds", rounds), ("seed", seed),
                       ("block_size", block_size), ("n_jobs", n_jobs)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(key + " must be an int, got " + repr(value) + ".")

    if rounds < 1 or block_size < 1 or n_jobs < 1:
        raise ValueError("rounds, block_size and n_jobs must be positive.")

    if seed < 0 or seed >= 2 ** 64:
        raise ValueError("seed must lie in [0, 2^64).")

    def observe(indexed):

        index, router = indexed

        p = router.distribution.as_float()
        cumulative = p.cumulative()

        blocks = []

        for b in range(int(math.ceil(rounds / float(block_size)))):
            size = min(block_size, rounds - b * block_size)
            blocks.append(_simulate_block(
                cumulative, p.n, router.c, size, make_stream(seed, (index, b)),
                router.stream_cap))

        if not silent:
            print("Router '" + router.name + "' done.")

        times = np.concatenate(blocks)

        return times[times > 0]

    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            times = list(pool.map(observe, enumerate(routers)))
    else:
        times = [observe(indexed) for indexed in enumerate(routers)]

    return AggregateReport(routers, times, rounds, seed)

# ------------------------------------------------------------------------------


def compare_to_optimal(report):
    """Orders the routers of a report by their exact expectation.

    All routers must share n, c and p_0. The almost-uniform distribution
    minimizes the expectation among them, so an almost-uniform router is
    always flagged as a minimizer.

    Args:
        report (:class:`AggregateReport`): The report.

    Returns:
        :class:`pandas.DataFrame`: Columns name, exact_mean (as "a/b"),
            exact_mean_float, mean, stderr, z_score, almost_uniform and
            is_minimizer, sorted by exact_mean.

    Raises:
        ValueError: If fewer than two routers are given, their (n, c, p_0)
            differ, or a baseline is missing.
    """

    rows = report.routers

    if len(rows) < 2:
        raise ValueError("Comparing needs at least two routers.")

    signatures = set((row["n"], row["c"], row["p0"]) for row in rows)

    if len(signatures) != 1:
        raise ValueError(
            "Routers are not comparable; (n, c, p0) differ: " +
            ", ".join(sorted(
                "(" + str(n) + ", " + str(c) + ", " +
                arithmetic.to_text(p0) + ")"
                for n, c, p0 in signatures)) + ".")

    if any(row["exact_mean"] is None for row in rows):
        raise ValueError("Every router needs an exact baseline.")

    best = min(row["exact_mean"] for row in rows)

    ordered = sorted(rows, key=lambda row: row["exact_mean"])

    return pd.DataFrame({
        "name": [row["name"] for row in ordered],
        "exact_mean": [arithmetic.to_text(row["exact_mean"]) for row in ordered],
        "exact_mean_float": [float(row["exact_mean"]) for row in ordered],
        "mean": [row["mean"] for row in ordered],
        "stderr": [row["stderr"] for row in ordered],
        "z_score": [row["z_score"] for row in ordered],
        "almost_uniform": [row["almost_uniform"] for row in ordered],
        "is_minimizer": [row["exact_mean"] == best for row in ordered]
    })
