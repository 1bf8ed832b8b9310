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
Simulation of routers that watch their item streams for c distinct
frequent items, with a server that aggregates the collection times and
compares them with the exact expectations.

Example:
    .. code-block:: python

        from coupons.iceberg import RouterConfig, run_simulation

        routers = [
            RouterConfig("uniform", ["1/5", "1/5", "1/5", "1/5"], c=3),
            RouterConfig("skewed", ["1/10", "1/5", "1/5", "3/10"], c=3)
        ]
        report = run_simulation(routers, rounds=100000, seed=7)
        report.to_dataframe()
"""

from .simulation import (
    SCHEMA_VERSION,
    AggregateReport,
    RouterConfig,
    compare_to_optimal,
    load_config,
    run_simulation
)
from .streams import collection_time, generate_stream

__all__ = (
    "SCHEMA_VERSION",
    "AggregateReport",
    "RouterConfig",
    "collection_time",
    "compare_to_optimal",
    "generate_stream",
    "load_config",
    "run_simulation"
)
