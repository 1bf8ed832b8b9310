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
Monte Carlo estimates of the collector time for instances beyond the
reach of exact evaluation.

Example:
    .. code-block:: python

        from coupons.montecarlo import SimulationConfig, estimate_tail

        config = SimulationConfig([0.3, 0.5], c=2, replications=100000,
                                  seed=7, k_max=10)
        report = estimate_tail(config)
        report.tail[2], report.stderr[2]
"""

from .sampler import (
    GENERATOR,
    EstimateReport,
    SimulationConfig,
    coverage,
    estimate_moments,
    estimate_tail,
    make_stream,
    sample_waiting_time
)

__all__ = (
    "GENERATOR",
    "EstimateReport",
    "SimulationConfig",
    "coverage",
    "estimate_moments",
    "estimate_tail",
    "make_stream",
    "sample_waiting_time"
)
