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
Exact and simulated distributions of the generalized coupon collector time
T_{c,n}(p): the number of draws, with replacement, from coupons
{0, 1, ..., n} needed to collect c distinct coupons among {1, ..., n}, the
null coupon 0 never counting.
"""

import pkg_resources

# Default arithmetic mode of every operation that takes a `mode`. See
# coupons.modes.
mode = "exact"

# Maximum number of subsets a single closed-form evaluation may enumerate.
max_subsets = 2 ** 24

# A simulated replication is aborted after this many draws.
max_draws = 10 ** 9

# Sum of the weights may exceed one by this much in float mode.
sum_tolerance = 1e-12

# Float alternating sums warn when the largest term exceeds the result by
# this factor.
cancellation_ratio = 1e12

try:
    __version__ = pkg_resources.get_distribution(__name__).version
except pkg_resources.DistributionNotFound:
    # package is not installed
    __version__ = "0.0.0"

__all__ = (
    "arithmetic",
    "cli",
    "combinatorics",
    "core",
    "distribution",
    "iceberg",
    "majorization",
    "modes",
    "montecarlo",
    "oracle",
    "output",
    "reports"
)
