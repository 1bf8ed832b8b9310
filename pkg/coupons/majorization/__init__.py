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
Constructive side of the optimization results: mixing pairs of entries,
flattening a distribution to the almost-uniform v in at most n - 1 steps,
checking the orderings that follow, and scanning for evidence where the
ordering is open.

Example:
    .. code-block:: python

        from coupons.core import make_distribution
        from coupons.majorization import flatten_to_v, parse_schedule

        p = make_distribution(["1/16", "1/6", "1/4", "1/8", "7/24"])
        trace = flatten_to_v(p, parse_schedule("4:5,2:5,1:3,5:3"))
        trace.vectors[-1]
"""

from .mixing import (
    FlattenTrace,
    MixingStep,
    flatten_step,
    flatten_to_v,
    mix_pair,
    parse_schedule
)
from .scan import ScanReport, scan_conjecture
from .verifiers import (
    ChainMargins,
    almost_uniform_mixture_margins,
    check_expectation_order,
    check_flatten_trace,
    check_fnk_monotone,
    check_full_collection_order,
    check_mixing_step,
    check_pair_collection_order,
    check_step,
    check_theorem2,
    check_theorem3,
    check_theorem4,
    check_theorem5,
    convexity_equal_sum_gap,
    convexity_gap,
    full_cdf_v_mixture_margin,
    inverse_sum_residual,
    lemma2_residual,
    lemma3_equal_sum_gap,
    lemma3_gap,
    null_profile,
    null_profile_min_increment,
    tail_chain_margins
)

__all__ = (
    "ChainMargins",
    "FlattenTrace",
    "MixingStep",
    "ScanReport",
    "almost_uniform_mixture_margins",
    "check_expectation_order",
    "check_flatten_trace",
    "check_fnk_monotone",
    "check_full_collection_order",
    "check_mixing_step",
    "check_pair_collection_order",
    "check_step",
    "check_theorem2",
    "check_theorem3",
    "check_theorem4",
    "check_theorem5",
    "convexity_equal_sum_gap",
    "convexity_gap",
    "flatten_step",
    "flatten_to_v",
    "full_cdf_v_mixture_margin",
    "inverse_sum_residual",
    "lemma2_residual",
    "lemma3_equal_sum_gap",
    "lemma3_gap",
    "mix_pair",
    "null_profile",
    "null_profile_min_increment",
    "parse_schedule",
    "scan_conjecture",
    "tail_chain_margins"
)
