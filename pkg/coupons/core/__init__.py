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
Exact evaluation of the distribution and the moments of the coupon
collector time T_{c,n}(p), the number of draws needed to collect c of the
n non-null coupons when every draw yields coupon ell with probability
p_ell and the null coupon with probability p_0.

Every function accepts a `mode` argument. In exact mode all arithmetic
runs on :class:`fractions.Fraction` and no result is rounded or clamped.
"""

from coupons.combinatorics import harmonic
from coupons.distribution import (
    DrawDistribution,
    make_distribution,
    subset_mass
)

from .identities import (
    binomial_identity_residual,
    corollary_identity_residual,
    lemma1_residual
)
from .moments import (
    MomentReport,
    expectation,
    expectation_almost_uniform,
    expectation_recurrence,
    expectation_uniform,
    expectation_uniform_recurrence,
    limit_gap_almost_uniform,
    limit_gap_uniform,
    moment_r,
    moments,
    second_moment,
    variance
)
from .tail import (
    TailCurve,
    closed_form_terms,
    pmf,
    tail_almost_uniform,
    tail_closed_form,
    tail_curve,
    tail_recurrence
)

__all__ = (
    "DrawDistribution",
    "MomentReport",
    "TailCurve",
    "binomial_identity_residual",
    "closed_form_terms",
    "corollary_identity_residual",
    "expectation",
    "expectation_almost_uniform",
    "expectation_recurrence",
    "expectation_uniform",
    "expectation_uniform_recurrence",
    "harmonic",
    "lemma1_residual",
    "limit_gap_almost_uniform",
    "limit_gap_uniform",
    "make_distribution",
    "moment_r",
    "moments",
    "pmf",
    "second_moment",
    "subset_mass",
    "tail_almost_uniform",
    "tail_closed_form",
    "tail_curve",
    "tail_recurrence",
    "variance"
)
