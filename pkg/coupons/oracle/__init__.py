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
Brute-force verifiers of the collector time that do not reuse the
inclusion-exclusion machinery of :mod:`coupons.core`:

* a dense Markov chain over the subset lattice,
* exhaustive enumeration of draw sequences,
* the multinomial sum over the draw counts for full collection.
"""

from .enumeration import MAX_SEQUENCES, sequence_enumeration_tail
from .markov import (
    MAX_STATES_N,
    markov_mass_vector,
    markov_tail_curve,
    markov_tail_dp
)
from .multinomial import (
    MAX_COMPOSITIONS,
    almost_uniform_cdf_mixture,
    full_collection_cdf_multinomial,
    full_uniform_cdf
)

__all__ = (
    "MAX_COMPOSITIONS",
    "MAX_SEQUENCES",
    "MAX_STATES_N",
    "almost_uniform_cdf_mixture",
    "full_collection_cdf_multinomial",
    "full_uniform_cdf",
    "markov_mass_vector",
    "markov_tail_curve",
    "markov_tail_dp",
    "sequence_enumeration_tail"
)
