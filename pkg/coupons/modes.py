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
This module contains the arithmetic modes and evaluation methods used
throughout the coupons library.
"""

# ------------------------------------------------------------------------------

Exact = "exact"
"""Exact rational arithmetic based on :class:`fractions.Fraction`.

No rounding takes place; results of the alternating sums are exact and can
be compared for equality.
"""
Float = "float"
"""IEEE double precision arithmetic.

Results carry no exactness claim. Alternating sums are accumulated with
compensated summation.
"""

MODES = (Exact, Float)

# ------------------------------------------------------------------------------

ClosedForm = "closed-form"
"""Inclusion-exclusion over the subsets of size smaller than c.
"""
Recurrence = "recurrence"
"""Conditioning on the first draw, recursing over (c, k).
"""
OracleDP = "oracle-dp"
"""Mass propagation over the subset lattice.
"""
MonteCarlo = "monte-carlo"
"""Seeded simulation.
"""

METHODS = (ClosedForm, Recurrence, OracleDP, MonteCarlo)

# ------------------------------------------------------------------------------


def resolve(mode):
    """Returns `mode`, or the package default if `mode` is None.

    Args:
        mode (str): One of :const:`Exact`, :const:`Float` or None.

    Raises:
        ValueError: If `mode` is not a known arithmetic mode.
    """

    if mode is None:
        import coupons
        mode = coupons.mode

    if mode not in MODES:
        raise ValueError(
            "Unknown arithmetic mode '" + str(mode) + "'. Use one of " +
            ", ".join(MODES) + ".")

    return mode

# ------------------------------------------------------------------------------
