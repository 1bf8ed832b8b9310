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
Scalar handling for the two arithmetic modes.

Exact values are :class:`fractions.Fraction` objects, float values are
Python floats. Inputs may be given as ints, floats, Fractions or strings of
the form "a/b" or decimals.
"""

import math
import numbers
import warnings

from fractions import Fraction

import numpy as np

import coupons
import coupons.modes as modes

# ------------------------------------------------------------------------------


def parse_rational(text):
    """Parses "a/b", an integer or a decimal string into a Fraction.

    Args:
        text (str): The string to parse.

    Returns:
        :class:`fractions.Fraction`

    Raises:
        ValueError: If `text` is not a finite rational literal.
    """

    stripped = text.strip()

    if not stripped:
        raise ValueError("Empty rational literal.")

    try:
        value = Fraction(stripped)
    except (ValueError, ZeroDivisionError):
        raise ValueError("Malformed rational literal '" + text + "'.")

    return value

# ------------------------------------------------------------------------------


def to_number(value, mode=None):
    """Converts `value` to the representation of `mode`.

    Floats are converted to Fractions through their shortest decimal
    representation, so 0.3 becomes 3/10 and not the binary expansion.

    Args:
        value (int, float, str, :class:`fractions.Fraction`): The value.
        mode (str, optional): Arithmetic mode. Defaults to `coupons.mode`.

    Raises:
        TypeError: If `value` is not a number or a string.
        ValueError: If `value` is not finite.
    """

    mode = modes.resolve(mode)

    if isinstance(value, str):
        value = parse_rational(value)

    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise TypeError("Expected a real number, got " + repr(value) + ".")

    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError("Value must be finite, got " + repr(value) + ".")

    if mode == modes.Exact:
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(value)

    return float(value)

# ------------------------------------------------------------------------------


def zero(mode):
    return Fraction(0) if mode == modes.Exact else 0.0


def one(mode):
    return Fraction(1) if mode == modes.Exact else 1.0

# ------------------------------------------------------------------------------


def signed_sum(terms, mode):
    """Sums terms of alternating sign.

    Exact mode sums Fractions without rounding. Float mode uses compensated
    summation (:func:`math.fsum`) and warns when the largest term exceeds
    the result by more than `coupons.cancellation_ratio`, in which case
    most significant digits were lost.

    Args:
        terms (iterable): The summands, already in the representation of
            `mode`.
        mode (str): Arithmetic mode.

    Returns:
        The sum.
    """

    if mode == modes.Exact:
        return sum(terms, Fraction(0))

    terms = list(terms)

    total = math.fsum(terms)

    largest = max((abs(t) for t in terms), default=0.0)

    if largest > coupons.cancellation_ratio * abs(total) and largest > 0.0:
        warnings.warn(
            "Loss of precision in alternating sum: largest term {0:g}, "
            "result {1:g}. Use exact mode.".format(largest, total),
            RuntimeWarning)

    return total

# ------------------------------------------------------------------------------


def clamp(value, mode):
    """Clamps a probability to [0, 1] in float mode. Exact values pass
    unchanged."""

    if mode == modes.Exact:
        return value

    return min(1.0, max(0.0, value))

# ------------------------------------------------------------------------------


def to_json_value(value):
    """Renders a scalar for JSON: Fractions as numerator/denominator pairs,
    everything else as a float or int."""

    if isinstance(value, Fraction):
        return {"numerator": value.numerator, "denominator": value.denominator}

    if isinstance(value, bool) or value is None:
        return value

    if isinstance(value, np.bool_):
        return bool(value)

    if isinstance(value, numbers.Integral):
        return int(value)

    if isinstance(value, numbers.Real):
        return float(value)

    return value

# ------------------------------------------------------------------------------


def to_text(value):
    """Renders a scalar for CSV: Fractions as "a/b"."""

    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return str(value.numerator) + "/" + str(value.denominator)

    if isinstance(value, float):
        return repr(value)

    return str(value)

# ------------------------------------------------------------------------------
