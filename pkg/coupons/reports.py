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
This module contains the base class of all result objects of the coupons
library.
"""

import json

import pandas as pd

import coupons.arithmetic as arithmetic

# ------------------------------------------------------------------------------


def _jsonify(obj):

    if isinstance(obj, dict):
        return {key: _jsonify(value) for key, value in obj.items()}

    if isinstance(obj, (list, tuple)):
        return [_jsonify(value) for value in obj]

    if hasattr(obj, "to_json"):
        return _jsonify(obj.to_json())

    return arithmetic.to_json_value(obj)

# ------------------------------------------------------------------------------


class _Report(object):
    """
    Base class. Should not ever be directly initialized!

    Every report keeps its payload in the dict `thisptr`, whose keys end
    in an underscore. The payload is what gets serialized.
    """

    def __init__(self):
        self.thisptr = dict()
        self.thisptr["type_"] = "none"

    # -------------------------------------------------------------------------

    def __repr__(self):
        return self.thisptr.__repr__()

    # -------------------------------------------------------------------------

    def to_json(self):
        """The payload with exact values as numerator/denominator pairs.

        Returns:
            dict: JSON-compatible payload, keys without the trailing
                underscore.
        """
        return {
            key.rstrip("_"): _jsonify(value)
            for key, value in self.thisptr.items()
        }

    # -------------------------------------------------------------------------

    def dumps(self):
        """Canonical JSON string of :meth:`to_json`."""
        return json.dumps(self.to_json(), sort_keys=True)

    # -------------------------------------------------------------------------

    def to_dataframe(self):
        """Tabular view of the report. Reports without a natural table
        return a single row of their scalar fields."""

        row = {
            key.rstrip("_"): arithmetic.to_text(value)
            for key, value in self.thisptr.items()
            if not isinstance(value, (list, tuple, dict))
        }

        return pd.DataFrame([row])

# ------------------------------------------------------------------------------
