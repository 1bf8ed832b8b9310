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
Handles the output of the coupons command line tool.
"""

import hashlib
import io
import json

import coupons

from coupons.reports import _jsonify

# ----------------------------------------------------


def input_hash(inputs):
    """
    SHA-256 of the canonical JSON of the command inputs.
    """

    canonical = json.dumps(
        _jsonify(inputs), sort_keys=True, separators=(",", ":"))

    return hashlib.sha256(canonical.encode()).hexdigest()

# ----------------------------------------------------


class OutputRecord(object):
    """
    What one command writes: the command echo, the hash of its inputs, the
    arithmetic mode, the results and the version of the tool.

    Identical inputs give identical records in exact mode.

    Args:
        command (str): Name of the subcommand.
        inputs (dict): The parsed inputs.
        mode (str): Arithmetic mode.
        results: Report, dict or list; serialized with `to_json` where
            available.
        frame (:class:`pandas.DataFrame`, optional): Tabular view of the
            results, used for CSV output.
    """

    def __init__(self, command, inputs, mode, results, frame=None):

        self.thisptr = dict()

        self.thisptr["command_"] = command
        self.thisptr["inputs_"] = inputs
        self.thisptr["input_hash_"] = input_hash(inputs)
        self.thisptr["mode_"] = mode
        self.thisptr["results_"] = results
        self.thisptr["version_"] = coupons.__version__

        self.frame = frame

    # ----------------------------------------------------

    def __repr__(self):
        return self.thisptr.__repr__()

    # ----------------------------------------------------

    def to_json(self):
        return {
            key.rstrip("_"): _jsonify(value)
            for key, value in self.thisptr.items()
        }

    # ----------------------------------------------------

    def dumps(self):
        """Canonical JSON, keys sorted."""
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    # ----------------------------------------------------

    def to_csv(self):
        """
        The tabular results with a header row. Exact values appear as "a/b".

        Raises:
            ValueError: If the command has no tabular results.
        """

        if self.frame is None:
            raise ValueError(
                "Command '" + self.thisptr["command_"] + "' has no CSV "
                "output; use --format json.")

        buffer = io.StringIO()

        self.frame.to_csv(buffer, index=False)

        return buffer.getvalue()

# ----------------------------------------------------


def render(record, fmt):
    """
    Renders a record as "json" or "csv".
    """

    if fmt == "json":
        return record.dumps()

    if fmt == "csv":
        return record.to_csv()

    raise ValueError("Unknown format '" + str(fmt) + "'.")

# ----------------------------------------------------


def write(record, fmt, out=None):
    """
    Writes a record to the file `out`, or returns the text for stdout if
    `out` is None.
    """

    text = render(record, fmt)

    if out is None:
        return text

    with open(out, "w", newline="") as f:
        f.write(text)

    return None

# ----------------------------------------------------
