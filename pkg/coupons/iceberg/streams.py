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
Generate the item stream a single router observes.

These tables are for inspecting a single epoch item by item.
:func:`~coupons.iceberg.run_simulation` does not build them; it draws
the same epochs in vectorized blocks.
"""

import numpy as np
import pandas as pd

# -----------------------------------------------------------------------------


def generate_stream(router, length=None, random_state=None):
    """Generate a random item stream for one router.

    Every position of the stream carries one item drawn from the router's
    distribution. Item 0 stands for all infrequent items, which the router
    throws away; items 1..n are the frequent ones.

    The table has 4 columns:

    * `position`: 1-based position in the stream
    * `item`: the item drawn, 0 for an infrequent one
    * `new`: whether a frequent item shows up for the first time
    * `collected`: number of distinct frequent items seen so far

    Args:
        router (:class:`~coupons.iceberg.RouterConfig`): The router.
        length (int, optional): Number of items. Defaults to the router's
            stream cap.
        random_state (int, optional): Determines random number generation
            for the stream. Pass an int for reproducible output across
            multiple function calls.

    Returns:
        :class:`pandas.DataFrame`
    """

    length = router.stream_cap if length is None else length

    if not isinstance(length, int) or length < 1:
        raise ValueError(
            "Stream length must be a positive int, got " + repr(length) + ".")

    random = np.random.RandomState(random_state)

    p = router.distribution

    probabilities = np.array(
        [float(p.null_mass)] + [float(w) for w in p.weights])
    probabilities /= probabilities.sum()

    items = random.choice(p.n + 1, size=length, p=probabilities)

    stream = pd.DataFrame()
    stream["position"] = np.arange(1, length + 1)
    stream["item"] = items

    first = ~stream["item"].duplicated()
    stream["new"] = first & (stream["item"] != 0)
    stream["collected"] = stream["new"].cumsum()

    return stream

# -----------------------------------------------------------------------------


def collection_time(stream, c):
    """Position at which the c-th distinct frequent item shows up.

    Returns:
        int: The position; None if the stream ends earlier.
    """

    reached = stream.loc[stream["collected"] >= c, "position"]

    if reached.empty:
        return None

    return int(reached.iloc[0])
