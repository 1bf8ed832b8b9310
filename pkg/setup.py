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

"""setup.py for coupons"""

from setuptools import setup, find_packages

long_description = """
    coupons computes the exact distribution and the moments of the coupon
    collector time with a null coupon: the number of draws needed to see c
    of n coupons when every draw may also yield nothing. Exact results use
    rational arithmetic and are cross-checked against brute-force oracles
    and seeded Monte Carlo estimates.

    The package also flattens draw distributions towards the uniform one,
    verifies the resulting orderings of the collection time, and simulates
    routers that wait for c distinct frequent items in their streams.
"""


setup(
    name="coupons",
    version="0.1.0",
    author="The coupons developers",
    description="Coupon collector times with a null coupon",
    long_description=long_description,
    packages=find_packages(),
    install_requires=[
        'pandas',
        'numpy>=1.17',
        'click',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'coupons=coupons.cli:cli',
        ],
    },
    keywords=['coupon collector', 'majorization', 'Monte Carlo'],
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        'Development Status :: 4 - Beta',
    ],
)
