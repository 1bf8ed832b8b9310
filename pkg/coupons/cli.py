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
Command line interface of the coupons library.

Usage:
    coupons tail --p 1/16,1/6,1/4,1/8,7/24 --c 5 --kmax 20 --format csv
    coupons moments --p 0.3,0.5 --c 2
    coupons flatten --p 1/16,1/6,1/4,1/8,7/24 --schedule 4:5,2:5,1:3,5:3
    coupons verify --suite oracles --nmax 6 --kmax 20 --seed 7
    coupons scan --n 4 --c 3 --kmax 20 --resolution 10
    coupons simulate --p 0.3,0.5 --c 2 --replications 100000 --seed 1
    coupons iceberg experiment.json

Exit codes: 0 success, 1 invalid input, 2 enumeration cap exceeded, 3
counterexample certified by `scan` or failed `verify` suite.

The default arithmetic mode is read from the environment variable
COUPONS_MODE.
"""

import functools
import sys

import click

import coupons
import coupons.core as core
import coupons.iceberg as iceberg
import coupons.majorization as majorization
import coupons.modes as modes
import coupons.montecarlo as montecarlo
import coupons.output as output
import coupons.suites as suites

from coupons.combinatorics import CapExceededError
from coupons.distribution import make_distribution

# ------------------------------------------------------------------------------

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2
EXIT_FINDING = 3

# ------------------------------------------------------------------------------


class _Group(click.Group):
    """Maps click's usage errors onto the validation exit code."""

    def main(self, *args, **kwargs):

        if not kwargs.pop("standalone_mode", True):
            return super(_Group, self).main(
                *args, standalone_mode=False, **kwargs)

        try:
            rv = super(_Group, self).main(
                *args, standalone_mode=False, **kwargs)
        except click.ClickException as error:
            error.show()
            sys.exit(EXIT_INVALID)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_INVALID)

        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def _guarded(f):
    """Turns library errors into exit codes."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except CapExceededError as error:
            click.echo("Error: " + str(error), err=True)
            sys.exit(EXIT_CAP)
        except (ValueError, TypeError, ZeroDivisionError) as error:
            click.echo("Error: " + str(error), err=True)
            sys.exit(EXIT_INVALID)

    return wrapper


def _emit(record, fmt, out):
    text = output.write(record, fmt, out)
    if text is not None:
        click.echo(text, nl=False)

# ------------------------------------------------------------------------------


def _common(f):
    """--mode, --format and --out."""

    f = click.option(
        "--out", type=click.Path(dir_okay=False), default=None,
        help="Write to this file instead of stdout.")(f)
    f = click.option(
        "--format", "fmt", type=click.Choice(["json", "csv"]),
        default="json", show_default=True, help="Output format.")(f)
    f = click.option(
        "--mode", type=click.Choice(list(modes.MODES)), envvar="COUPONS_MODE",
        default=modes.Exact, show_default=True,
        help="Arithmetic mode; defaults to $COUPONS_MODE.")(f)

    return f


_weights = click.option(
    "--p", "weights", required=True,
    help='Comma-separated weights p_1..p_n, "a/b" or decimal.')

# ------------------------------------------------------------------------------


@click.group(cls=_Group)
@click.version_option(version=coupons.__version__, prog_name="coupons")
def cli():
    """
    Exact and simulated distributions of the coupon collector time with a
    null coupon.
    """

# ------------------------------------------------------------------------------


def _curve(weights, c, k, kmax, method, mode):

    if k is None and kmax is None:
        raise ValueError("Give --k or --kmax.")

    p = make_distribution(weights, mode=mode)

    curve = core.tail_curve(p, c, k if kmax is None else kmax,
                            method=method, mode=mode)

    frame = curve.to_dataframe()

    if kmax is None:
        frame = frame[frame["k"] == k].reset_index(drop=True)

    inputs = {"p": p.to_text(), "c": c, "k": k, "kmax": kmax,
              "method": method}

    return curve, frame, inputs


_method = click.option(
    "--method", type=click.Choice([modes.ClosedForm, modes.Recurrence,
                                   modes.OracleDP]),
    default=modes.ClosedForm, show_default=True, help="Evaluation method.")


@cli.command()
@_weights
@click.option("--c", type=int, required=True, help="Collection target.")
@click.option("--k", type=int, default=None, help="Single number of draws.")
@click.option("--kmax", type=int, default=None, help="Largest number of draws.")
@_method
@_common
@_guarded
def tail(weights, c, k, kmax, method, mode, fmt, out):
    """Pr{T > k}; CSV columns k, tail, pmf."""

    curve, frame, inputs = _curve(weights, c, k, kmax, method, mode)

    _emit(output.OutputRecord("tail", inputs, mode, curve, frame=frame),
          fmt, out)


@cli.command()
@_weights
@click.option("--c", type=int, required=True, help="Collection target.")
@click.option("--k", type=int, default=None, help="Single number of draws.")
@click.option("--kmax", type=int, default=None, help="Largest number of draws.")
@_method
@_common
@_guarded
def pmf(weights, c, k, kmax, method, mode, fmt, out):
    """Pr{T = k}; CSV columns k, pmf."""

    curve, frame, inputs = _curve(weights, c, k, kmax, method, mode)

    frame = frame[["k", "pmf"]]

    results = {"c": c, "k": list(frame["k"]), "pmf": curve.pmf()}

    if kmax is None:
        results["pmf"] = [curve.pmf()[k]]

    _emit(output.OutputRecord("pmf", inputs, mode, results, frame=frame),
          fmt, out)


@cli.command()
@_weights
@click.option("--c", type=int, required=True, help="Collection target.")
@click.option("--rmax", type=int, default=2, show_default=True,
              help="Highest moment.")
@click.option("--epsilon", type=float, default=1e-12, show_default=True,
              help="Truncation bound of moments above the second.")
@_common
@_guarded
def moments(weights, c, rmax, epsilon, mode, fmt, out):
    """Moments of T; CSV columns r, value, truncation_bound."""

    p = make_distribution(weights, mode=mode)

    report = core.moments(p, c, r_max=rmax, epsilon=epsilon, mode=mode)

    inputs = {"p": p.to_text(), "c": c, "rmax": rmax, "epsilon": epsilon}

    _emit(output.OutputRecord("moments", inputs, mode, report,
                              frame=report.to_dataframe()), fmt, out)

# ------------------------------------------------------------------------------


@cli.command()
@click.option("--suite", type=click.Choice(sorted(suites.SUITES)),
              required=True, help="Family of statements to verify.")
@click.option("--nmax", type=int, default=6, show_default=True)
@click.option("--kmax", type=int, default=20, show_default=True)
@click.option("--samples", type=int, default=50, show_default=True,
              help="Random distributions per n.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--sequence-budget", type=int,
              default=suites.SEQUENCE_BUDGET, show_default=True,
              help="Most draw sequences enumerated per instance.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_guarded
def verify(suite, nmax, kmax, samples, seed, sequence_budget, fmt, out):
    """Seeded verification sweep in exact arithmetic."""

    report = suites.run_suite(suite, n_max=nmax, k_max=kmax, samples=samples,
                              seed=seed, sequence_budget=sequence_budget)

    inputs = {"suite": suite, "nmax": nmax, "kmax": kmax,
              "samples": samples, "seed": seed,
              "sequence_budget": sequence_budget}

    _emit(output.OutputRecord("verify", inputs, modes.Exact, report,
                              frame=report.to_dataframe()), fmt, out)

    if not report.passed:
        click.echo("Suite " + suite + " failed " + str(report.failed) +
                   " of " + str(report.checks) + " checks.", err=True)
        sys.exit(EXIT_FINDING)

# ------------------------------------------------------------------------------


@cli.command()
@_weights
@click.option("--schedule", default=None,
              help='Mixing pairs "i:j,i:j,..."; entry i moves to the target.')
@_common
@_guarded
def flatten(weights, schedule, mode, fmt, out):
    """Mixing steps from p to the almost-uniform v."""

    p = make_distribution(weights, mode=mode)

    pairs = None if schedule is None else majorization.parse_schedule(schedule)

    trace = majorization.flatten_to_v(p, pairs)

    inputs = {"p": p.to_text(), "schedule": schedule}

    results = {
        "target": trace.target,
        "vectors": [list(vector) for vector in trace.vectors],
        "mixing": [step.mixing for step in trace.steps],
        "pairs": [[step.i, step.j] for step in trace.steps]
    }

    _emit(output.OutputRecord("flatten", inputs, mode, results,
                              frame=trace.to_dataframe()), fmt, out)

# ------------------------------------------------------------------------------


@cli.command()
@click.option("--n", type=int, required=True, help="Number of coupons.")
@click.option("--c", type=int, required=True, help="Collection target.")
@click.option("--kmax", type=int, default=20, show_default=True)
@click.option("--scheme", type=click.Choice(list(majorization.scan.SCHEMES)),
              default="grid", show_default=True)
@click.option("--resolution", type=int, default=10, show_default=True,
              help="Grid denominator.")
@click.option("--samples", type=int, default=100, show_default=True,
              help="Random samples.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_guarded
def scan(n, c, kmax, scheme, resolution, samples, seed, fmt, out):
    """Margins of the tail ordering on a grid or random sample."""

    report = majorization.scan_conjecture(
        n, c, kmax, scheme=scheme, resolution=resolution, samples=samples,
        seed=seed)

    inputs = {"n": n, "c": c, "kmax": kmax, "scheme": scheme,
              "resolution": resolution, "samples": samples, "seed": seed}

    _emit(output.OutputRecord("scan", inputs, modes.Exact, report,
                              frame=report.to_dataframe()), fmt, out)

    if report.counterexample:
        click.echo("Counterexample certified at k = " +
                   str(report.certificate["k"]) + ".", err=True)
        sys.exit(EXIT_FINDING)

# ------------------------------------------------------------------------------


@cli.command()
@_weights
@click.option("--c", type=int, required=True, help="Collection target.")
@click.option("--replications", type=int, default=100000, show_default=True)
@click.option("--kmax", type=int, default=None,
              help="Largest k of the tail estimate.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Threads simulating blocks.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_guarded
def simulate(weights, c, replications, kmax, seed, jobs, fmt, out):
    """Monte Carlo tail estimate; CSV columns k, tail, stderr."""

    p = make_distribution(weights, mode=modes.Float)

    config = montecarlo.SimulationConfig(
        p, c=c, replications=replications, seed=seed, k_max=kmax, n_jobs=jobs)

    report = montecarlo.estimate_tail(config)

    inputs = {"p": p.to_text(), "c": c, "replications": replications,
              "kmax": kmax, "seed": seed}

    _emit(output.OutputRecord("simulate", inputs, modes.Float, report,
                              frame=report.to_dataframe()), fmt, out)

# ------------------------------------------------------------------------------


@cli.command("iceberg")
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Routers simulated concurrently.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_guarded
def iceberg_command(config, jobs, fmt, out):
    """Router experiment described by a JSON CONFIG file."""

    experiment = iceberg.load_config(config)

    report = iceberg.run_simulation(
        experiment["routers"], experiment["rounds"], seed=experiment["seed"],
        n_jobs=jobs)

    results = {"aggregate": report, "comparison": None}

    signatures = set(router.signature for router in experiment["routers"])

    if len(experiment["routers"]) > 1 and len(signatures) == 1:
        comparison = iceberg.compare_to_optimal(report)
        results["comparison"] = comparison.to_dict(orient="records")

    inputs = {
        "routers": [
            {"name": router.name, "p": router.distribution.to_text(),
             "c": router.c, "stream_cap": router.stream_cap}
            for router in experiment["routers"]
        ],
        "rounds": experiment["rounds"],
        "seed": experiment["seed"]
    }

    _emit(output.OutputRecord("iceberg", inputs, modes.Float, results,
                              frame=report.to_dataframe()), fmt, out)

# ------------------------------------------------------------------------------


if __name__ == "__main__":
    cli()
