import json

import pytest

from click.testing import CliRunner

import coupons
import coupons.majorization as majorization
import coupons.suites as suites

from coupons.cli import cli
from coupons.majorization import ScanReport

EXAMPLE = "1/16,1/6,1/4,1/8,7/24"


@pytest.fixture
def runner():
    return CliRunner()


def _record(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


# ------------------------------------------------------------------------------


def test_tail_csv(runner):
    result = runner.invoke(cli, [
        "tail", "--p", EXAMPLE, "--c", "5", "--kmax", "20", "--mode", "exact",
        "--format", "csv"])

    assert result.exit_code == 0, result.output

    lines = result.output.splitlines()

    assert lines[0] == "k,tail,pmf"
    assert len(lines) == 22
    assert lines[1:6] == ["0,1,0", "1,1,0", "2,1,0", "3,1,0", "4,1,0"]


def test_tail_single_k(runner):
    result = runner.invoke(cli, [
        "tail", "--p", "0.3,0.5", "--c", "2", "--k", "2", "--format", "csv"])

    assert result.exit_code == 0, result.output
    assert result.output.splitlines() == ["k,tail,pmf", "2,7/10,3/10"]


def test_tail_methods_agree(runner):
    outputs = []

    for method in ("closed-form", "recurrence", "oracle-dp"):
        record = _record(runner.invoke(cli, [
            "tail", "--p", EXAMPLE, "--c", "3", "--kmax", "12",
            "--method", method]))
        outputs.append(record["results"]["tail"])

    assert outputs[0] == outputs[1] == outputs[2]


def test_tail_json_record(runner):
    record = _record(runner.invoke(cli, [
        "tail", "--p", "0.3,0.5", "--c", "2", "--kmax", "3"]))

    assert record["command"] == "tail"
    assert record["mode"] == "exact"
    assert record["version"] == coupons.__version__
    assert len(record["input_hash"]) == 64
    assert record["results"]["tail"][2] == {"numerator": 7, "denominator": 10}


def test_mode_from_environment(runner):
    record = _record(runner.invoke(
        cli, ["tail", "--p", "0.3,0.5", "--c", "2", "--kmax", "3"],
        env={"COUPONS_MODE": "float"}))

    assert record["mode"] == "float"
    assert record["results"]["tail"][2] == pytest.approx(0.7)


def test_pmf(runner):
    result = runner.invoke(cli, [
        "pmf", "--p", "1/2,1/2", "--c", "2", "--kmax", "3", "--format", "csv"])

    assert result.exit_code == 0, result.output
    assert result.output.splitlines() == [
        "k,pmf", "0,0", "1,0", "2,1/2", "3,1/4"]


def test_moments(runner):
    record = _record(runner.invoke(cli, [
        "moments", "--p", "1/2,1/2", "--c", "2"]))

    assert record["results"]["expectation"] == {
        "numerator": 3, "denominator": 1}
    assert record["results"]["second_moment"] == {
        "numerator": 11, "denominator": 1}


def test_flatten_worked_example(runner):
    record = _record(runner.invoke(cli, [
        "flatten", "--p", EXAMPLE, "--schedule", "4:5,2:5,1:3,5:3"]))

    vectors = record["results"]["vectors"]

    assert len(vectors) == 4
    assert vectors[0][3] == {"numerator": 43, "denominator": 240}
    assert vectors[0][4] == {"numerator": 19, "denominator": 80}
    assert vectors[2][2] == {"numerator": 2, "denominator": 15}
    assert all(entry == {"numerator": 43, "denominator": 240}
               for entry in vectors[3])
    assert record["results"]["mixing"][0] == {
        "numerator": 27, "denominator": 40}


def test_flatten_csv(runner):
    result = runner.invoke(cli, [
        "flatten", "--p", EXAMPLE, "--schedule", "4:5,2:5,1:3,5:3",
        "--format", "csv"])

    assert result.exit_code == 0, result.output

    lines = result.output.splitlines()

    assert lines[0] == "step,i,j,lambda,p_1,p_2,p_3,p_4,p_5"
    assert lines[-1].endswith("43/240,43/240,43/240,43/240,43/240")


def test_verify(runner):
    record = _record(runner.invoke(cli, [
        "verify", "--suite", "oracles", "--nmax", "3", "--kmax", "8",
        "--samples", "2", "--seed", "7"]))

    assert record["results"]["failed"] == 0
    assert record["results"]["checks"] > 0


def test_verify_failure_exit_code(runner, monkeypatch):
    def failing(report, params, rng):
        report.record(False, check="forced")

    monkeypatch.setitem(suites.SUITES, "lemma1", failing)

    result = runner.invoke(cli, ["verify", "--suite", "lemma1"])

    assert result.exit_code == 3


def test_scan(runner):
    record = _record(runner.invoke(cli, [
        "scan", "--n", "3", "--c", "2", "--kmax", "10", "--resolution", "6"]))

    assert record["results"]["certificate"] is None

    record = _record(runner.invoke(cli, [
        "scan", "--n", "1", "--c", "1", "--kmax", "5", "--resolution", "4"]))

    assert record["results"]["samples"] == 3


def test_scan_counterexample_exit_code(runner, monkeypatch):
    def certified(*args, **kwargs):
        params = {"n": 4, "c": 3, "k_max": 20, "scheme": "grid", "seed": None,
                  "resolution": 10}
        return ScanReport(params, 1, -1.0, 0.0, 1, certificate={
            "distribution": None, "c": 3, "k": 7, "first": -1.0,
            "second": 0.0})

    monkeypatch.setattr(majorization, "scan_conjecture", certified)

    result = runner.invoke(cli, ["scan", "--n", "4", "--c", "3"])

    assert result.exit_code == 3


def test_simulate(runner):
    result = runner.invoke(cli, [
        "simulate", "--p", "0.3,0.5", "--c", "2", "--replications", "2000",
        "--seed", "1", "--kmax", "5", "--format", "csv"])

    assert result.exit_code == 0, result.output

    lines = result.output.splitlines()

    assert lines[0] == "k,tail,stderr"
    assert len(lines) == 7


def test_iceberg(runner, tmp_path):
    path = tmp_path / "experiment.json"

    path.write_text(json.dumps({
        "schema_version": 1,
        "rounds": 500,
        "seed": 3,
        "routers": [
            {"name": "skewed", "weights": ["1/10", "1/5", "1/5", "3/10"],
             "c": 3},
            {"name": "uniform", "weights": ["1/5", "1/5", "1/5", "1/5"],
             "c": 3}
        ]
    }))

    record = _record(runner.invoke(cli, ["iceberg", str(path)]))

    comparison = record["results"]["comparison"]

    assert comparison[0]["name"] == "uniform"
    assert comparison[0]["is_minimizer"] is True
    assert comparison[1]["is_minimizer"] is False


# ------------------------------------------------------------------------------


def test_malformed_weights(runner):
    result = runner.invoke(cli, ["tail", "--p", "1/2,abc", "--c", "1",
                                 "--kmax", "3"])

    assert result.exit_code == 1
    assert "position 2" in result.output


def test_invalid_inputs(runner):
    assert runner.invoke(cli, ["tail", "--p", "1/2,1/3", "--c", "3",
                               "--kmax", "3"]).exit_code == 1
    assert runner.invoke(cli, ["tail", "--p", "1/2,1/3",
                               "--c", "1"]).exit_code == 1
    assert runner.invoke(cli, ["tail", "--p", "1/2", "--c", "1", "--kmax",
                               "3", "--mode", "decimal"]).exit_code == 1
    assert runner.invoke(
        cli, ["tail", "--p", "1/2", "--c", "1", "--kmax", "3"],
        env={"COUPONS_MODE": "bogus"}).exit_code == 1
    assert runner.invoke(cli, ["flatten", "--p", EXAMPLE,
                               "--schedule", "3:5"]).exit_code == 1
    assert runner.invoke(cli, ["scan", "--n", "7", "--c", "3"]).exit_code == 1


def test_cap_exceeded(runner, monkeypatch):
    monkeypatch.setattr(coupons, "max_subsets", 2)

    result = runner.invoke(cli, ["tail", "--p", EXAMPLE, "--c", "3",
                                 "--kmax", "5"])

    assert result.exit_code == 2


def test_all_aborted_exit_code(runner, monkeypatch, tmp_path):
    monkeypatch.setattr(coupons, "max_draws", 1)

    result = runner.invoke(cli, ["simulate", "--p", "0.3,0.5", "--c", "2",
                                 "--replications", "100"])

    assert result.exit_code == 2
    assert "aborted" in result.output

    path = tmp_path / "quiet.json"

    path.write_text(json.dumps({
        "schema_version": 1,
        "rounds": 100,
        "routers": [{"name": "quiet", "weights": ["1/100", "1/100"], "c": 2,
                     "stream_cap": 1}]
    }))

    assert runner.invoke(cli, ["iceberg", str(path)]).exit_code == 2


def test_byte_identical_outputs(runner, tmp_path):
    for command in (
            ["tail", "--p", EXAMPLE, "--c", "4", "--kmax", "15"],
            ["simulate", "--p", "0.3,0.5", "--c", "2", "--replications",
             "3000", "--seed", "9"],
            ["scan", "--n", "3", "--c", "2", "--kmax", "6", "--scheme",
             "random", "--samples", "4", "--seed", "2"]):

        first, second = tmp_path / "first.json", tmp_path / "second.json"

        assert runner.invoke(cli, command + ["--out", str(first)]).exit_code == 0
        assert runner.invoke(cli, command + ["--out", str(second)]).exit_code == 0

        assert first.read_bytes() == second.read_bytes()


@pytest.mark.slow
def test_verify_oracles_full(runner):
    result = runner.invoke(cli, [
        "verify", "--suite", "oracles", "--nmax", "6", "--kmax", "20",
        "--seed", "7"])

    assert result.exit_code == 0
