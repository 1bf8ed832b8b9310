import json

from fractions import Fraction

import pytest

from coupons.combinatorics import CapExceededError
from coupons.core import expectation, make_distribution, variance
from coupons.iceberg import (
    RouterConfig,
    collection_time,
    compare_to_optimal,
    generate_stream,
    load_config,
    run_simulation,
)
from coupons.majorization import flatten_to_v, parse_schedule

UNIFORM = ["1/5", "1/5", "1/5", "1/5"]
SKEWED = ["1/10", "1/5", "1/5", "3/10"]


# ------------------------------------------------------------------------------


def test_single_uniform_router():
    router = RouterConfig("edge", ["1/3", "1/3", "1/3"], c=3)

    report = run_simulation([router], rounds=20000, seed=5)

    row = report.routers[0]

    assert row["exact_mean"] == Fraction(11, 2)
    assert row["uniform_mean"] == Fraction(11, 2)
    assert row["mean"] >= 3
    assert abs(row["mean"] - 5.5) <= 4 * row["stderr"]
    assert report.pooled["rounds"] == 20000


def test_uniform_against_skewed():
    routers = [RouterConfig("skewed", SKEWED, c=3),
               RouterConfig("uniform", UNIFORM, c=3)]

    report = run_simulation(routers, rounds=20000, seed=11)

    frame = compare_to_optimal(report)

    assert list(frame["name"]) == ["uniform", "skewed"]
    assert list(frame["is_minimizer"]) == [True, False]
    assert frame["exact_mean"].iloc[0] == "65/12"

    for row in report.routers:
        assert abs(row["z_score"]) <= 4.0


def test_identical_routers():
    routers = [RouterConfig(name, SKEWED, c=2) for name in ("a", "b", "c")]

    report = run_simulation(routers, rounds=500, seed=1)

    frame = compare_to_optimal(report)

    assert frame["is_minimizer"].all()
    assert len(set(frame["exact_mean"])) == 1


def test_baselines_along_flatten_trace():
    p = make_distribution(["1/16", "1/6", "1/4", "1/8", "7/24"])

    trace = flatten_to_v(p, parse_schedule("4:5,2:5,1:3,5:3"))

    routers = [
        RouterConfig("start", p, c=3),
        RouterConfig("middle", trace.steps[1].after, c=3),
        RouterConfig("flat", trace.final, c=3),
    ]

    report = run_simulation(routers, rounds=200, seed=2)

    baselines = [row["exact_mean"] for row in report.routers]

    assert baselines == sorted(baselines, reverse=True)
    assert baselines[-1] == expectation(p.almost_uniform(), 3)

    frame = compare_to_optimal(report)

    assert frame["name"].iloc[0] == "flat"
    assert frame["almost_uniform"].iloc[0]


def test_incomparable_routers():
    routers = [RouterConfig("a", UNIFORM, c=3),
               RouterConfig("b", ["1/4", "1/4", "1/4", "1/4"], c=3)]

    report = run_simulation(routers, rounds=100, seed=0)

    with pytest.raises(ValueError):
        compare_to_optimal(report)

    single = run_simulation(routers[:1], rounds=100, seed=0)

    with pytest.raises(ValueError):
        compare_to_optimal(single)


def test_determinism():
    routers = [RouterConfig("a", UNIFORM, c=2),
               RouterConfig("b", SKEWED, c=2)]

    first = run_simulation(routers, rounds=1, seed=9)
    second = run_simulation(routers, rounds=1, seed=9)

    assert first.dumps() == second.dumps()

    threaded = run_simulation(routers, rounds=3000, seed=9, block_size=700,
                              n_jobs=2)
    serial = run_simulation(routers, rounds=3000, seed=9, block_size=700)

    assert threaded.dumps() == serial.dumps()


def test_stream_cap_aborts():
    router = RouterConfig("quiet", ["1/100"], c=1, stream_cap=1)

    report = run_simulation([router], rounds=2000, seed=3)

    assert report.routers[0]["aborted"] > 1900
    assert report.routers[0]["mean"] == 1.0


def test_every_epoch_aborted():
    router = RouterConfig("quiet", ["1/100", "1/100"], c=2, stream_cap=1)

    with pytest.raises(CapExceededError):
        run_simulation([router], rounds=100, seed=3)


def test_dataframe():
    routers = [RouterConfig("a", UNIFORM, c=2),
               RouterConfig("b", SKEWED, c=2)]

    frame = run_simulation(routers, rounds=300, seed=4).to_dataframe()

    assert list(frame.columns) == [
        "name", "n", "c", "p0", "rounds", "mean", "std", "q50", "q90", "q99",
        "stderr", "exact_mean", "uniform_mean", "z_score"]
    assert list(frame["name"]) == ["a", "b", "pooled"]
    assert frame["p0"].iloc[2] == "1/5"
    assert frame["rounds"].iloc[2] == 600


def test_invalid_simulation():
    router = RouterConfig("a", UNIFORM, c=2)

    with pytest.raises(ValueError):
        run_simulation([], rounds=10)

    with pytest.raises(ValueError):
        run_simulation([router, RouterConfig("a", SKEWED, c=2)], rounds=10)

    with pytest.raises(ValueError):
        run_simulation([router], rounds=0)

    with pytest.raises(TypeError):
        run_simulation(["a"], rounds=10)


def test_router_config():
    router = RouterConfig("a", UNIFORM, c=2)

    assert router.signature == (4, 2, Fraction(1, 5))

    with pytest.raises(ValueError):
        RouterConfig("a", UNIFORM, c=5)

    with pytest.raises(ValueError):
        router.set_params(rounds=3)

    with pytest.raises(TypeError):
        RouterConfig("a", UNIFORM, c="2")

    assert router.set_params(c=4).c == 4


# ------------------------------------------------------------------------------


def test_load_config(tmp_path):
    path = tmp_path / "experiment.json"

    path.write_text(json.dumps({
        "schema_version": 1,
        "rounds": 1000,
        "seed": 7,
        "routers": [
            {"name": "uniform", "weights": UNIFORM, "c": 3},
            {"name": "skewed", "weights": ["0.1", 0.2, "1/5", "3/10"], "c": 3,
             "stream_cap": 5000}
        ]
    }))

    config = load_config(str(path))

    assert config["rounds"] == 1000
    assert config["seed"] == 7
    assert [router.name for router in config["routers"]] == [
        "uniform", "skewed"]
    assert config["routers"][1].distribution.weights == tuple(
        Fraction(w) for w in ("1/10", "1/5", "1/5", "3/10"))
    assert config["routers"][1].stream_cap == 5000


def test_load_config_errors(tmp_path):
    path = tmp_path / "experiment.json"

    path.write_text(json.dumps({"schema_version": 2, "routers": []}))

    with pytest.raises(ValueError, match="schema_version"):
        load_config(str(path))

    path.write_text(json.dumps({
        "schema_version": 1,
        "routers": [{"name": "a", "weights": UNIFORM, "colour": "red"}]
    }))

    with pytest.raises(ValueError, match="colour"):
        load_config(str(path))

    path.write_text("{not json")

    with pytest.raises(ValueError):
        load_config(str(path))


# ------------------------------------------------------------------------------


def test_generate_stream():
    router = RouterConfig("a", SKEWED, c=3, stream_cap=500)

    stream = generate_stream(router, random_state=3)

    assert list(stream.columns) == ["position", "item", "new", "collected"]
    assert stream.shape == (500, 4)
    assert stream["item"].between(0, 4).all()
    assert stream["collected"].is_monotonic_increasing
    assert stream["collected"].max() <= 4

    time = collection_time(stream, 3)

    assert time is not None and time >= 3
    assert stream["collected"].iloc[time - 1] == 3

    again = generate_stream(router, random_state=3)

    assert again.equals(stream)


def test_collection_time_not_reached():
    router = RouterConfig("a", SKEWED, c=3)

    stream = generate_stream(router, length=2, random_state=0)

    assert collection_time(stream, 3) is None


def test_stream_epochs_match_exact_mean():
    router = RouterConfig("skewed", SKEWED, c=3, stream_cap=200)

    times = [collection_time(generate_stream(router, random_state=seed), 3)
             for seed in range(400)]

    assert None not in times

    p = router.distribution
    exact = float(expectation(p, 3))
    sigma = (float(variance(p, 3)) / len(times)) ** 0.5

    assert abs(sum(times) / len(times) - exact) < 4 * sigma


@pytest.mark.slow
def test_calibration_two_routers():
    routers = [RouterConfig("uniform", UNIFORM, c=3),
               RouterConfig("skewed", SKEWED, c=3)]

    report = run_simulation(routers, rounds=10 ** 5, seed=2026)

    for row in report.routers:
        assert abs(row["mean"] - float(row["exact_mean"])) <= 3 * row["stderr"]

    frame = compare_to_optimal(report)

    assert frame["name"].iloc[0] == "uniform"
    assert frame["is_minimizer"].iloc[0]
