import pytest

from coupons.suites import SUITES, run_suite


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_pass(suite):
    report = run_suite(suite, n_max=3, k_max=8, samples=2, seed=7)

    assert report.checks > 0
    assert report.passed, report.failures


def test_suite_determinism():
    first = run_suite("theorem2", n_max=4, samples=3, seed=1)
    second = run_suite("theorem2", n_max=4, samples=3, seed=1)

    assert first.dumps() == second.dumps()


def test_suite_dataframe():
    frame = run_suite("corollary1", n_max=2, k_max=4, samples=1).to_dataframe()

    assert list(frame.columns) == ["suite", "checks", "failed", "passed"]
    assert frame["passed"].iloc[0]


def test_sequence_budget():
    small = run_suite("oracles", n_max=2, k_max=6, samples=1, seed=3,
                      sequence_budget=1)
    large = run_suite("oracles", n_max=2, k_max=6, samples=1, seed=3)

    assert small.passed and large.passed
    assert large.checks > small.checks


def test_invalid_suite():
    with pytest.raises(ValueError):
        run_suite("theorem9")

    with pytest.raises(ValueError):
        run_suite("lemma1", n_max=0)

    with pytest.raises(ValueError):
        run_suite("lemma1", samples=0)

    with pytest.raises(ValueError):
        run_suite("oracles", sequence_budget=0)

    with pytest.raises(ValueError):
        run_suite("oracles", sequence_budget=10 ** 7 + 1)


@pytest.mark.slow
@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_full_sweep(suite):
    report = run_suite(suite, n_max=6, k_max=20, samples=50, seed=7)

    assert report.passed, report.failures


@pytest.mark.slow
def test_oracles_full_sequence_budget():
    report = run_suite("oracles", n_max=6, k_max=20, samples=1, seed=7,
                       sequence_budget=10 ** 7)

    assert report.passed, report.failures
