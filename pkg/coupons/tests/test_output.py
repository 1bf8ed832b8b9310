import json

from fractions import Fraction

import pandas as pd
import pytest

import coupons

from coupons.output import OutputRecord, input_hash, render, write


def test_input_hash_is_canonical():
    first = input_hash({"p": "1/2,1/3", "c": 2, "kmax": 5})
    second = input_hash({"kmax": 5, "c": 2, "p": "1/2,1/3"})

    assert first == second
    assert first != input_hash({"p": "1/2,1/3", "c": 1, "kmax": 5})


def test_record_json():
    record = OutputRecord("moments", {"c": 2}, "exact",
                          {"expectation": Fraction(3)})

    payload = json.loads(record.dumps())

    assert payload["command"] == "moments"
    assert payload["mode"] == "exact"
    assert payload["version"] == coupons.__version__
    assert payload["results"] == {
        "expectation": {"numerator": 3, "denominator": 1}}
    assert record.dumps() == OutputRecord(
        "moments", {"c": 2}, "exact", {"expectation": Fraction(3)}).dumps()


def test_record_csv():
    frame = pd.DataFrame({"k": [0, 1], "tail": ["1", "7/10"]})

    record = OutputRecord("tail", {}, "exact", {}, frame=frame)

    assert render(record, "csv").splitlines() == ["k,tail", "0,1", "1,7/10"]

    with pytest.raises(ValueError):
        OutputRecord("tail", {}, "exact", {}).to_csv()

    with pytest.raises(ValueError):
        render(record, "xml")


def test_write_file(tmp_path):
    record = OutputRecord("tail", {"c": 1}, "float", {"tail": [1.0, 0.5]})

    path = tmp_path / "out.json"

    assert write(record, "json", str(path)) is None
    assert json.loads(path.read_text())["results"]["tail"] == [1.0, 0.5]
    assert write(record, "json") == record.dumps()
