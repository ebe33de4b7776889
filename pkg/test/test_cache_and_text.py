import json

import numpy as np
import pandas as pd
import pytest

from exclugraph.db import ResultCache, cache_key
from exclugraph.errors import ParseError
from exclugraph.utils import CSV_COLUMNS, TextHandler


@pytest.fixture
def cache(tmp_path):
    return ResultCache(str(tmp_path / "nested" / "cache.jsonl"))


def test_cache_round_trip(cache):
    key = cache_key("Dhc", "", "bounds", 1e-8)
    assert cache.get(key) is None
    payload = json.dumps({"theta": 2.23606797749979})
    cache.put(key, payload)
    assert cache.get(key) == payload
    assert ResultCache(str(cache.path)).get(key) == payload


def test_cache_keeps_the_first_payload(cache):
    key = cache_key("Dhc", "", "bounds", 1e-8)
    cache.put(key, "first")
    cache.put(key, "second")
    assert cache.get(key) == "first"
    assert len(cache.path.read_text().splitlines()) == 1


def test_cache_key_separates_inputs():
    base = cache_key("Dhc", "0.5,0.5", "membership", 1e-8)
    assert base != cache_key("Dhc", "0.5,0.5", "membership", 1e-7)
    assert base != cache_key("Dhc", "0.5,0.4", "membership", 1e-8)
    assert base != cache_key("Dhc", "0.5,0.5", "witness", 1e-8)
    assert base != cache_key("DQc", "0.5,0.5", "membership", 1e-8)


def test_cache_skips_corrupt_lines(tmp_path):
    path = tmp_path / "cache.jsonl"
    good = json.dumps({"key": "k", "payload": "p"})
    path.write_text("not json\n" + good + "\n" + json.dumps({"payload": "orphan"}) + "\n")
    cache = ResultCache(str(path))
    assert cache.get("k") == "p"
    assert len(cache) == 1


def test_parse_vector():
    assert np.allclose(TextHandler.parse_vector("0.5, 0.25,1"), [0.5, 0.25, 1.0])
    with pytest.raises(ParseError) as info:
        TextHandler.parse_vector("0.5,x")
    assert info.value.offset == 4


def test_read_vector_file(tmp_path):
    path = tmp_path / "weights.txt"
    path.write_text("# weights\n1\n\n2.5  # heavy\n")
    assert np.allclose(TextHandler.read_vector_file(str(path)), [1.0, 2.5])
    path.write_text("1\nabc\n")
    with pytest.raises(ParseError) as info:
        TextHandler.read_vector_file(str(path))
    assert info.value.offset == 2


def test_format_vector_round_trips():
    values = np.array([1 / 3, 0.1, 2.0])
    assert np.array_equal(TextHandler.parse_vector(TextHandler.format_vector(values)), values)


def test_dict2csv_writes_header_once(tmp_path):
    path = tmp_path / "rows.csv"
    TextHandler.dict2csv([{"graph6": "Dhc", "n": 5, "alpha": 2}], str(path))
    TextHandler.dict2csv([{"graph6": "I", "n": 10, "theta": 4.0}], str(path))
    df = pd.read_csv(path)
    assert list(df.columns) == CSV_COLUMNS
    assert list(df["graph6"]) == ["Dhc", "I"]
    assert path.read_text().count("graph6") == 1
