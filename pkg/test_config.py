import json

import pytest

from config import Config, SEED_ENV
from objects import CaseList, OutputFormat, BundleName, DEFAULT_PRIME, CROSS_CHECK_PRIME


def test_defaults():
    config = Config()
    assert config.prime == DEFAULT_PRIME
    assert config.cross_check_prime == CROSS_CHECK_PRIME
    assert config.case_list == CaseList.Krah
    assert config.output_format == OutputFormat.JSON
    assert config.curve_n == 3
    assert config.workers == 1
    assert config.progress is False


def test_from_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"prime": 10007, "case_list": "special-locus", "output_format": "tsv", "seed": 7}))
    config = Config.from_file(str(path))
    assert config.prime == 10007
    assert config.case_list == CaseList.SpecialLocus
    assert config.output_format == OutputFormat.TSV
    assert config.seed == 7
    assert config.to_dict()["prime"] == 10007


def test_override_ignores_none():
    config = Config({"seed": 5}).override(seed=None, workers=3)
    assert config.seed == 5
    assert config.workers == 3
    assert config.resolved()["workers"] == 3


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv(SEED_ENV, "1234")
    assert Config().seed == 1234
    assert Config({"seed": 1}).seed == 1


@pytest.mark.parametrize("raw", [
    {"workers": 0},
    {"curve_n": 2},
    {"output_format": "xml"},
    {"case_list": "everything"},
    {"prime": CROSS_CHECK_PRIME},
    {"max_point_retries": 0},
])
def test_invalid_config(raw):
    with pytest.raises(ValueError):
        Config(raw)


def test_enums():
    assert OutputFormat.TSV.encode() == "tsv"
    assert OutputFormat.Table.encode() == "txt"
    assert BundleName.from_str("special-locus") == BundleName.SpecialLocus
    with pytest.raises(ValueError):
        CaseList.from_str("nope")
