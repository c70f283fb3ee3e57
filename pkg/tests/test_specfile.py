import json
from pathlib import Path

import pytest

from autoseq.errors import SpecError
from autoseq.recurrences import CFSequenceSpec, HyperquadraticSpec, PowerRecurrenceSpec, generate, spec_from_cf_params
from autoseq.specfile import load_spec, spec_from_dict, spec_to_dict

DATA = Path(__file__).parent / "data"


def test_f4_files_describe_the_same_sequence():
    cf = load_spec(DATA / "f4.toml")
    h = load_spec(DATA / "f4_thm2.json")
    assert isinstance(cf, CFSequenceSpec) and isinstance(h, HyperquadraticSpec)
    assert spec_from_cf_params(cf) == h
    assert generate(cf, 200) == generate(h, 200)


def test_power_file():
    spec = load_spec(DATA / "f5_power.toml")
    assert isinstance(spec, PowerRecurrenceSpec) and spec.gamma == 3
    assert [x.code for x in generate(spec, 4)] == [2, 1, 0, 2]


@pytest.mark.parametrize("name", ["f4.toml", "f4_thm2.json", "f5_power.toml"])
def test_dict_round_trip(name, tmp_path):
    spec = load_spec(DATA / name)
    data = spec_to_dict(spec)
    assert spec_from_dict(data) == spec
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(data))
    assert load_spec(path) == spec


def test_bad_files(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text("p = = 2")
    with pytest.raises(SpecError):
        load_spec(bad)
    with pytest.raises(SpecError) as info:
        spec_from_dict({"family": "thm2", "p": 2, "ell": 1, "r": 2, "k": 1, "alpha": [1], "beta": [1]})
    assert info.value.field == "lambda_init"
    with pytest.raises(SpecError):
        spec_from_dict({"family": "nope", "p": 2})
