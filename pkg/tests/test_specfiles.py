import pytest
import yaml

from poisson_hp0.formulas import kleinian_strata, quotient_series
from poisson_hp0.presets import PRESET_LABELS, ade_preset, surface_preset
from poisson_hp0.quotient import GROUP_PRESETS, group_preset, hp0_dims_quotient
from poisson_hp0.specfiles import (
    SpecError,
    dump_surface,
    group_from_dict,
    group_to_dict,
    load_group,
    load_strata,
    load_surface,
    strata_from_dict,
    strata_to_dict,
    surface_from_dict,
)
from poisson_hp0.surface import hp0_series


@pytest.mark.parametrize("label", PRESET_LABELS)
def test_surface_round_trip(label, tmp_path):
    spec = surface_preset(label)
    path = tmp_path / "s.yaml"
    path.write_text(dump_surface(spec))
    back = load_surface(path)
    assert back.weights == spec.weights and back.d == spec.d
    assert sorted(back.terms) == sorted(spec.terms)


def test_surface_file_computes_same_series(tmp_path):
    path = tmp_path / "a2.yaml"
    path.write_text("name: A2\nweights: [2, 3, 3]\nQ:\n  - {c: 1, e: [3, 0, 0]}\n  - {c: -1, e: [0, 1, 1]}\nd: 6\n")
    assert hp0_series(load_surface(path), 7, 33) == hp0_series(ade_preset("A2").surface(), 7, 33)


def test_surface_errors(tmp_path):
    with pytest.raises(SpecError):
        surface_from_dict({"weights": [1, 1, 1], "Q": [{"c": 1, "e": [3, 0, 0]}], "d": 4})
    with pytest.raises(SpecError):
        surface_from_dict({"weights": [1, 1, 1]})
    with pytest.raises(SpecError):
        surface_from_dict({"weights": [1, 1, 1], "Q": [{"c": 1}]})
    with pytest.raises(SpecError):
        load_surface(tmp_path / "missing.yaml")
    bad = tmp_path / "bad.yaml"
    bad.write_text("- just\n- a list\n")
    with pytest.raises(SpecError):
        load_surface(bad)
    bad.write_text("weights: [1, 1\n")
    with pytest.raises(SpecError):
        load_surface(bad)


@pytest.mark.parametrize("label", ["Z2", "Z3rat", "Q8", "S2", "trivial"])
def test_group_round_trip(label, tmp_path):
    spec = group_preset(label)
    path = tmp_path / "g.yaml"
    path.write_text(yaml.safe_dump(group_to_dict(spec)))
    back = load_group(path)
    assert back == spec


def test_group_file_computes(tmp_path):
    path = tmp_path / "z3.yaml"
    path.write_text("dim: 2\nzeta_order: 3\ngenerators:\n  - [[[0, 1], 0], [0, [0, 0, 1]]]\n")
    assert hp0_dims_quotient(load_group(path), 7, 21) == hp0_dims_quotient(group_preset("Z3"), 7, 21)
    assert set(GROUP_PRESETS) >= {"Z2", "Q8", "S2"}


def test_group_errors():
    with pytest.raises(SpecError):
        group_from_dict({"zeta_order": 1, "generators": []})


@pytest.mark.parametrize("label", ["A1", "A4", "D5", "E8"])
def test_strata_round_trip(label, tmp_path):
    data = kleinian_strata(ade_preset(label))
    path = tmp_path / "st.yaml"
    path.write_text(yaml.safe_dump(strata_to_dict(data)))
    back = load_strata(path)
    assert quotient_series(back, 41, 120) == quotient_series(data, 41, 120)
    assert strata_from_dict(strata_to_dict(back)) == back


def test_strata_errors():
    with pytest.raises(SpecError):
        strata_from_dict({"strata": [{"pairs": []}]})
