import json

import pytest

import fcc


def test_gen_a0_single_block():
    assert fcc.gen_a0({"blocks": [2], "F": [[[0, 1], [0]]]}) == "u1*u2"


def test_gen_a0_rejects_bad_spec():
    with pytest.raises(ValueError):
        fcc.gen_a0("{not json")
    with pytest.raises(ValueError):
        fcc.gen_a0({"blocks": [2], "epsilon": [1, 2]})


def test_check_passes_for_family():
    passed, report = fcc.check(
        {"blocks": [3], "F": [[[1, 2, 0, 5], [0, 1, 3], [2, 7]]]},
        master=True, connection=True, curvature=True)
    assert passed
    assert report["master"] is True
    assert report["torsionless"] and report["flat_unit"] and report["dnabla_zero"]
    assert report["cond_3RC"] is True


def test_check_flags_bad_raw_a0():
    passed, report = fcc.check({"blocks": [2], "a0": "u2^2"}, master=True)
    assert not passed
    assert isinstance(report["master"], list) and report["master"]


def test_linear_seed_is_flat_and_dual_flat():
    passed, report = fcc.check({"blocks": [2, 1], "epsilon": [1, 1]},
                               curvature=True, dual=True)
    assert passed
    assert report["flat"] is True
    assert report["dual_flat"] is True


def test_reports_are_deterministic():
    spec = {"blocks": [2, 1], "epsilon": ["1", "-1/2"]}
    _, r1 = fcc.check(spec, connection=True)
    _, r2 = fcc.check(spec, connection=True)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_verify_paper_all_cases():
    assert fcc.reference_case_ids() == ["2", "3", "21", "4", "31", "22", "211"]
    passed, report = fcc.verify_paper()
    assert passed
    assert [c["id"] for c in report["cases"]] == fcc.reference_case_ids()
    with pytest.raises(ValueError):
        fcc.verify_paper(["nope"])
