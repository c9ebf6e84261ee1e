"""The orthogonality tower, semibrick detection, and the finite-type flag."""

from __future__ import annotations

import json

import pytest

from grcat import (
    is_finite_type,
    is_semibrick,
    spec_from_doc,
    theta_infinity,
    theta_n,
    theta_one,
)
from grcat.errors import SpecError

from conftest import orthogonal_simples_spec


def test_theta_one_final_example(final_example):
    assert theta_one(final_example) == {"P1m1", "S3", "S2"}


def test_theta_one_single_object():
    spec = spec_from_doc({"indecomposables": [{"id": "M", "theta": 2}]})
    assert theta_one(spec) == {"M"}


def test_theta_one_generated_simples(an_specs):
    assert theta_one(an_specs[3]) == {"[1,1]", "[2,2]", "[3,3]"}


def test_theta_one_empty_category():
    with pytest.raises(SpecError):
        theta_one(spec_from_doc({"indecomposables": []}))


def test_theta_n_base_case(final_example):
    assert theta_n(final_example, 1) == theta_one(final_example)


def test_theta_n_stalls_on_final_example(final_example):
    # no length-2 object is Hom-orthogonal to the length-1 ones
    assert theta_n(final_example, 2) == theta_one(final_example)
    assert theta_n(final_example, 3) == theta_one(final_example)


def test_theta_n_stalls_on_window(db_windows):
    spec = db_windows[1]
    top_row = theta_one(spec)
    for n in (1, 2, 3):
        assert theta_n(spec, n) == top_row


def test_theta_n_is_monotone(final_example, db_windows, an_specs):
    for spec in (final_example, db_windows[2], an_specs[4]):
        previous = theta_n(spec, 1)
        for n in range(2, spec.max_theta() + 2):
            current = theta_n(spec, n)
            assert previous <= current
            previous = current
        assert theta_infinity(spec).members == previous


def test_theta_infinity_final_example(final_example):
    result = theta_infinity(final_example)
    assert result.members == {"P1m1", "S3", "S2"}
    assert result.semibrick is True
    assert result.sms is True


def test_theta_infinity_orthogonal_simples():
    result = theta_infinity(orthogonal_simples_spec(4))
    assert result.members == {"s0", "s1", "s2", "s3"}
    assert result.semibrick is True
    assert result.sms is True


def test_fat_endomorphism_breaks_semibrick():
    doc = {
        "metadata": {"complete": True},
        "indecomposables": [{"id": "X", "theta": 1}],
        "hom": [{"from": "X", "to": "X", "dim": 2}],
    }
    result = theta_infinity(spec_from_doc(doc))
    assert result.members == {"X"}
    assert result.semibrick is False


def test_sms_unknown_without_complete_table(final_example):
    doc = json.loads(
        '{"indecomposables": [{"id": "S", "theta": 1}]}'
    )
    result = theta_infinity(spec_from_doc(doc))
    assert result.sms is None
    assert theta_infinity(final_example).sms is True


def test_is_semibrick_uses_both_directions(final_example):
    assert is_semibrick(final_example, {"P1m1", "S3", "S2"})
    assert not is_semibrick(final_example, {"P1m1", "I2m1"})


def test_finite_type_flags(final_example, db_windows):
    assert is_finite_type(final_example)
    assert is_finite_type(orthogonal_simples_spec(3))
    # true on the window itself; the marker records that it models an
    # infinite family
    assert is_finite_type(db_windows[1])
    assert db_windows[1].metadata.get("models_infinite") is True


def test_infinite_type_tower_grows():
    doc = {
        "metadata": {"complete": True},
        "indecomposables": [
            {"id": "S", "theta": 1},
            {"id": "M", "theta": 2},
        ],
    }
    spec = spec_from_doc(doc)
    result = theta_infinity(spec)
    assert result.members == {"S", "M"}
    assert not is_finite_type(spec)
