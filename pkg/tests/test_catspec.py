"""Parser, validator, object arithmetic, and the subobject poset."""

from __future__ import annotations

import json
import random

import pytest

from grcat import (
    ObjectRef,
    ZERO,
    fixture,
    parse_spec,
    render_spec,
    spec_from_doc,
    subobject_poset,
    theta_of,
    validate_spec,
)
from grcat.errors import (
    SpecFormatError,
    SpecInconsistencyError,
    UnknownIdError,
)

from conftest import random_valid_spec

MINIMAL = '{"indecomposables": [{"id": "S", "theta": 1}]}'


# ---------------------------------------------------------------------------
# parsing


def test_parse_minimal_document():
    spec = parse_spec(MINIMAL)
    assert spec.indecomposables == ("S",)
    assert spec.theta["S"] == 1
    assert spec.hom["S"]["S"] == 1
    assert not spec.ext_declared


def test_parse_bundled_final_example(final_example):
    assert final_example.indecomposables == (
        "P1m1",
        "S3",
        "S2",
        "I2m1",
        "P2",
        "S1m1",
    )
    assert [final_example.theta[m] for m in final_example.indecomposables] == [
        1,
        1,
        1,
        2,
        2,
        3,
    ]


def test_parse_rejects_undeclared_reference():
    doc = json.loads(MINIMAL)
    doc["inflations"] = [{"sub": "S", "target": ["Q"]}]
    with pytest.raises(SpecFormatError, match="undeclared"):
        spec_from_doc(doc)


def test_parse_rejects_duplicate_id():
    text = json.dumps(
        {"indecomposables": [{"id": "S", "theta": 1}, {"id": "S", "theta": 2}]}
    )
    with pytest.raises(SpecFormatError, match="duplicate"):
        parse_spec(text)


def test_parse_rejects_unknown_top_level_key():
    with pytest.raises(SpecFormatError, match="unknown top-level"):
        parse_spec('{"indecomposables": [], "extra": 1}')


def test_parse_rejects_negative_dimension():
    doc = json.loads(MINIMAL)
    doc["hom"] = [{"from": "S", "to": "S", "dim": -1}]
    with pytest.raises(SpecFormatError, match="negative"):
        spec_from_doc(doc)


def test_parse_syntax_error_is_position_annotated():
    with pytest.raises(SpecFormatError, match="line 1"):
        parse_spec("{nope}")


def test_parse_rejects_nonpositive_theta():
    with pytest.raises(SpecFormatError, match="theta"):
        parse_spec('{"indecomposables": [{"id": "S", "theta": 0}]}')


def test_conflation_size_guard(monkeypatch):
    doc = json.loads(MINIMAL)
    doc["conflations"] = [
        {"a": [], "b": ["S"], "c": ["S"], "stable": True} for _ in range(11)
    ]
    monkeypatch.setenv("GRCAT_SIZE_GUARD", "10")
    with pytest.raises(SpecFormatError, match="size guard"):
        spec_from_doc(doc)
    monkeypatch.delenv("GRCAT_SIZE_GUARD")
    spec_from_doc(doc)


# ---------------------------------------------------------------------------
# object arithmetic


def test_objectref_is_a_multiset():
    assert ObjectRef.of(["b", "a", "b"]) == ObjectRef.of(["b", "b", "a"])
    assert ObjectRef.of(["b", "a", "b"]).summands == ("a", "b", "b")
    assert ZERO.is_zero and len(ZERO) == 0


def test_theta_of(final_example):
    assert theta_of(final_example, ZERO) == 0
    assert theta_of(final_example, ObjectRef.of(["S1m1"])) == 3
    assert theta_of(final_example, ObjectRef.of(["S3", "S3", "P2"])) == 4
    with pytest.raises(UnknownIdError):
        theta_of(final_example, ObjectRef.of(["nope"]))


# ---------------------------------------------------------------------------
# validation


def test_validate_final_example(final_example):
    assert validate_spec(final_example).ok


def test_validate_flags_stability_arithmetic():
    doc = json.loads(MINIMAL)
    doc["conflations"] = [{"a": ["S"], "b": ["S"], "c": ["S"], "stable": True}]
    report = validate_spec(spec_from_doc(doc))
    assert not report.ok
    assert [v.rule for v in report.violations] == ["stability-arithmetic"]


def test_validate_flags_antisymmetry():
    doc = {
        "indecomposables": [{"id": "S", "theta": 1}, {"id": "T", "theta": 1}],
        "inflations": [
            {"sub": "S", "target": ["T"]},
            {"sub": "T", "target": ["S"]},
        ],
    }
    report = validate_spec(spec_from_doc(doc))
    rules = {v.rule for v in report.violations}
    assert "antisymmetry" in rules


def test_validate_flags_inflation_monotonicity():
    doc = {
        "indecomposables": [{"id": "S", "theta": 2}, {"id": "T", "theta": 1}],
        "inflations": [{"sub": "S", "target": ["T"]}],
    }
    report = validate_spec(spec_from_doc(doc))
    assert {v.rule for v in report.violations} >= {"inflation-monotone"}


def test_validate_flags_subadditivity():
    doc = {
        "indecomposables": [{"id": "S", "theta": 1}, {"id": "B", "theta": 3}],
        "conflations": [{"a": ["S"], "b": ["B"], "c": ["S"], "stable": False}],
    }
    report = validate_spec(spec_from_doc(doc))
    assert [v.rule for v in report.violations] == ["subadditivity"]


def test_ok_iff_no_violations(final_example):
    report = validate_spec(final_example)
    assert report.ok == (not report.violations)


# ---------------------------------------------------------------------------
# subobject poset


def test_poset_of_final_example(final_example):
    poset = subobject_poset(final_example)
    assert poset.proper_subobjects("S2") == ()
    # transitive closure of P1m1 >-> I2m1 >-> S1m1
    assert poset.proper_subobjects("S1m1") == ("I2m1", "P1m1")
    assert poset.leq("P1m1", "S1m1")


def test_poset_without_inflations_is_discrete():
    spec = parse_spec(MINIMAL)
    poset = subobject_poset(spec)
    assert poset.proper_subobjects("S") == ()
    assert poset.leq("S", "S")


def test_poset_closure_is_transitive():
    doc = {
        "indecomposables": [
            {"id": "A", "theta": 1},
            {"id": "B", "theta": 2},
            {"id": "C", "theta": 3},
        ],
        "inflations": [
            {"sub": "A", "target": ["B"]},
            {"sub": "B", "target": ["C"]},
        ],
    }
    poset = subobject_poset(spec_from_doc(doc))
    assert poset.leq("A", "C")


def test_poset_strict_mode_raises_on_cycle():
    doc = {
        "indecomposables": [{"id": "S", "theta": 1}, {"id": "T", "theta": 1}],
        "inflations": [
            {"sub": "S", "target": ["T"]},
            {"sub": "T", "target": ["S"]},
        ],
    }
    with pytest.raises(SpecInconsistencyError):
        subobject_poset(spec_from_doc(doc))


def test_poset_axioms_exhaustive(final_example, an_specs):
    for spec in (final_example, an_specs[4]):
        poset = subobject_poset(spec)
        ids = spec.indecomposables
        for x in ids:
            assert poset.leq(x, x)
            for y in ids:
                if poset.leq(x, y) and poset.leq(y, x):
                    assert x == y
                if x != y and poset.leq(x, y):
                    assert spec.theta[x] < spec.theta[y]
                for z in ids:
                    if poset.leq(x, y) and poset.leq(y, z):
                        assert poset.leq(x, z)


def test_subobject_length_sets(final_example, an_specs):
    # lengths of subobjects form a finite set bounded by the object's own
    # length, which is always attained
    for spec in (final_example, an_specs[3]):
        poset = subobject_poset(spec)
        for m in spec.indecomposables:
            values = {spec.theta[s] for s in poset.proper_subobjects(m)}
            values.add(spec.theta[m])
            assert max(values) == spec.theta[m]
            assert all(1 <= v <= spec.theta[m] for v in values)


# ---------------------------------------------------------------------------
# round trip


def test_render_parse_round_trip(final_example, db_windows, an_specs):
    for spec in (final_example, db_windows[1], an_specs[2], an_specs[3]):
        text = render_spec(spec)
        again = parse_spec(text)
        assert again == spec
        assert render_spec(again) == text


def test_round_trip_on_random_specs():
    rng = random.Random(99)
    for _ in range(25):
        spec = random_valid_spec(rng)
        assert parse_spec(render_spec(spec)) == spec
