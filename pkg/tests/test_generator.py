"""The GF(2) interval-category generator and the transcribed fixtures."""

from __future__ import annotations

import pytest

from grcat import (
    FINAL_EXAMPLE_RENAMING,
    ObjectRef,
    bundled_fixture,
    bundled_fixture_text,
    fixture,
    generate_an,
    gr_table,
    render_spec,
    subobject_poset,
    theta_infinity,
    validate_spec,
)
from grcat.errors import SizeGuardError, SpecFormatError
from grcat.generator import (
    ext_dim_interval,
    ext_table_bruteforce,
    hom_dim_interval,
    intervals_an,
    mono_exists_interval,
)


# ---------------------------------------------------------------------------
# generate_an


def test_an1_is_semisimple(an_specs):
    spec = an_specs[1]
    assert spec.indecomposables == ("[1,1]",)
    assert spec.hom["[1,1]"]["[1,1]"] == 1
    assert spec.conflations == ()


def test_an2_contents(an_specs):
    spec = an_specs[2]
    assert spec.indecomposables == ("[1,1]", "[1,2]", "[2,2]")
    assert spec.ext["[1,1]"]["[2,2]"] == 1
    base = ObjectRef.of
    nonsplit = [
        c
        for c in spec.conflations
        if (c.a, c.b, c.c) == (base(["[2,2]"]), base(["[1,2]"]), base(["[1,1]"]))
    ]
    assert len(nonsplit) == 1 and nonsplit[0].stable


def test_an3_passes_validation_and_matches_table(an_specs, final_example):
    spec = an_specs[3]
    assert validate_spec(spec).ok
    generated = gr_table(spec)
    reference = gr_table(final_example)
    renamed = {
        FINAL_EXAMPLE_RENAMING[m]: reference.measures[m]
        for m in final_example.indecomposables
    }
    assert dict(generated.measures) == renamed


def test_counts(an_specs):
    for n, spec in an_specs.items():
        assert len(spec.indecomposables) == n * (n + 1) // 2
        simples = [m for m in spec.indecomposables if spec.theta[m] == 1]
        assert len(simples) == n


def test_generated_specs_validate(an_specs):
    for spec in an_specs.values():
        assert validate_spec(spec).ok


def test_size_guard():
    with pytest.raises(SizeGuardError):
        generate_an(99)
    with pytest.raises(SizeGuardError):
        generate_an(0)


def test_hom_dims_match_interval_rule():
    # closed form for intervals of the linear quiver: a map [a,b] -> [c,d]
    # exists (and is then unique up to scalar) iff c <= a <= d <= b
    n = 4
    for x in intervals_an(n):
        for y in intervals_an(n):
            expected = 1 if (y.a <= x.a <= y.b <= x.b) else 0
            assert hom_dim_interval(n, x, y) == expected


def test_mono_rule_is_shared_right_endpoint():
    n = 4
    for x in intervals_an(n):
        for y in intervals_an(n):
            expected = x.b == y.b and y.a <= x.a
            assert mono_exists_interval(n, x, y) == expected


def test_euler_ext_matches_bruteforce_exhaustively():
    for n in (1, 2, 3):
        table = ext_table_bruteforce(n)
        for c in intervals_an(n):
            for a in intervals_an(n):
                euler = ext_dim_interval(n, c, a)
                assert euler in (0, 1)
                assert euler == table.get((c.id, a.id), 0), (n, c.id, a.id)


def test_submodule_relation_is_antisymmetric_and_monotone(an_specs):
    for spec in an_specs.values():
        poset = subobject_poset(spec)  # strict mode raises on defects
        for y in spec.indecomposables:
            for x in poset.proper_subobjects(y):
                assert spec.theta[x] < spec.theta[y]


def test_conflations_are_stable_and_nonsplit(an_specs):
    for spec in an_specs.values():
        for conf in spec.conflations:
            assert conf.stable
            merged = tuple(sorted(conf.a.summands + conf.c.summands))
            assert merged != conf.b.summands


# ---------------------------------------------------------------------------
# fixtures


def test_fixture_final_example_tower(final_example):
    result = theta_infinity(final_example)
    assert result.members == {"P1m1", "S3", "S2"}
    assert result.sms is True


def test_fixture_db_window_sizes(db_windows):
    for w, spec in db_windows.items():
        assert len(spec.indecomposables) == 12 * w
        assert validate_spec(spec).ok


def test_unknown_fixture_name():
    with pytest.raises(SpecFormatError):
        fixture("nope")


def test_db_window_guard():
    with pytest.raises(SizeGuardError):
        fixture("db-window", window=0)


def test_rendering_is_deterministic(final_example, an_specs):
    for spec in (final_example, an_specs[3]):
        assert render_spec(spec) == render_spec(spec)


def test_bundled_files_match_builders(final_example, db_windows):
    assert bundled_fixture_text("final-example.grcat.json") == render_spec(
        final_example
    )
    assert bundled_fixture_text("db-window-1.grcat.json") == render_spec(
        db_windows[1]
    )
    assert bundled_fixture("final-example.grcat.json") == final_example
