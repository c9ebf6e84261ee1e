"""Checker suites: measure axioms, inflation bounds, extension bounds, and
the indecomposable-count partition report.

Each suite is a pure function of the spec and returns a deterministic
Report whose failing checks carry concrete witnesses.  The suites verify
finite-instance consequences only; none of them claims anything about
infinite categories.
"""

from __future__ import annotations

from typing import Mapping

from .catspec import CategorySpec, ObjectRef, subobject_poset, theta_of
from .chains import Chain, chain_leq, chain_max, gr_table, measure_map
from .report import FAIL, PASS, SKIPPED, Check, Report, make_report
from .simpleminded import theta_infinity, theta_one, is_finite_type

SCOPE_NOTE = (
    "finite-instance report: quantities and structural consequences are "
    "checked on the declared data only, not asserted for any infinite family"
)
WINDOW_NOTE = (
    "window of an infinite family: object count grows with the window while "
    "lengths stay bounded"
)

SUITE_GR_AXIOMS = "gr-axioms"
SUITE_MAIN_PROPERTY = "main-property"
SUITE_EXT_BOUND = "ext-bound"
SUITE_SMALL_LEMMAS = "small-lemmas"
SUITE_BRAUER_THRALL = "brauer-thrall"


def check_gr_axioms(
    spec: CategorySpec,
    measures: Mapping[str, Chain] | None = None,
) -> Report:
    """GR1 monotonicity, GR2 equal-measure rigidity, GR3 induction step.

    ``measures`` defaults to the computed table; passing a table in lets a
    corrupted table be checked against the poset (negative controls).
    """
    poset = subobject_poset(spec)
    if measures is None:
        measures = measure_map(spec)
    checks: list[Check] = []

    gr1_witness = None
    for y in spec.indecomposables:
        for x in poset.proper_subobjects(y):
            if not chain_leq(measures[x], measures[y]):
                gr1_witness = {
                    "sub": x,
                    "over": y,
                    "measures": [measures[x].render(True), measures[y].render(True)],
                }
                break
        if gr1_witness:
            break
    checks.append(
        Check("gr1-subobject-monotone", PASS)
        if gr1_witness is None
        else Check(
            "gr1-subobject-monotone",
            FAIL,
            "measure must be monotone along the subobject order",
            gr1_witness,
        )
    )

    gr2_witness = None
    by_measure: dict[Chain, str] = {}
    for m in spec.indecomposables:
        other = by_measure.setdefault(measures[m], m)
        if spec.theta[other] != spec.theta[m]:
            gr2_witness = {
                "pair": [other, m],
                "measure": measures[m].render(True),
                "theta": [spec.theta[other], spec.theta[m]],
            }
            break
    checks.append(
        Check("gr2-equal-measure-equal-length", PASS)
        if gr2_witness is None
        else Check(
            "gr2-equal-measure-equal-length",
            FAIL,
            "equal measures force equal lengths",
            gr2_witness,
        )
    )

    gr3_witness = None
    for x in spec.indecomposables:
        sub_measures = [measures[s] for s in poset.proper_subobjects(x)]
        for y in spec.indecomposables:
            if spec.theta[x] < spec.theta[y]:
                continue
            my = measures[y]
            if all(s != my and chain_leq(s, my) for s in sub_measures):
                if not chain_leq(measures[x], my):
                    gr3_witness = {
                        "x": x,
                        "y": y,
                        "measures": [measures[x].render(True), my.render(True)],
                    }
                    break
        if gr3_witness:
            break
    checks.append(
        Check("gr3-induction-step", PASS)
        if gr3_witness is None
        else Check(
            "gr3-induction-step",
            FAIL,
            "all proper subobjects below the target measure force comparison",
            gr3_witness,
        )
    )

    return make_report(SUITE_GR_AXIOMS, checks)


def check_main_property(
    spec: CategorySpec,
    measures: Mapping[str, Chain] | None = None,
) -> Report:
    """Bound every declared inflation by the maximal summand measure.

    For an inflation X >-> Y_1 + ... + Y_n the measure of X is at most the
    maximum of the summand measures; when equality holds, X itself must
    occur among the summands realizing the maximum (the data-level shadow
    of one component being an isomorphism).
    """
    if measures is None:
        measures = measure_map(spec)
    checks: list[Check] = []

    bound_witness = None
    equality_witness = None
    for sub, target in spec.inflations:
        if target.is_zero:
            continue
        top = chain_max(measures[y] for y in target.summands)
        if not chain_leq(measures[sub], top):
            bound_witness = {
                "sub": sub,
                "target": target.to_json(),
                "measures": [measures[sub].render(True), top.render(True)],
            }
            break
        if measures[sub] == top and sub not in target.counts():
            equality_witness = {
                "sub": sub,
                "target": target.to_json(),
                "measure": top.render(True),
            }

    checks.append(
        Check("main-bound", PASS)
        if bound_witness is None
        else Check(
            "main-bound",
            FAIL,
            "inflation source exceeds the maximal summand measure",
            bound_witness,
        )
    )
    checks.append(
        Check("main-equality-case", PASS)
        if bound_witness is not None or equality_witness is None
        else Check(
            "main-equality-case",
            FAIL,
            "measure equality requires the source among the maximal summands",
            equality_witness,
        )
    )
    return make_report(SUITE_MAIN_PROPERTY, checks)


def _ext_dim_obj(spec: CategorySpec, c: ObjectRef, a: str) -> int:
    return sum(mult * spec.ext[s][a] for s, mult in c.counts().items())


def check_ext_bound(spec: CategorySpec) -> Report:
    """Low extension dimension forces a summand to split off.

    For a conflation (a, b, c) and an indecomposable X occurring n times in
    a: if dim ext(c, X) < n then X must occur as a summand of b.  Skipped
    when the spec declares no ext matrix.
    """
    if not spec.ext_declared:
        return make_report(
            SUITE_EXT_BOUND,
            [Check("ext-bound", SKIPPED, "spec declares no ext matrix")],
        )
    witness = None
    for idx, conf in enumerate(spec.conflations):
        b_counts = conf.b.counts()
        for x, mult in conf.a.counts().items():
            if _ext_dim_obj(spec, conf.c, x) < mult and x not in b_counts:
                witness = {
                    "conflation": idx,
                    "triple": conf.render(),
                    "summand": x,
                    "multiplicity": mult,
                    "ext_dim": _ext_dim_obj(spec, conf.c, x),
                }
                break
        if witness:
            break
    if witness is None:
        return make_report(SUITE_EXT_BOUND, [Check("ext-bound", PASS)])
    return make_report(
        SUITE_EXT_BOUND,
        [
            Check(
                "ext-bound",
                FAIL,
                "extension dimension below multiplicity forces a direct summand",
                witness,
            )
        ],
    )


def check_small_lemmas(spec: CategorySpec) -> Report:
    """Minimal-length consequences.

    (i) length-1 objects have measure {1}; (ii) a longer object admitting a
    nonzero map from a minimal-length object has 1 inside its measure;
    (iii) when the tower stabilizes at level one and the conflation table is
    complete, the minimal measure is {1} and every longer indecomposable is
    the middle term of stable conflations with a length-1 first term and a
    length-1 third term; (iv) proper subobjects are strictly shorter.
    These checks presume specs normalized to minimal length 1.
    """
    measures = measure_map(spec)
    poset = subobject_poset(spec)
    one = Chain.of([1])
    checks: list[Check] = []

    w1 = None
    for m in spec.indecomposables:
        if spec.theta[m] == 1 and measures[m] != one:
            w1 = {"id": m, "measure": measures[m].render(True)}
            break
    checks.append(
        Check("sl-minimal-length-measure", PASS)
        if w1 is None
        else Check("sl-minimal-length-measure", FAIL, "length-1 object must measure {1}", w1)
    )

    minimal = theta_one(spec) if spec.indecomposables else frozenset()
    w2 = None
    for m in spec.indecomposables:
        if spec.theta[m] <= 1:
            continue
        if any(spec.hom[s][m] != 0 for s in minimal):
            mm = measures[m]
            if not (chain_leq(one, mm) and mm != one):
                w2 = {"id": m, "measure": mm.render(True)}
                break
    checks.append(
        Check("sl-hom-from-minimal-strict", PASS)
        if w2 is None
        else Check(
            "sl-hom-from-minimal-strict",
            FAIL,
            "a nonzero map from a minimal object forces {1} strictly below the measure",
            w2,
        )
    )

    tower_stable = (
        bool(spec.indecomposables)
        and theta_infinity(spec).members == minimal
    )
    complete = spec.metadata.get("complete") is True
    if not tower_stable or not complete:
        reason = (
            "tower does not stabilize at level one"
            if not tower_stable
            else "conflation table is not declared complete"
        )
        checks.append(Check("sl-minimal-sub-and-quotient", SKIPPED, reason))
    else:
        w3 = None
        bottom = measures[spec.indecomposables[0]]
        for m in spec.indecomposables:
            if chain_leq(measures[m], bottom):
                bottom = measures[m]
        if bottom != one:
            w3 = {"minimal-measure": bottom.render(True)}
        else:
            for m in spec.indecomposables:
                if spec.theta[m] == 1:
                    continue  # identity and zero conflations always exist
                singleton = ObjectRef.of([m])
                has_sub = any(
                    conf.stable
                    and conf.b == singleton
                    and theta_of(spec, conf.a) == 1
                    for conf in spec.conflations
                )
                has_quot = any(
                    conf.stable
                    and conf.b == singleton
                    and theta_of(spec, conf.c) == 1
                    for conf in spec.conflations
                )
                if not (has_sub and has_quot):
                    w3 = {
                        "id": m,
                        "has_minimal_sub": has_sub,
                        "has_minimal_quotient": has_quot,
                    }
                    break
        checks.append(
            Check("sl-minimal-sub-and-quotient", PASS)
            if w3 is None
            else Check(
                "sl-minimal-sub-and-quotient",
                FAIL,
                "every longer object needs stable conflations with minimal ends",
                w3,
            )
        )

    w4 = None
    for y in spec.indecomposables:
        for x in poset.proper_subobjects(y):
            if spec.theta[x] >= spec.theta[y]:
                w4 = {"sub": x, "over": y, "theta": [spec.theta[x], spec.theta[y]]}
                break
        if w4:
            break
    checks.append(
        Check("sl-subobject-length-strict", PASS)
        if w4 is None
        else Check(
            "sl-subobject-length-strict", FAIL, "proper subobjects are strictly shorter", w4
        )
    )

    return make_report(SUITE_SMALL_LEMMAS, checks)


def brauer_thrall_report(spec: CategorySpec) -> Report:
    """Counts, bounds, and the measure partition of a finite instance.

    Emits the indecomposable count, the maximal length, the ordered chain
    of distinct measures with its partition into blocks, and the finite-type
    flag, then verifies the partition consequences that are checkable at
    desk scale.  For windows of infinite families (``models_infinite``
    metadata) the bounded-length-with-growing-count signature is surfaced
    as a note rather than asserted as a statement about the family.
    """
    notes = [SCOPE_NOTE]
    if not spec.indecomposables:
        return make_report(
            SUITE_BRAUER_THRALL,
            [Check("bt-empty", SKIPPED, "empty spec")],
            data={"indecomposables": 0, "max_length": 0, "gr_chain": []},
            notes=notes,
        )

    table = gr_table(spec)
    finite_type = is_finite_type(spec)
    models_infinite = spec.metadata.get("models_infinite") is True
    if models_infinite:
        notes.append(WINDOW_NOTE)

    data = {
        "indecomposables": len(spec.indecomposables),
        "max_length": spec.max_theta(),
        "gr_chain": " < ".join(ch.render() for ch in table.gr_chain),
        "gr_chain_length": len(table.gr_chain),
        "top_measure": table.gr_chain[-1].render(),
        "blocks": {
            ch.render(): list(table.blocks[ch]) for ch in table.gr_chain
        },
        "finite_type": finite_type,
        "models_infinite": models_infinite,
    }

    checks: list[Check] = []

    w_const = None
    for ch in table.gr_chain:
        thetas = {spec.theta[m] for m in table.blocks[ch]}
        if len(thetas) > 1:
            w_const = {"measure": ch.render(True), "lengths": sorted(thetas)}
            break
    checks.append(
        Check("bt-blocks-constant-length", PASS)
        if w_const is None
        else Check(
            "bt-blocks-constant-length", FAIL, "a block mixes lengths", w_const
        )
    )

    tops = [ch.top for ch in table.gr_chain]
    if all(a <= b for a, b in zip(tops, tops[1:])):
        checks.append(Check("bt-block-length-monotone", PASS))
    else:
        checks.append(
            Check(
                "bt-block-length-monotone",
                FAIL,
                "block lengths must be weakly increasing along the chain",
                {"tops": tops},
            )
        )

    if finite_type:
        minimal_theta = min(spec.theta[m] for m in spec.indecomposables)
        first = table.gr_chain[0]
        if first == Chain.of([minimal_theta]):
            checks.append(Check("bt-first-block-minimal", PASS))
        else:
            checks.append(
                Check(
                    "bt-first-block-minimal",
                    FAIL,
                    "the first measure must be the singleton of the minimal length",
                    {"first": first.render(True), "minimal_length": minimal_theta},
                )
            )
    else:
        checks.append(
            Check("bt-first-block-minimal", SKIPPED, "tower does not stabilize at level one")
        )

    return make_report(SUITE_BRAUER_THRALL, checks, data=data, notes=notes)


def run_all_suites(spec: CategorySpec) -> list[Report]:
    """The four consistency suites in a fixed order."""
    return [
        check_gr_axioms(spec),
        check_main_property(spec),
        check_ext_bound(spec),
        check_small_lemmas(spec),
    ]
