"""Data model, parser, and validator for finite length-category instances.

A spec file is one JSON document (canonical extension ``.grcat.json``) with
top-level keys:

``name``
    display name, string.
``metadata``
    free-form object.  Conventional keys: ``description`` (string),
    ``complete`` (bool, the conflation table covers the declared universe),
    ``models_infinite`` (bool, the spec is a finite window of an infinite
    family).
``indecomposables``
    array of ``{"id": str, "theta": int >= 1}``; ids are unique and
    case-sensitive, ``theta`` is the length of the indecomposable.
``hom``
    array of ``{"from": id, "to": id, "dim": int >= 0}``.  Absent pairs
    default to 0, except ``hom[X][X]`` which defaults to 1.
``ext``
    array of ``{"c": id, "a": id, "dim": int >= 0}``; absent pairs default
    to 0.  The entry ``ext[C][A]`` is the dimension of the extension space
    with C as the first argument, so a nonzero value records non-split
    conflations of the form ``A -> B -> C``.
``inflations``
    array of ``{"sub": id, "target": [id, ...]}``; each record declares an
    admissible length-preserving embedding of ``sub`` into the direct sum
    ``target`` (repetition allowed).
``conflations``
    array of ``{"a": [ids], "b": [ids], "c": [ids], "stable": bool}``; a
    conflation ``a -> b -> c`` with ``stable`` meaning
    ``theta(b) = theta(a) + theta(c)``.

Unknown top-level keys are rejected.  Objects are formal multisets of
indecomposable ids; the empty multiset is the zero object.  Everything is
immutable after parse, so values can be shared freely across threads.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping

from .errors import (
    SpecFormatError,
    SpecInconsistencyError,
    UnknownIdError,
    guard_limit,
)

MAX_THETA = 2**31 - 1
DEFAULT_MAX_CONFLATIONS = 10**6

_TOP_LEVEL_KEYS = {
    "name",
    "metadata",
    "indecomposables",
    "hom",
    "ext",
    "inflations",
    "conflations",
}


@dataclass(frozen=True)
class ObjectRef:
    """A formal finite direct sum of indecomposables (multiset of ids).

    Equality is multiset equality; the stored tuple is kept sorted so that
    equal multisets compare and hash equal.  The empty multiset denotes the
    zero object.
    """

    summands: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, ids: Iterable[str]) -> "ObjectRef":
        return cls(tuple(ids))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def counts(self) -> Counter[str]:
        return Counter(self.summands)

    def __iter__(self) -> Iterator[str]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def to_json(self) -> list[str]:
        return list(self.summands)

    def render(self) -> str:
        return "0" if self.is_zero else "+".join(self.summands)


ZERO = ObjectRef(())


@dataclass(frozen=True)
class Conflation:
    """A conflation ``a -> b -> c``; ``stable`` records length additivity."""

    a: ObjectRef
    b: ObjectRef
    c: ObjectRef
    stable: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "stable": self.stable,
        }

    def render(self) -> str:
        return f"({self.a.render()} -> {self.b.render()} -> {self.c.render()})"


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    witness: Mapping[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"rule": self.rule, "message": self.message, "witness": dict(self.witness)}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict[str, Any]:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}

    def render_text(self) -> str:
        if self.ok:
            return "ok: no violations"
        lines = [f"violations: {len(self.violations)}"]
        for v in self.violations:
            lines.append(f"  [{v.rule}] {v.message}")
        return "\n".join(lines)


@dataclass(frozen=True)
class CategorySpec:
    """A full finite instance: lengths, dimension matrices, inflations, conflations.

    ``theta`` is stored per indecomposable only; the length of a composite
    object is always the sum over summands, so additivity over direct sums
    holds by construction.  ``hom`` and ``ext`` are dense id-indexed
    matrices; ``ext_declared`` records whether the source document carried
    an ``ext`` key at all (checks that need it are skipped otherwise).
    """

    name: str
    indecomposables: tuple[str, ...]
    theta: Mapping[str, int]
    hom: Mapping[str, Mapping[str, int]]
    ext: Mapping[str, Mapping[str, int]]
    ext_declared: bool
    inflations: tuple[tuple[str, ObjectRef], ...]
    conflations: tuple[Conflation, ...]
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def declared(self, m: str) -> bool:
        return m in self.theta

    def hom_dim(self, x: str, y: str) -> int:
        return self.hom[x][y]

    def ext_dim(self, c: str, a: str) -> int:
        return self.ext[c][a]

    def max_theta(self) -> int:
        return max(self.theta.values(), default=0)


def theta_of(spec: CategorySpec, m: ObjectRef | str) -> int:
    """Length of an object: the sum of theta over summands, 0 for zero."""
    if isinstance(m, str):
        if not spec.declared(m):
            raise UnknownIdError(f"undeclared id {m!r}")
        return spec.theta[m]
    total = 0
    for s in m.summands:
        if not spec.declared(s):
            raise UnknownIdError(f"undeclared summand {s!r}")
        total += spec.theta[s]
    return total


# ---------------------------------------------------------------------------
# parsing


def _fail(msg: str) -> None:
    raise SpecFormatError(msg)


def _str_field(entry: Mapping[str, Any], key: str, where: str) -> str:
    value = entry.get(key)
    if not isinstance(value, str) or not value:
        _fail(f"{where}: {key!r} must be a nonempty string")
    return value


def _dim_field(entry: Mapping[str, Any], key: str, where: str) -> int:
    value = entry.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"{where}: {key!r} must be an integer")
    if value < 0:
        _fail(f"{where}: negative dimension {value}")
    return value


def _check_keys(entry: Mapping[str, Any], allowed: set[str], where: str) -> None:
    if not isinstance(entry, dict):
        _fail(f"{where}: expected an object")
    extra = set(entry) - allowed
    if extra:
        _fail(f"{where}: unknown key(s) {sorted(extra)}")
    missing = allowed - set(entry)
    if missing:
        _fail(f"{where}: missing key(s) {sorted(missing)}")


def _id_list(value: Any, declared: set[str], where: str) -> ObjectRef:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        _fail(f"{where}: expected an array of ids")
    for x in value:
        if x not in declared:
            _fail(f"{where}: undeclared id {x!r}")
    return ObjectRef.of(value)


def parse_spec(text: str) -> CategorySpec:
    """Parse a spec document; raises SpecFormatError on any defect."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return spec_from_doc(doc)


def spec_from_doc(doc: Any) -> CategorySpec:
    """Build a spec from an already-decoded JSON document."""
    if not isinstance(doc, dict):
        _fail("top level must be a JSON object")
    unknown = set(doc) - _TOP_LEVEL_KEYS
    if unknown:
        _fail(f"unknown top-level key(s) {sorted(unknown)}")

    name = doc.get("name", "")
    if not isinstance(name, str):
        _fail("'name' must be a string")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        _fail("'metadata' must be an object")

    raw_ind = doc.get("indecomposables", [])
    if not isinstance(raw_ind, list):
        _fail("'indecomposables' must be an array")
    ids: list[str] = []
    theta: dict[str, int] = {}
    for i, entry in enumerate(raw_ind):
        where = f"indecomposables[{i}]"
        _check_keys(entry, {"id", "theta"}, where)
        ident = _str_field(entry, "id", where)
        if ident in theta:
            _fail(f"{where}: duplicate id {ident!r}")
        t = _dim_field(entry, "theta", where)
        if t < 1:
            _fail(f"{where}: theta must be >= 1, got {t}")
        if t > MAX_THETA:
            _fail(f"{where}: theta exceeds the 32-bit bound")
        ids.append(ident)
        theta[ident] = t
    declared = set(ids)

    hom: dict[str, dict[str, int]] = {x: {y: 0 for y in ids} for x in ids}
    for x in ids:
        hom[x][x] = 1
    seen_hom: set[tuple[str, str]] = set()
    raw_hom = doc.get("hom", [])
    if not isinstance(raw_hom, list):
        _fail("'hom' must be an array")
    for i, entry in enumerate(raw_hom):
        where = f"hom[{i}]"
        _check_keys(entry, {"from", "to", "dim"}, where)
        src = _str_field(entry, "from", where)
        dst = _str_field(entry, "to", where)
        for ref in (src, dst):
            if ref not in declared:
                _fail(f"{where}: undeclared id {ref!r}")
        if (src, dst) in seen_hom:
            _fail(f"{where}: duplicate entry for ({src!r}, {dst!r})")
        seen_hom.add((src, dst))
        hom[src][dst] = _dim_field(entry, "dim", where)

    ext_declared = "ext" in doc
    ext: dict[str, dict[str, int]] = {c: {a: 0 for a in ids} for c in ids}
    raw_ext = doc.get("ext", [])
    if not isinstance(raw_ext, list):
        _fail("'ext' must be an array")
    seen_ext: set[tuple[str, str]] = set()
    for i, entry in enumerate(raw_ext):
        where = f"ext[{i}]"
        _check_keys(entry, {"c", "a", "dim"}, where)
        c = _str_field(entry, "c", where)
        a = _str_field(entry, "a", where)
        for ref in (c, a):
            if ref not in declared:
                _fail(f"{where}: undeclared id {ref!r}")
        if (c, a) in seen_ext:
            _fail(f"{where}: duplicate entry for ({c!r}, {a!r})")
        seen_ext.add((c, a))
        ext[c][a] = _dim_field(entry, "dim", where)

    raw_inf = doc.get("inflations", [])
    if not isinstance(raw_inf, list):
        _fail("'inflations' must be an array")
    inflations: set[tuple[str, ObjectRef]] = set()
    for i, entry in enumerate(raw_inf):
        where = f"inflations[{i}]"
        _check_keys(entry, {"sub", "target"}, where)
        sub = _str_field(entry, "sub", where)
        if sub not in declared:
            _fail(f"{where}: undeclared id {sub!r}")
        target = _id_list(entry.get("target"), declared, where)
        inflations.add((sub, target))

    raw_conf = doc.get("conflations", [])
    if not isinstance(raw_conf, list):
        _fail("'conflations' must be an array")
    if len(raw_conf) > guard_limit(DEFAULT_MAX_CONFLATIONS):
        raise SpecFormatError(
            f"conflation table has {len(raw_conf)} entries, over the size guard"
        )
    conflations: list[Conflation] = []
    for i, entry in enumerate(raw_conf):
        where = f"conflations[{i}]"
        _check_keys(entry, {"a", "b", "c", "stable"}, where)
        stable = entry.get("stable")
        if not isinstance(stable, bool):
            _fail(f"{where}: 'stable' must be a boolean")
        conflations.append(
            Conflation(
                a=_id_list(entry.get("a"), declared, where),
                b=_id_list(entry.get("b"), declared, where),
                c=_id_list(entry.get("c"), declared, where),
                stable=stable,
            )
        )

    return CategorySpec(
        name=name,
        indecomposables=tuple(ids),
        theta=theta,
        hom=hom,
        ext=ext,
        ext_declared=ext_declared,
        inflations=tuple(sorted(inflations, key=lambda p: (p[0], p[1].summands))),
        conflations=tuple(conflations),
        metadata=metadata,
    )


def render_spec(spec: CategorySpec) -> str:
    """Serialize a spec to canonical JSON (stable key order, sorted arrays)."""
    doc: dict[str, Any] = {"name": spec.name}
    if spec.metadata:
        doc["metadata"] = {k: spec.metadata[k] for k in sorted(spec.metadata)}
    doc["indecomposables"] = [
        {"id": m, "theta": spec.theta[m]} for m in spec.indecomposables
    ]
    hom_entries = []
    for x in sorted(spec.indecomposables):
        for y in sorted(spec.indecomposables):
            dim = spec.hom[x][y]
            default = 1 if x == y else 0
            if dim != default:
                hom_entries.append({"from": x, "to": y, "dim": dim})
    doc["hom"] = hom_entries
    if spec.ext_declared:
        doc["ext"] = [
            {"c": c, "a": a, "dim": spec.ext[c][a]}
            for c in sorted(spec.indecomposables)
            for a in sorted(spec.indecomposables)
            if spec.ext[c][a] != 0
        ]
    doc["inflations"] = [
        {"sub": sub, "target": target.to_json()} for sub, target in spec.inflations
    ]
    doc["conflations"] = [conf.to_json() for conf in spec.conflations]
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subobject poset


@dataclass(frozen=True)
class SubobjectPoset:
    """The derived partial order on indecomposables.

    The relation is the reflexive-transitive closure of declared
    single-indecomposable inflations; ``below[y]`` holds the proper
    subobjects of ``y``.  ``violations`` carries antisymmetry or length
    monotonicity defects found while closing the relation.
    """

    elements: tuple[str, ...]
    below: Mapping[str, frozenset[str]]
    violations: tuple[Violation, ...]

    def leq(self, x: str, y: str) -> bool:
        return x == y or x in self.below[y]

    def proper_subobjects(self, x: str) -> tuple[str, ...]:
        return tuple(sorted(self.below[x]))


def subobject_poset(spec: CategorySpec, strict: bool = True) -> SubobjectPoset:
    """Close the declared indecomposable-target inflations into a poset.

    Inflations into decomposable targets are deliberately not part of the
    relation; they are kept for the inflation-bound checker only.  With
    ``strict`` the derived closure must be antisymmetric and strictly
    length-increasing, otherwise SpecInconsistencyError is raised.
    """
    adj: dict[str, set[str]] = {m: set() for m in spec.indecomposables}
    for sub, target in spec.inflations:
        if len(target) == 1 and target.summands[0] != sub:
            adj[sub].add(target.summands[0])

    above: dict[str, set[str]] = {}
    for start in spec.indecomposables:
        seen: set[str] = set()
        stack = list(adj[start])
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(adj[node])
        above[start] = seen

    below: dict[str, set[str]] = {m: set() for m in spec.indecomposables}
    for x, ups in above.items():
        for y in ups:
            if y != x:
                below[y].add(x)

    violations: list[Violation] = []
    reported_pairs: set[tuple[str, str]] = set()
    for x in spec.indecomposables:
        for y in above[x]:
            if y == x:
                continue
            if x in above[y]:
                pair = tuple(sorted((x, y)))
                if pair not in reported_pairs:
                    reported_pairs.add(pair)
                    violations.append(
                        Violation(
                            "antisymmetry",
                            f"subobject relation has {pair[0]} <= {pair[1]} and "
                            f"{pair[1]} <= {pair[0]}",
                            {"pair": list(pair)},
                        )
                    )
            if spec.theta[x] >= spec.theta[y]:
                violations.append(
                    Violation(
                        "subobject-theta-monotone",
                        f"{x} < {y} in the closure but theta({x})={spec.theta[x]} "
                        f">= theta({y})={spec.theta[y]}",
                        {"sub": x, "over": y},
                    )
                )

    if strict and violations:
        raise SpecInconsistencyError(
            "; ".join(v.message for v in violations)
        )
    return SubobjectPoset(
        elements=spec.indecomposables,
        below={m: frozenset(s) for m, s in below.items()},
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# validation


def validate_spec(spec: CategorySpec) -> ValidationReport:
    """Check every structural invariant; violations are data, not failures."""
    violations: list[Violation] = []

    for m in spec.indecomposables:
        if spec.theta[m] < 1:
            violations.append(
                Violation(
                    "theta-positive",
                    f"theta({m}) = {spec.theta[m]} must be >= 1",
                    {"id": m},
                )
            )
        if spec.hom[m][m] < 1:
            violations.append(
                Violation(
                    "hom-identity",
                    f"hom[{m}][{m}] = {spec.hom[m][m]} but the identity needs dim >= 1",
                    {"id": m},
                )
            )

    for idx, conf in enumerate(spec.conflations):
        try:
            ta, tb, tc = (theta_of(spec, o) for o in (conf.a, conf.b, conf.c))
        except UnknownIdError as exc:
            violations.append(
                Violation("undeclared-id", str(exc), {"conflation": idx})
            )
            continue
        if conf.stable and tb != ta + tc:
            violations.append(
                Violation(
                    "stability-arithmetic",
                    f"stable conflation {conf.render()} has {tb} != {ta}+{tc}",
                    {"conflation": idx, "theta": [ta, tb, tc]},
                )
            )
        if not conf.stable and tb > ta + tc:
            violations.append(
                Violation(
                    "subadditivity",
                    f"conflation {conf.render()} has {tb} > {ta}+{tc}",
                    {"conflation": idx, "theta": [ta, tb, tc]},
                )
            )

    for sub, target in spec.inflations:
        try:
            ts, tt = theta_of(spec, sub), theta_of(spec, target)
        except UnknownIdError as exc:
            violations.append(Violation("undeclared-id", str(exc), {"inflation": sub}))
            continue
        if ts > tt or (ts == tt and target.summands != (sub,)):
            violations.append(
                Violation(
                    "inflation-monotone",
                    f"inflation {sub} >-> {target.render()} has theta {ts} vs {tt}; "
                    "equality is only allowed for the identity target",
                    {"sub": sub, "target": target.to_json()},
                )
            )

    poset = subobject_poset(spec, strict=False)
    violations.extend(poset.violations)

    return ValidationReport(tuple(violations))
