"""Ground-truth instance builders.

Two families:

* ``generate_an`` constructs the interval-module category of the linearly
  oriented type-A quiver with n vertices over the two-element field, by
  honest linear algebra: Hom dimensions by exhaustive enumeration of
  commuting families of scalars, extension dimensions by the hereditary
  Euler form, conflations by enumerating every subrepresentation of every
  middle term within a length bound.

* ``fixture`` returns the two hand-transcribed instances used as golden
  references: a six-object filtration category and a parametric window of
  the repeating translation quiver it sits in.

Generation is pure and deterministic; rendered files are byte-identical
across runs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Any, Iterator

from . import gf2
from .catspec import CategorySpec, parse_spec, render_spec, spec_from_doc
from .errors import SizeGuardError, SpecFormatError, guard_limit

GENERATE_AN_MAX = 6
DB_WINDOW_MAX = 64

FIXTURE_FINAL_EXAMPLE = "final-example"
FIXTURE_DB_WINDOW = "db-window"

# The six-object fixture and generate_an(3) present the same category; the
# renaming identifies each named object with its interval presentation.
FINAL_EXAMPLE_RENAMING = {
    "P1m1": "[3,3]",
    "S3": "[2,2]",
    "S2": "[1,1]",
    "I2m1": "[2,3]",
    "P2": "[1,2]",
    "S1m1": "[1,3]",
}


@dataclass(frozen=True)
class IntervalModule:
    """The indecomposable supported on vertices a..b with identity maps."""

    a: int
    b: int

    @property
    def theta(self) -> int:
        return self.b - self.a + 1

    @property
    def id(self) -> str:
        return f"[{self.a},{self.b}]"

    def supports(self, v: int) -> bool:
        return self.a <= v <= self.b


def intervals_an(n: int) -> tuple[IntervalModule, ...]:
    return tuple(
        IntervalModule(a, b) for a in range(1, n + 1) for b in range(a, n + 1)
    )


# ---------------------------------------------------------------------------
# Hom and Ext between intervals


def hom_dim_interval(n: int, x: IntervalModule, y: IntervalModule) -> int:
    """dim Hom by exhaustive enumeration of commuting scalar families."""
    dim, _ = _hom_solutions(n, x, y)
    return dim


def mono_exists_interval(n: int, x: IntervalModule, y: IntervalModule) -> bool:
    _, mono = _hom_solutions(n, x, y)
    return mono


def _hom_solutions(n: int, x: IntervalModule, y: IntervalModule) -> tuple[int, bool]:
    overlap = [v for v in range(1, n + 1) if x.supports(v) and y.supports(v)]
    count = 0
    mono = False
    x_support = list(range(x.a, x.b + 1))
    for bits in product((0, 1), repeat=len(overlap)):
        f = dict(zip(overlap, bits))
        ok = True
        for v in range(1, n):
            if not x.supports(v):
                continue
            left = f.get(v + 1, 0) if v + 1 <= x.b else 0
            right = f.get(v, 0) if (y.a <= v and v + 1 <= y.b) else 0
            if left != right:
                ok = False
                break
        if ok:
            count += 1
            if all(f.get(v, 0) == 1 for v in x_support):
                mono = True
    # the solution set is a subspace, so the count is a power of two
    return count.bit_length() - 1, mono


def _overlap_len(lo1: int, hi1: int, lo2: int, hi2: int) -> int:
    return max(0, min(hi1, hi2) - max(lo1, lo2) + 1)


def ext_dim_interval(n: int, c: IntervalModule, a: IntervalModule) -> int:
    """dim of the extension space via the hereditary Euler form.

    chi(C, A) = sum_v C_v A_v - sum_v C_v A_{v+1}; for a hereditary algebra
    dim Hom - dim Ext = chi.
    """
    chi = _overlap_len(c.a, c.b, a.a, a.b) - _overlap_len(c.a, c.b, a.a - 1, a.b - 1)
    ext = hom_dim_interval(n, c, a) - chi
    if ext < 0:
        raise AssertionError(f"negative ext dimension for ({c.id}, {a.id})")
    return ext


# ---------------------------------------------------------------------------
# representations of a direct sum of intervals and their subrepresentations


class _Rep:
    """A direct sum of intervals as an explicit GF(2) representation."""

    def __init__(self, n: int, summands: tuple[IntervalModule, ...]):
        self.n = n
        self.summands = summands
        self.basis: dict[int, list[int]] = {
            v: [i for i, s in enumerate(summands) if s.supports(v)]
            for v in range(1, n + 1)
        }
        self.dims = {v: len(self.basis[v]) for v in range(1, n + 1)}
        pos = {
            (i, v): j
            for v in range(1, n + 1)
            for j, i in enumerate(self.basis[v])
        }
        # arrow v -> v+1 as columns: identity on summands containing both
        self.cols: dict[int, tuple[int, ...]] = {}
        for v in range(1, n):
            cols = []
            for i in self.basis[v]:
                cols.append(1 << pos[(i, v + 1)] if summands[i].supports(v + 1) else 0)
            self.cols[v] = tuple(cols)

    def full_basis(self, v: int) -> list[int]:
        return [1 << j for j in range(self.dims[v])]

    def push(self, vectors: list[int], v_from: int, v_to: int) -> list[int]:
        out = vectors
        for v in range(v_from, v_to):
            out = [gf2.apply_columns(self.cols[v], x) for x in out]
        return out

    def subreps(self) -> Iterator[dict[int, tuple[int, ...]]]:
        """Every subrepresentation, as per-vertex rref bases."""

        def extend(v: int, chosen: dict[int, tuple[int, ...]]) -> Iterator[dict[int, tuple[int, ...]]]:
            if v > self.n:
                yield dict(chosen)
                return
            if v == 1:
                options = gf2.subspaces(self.dims[1])
            else:
                image = gf2.image_basis(self.cols[v - 1], chosen[v - 1])
                options = gf2.subspaces_containing(self.dims[v], image)
            for option in options:
                chosen[v] = option
                yield from extend(v + 1, chosen)
            chosen.pop(v, None)

        yield from extend(1, {})

    def _type_from_ranks(self, r: dict[tuple[int, int], int]) -> Counter[IntervalModule]:
        def get(a: int, b: int) -> int:
            if a < 1 or b > self.n or a > b:
                return 0
            return r[(a, b)]

        out: Counter[IntervalModule] = Counter()
        for a in range(1, self.n + 1):
            for b in range(a, self.n + 1):
                mult = get(a, b) - get(a - 1, b) - get(a, b + 1) + get(a - 1, b + 1)
                if mult:
                    out[IntervalModule(a, b)] = mult
        return out

    def sub_type(self, w: dict[int, tuple[int, ...]]) -> Counter[IntervalModule]:
        ranks = {
            (a, b): gf2.rank(self.push(list(w[a]), a, b))
            for a in range(1, self.n + 1)
            for b in range(a, self.n + 1)
        }
        return self._type_from_ranks(ranks)

    def quotient_type(self, w: dict[int, tuple[int, ...]]) -> Counter[IntervalModule]:
        ranks = {}
        for a in range(1, self.n + 1):
            for b in range(a, self.n + 1):
                pushed = self.push(self.full_basis(a), a, b)
                ranks[(a, b)] = gf2.rank(pushed + list(w[b])) - gf2.rank(w[b])
        return self._type_from_ranks(ranks)


def _ids(counter: Counter[IntervalModule]) -> tuple[str, ...]:
    out: list[str] = []
    for interval, mult in counter.items():
        out.extend([interval.id] * mult)
    return tuple(sorted(out))


def _interval_multisets(
    intervals: tuple[IntervalModule, ...], budget: int, start: int = 0
) -> Iterator[tuple[IntervalModule, ...]]:
    yield ()
    for i in range(start, len(intervals)):
        if intervals[i].theta <= budget:
            for rest in _interval_multisets(intervals, budget - intervals[i].theta, i):
                yield (intervals[i],) + rest


def enumerate_ses(
    n: int, theta_bound: int
) -> tuple[set[tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]], set[tuple[str, tuple[str, ...]]]]:
    """All short exact sequences with middle-term length within the bound.

    Enumerates every subrepresentation of every candidate middle term and
    decomposes kernel and cokernel exactly.  Returns the set of non-split
    triples (split means the middle term is the plain direct sum of the
    ends) and, separately, every embedding of a single interval into a
    middle term, split or not, which is the inflation table.
    """
    intervals = intervals_an(n)
    triples: set[tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]] = set()
    embeddings: set[tuple[str, tuple[str, ...]]] = set()
    for b_summands in _interval_multisets(intervals, theta_bound):
        if not b_summands:
            continue
        # subreps of a semisimple representation are plain summands: skip
        if all(s.theta == 1 for s in b_summands):
            continue
        rep = _Rep(n, b_summands)
        b_ids = tuple(sorted(s.id for s in b_summands))
        for w in rep.subreps():
            a_type = rep.sub_type(w)
            a_ids = _ids(a_type)
            if not a_ids or a_ids == b_ids:
                continue
            c_ids = _ids(rep.quotient_type(w))
            if len(a_ids) == 1:
                embeddings.add((a_ids[0], b_ids))
            if tuple(sorted(a_ids + c_ids)) == b_ids:
                continue  # split: middle term is the direct sum of the ends
            triples.add((a_ids, b_ids, c_ids))
    return triples, embeddings


def ext_table_bruteforce(n: int) -> dict[tuple[str, str], int]:
    """Independent oracle: 1 iff a non-split sequence A -> B -> C exists.

    Complete because a middle term of such a sequence has length exactly
    theta(A) + theta(C) <= 2n.  Intended for n <= 3 (exhaustive but slow
    beyond that).  Extension dimensions between intervals are 0 or 1, which
    the Euler-form comparison test asserts separately.
    """
    triples, _ = enumerate_ses(n, 2 * n)
    table: dict[tuple[str, str], int] = {}
    for a_ids, _b, c_ids in triples:
        if len(a_ids) == 1 and len(c_ids) == 1:
            table[(c_ids[0], a_ids[0])] = 1
    return table


def generate_an(n: int) -> CategorySpec:
    """The interval-module category of the linear type-A quiver on n vertices."""
    limit = guard_limit(GENERATE_AN_MAX)
    if not 1 <= n <= limit:
        raise SizeGuardError(f"generate_an supports 1 <= n <= {limit}, got {n}")
    intervals = intervals_an(n)

    hom_entries = []
    for x in intervals:
        for y in intervals:
            dim = hom_dim_interval(n, x, y)
            default = 1 if x == y else 0
            if dim != default:
                hom_entries.append({"from": x.id, "to": y.id, "dim": dim})

    ext_entries = []
    for c in intervals:
        for a in intervals:
            dim = ext_dim_interval(n, c, a)
            if dim:
                ext_entries.append({"c": c.id, "a": a.id, "dim": dim})

    triples, embeddings = enumerate_ses(n, n + 2)
    conflations = [
        {"a": list(a), "b": list(b), "c": list(c), "stable": True}
        for a, b, c in sorted(triples)
    ]
    inflations = [
        {"sub": sub, "target": list(target)} for sub, target in sorted(embeddings)
    ]

    doc = {
        "name": f"an{n}",
        "metadata": {
            "description": (
                f"interval modules of the linearly oriented type-A quiver on "
                f"{n} vertices over the two-element field"
            ),
            "complete": True,
            "conflation_length_bound": n + 2,
        },
        "indecomposables": [{"id": m.id, "theta": m.theta} for m in intervals],
        "hom": hom_entries,
        "ext": ext_entries,
        "inflations": inflations,
        "conflations": conflations,
    }
    return spec_from_doc(doc)


# ---------------------------------------------------------------------------
# hand-transcribed fixtures


def _final_example_doc() -> dict[str, Any]:
    # Six objects arranged as the mesh quiver
    #
    #                 S1m1
    #            I2m1      P2
    #       P1m1      S3       S2
    #
    # with irreducible maps going up-right and down-right.  Lengths are the
    # generator-set filtration costs (bottom row 1, middle 2, top 3).  Hom
    # dimensions count quiver paths modulo the mesh relations; ext entries
    # record the non-split conflations listed below plus the mesh one.
    hom_pairs = [
        ("P1m1", "I2m1"),  # path P1m1 -> I2m1
        ("P1m1", "S1m1"),  # path P1m1 -> I2m1 -> S1m1
        ("I2m1", "S1m1"),  # path I2m1 -> S1m1
        ("I2m1", "S3"),  # path I2m1 -> S3
        ("I2m1", "P2"),  # paths I2m1 -> S1m1 -> P2 and I2m1 -> S3 -> P2 (mesh: equal)
        ("S3", "P2"),  # path S3 -> P2
        ("S1m1", "P2"),  # path S1m1 -> P2
        ("S1m1", "S2"),  # path S1m1 -> P2 -> S2
        ("P2", "S2"),  # path P2 -> S2
    ]
    ext_pairs = [
        ("S2", "S3"),  # S3 -> P2 -> S2
        ("S2", "I2m1"),  # I2m1 -> S1m1 -> S2
        ("S3", "P1m1"),  # P1m1 -> I2m1 -> S3
        ("P2", "P1m1"),  # P1m1 -> S1m1 -> P2
        ("P2", "I2m1"),  # mesh: I2m1 -> S1m1+S3 -> P2
    ]
    return {
        "name": "final-example",
        "metadata": {
            "description": (
                "six-object filtration category generated by P1m1, S3, S2; "
                "lengths are the generator filtration costs"
            ),
            "complete": True,
        },
        "indecomposables": [
            {"id": "P1m1", "theta": 1},
            {"id": "S3", "theta": 1},
            {"id": "S2", "theta": 1},
            {"id": "I2m1", "theta": 2},
            {"id": "P2", "theta": 2},
            {"id": "S1m1", "theta": 3},
        ],
        "hom": [{"from": x, "to": y, "dim": 1} for x, y in hom_pairs],
        "ext": [{"c": c, "a": a, "dim": 1} for c, a in ext_pairs],
        "inflations": [
            {"sub": "P1m1", "target": ["I2m1"]},
            {"sub": "I2m1", "target": ["S1m1"]},
            {"sub": "S3", "target": ["P2"]},
            {"sub": "I2m1", "target": ["S1m1", "S3"]},
        ],
        "conflations": [
            {"a": ["P1m1"], "b": ["I2m1"], "c": ["S3"], "stable": True},
            {"a": ["S3"], "b": ["P2"], "c": ["S2"], "stable": True},
            {"a": ["I2m1"], "b": ["S1m1"], "c": ["S2"], "stable": True},
            {"a": ["P1m1"], "b": ["S1m1"], "c": ["P2"], "stable": True},
            {"a": ["I2m1"], "b": ["S1m1", "S3"], "c": ["P2"], "stable": True},
        ],
    }


# Nonzero Hom pairs between the six base objects of one translation period
# (path counting as in the final example, in the S/P/I naming of the
# repeating quiver), and the nonzero extension pairs: ext(C, A) = 1 records
# the non-split sequence A -> B -> C.
_MOD_HOM = {
    ("S3", "P2"),
    ("S3", "P1"),
    ("P2", "P1"),
    ("P2", "S2"),
    ("P2", "I2"),
    ("P1", "I2"),
    ("P1", "S1"),
    ("S2", "I2"),
    ("I2", "S1"),
}
_MOD_EXT = {
    ("S1", "S2"),
    ("S1", "P2"),
    ("S2", "S3"),
    ("I2", "S3"),
    ("I2", "P2"),
}


def _mod_hom(x: str, y: str) -> int:
    return 1 if x == y or (x, y) in _MOD_HOM else 0


def _mod_ext(c: str, a: str) -> int:
    return 1 if (c, a) in _MOD_EXT else 0


def _window_object(t: int, r: int) -> tuple[str, int]:
    """Object at column t, row r (3 = top) of the translation grid.

    The top row cycles through S1, P1, S3, S2 with the shift suffix
    increasing every other period; the bottom row is the top row translated
    one step right and one shift down, and the middle row alternates I2, P2.
    The extension rule beyond the drawn period is this periodicity.
    """
    if r == 3:
        k = t % 4
        if k == 0:
            return ("S1", t // 2 - 1)
        if k == 1:
            return ("P1", (t - 1) // 2)
        if k == 2:
            return ("S3", t // 2)
        return ("S2", (t - 1) // 2)
    if r == 2:
        if t % 2 == 0:
            return ("I2", t // 2 - 1)
        return ("P2", (t - 1) // 2)
    base, shift = _window_object(t + 1, 3)
    return (base, shift - 1)


def _window_id(t: int, r: int) -> str:
    base, shift = _window_object(t, r)
    if shift == 0:
        return base
    return f"{base}m{-shift}" if shift < 0 else f"{base}p{shift}"


def _db_window_doc(w: int) -> dict[str, Any]:
    width = 4 * w + 1
    rows = {3: range(0, width), 2: range(1, width), 1: range(2, width)}
    objects = [(t, r) for r in (3, 2, 1) for t in rows[r]]
    theta = {3: 1, 2: 2, 1: 3}

    hom_entries = []
    ext_entries = []
    for t1, r1 in objects:
        b1, i1 = _window_object(t1, r1)
        for t2, r2 in objects:
            b2, i2 = _window_object(t2, r2)
            # hom in the ambient triangulated structure: degree 0 or 1 only
            d = i2 - i1
            dim = _mod_hom(b1, b2) if d == 0 else (_mod_ext(b1, b2) if d == 1 else 0)
            x, y = _window_id(t1, r1), _window_id(t2, r2)
            default = 1 if x == y else 0
            if dim != default:
                hom_entries.append({"from": x, "to": y, "dim": dim})
            # ext(C, A) is hom from C into A shifted once upward, so it is a
            # plain hom when A sits one shift below C
            if i2 == i1 - 1:
                edim = _mod_hom(b1, b2)
            elif i2 == i1:
                edim = _mod_ext(b1, b2)
            else:
                edim = 0
            if edim:
                ext_entries.append({"c": x, "a": y, "dim": edim})

    conflations = []
    inflations = []
    for t in range(1, width):
        # top mesh: the previous generator extends to the next one
        conflations.append(
            {
                "a": [_window_id(t - 1, 3)],
                "b": [_window_id(t, 2)],
                "c": [_window_id(t, 3)],
                "stable": True,
            }
        )
        inflations.append({"sub": _window_id(t - 1, 3), "target": [_window_id(t, 2)]})
    for t in range(2, width):
        conflations.append(
            {
                "a": [_window_id(t - 1, 2)],
                "b": [_window_id(t, 1)],
                "c": [_window_id(t, 3)],
                "stable": True,
            }
        )
        inflations.append({"sub": _window_id(t - 1, 2), "target": [_window_id(t, 1)]})
        conflations.append(
            {
                "a": [_window_id(t - 2, 3)],
                "b": [_window_id(t, 1)],
                "c": [_window_id(t, 2)],
                "stable": True,
            }
        )
        inflations.append({"sub": _window_id(t - 2, 3), "target": [_window_id(t, 1)]})
    for t in range(1, width - 1):
        # middle mesh: two-summand middle term
        conflations.append(
            {
                "a": [_window_id(t, 2)],
                "b": sorted([_window_id(t, 3), _window_id(t + 1, 1)]),
                "c": [_window_id(t + 1, 2)],
                "stable": True,
            }
        )
        inflations.append(
            {
                "sub": _window_id(t, 2),
                "target": sorted([_window_id(t, 3), _window_id(t + 1, 1)]),
            }
        )
    for t in range(2, width - 1):
        # bottom mesh: not length-additive, kept as a plain conflation
        conflations.append(
            {
                "a": [_window_id(t, 1)],
                "b": [_window_id(t, 2)],
                "c": [_window_id(t + 1, 1)],
                "stable": False,
            }
        )

    return {
        "name": f"db-window-{w}",
        "metadata": {
            "description": (
                f"{w} period(s) of the repeating translation quiver with the "
                "top row as generators; lengths are the frozen generator "
                "filtration costs"
            ),
            "complete": True,
            "models_infinite": True,
            "window": w,
        },
        "indecomposables": [
            {"id": _window_id(t, r), "theta": theta[r]} for t, r in objects
        ],
        "hom": hom_entries,
        "ext": ext_entries,
        "inflations": inflations,
        "conflations": conflations,
    }


def fixture(name: str, window: int = 1) -> CategorySpec:
    """A bundled instance by name: ``final-example`` or ``db-window``."""
    if name == FIXTURE_FINAL_EXAMPLE:
        return spec_from_doc(_final_example_doc())
    if name == FIXTURE_DB_WINDOW:
        limit = guard_limit(DB_WINDOW_MAX)
        if not 1 <= window <= limit:
            raise SizeGuardError(f"window must satisfy 1 <= w <= {limit}, got {window}")
        return spec_from_doc(_db_window_doc(window))
    raise SpecFormatError(f"unknown fixture {name!r}")


def bundled_fixture_text(filename: str) -> str:
    """Contents of a data file shipped with the package."""
    return (
        resources.files(__package__)
        .joinpath("fixtures")
        .joinpath(filename)
        .read_text(encoding="utf-8")
    )


def bundled_fixture(filename: str) -> CategorySpec:
    return parse_spec(bundled_fixture_text(filename))


def write_spec_file(spec: CategorySpec, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render_spec(spec))
