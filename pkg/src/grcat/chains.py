"""Finite increasing chains of positive integers, their lexicographic order,
and the Gabriel-Roiter measure over the subobject poset.

The order compares underlying sets by smallest difference:
``X <= Y  iff  min(Y \\ X) <= min(X \\ Y)``, where the minimum of the empty
set counts as +infinity.  Consequences worth keeping in mind:

* extending a chain on top makes it strictly larger ({1} < {1,2});
* a smaller fresh minimum wins ({2} < {1,3} because 1 <= 2);
* the order is total, so finite nonempty sets of chains have a unique max.

The measure of an indecomposable is the maximum, over chains of the
subobject poset ending at it, of the chain of member lengths.  It is
computed by dynamic programming over the poset in increasing length order;
``gr_measure_bruteforce`` is the literal enumeration used as an oracle.
Both are pure functions and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Mapping

from .catspec import CategorySpec, subobject_poset
from .errors import SizeGuardError, UnknownIdError, guard_limit

BRUTEFORCE_MAX_INDECOMPOSABLES = 20


@total_ordering
@dataclass(frozen=True)
class Chain:
    """A strictly increasing finite sequence of positive integers.

    The empty chain is permitted as a comparison sentinel only; measure
    computations never produce it.
    """

    elems: tuple[int, ...]
    _set: frozenset[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        for e in self.elems:
            if isinstance(e, bool) or not isinstance(e, int) or e < 1:
                raise ValueError(f"chain elements must be integers >= 1, got {e!r}")
        if any(a >= b for a, b in zip(self.elems, self.elems[1:])):
            raise ValueError(f"chain must be strictly increasing, got {self.elems}")
        object.__setattr__(self, "_set", frozenset(self.elems))

    @classmethod
    def of(cls, values: Iterable[int]) -> "Chain":
        return cls(tuple(sorted(set(values))))

    def extended(self, value: int) -> "Chain":
        return Chain.of(self._set | {value})

    @property
    def top(self) -> int:
        return self.elems[-1]

    @property
    def bottom(self) -> int:
        return self.elems[0]

    def __lt__(self, other: "Chain") -> bool:
        return self.elems != other.elems and chain_leq(self, other)

    def render(self, compact: bool = False) -> str:
        sep = "," if compact else ", "
        return "{" + sep.join(str(e) for e in self.elems) + "}"

    def __str__(self) -> str:
        return self.render()


def chain_leq(x: Chain, y: Chain) -> bool:
    """min(Y\\X) <= min(X\\Y) with min of the empty set treated as +infinity."""
    only_y = y._set - x._set
    only_x = x._set - y._set
    if not only_y:
        return not only_x
    if not only_x:
        return True
    return min(only_y) <= min(only_x)


def chain_max(chains: Iterable[Chain]) -> Chain:
    """The unique maximum of a nonempty collection under chain_leq."""
    best: Chain | None = None
    for ch in chains:
        if best is None or chain_leq(best, ch):
            best = ch
    if best is None:
        raise ValueError("chain_max of an empty collection")
    return best


@dataclass(frozen=True)
class MeasureTable:
    """All measures of a spec plus the ordered chain of distinct values.

    ``gr_chain`` is strictly increasing; ``blocks`` partitions the
    indecomposables by measure, listing members in declaration order.
    """

    measures: Mapping[str, Chain]
    gr_chain: tuple[Chain, ...]
    blocks: Mapping[Chain, tuple[str, ...]]


def measure_map(spec: CategorySpec) -> dict[str, Chain]:
    """Measures for every indecomposable, keyed in declaration order.

    Recurrence: the measure of m is the maximum of {theta(m)} and of
    measure(m') extended by theta(m) over proper subobjects m'.  Length is
    strictly increasing along the poset, so iterating in increasing
    (theta, id) order is a topological order and the memo is compute-once.
    """
    poset = subobject_poset(spec)
    memo: dict[str, Chain] = {}
    for m in sorted(spec.indecomposables, key=lambda i: (spec.theta[i], i)):
        t = spec.theta[m]
        best = Chain.of([t])
        for sub in poset.proper_subobjects(m):
            candidate = memo[sub].extended(t)
            if chain_leq(best, candidate):
                best = candidate
        memo[m] = best
    return {m: memo[m] for m in spec.indecomposables}


def gr_measure(spec: CategorySpec, m: str) -> Chain:
    """The Gabriel-Roiter measure of one indecomposable (DP route)."""
    if not spec.declared(m):
        raise UnknownIdError(f"undeclared id {m!r}")
    return measure_map(spec)[m]


def gr_measure_bruteforce(spec: CategorySpec, m: str) -> Chain:
    """Literal definition: maximize over every chain of subobjects ending at m.

    Exponential in the poset size; guarded to small instances and used as
    the independent oracle for the DP.
    """
    if not spec.declared(m):
        raise UnknownIdError(f"undeclared id {m!r}")
    limit = guard_limit(BRUTEFORCE_MAX_INDECOMPOSABLES)
    if len(spec.indecomposables) > limit:
        raise SizeGuardError(
            f"brute-force measure is limited to {limit} indecomposables, "
            f"spec has {len(spec.indecomposables)}"
        )
    poset = subobject_poset(spec)

    def chains_ending_at(x: str):
        yield (x,)
        for y in poset.proper_subobjects(x):
            for ch in chains_ending_at(y):
                yield ch + (x,)

    return chain_max(
        Chain.of(spec.theta[o] for o in ch) for ch in chains_ending_at(m)
    )


def gr_table(spec: CategorySpec) -> MeasureTable:
    """Compute all measures and group them into the ordered chain of blocks."""
    measures = measure_map(spec)
    distinct: list[Chain] = []
    for ch in measures.values():
        if ch not in distinct:
            distinct.append(ch)
    distinct.sort()
    blocks = {
        ch: tuple(m for m in spec.indecomposables if measures[m] == ch)
        for ch in distinct
    }
    return MeasureTable(measures=measures, gr_chain=tuple(distinct), blocks=blocks)
