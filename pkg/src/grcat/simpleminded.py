"""The orthogonality tower of minimal-length objects and semibrick tests.

The tower starts at the set of indecomposables of minimal positive length
and grows by adding, at level n, the length-n objects that are
Hom-orthogonal on both sides to the previous level.  Its union stabilizes
once n passes the maximal declared length.  Brick and semibrick status are
decided from dimension data alone: an object counts as a brick when its
endomorphism space is one-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .catspec import CategorySpec, ObjectRef
from .errors import SpecError
from .filtration import filt_closure


@dataclass(frozen=True)
class BrickSet:
    """A candidate simple-minded system.

    ``sms`` is None when the conflation table is not declared complete:
    an under-declared table must not produce a silent false negative.
    """

    members: frozenset[str]
    semibrick: bool
    sms: bool | None


def theta_one(spec: CategorySpec) -> frozenset[str]:
    """All indecomposables of minimal length."""
    if not spec.indecomposables:
        raise SpecError("empty category has no minimal-length objects")
    minimum = min(spec.theta[m] for m in spec.indecomposables)
    return frozenset(m for m in spec.indecomposables if spec.theta[m] == minimum)


def theta_n(spec: CategorySpec, n: int) -> frozenset[str]:
    """Level n of the tower; level 1 is theta_one."""
    if n < 1:
        raise ValueError(f"tower level must be >= 1, got {n}")
    members = set(theta_one(spec))
    for level in range(2, n + 1):
        members |= _next_layer(spec, members, level)
    return frozenset(members)


def _next_layer(spec: CategorySpec, members: set[str], n: int) -> set[str]:
    return {
        m
        for m in spec.indecomposables
        if m not in members
        and spec.theta[m] == n
        and all(spec.hom[s][m] == 0 and spec.hom[m][s] == 0 for s in members)
    }


def theta_infinity(spec: CategorySpec) -> BrickSet:
    """Union of the whole tower, with semibrick and coverage verdicts.

    Coverage (the sms flag) asks whether the filtration closure of the
    members reaches every declared indecomposable; it is only decided when
    the conflation table is marked complete.
    """
    members = set(theta_one(spec)) if spec.indecomposables else set()
    for n in range(2, spec.max_theta() + 1):
        members |= _next_layer(spec, members, n)
    frozen = frozenset(members)

    semibrick = is_semibrick(spec, frozen)

    sms: bool | None
    if spec.metadata.get("complete") is not True:
        sms = None
    else:
        closure = filt_closure(spec, frozen)
        sms = all(
            closure.cost(ObjectRef.of([m])) is not None
            for m in spec.indecomposables
        )
    return BrickSet(members=frozen, semibrick=semibrick, sms=sms)


def is_semibrick(spec: CategorySpec, members: Iterable[str]) -> bool:
    """One-dimensional endomorphisms and pairwise Hom-orthogonality."""
    members = sorted(set(members))
    for x in members:
        if spec.hom[x][x] != 1:
            return False
    for x in members:
        for y in members:
            if x != y and spec.hom[x][y] != 0:
                return False
    return True


def is_finite_type(spec: CategorySpec) -> bool:
    """True when the tower is already complete at its first level.

    A finite window of an infinite family can legitimately return True;
    such specs carry a ``models_infinite`` metadata marker which the
    partition report surfaces.
    """
    return theta_infinity(spec).members == theta_one(spec)
