"""Shared exception types and size-guard plumbing."""

from __future__ import annotations

import os

ENV_SIZE_GUARD = "GRCAT_SIZE_GUARD"


class SpecError(Exception):
    """Base class for every spec-related failure."""


class SpecFormatError(SpecError):
    """A spec document is malformed (syntax or schema)."""


class SpecInconsistencyError(SpecError):
    """Derived structure (the subobject closure) contradicts the declared data."""


class UnknownIdError(SpecError):
    """An operation referenced an id the spec does not declare."""


class SizeGuardError(SpecError):
    """An input exceeds a desk-scale size guard."""


def guard_limit(default: int) -> int:
    """Active limit for a size guard.

    Setting the ``GRCAT_SIZE_GUARD`` environment variable to an integer
    replaces every default guard limit with that value.
    """
    raw = os.environ.get(ENV_SIZE_GUARD)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise SizeGuardError(f"{ENV_SIZE_GUARD} must be an integer, got {raw!r}") from exc
