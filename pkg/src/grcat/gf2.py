"""Exact linear algebra over the two-element field.

Vectors are integer bitmasks (bit i = coordinate i), subspaces are lists of
reduced-row-echelon basis vectors.  Everything here is exhaustive and
exact; no floating point anywhere.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence


def reduce_vector(v: int, basis: Sequence[int]) -> int:
    """Reduce v against an rref basis (each pivot occurs in one row only)."""
    for b in basis:
        if v & (b & -b):
            v ^= b
    return v


def rref(vectors: Iterable[int]) -> list[int]:
    """Reduced row echelon basis of the span, rows sorted by pivot bit."""
    basis: list[int] = []
    for v in vectors:
        v = reduce_vector(v, basis)
        if v:
            pivot = v & -v
            basis = [b ^ v if b & pivot else b for b in basis]
            basis.append(v)
            basis.sort(key=lambda x: x & -x)
    return basis


def rank(vectors: Iterable[int]) -> int:
    return len(rref(vectors))


def apply_columns(cols: Sequence[int], v: int) -> int:
    """Image of v under the matrix whose i-th column is cols[i]."""
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= cols[i]
        v >>= 1
        i += 1
    return out


def image_basis(cols: Sequence[int], basis: Iterable[int]) -> list[int]:
    return rref(apply_columns(cols, b) for b in basis)


@lru_cache(maxsize=None)
def subspaces(dim: int) -> tuple[tuple[int, ...], ...]:
    """Every subspace of F_2^dim, one rref basis per subspace."""
    out: list[tuple[int, ...]] = [()]
    for k in range(1, dim + 1):
        for pivots in combinations(range(dim), k):
            pivot_set = set(pivots)
            free = [
                [q for q in range(dim) if q > p and q not in pivot_set]
                for p in pivots
            ]
            total = sum(len(f) for f in free)
            for bits in range(1 << total):
                rows = []
                idx = 0
                for i, p in enumerate(pivots):
                    v = 1 << p
                    for q in free[i]:
                        if (bits >> idx) & 1:
                            v |= 1 << q
                        idx += 1
                    rows.append(v)
                out.append(tuple(rows))
    return tuple(out)


def subspaces_containing(dim: int, lower: Sequence[int]) -> list[tuple[int, ...]]:
    """All subspaces of F_2^dim containing span(lower), one basis each.

    Works in the quotient: non-pivot coordinates of the reduced lower basis
    form a complement, and subspaces containing the lower space correspond
    bijectively to subspaces of that complement.
    """
    base = rref(lower)
    pivot_bits = {b & -b for b in base}
    free_coords = [
        q for q in range(dim) if (1 << q) not in pivot_bits
    ]
    out: list[tuple[int, ...]] = []
    for sub in subspaces(len(free_coords)):
        lifted = []
        for row in sub:
            v = 0
            for j, q in enumerate(free_coords):
                if (row >> j) & 1:
                    v |= 1 << q
            lifted.append(v)
        out.append(tuple(base) + tuple(lifted))
    return out
