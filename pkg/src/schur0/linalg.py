"""Exact sparse linear algebra over the rationals.

A sparse vector is a plain ``dict`` mapping basis index to a nonzero
``Fraction``.  Subspaces are kept in reduced row-echelon form with pivots
chosen as the smallest surviving index, so echelon forms are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

SparseVector = dict  # dict[int, Fraction], never storing zeros


def vector(entries=None) -> SparseVector:
    """Build a sparse vector from a mapping or (index, value) pairs, dropping zeros."""
    if entries is None:
        return {}
    items = entries.items() if isinstance(entries, dict) else entries
    out = {}
    for idx, val in items:
        val = Fraction(val)
        if val:
            out[idx] = out.get(idx, 0) + val
            if not out[idx]:
                del out[idx]
    return out


def unit(idx: int) -> SparseVector:
    return {idx: Fraction(1)}


def add_scaled(target: SparseVector, other: SparseVector, scale) -> None:
    """target += scale * other, in place."""
    if not scale:
        return
    for idx, val in other.items():
        new = target.get(idx, 0) + scale * val
        if new:
            target[idx] = new
        else:
            target.pop(idx, None)


def scaled(v: SparseVector, scale) -> SparseVector:
    scale = Fraction(scale)
    if not scale:
        return {}
    return {idx: scale * val for idx, val in v.items()}


class Subspace:
    """Span of sparse vectors, held in reduced row-echelon form."""

    def __init__(self, vectors: Iterable[SparseVector] = ()):
        self._rows: dict[int, SparseVector] = {}  # pivot -> row with row[pivot] == 1
        for v in vectors:
            self.add(v)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    @property
    def basis(self) -> list[SparseVector]:
        return [self._rows[p] for p in self.pivots]

    @property
    def rank(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: SparseVector) -> SparseVector:
        """Remainder of v after eliminating every pivot column."""
        out = dict(v)
        for p in [p for p in out if p in self._rows]:
            coeff = out.get(p)
            if coeff:
                add_scaled(out, self._rows[p], -coeff)
        return out

    def contains(self, v: SparseVector) -> bool:
        return not self.reduce(v)

    def add(self, v: SparseVector) -> bool:
        """Extend the span by v; returns True when the rank grew."""
        rem = self.reduce(v)
        if not rem:
            return False
        pivot = min(rem)
        lead = rem[pivot]
        row = {idx: val / lead for idx, val in rem.items()}
        for other in self._rows.values():
            coeff = other.get(pivot)
            if coeff:
                add_scaled(other, row, -coeff)
        self._rows[pivot] = row
        return True

    def coordinates(self, v: SparseVector) -> dict[int, Fraction]:
        """Coefficients of v on the echelon rows, keyed by pivot.

        Valid only for v in the span; raises ValueError otherwise.
        """
        coords = {p: v[p] for p in self._rows if p in v}
        check = dict(v)
        for p, c in coords.items():
            add_scaled(check, self._rows[p], -c)
        if check:
            raise ValueError("vector is not in the subspace")
        return coords

    def is_coordinate_subspace(self) -> bool:
        """True when every echelon row is a single unit vector."""
        return all(len(row) == 1 for row in self._rows.values())

    def __repr__(self):
        return f"Subspace(rank={self.rank}, pivots={self.pivots})"


def rref(vectors: Iterable[SparseVector]) -> Subspace:
    return Subspace(vectors)


def contains(space: Subspace, v: SparseVector) -> bool:
    return space.contains(v)


def rank(vectors: Iterable[SparseVector]) -> int:
    return Subspace(vectors).rank
