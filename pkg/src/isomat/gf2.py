"""Bit-packed linear algebra over GF(2).

Rows are stored as Python ints, one int per row, bit j holding the entry
in column j.  Arbitrary-precision ints give word-parallel XOR row
operations, which keeps rank calls cheap even when the enumeration
campaigns issue millions of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Optional


def rank_of_bitrows(rows: Iterable[int]) -> int:
    """GF(2) rank of a collection of int-packed row vectors."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                rank += 1
                break
            r ^= p
    return rank


@dataclass(frozen=True)
class Gf2Matrix:
    """A GF(2) matrix whose rows and columns are indexed by hashable labels.

    ``bits[i]`` packs the row with label ``rows[i]``; bit j of it is the
    entry in the column with label ``cols[j]``.
    """

    rows: tuple
    cols: tuple
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.rows)) != len(self.rows):
            raise ValueError("duplicate row labels")
        if len(set(self.cols)) != len(self.cols):
            raise ValueError("duplicate column labels")
        if len(self.bits) != len(self.rows):
            raise ValueError("bits/rows length mismatch")
        limit = 1 << len(self.cols)
        if any(not 0 <= b < limit for b in self.bits):
            raise ValueError("row bits exceed column count")

    @classmethod
    def from_dense(
        cls,
        dense: Iterable[Iterable[int]],
        rows: Optional[Iterable[Hashable]] = None,
        cols: Optional[Iterable[Hashable]] = None,
    ) -> "Gf2Matrix":
        """Build a matrix from a dense 0/1 iterable of rows."""
        packed = []
        width = None
        for row in dense:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged rows")
            packed.append(sum((int(x) & 1) << j for j, x in enumerate(row)))
        width = width or 0
        row_labels = tuple(rows) if rows is not None else tuple(range(len(packed)))
        col_labels = tuple(cols) if cols is not None else tuple(range(width))
        return cls(row_labels, col_labels, tuple(packed))

    @cached_property
    def _row_index(self) -> dict:
        return {label: i for i, label in enumerate(self.rows)}

    @cached_property
    def _col_index(self) -> dict:
        return {label: j for j, label in enumerate(self.cols)}

    def entry(self, row: Hashable, col: Hashable) -> int:
        return (self.bits[self._row_index[row]] >> self._col_index[col]) & 1

    def column_vector(self, col: Hashable) -> int:
        """The column packed as an int over row positions."""
        j = self._col_index[col]
        return sum(((b >> j) & 1) << i for i, b in enumerate(self.bits))

    def dense(self) -> list[list[int]]:
        w = len(self.cols)
        return [[(b >> j) & 1 for j in range(w)] for b in self.bits]


def rank(m: Gf2Matrix) -> int:
    """GF(2) rank; the rank of a matrix with no rows or no columns is 0."""
    if not m.cols:
        return 0
    return rank_of_bitrows(m.bits)


def submatrix(m: Gf2Matrix, rowset: Iterable[Hashable], colset: Iterable[Hashable]) -> Gf2Matrix:
    """Submatrix on the given labels, keeping the order they have in m."""
    rowset = set(rowset)
    colset = set(colset)
    unknown = (rowset - set(m.rows)) | (colset - set(m.cols))
    if unknown:
        raise ValueError(f"unknown labels: {sorted(map(repr, unknown))}")
    kept_rows = [r for r in m.rows if r in rowset]
    kept_cols = [c for c in m.cols if c in colset]
    positions = [m._col_index[c] for c in kept_cols]
    bits = []
    for r in kept_rows:
        old = m.bits[m._row_index[r]]
        bits.append(sum(((old >> p) & 1) << j for j, p in enumerate(positions)))
    return Gf2Matrix(tuple(kept_rows), tuple(kept_cols), tuple(bits))


def _dependencies(m: Gf2Matrix, labels: list) -> Iterable[frozenset]:
    """Yield one dependency combo for every column that reduces to zero.

    Columns are inserted in the given order into an XOR basis; whenever a
    column lies in the span of the previous ones, the tracked combination
    is a nonempty subset of the labels whose columns sum to zero.
    """
    pivots: dict[int, tuple[int, int]] = {}
    for k, label in enumerate(labels):
        v = m.column_vector(label)
        combo = 1 << k
        while v:
            low = v & -v
            entry = pivots.get(low)
            if entry is None:
                pivots[low] = (v, combo)
                break
            pv, pc = entry
            v ^= pv
            combo ^= pc
        if not v:
            yield frozenset(labels[i] for i in range(k + 1) if (combo >> i) & 1)


def column_dependency(m: Gf2Matrix, subset: Iterable[Hashable]) -> Optional[frozenset]:
    """A nonempty subset of `subset` whose columns sum to zero, or None.

    None means the selected columns are linearly independent.
    """
    wanted = set(subset)
    unknown = wanted - set(m.cols)
    if unknown:
        raise ValueError(f"unknown column labels: {sorted(map(repr, unknown))}")
    ordered = [c for c in m.cols if c in wanted]
    for combo in _dependencies(m, ordered):
        return combo
    return None


def nullspace(m: Gf2Matrix) -> list[frozenset]:
    """A basis of the column nullspace, as sets of column labels.

    Each returned set of labels has columns summing to zero; the sets
    (viewed as characteristic vectors) are linearly independent and there
    are ``len(cols) - rank`` of them.
    """
    return list(_dependencies(m, list(m.cols)))
