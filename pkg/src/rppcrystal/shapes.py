"""Partitions and skew shapes.

Cells use matrix coordinates: ``(row, column)``, both 1-based, row 1 on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import NotContained, NotWeaklyDecreasing, ShapeError

Cell = tuple[int, int]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Being a tuple, it hashes and compares like
    one and can be used directly as a dictionary key.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise NotWeaklyDecreasing(f"negative part in {tuple(parts)}")
        while parts and parts[-1] == 0:
            parts.pop()
        for k in range(len(parts) - 1):
            if parts[k] < parts[k + 1]:
                raise NotWeaklyDecreasing(f"{tuple(parts)} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, r: int) -> int:
        """The ``r``-th part (1-based), zero past the end."""
        return self[r - 1] if 1 <= r <= len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        return all(self.part(r) >= p for r, p in enumerate(other, start=1))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def make_partition(parts: Sequence[int]) -> Partition:
    return Partition(parts)


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= c) for c in range(1, p[0] + 1))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if len(self.inner) > len(self.outer) or not self.outer.contains(self.inner):
            raise NotContained(f"{self.inner} is not contained in {self.outer}")

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    @property
    def n_cols(self) -> int:
        return self.outer[0] if self.outer else 0

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_range(self, r: int) -> range:
        """Columns occupied by row ``r``."""
        return range(self.inner.part(r) + 1, self.outer.part(r) + 1)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """All cells in row-major order (top row first, left to right)."""
        return tuple((r, c) for r in range(1, self.n_rows + 1) for c in self.row_range(r))

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @cached_property
    def reading_order(self) -> tuple[Cell, ...]:
        """Cells bottom row first, left to right within a row."""
        return tuple((r, c) for r in range(self.n_rows, 0, -1) for c in self.row_range(r))

    @cached_property
    def _conjugates(self) -> tuple[Partition, Partition]:
        return conjugate(self.inner), conjugate(self.outer)

    def column_range(self, c: int) -> range:
        """Rows occupied by column ``c``; always a contiguous interval."""
        inner_t, outer_t = self._conjugates
        return range(inner_t.part(c) + 1, outer_t.part(c) + 1)

    def __contains__(self, cell) -> bool:
        return cell in self.cell_set

    def __str__(self) -> str:
        outer = ",".join(map(str, self.outer)) or "0"
        if not self.inner:
            return outer
        return outer + "/" + ",".join(map(str, self.inner))


def skew(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def _parse_parts(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        if isinstance(exc, ShapeError):
            raise
        raise ShapeError(f"cannot parse partition {text!r}") from None


def parse_shape(text: str) -> SkewShape:
    """Parse ``"4,4,3/2,1"`` (inner part optional) into a :class:`SkewShape`."""
    outer, _, inner = text.partition("/")
    return SkewShape(_parse_parts(outer), _parse_parts(inner))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def subpartitions(p: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in ``p``."""
    p = tuple(p)

    def rec(r: int, cap: int) -> Iterator[tuple[int, ...]]:
        if r == len(p):
            yield ()
            return
        for v in range(min(cap, p[r]), -1, -1):
            for rest in rec(r + 1, v):
                yield (v,) + rest

    for parts in rec(0, p[0] if p else 0):
        yield Partition(parts)


def skew_corpus(max_cells: int) -> Iterator[SkewShape]:
    """Every skew shape ``outer/inner`` with ``|outer| <= max_cells``."""
    for n in range(max_cells + 1):
        for outer in partitions_of(n):
            for inner in subpartitions(outer):
                yield SkewShape(outer, inner)
