"""Fillings of skew shapes and exhaustive enumerators."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Mapping, Sequence

from .errors import InvalidFilling
from .shapes import Cell, Partition, SkewShape


@dataclass(frozen=True)
class Filling:
    """An assignment of integers in ``[1, max_entry]`` to the cells of a shape.

    ``rows[r - 1]`` holds the entries of row ``r`` from left to right; rows
    lying entirely inside the inner partition are empty tuples.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]
    max_entry: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.max_entry < 1:
            raise InvalidFilling(f"max_entry must be positive, got {self.max_entry}")
        if len(rows) != self.shape.n_rows:
            raise InvalidFilling(f"expected {self.shape.n_rows} rows, got {len(rows)}")
        for r, row in enumerate(rows, start=1):
            if len(row) != len(self.shape.row_range(r)):
                raise InvalidFilling(
                    f"row {r} has {len(row)} entries, shape {self.shape} needs "
                    f"{len(self.shape.row_range(r))}"
                )
            for v in row:
                if not 1 <= v <= self.max_entry:
                    raise InvalidFilling(f"entry {v} in row {r} outside [1, {self.max_entry}]")

    @classmethod
    def from_cells(cls, shape: SkewShape, entries: Mapping[Cell, int], max_entry: int) -> Filling:
        try:
            rows = tuple(
                tuple(entries[(r, c)] for c in shape.row_range(r))
                for r in range(1, shape.n_rows + 1)
            )
        except KeyError as exc:
            raise InvalidFilling(f"cell {exc.args[0]} has no entry") from None
        return cls(shape, rows, max_entry)

    @cached_property
    def entries(self) -> dict[Cell, int]:
        out = {}
        for r, row in enumerate(self.rows, start=1):
            start = self.shape.inner.part(r) + 1
            for k, v in enumerate(row):
                out[(r, start + k)] = v
        return out

    def get(self, cell: Cell) -> int | None:
        return self.entries.get(cell)

    def __getitem__(self, cell: Cell) -> int:
        return self.entries[cell]

    def column(self, c: int) -> list[tuple[int, int]]:
        """``(row, entry)`` pairs of column ``c``, top to bottom."""
        return [(r, self.entries[(r, c)]) for r in self.shape.column_range(c)]

    def replace(self, changes: Mapping[Cell, int]) -> Filling:
        merged = dict(self.entries)
        merged.update(changes)
        return Filling.from_cells(self.shape, merged, self.max_entry)

    def is_rpp(self) -> bool:
        return self.violation("rpp") is None

    def is_ssyt(self) -> bool:
        return self.violation("ssyt") is None

    def violation(self, kind: str = "rpp") -> str | None:
        """Describe the first broken monotonicity condition, or None."""
        strict = kind == "ssyt"
        ent = self.entries
        for (r, c), v in ent.items():
            left = ent.get((r, c - 1))
            if left is not None and left > v:
                return f"row {r} decreases between columns {c - 1} and {c}"
            above = ent.get((r - 1, c))
            if above is not None and (above >= v if strict else above > v):
                rel = "strictly increase" if strict else "weakly increase"
                return f"column {c} does not {rel} between rows {r - 1} and {r}"
        return None

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "max_entry": self.max_entry,
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> Filling:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            shape = SkewShape(Partition(data["outer"]), Partition(data.get("inner", ())))
            rows = list(data["rows"])
            # tolerate omitted trailing empty rows
            rows += [[]] * (shape.n_rows - len(rows))
            return cls(shape, tuple(tuple(row) for row in rows), int(data["max_entry"]))
        except (KeyError, TypeError) as exc:
            raise InvalidFilling(f"malformed tableau JSON: {exc}") from None

    def __str__(self) -> str:
        width = len(str(self.max_entry))
        lines = []
        for r, row in enumerate(self.rows, start=1):
            pad = " " * ((width + 1) * self.shape.inner.part(r))
            lines.append(pad + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def _fill(
    shape: SkewShape,
    m: int,
    strict_columns: bool,
    row_cap: Callable[[int], int] | None = None,
) -> Iterator[Filling]:
    cells = shape.cells
    values: dict[Cell, int] = {}
    n = len(cells)

    def rec(k: int) -> Iterator[Filling]:
        if k == n:
            yield Filling.from_cells(shape, values, m)
            return
        r, c = cells[k]
        lo = values.get((r, c - 1), 1)
        above = values.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1 if strict_columns else above)
        hi = m if row_cap is None else min(m, row_cap(r))
        for v in range(lo, hi + 1):
            values[(r, c)] = v
            yield from rec(k + 1)
        values.pop((r, c), None)

    yield from rec(0)


def enumerate_rpp(shape: SkewShape, m: int) -> Iterator[Filling]:
    """All reverse plane partitions with entries in ``[1, m]``.

    Output is lexicographic in the row-major entry sequence.
    """
    if m < 1:
        raise ValueError("m must be positive")
    return _fill(shape, m, strict_columns=False)


def enumerate_ssyt(shape: SkewShape, m: int) -> Iterator[Filling]:
    if m < 1:
        raise ValueError("m must be positive")
    return _fill(shape, m, strict_columns=True)


def enumerate_elegant(outer: Sequence[int], inner: Sequence[int]) -> Iterator[Filling]:
    """Semistandard fillings of ``outer/inner`` whose row-``r`` entries are below ``r``."""
    shape = SkewShape(Partition(outer), Partition(inner))
    m = max(shape.n_rows - 1, 1)
    return _fill(shape, m, strict_columns=True, row_cap=lambda r: r - 1)


def rpp_weight(t: Filling) -> tuple[int, ...]:
    """Component ``i`` counts the columns of ``t`` containing ``i``; length ``max_entry``."""
    weight = [0] * t.max_entry
    for c in range(1, t.shape.n_cols + 1):
        for v in {t[(r, c)] for r in t.shape.column_range(c)}:
            weight[v - 1] += 1
    return tuple(weight)


def ceq(t: Filling) -> tuple[int, ...]:
    """Per row ``i``, the number of columns where rows ``i`` and ``i + 1`` agree."""
    counts = [0] * max(t.shape.n_rows - 1, 0)
    ent = t.entries
    for (r, c), v in ent.items():
        if ent.get((r + 1, c)) == v:
            counts[r - 1] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)
