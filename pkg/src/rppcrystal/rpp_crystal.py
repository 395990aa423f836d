"""Crystal operators on reverse plane partitions.

For a fixed index ``i`` only the cells holding ``i`` or ``i + 1`` matter.
Each column of that subtableau is i-pure, (i+1)-pure, mixed or empty.
Flipping one pure column gives a benign tableau, and descent resolution
turns it back into a reverse plane partition without changing supports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

from .errors import InternalInvariant
from .reading import reading_word, surviving_cells
from .shapes import Cell, Partition, SkewShape
from .tableaux import Filling, enumerate_rpp, rpp_weight
from .word_crystal import pairing

EMPTY = "empty"
PURE_LOW = "i-pure"
PURE_HIGH = "i+1-pure"
MIXED = "mixed"

DESCENT_2M = "2M"
DESCENT_M1 = "M1"
DESCENT_21 = "21"

Order = Union[str, int, random.Random]


@dataclass(frozen=True, eq=False)
class Restriction:
    """The ``{i, i+1}`` part of a filling.

    ``values`` maps each support cell to its current entry; ``supports`` maps
    each column to its support rows, top to bottom.  Entries outside the
    support stay as they are in ``base``.
    """

    base: Filling
    i: int
    values: Mapping[Cell, int]
    supports: Mapping[int, tuple[int, ...]] = field(repr=False)

    def column_values(self, c: int) -> list[int]:
        return [self.values[(r, c)] for r in self.supports.get(c, ())]

    def kind(self, c: int) -> str:
        vals = set(self.column_values(c))
        if not vals:
            return EMPTY
        if vals == {self.i}:
            return PURE_LOW
        if vals == {self.i + 1}:
            return PURE_HIGH
        return MIXED

    def border(self, c: int) -> int | None:
        """Row of the lowest ``i`` in a mixed column, else None."""
        if self.kind(c) != MIXED:
            return None
        return max(r for r in self.supports[c] if self.values[(r, c)] == self.i)

    def kinds(self) -> dict[int, str]:
        return {c: self.kind(c) for c in self.supports}

    def columns(self) -> list[int]:
        return sorted(self.supports)

    def to_filling(self) -> Filling:
        return self.base.replace(self.values)

    def _with_columns(self, updates: Mapping[int, int | None]) -> Restriction:
        """Rewrite columns so rows up to the given border hold ``i`` and the rest ``i + 1``.

        A border of None makes the column (i+1)-pure.
        """
        values = dict(self.values)
        for c, b in updates.items():
            for r in self.supports[c]:
                values[(r, c)] = self.i if b is not None and r <= b else self.i + 1
        return Restriction(self.base, self.i, values, self.supports)

    def __eq__(self, other):
        if not isinstance(other, Restriction):
            return NotImplemented
        return self.i == other.i and self.to_filling() == other.to_filling()

    def __hash__(self):
        return hash((self.i, self.to_filling()))


def restrict(t: Filling, i: int) -> Restriction:
    values = {}
    supports: dict[int, list[int]] = {}
    for (r, c) in t.shape.cells:
        v = t[(r, c)]
        if v == i or v == i + 1:
            values[(r, c)] = v
            supports.setdefault(c, []).append(r)
    return Restriction(t, i, values, {c: tuple(rows) for c, rows in supports.items()})


def is_benign(rest: Restriction) -> bool:
    borders = []
    for c in rest.columns():
        vals = rest.column_values(c)
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
        b = rest.border(c)
        if b is not None:
            borders.append(b)
    # lowest i of a left mixed column is not higher on the page than the next one
    return all(a >= b for a, b in zip(borders, borders[1:]))


def find_descents(rest: Restriction) -> list[tuple[int, str]]:
    """Columns ``A`` with an ``i + 1`` directly left of an ``i`` in column ``A + 1``."""
    i = rest.i
    out = []
    for a in rest.columns():
        if a + 1 not in rest.supports:
            continue
        if not any(
            rest.values[(r, a)] == i + 1 and rest.values.get((r, a + 1)) == i
            for r in rest.supports[a]
        ):
            continue
        left, right = rest.kind(a), rest.kind(a + 1)
        if left == PURE_HIGH and right == MIXED:
            out.append((a, DESCENT_2M))
        elif left == MIXED and right == PURE_LOW:
            out.append((a, DESCENT_M1))
        elif left == PURE_HIGH and right == PURE_LOW:
            out.append((a, DESCENT_21))
        else:
            raise InternalInvariant(f"descent between two mixed columns {a} and {a + 1}")
    return out


def _check_border(rest: Restriction, c: int, b: int) -> None:
    rows = rest.supports[c]
    if not rows[0] <= b < rows[-1]:
        raise InternalInvariant(
            f"border row {b} does not split column {c} (support rows {rows[0]}..{rows[-1]})"
        )


def resolve_step(rest: Restriction, a: int, kind: str) -> Restriction:
    if kind == DESCENT_M1:
        b = rest.border(a)
        _check_border(rest, a + 1, b)
        return rest._with_columns({a: rest.supports[a][-1], a + 1: b})
    if kind == DESCENT_2M:
        b = rest.border(a + 1)
        _check_border(rest, a, b)
        return rest._with_columns({a: b, a + 1: None})
    if kind == DESCENT_21:
        return rest._with_columns({a: rest.supports[a][-1], a + 1: None})
    raise ValueError(f"unknown descent type {kind!r}")


def step_bound(shape: SkewShape) -> int:
    return 2 * shape.n_cols ** 2 + 2


def _choose(descents: list[tuple[int, str]], order: Order) -> tuple[int, str]:
    if order == "leftmost":
        return descents[0]
    if order == "rightmost":
        return descents[-1]
    if isinstance(order, random.Random):
        return order.choice(descents)
    raise ValueError(f"unknown resolution order {order!r}")


def resolution_steps(
    rest: Restriction, order: Order = "leftmost"
) -> Iterator[tuple[int, str, Restriction]]:
    """Yield ``(column, descent type, tableau after the step)`` until no descents remain."""
    if isinstance(order, int) and not isinstance(order, bool):
        order = random.Random(order)
    limit = step_bound(rest.base.shape)
    for _ in range(limit):
        descents = find_descents(rest)
        if not descents:
            return
        a, kind = _choose(descents, order)
        rest = resolve_step(rest, a, kind)
        yield a, kind, rest
    if find_descents(rest):
        raise InternalInvariant(f"descent resolution exceeded {limit} steps")


def resolve_all(rest: Restriction, order: Order = "leftmost") -> Filling:
    for _, _, rest in resolution_steps(rest, order):
        pass
    return rest.to_filling()


def _column_brackets(rest: Restriction) -> tuple[list[int], list[int]]:
    """Pure columns left to right, encoded as letters ``i`` / ``i + 1`` for bracket matching."""
    cols, letters = [], []
    for c in rest.columns():
        k = rest.kind(c)
        if k == PURE_LOW:
            cols.append(c)
            letters.append(rest.i)
        elif k == PURE_HIGH:
            cols.append(c)
            letters.append(rest.i + 1)
    return cols, letters


def column_pairing(rest: Restriction):
    """Bracket matching among pure columns; positions index into the pure-column list."""
    cols, letters = _column_brackets(rest)
    return cols, pairing(letters, rest.i)


def raise_rpp(t: Filling, i: int, order: Order = "leftmost") -> Filling | None:
    """e_i on a reverse plane partition; None stands for zero."""
    rest = restrict(t, i)
    cols, p = column_pairing(rest)
    if not p.unmatched_opens:
        return None
    a = cols[p.unmatched_opens[0]]
    flipped = rest._with_columns({a: rest.supports[a][-1]})
    return resolve_all(flipped, order)


def lower_rpp(t: Filling, i: int, order: Order = "leftmost") -> Filling | None:
    """f_i on a reverse plane partition; None stands for zero."""
    rest = restrict(t, i)
    cols, p = column_pairing(rest)
    if not p.unmatched_closes:
        return None
    b = cols[p.unmatched_closes[-1]]
    flipped = rest._with_columns({b: None})
    return resolve_all(flipped, order)


def column_word_positions(rest: Restriction) -> dict[int, int | tuple[int, int]]:
    """Where each column's letters land in the ``{i, i+1}`` subword of the reading word.

    Pure columns map to one position; mixed columns to ``(pos of i, pos of i+1)``.
    """
    t = rest.to_filling()
    i = rest.i
    found: dict[int, dict[int, int]] = {}
    pos = 0
    for r, c in surviving_cells(t):
        v = t[(r, c)]
        if v == i or v == i + 1:
            found.setdefault(c, {})[v] = pos
            pos += 1
    out: dict[int, int | tuple[int, int]] = {}
    for c, letters in found.items():
        if len(letters) == 2:
            out[c] = (letters[i], letters[i + 1])
        else:
            (out[c],) = letters.values()
    return out


@dataclass
class Component:
    vertices: tuple[int, ...]
    highest: tuple[int, ...]
    highest_weight: Partition | None

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass
class CrystalGraph:
    shape: SkewShape
    m: int
    vertices: list[Filling]
    edges: list[tuple[int, int, int]]
    components: list[Component]

    def highest_weights(self) -> list[Partition]:
        return [comp.highest_weight for comp in self.components]

    def summary(self) -> str:
        ordered = sorted(self.highest_weights(), key=lambda w: (sum(w or ()), tuple(w or ())),
                         reverse=True)
        weights = ",".join(str(w) for w in ordered)
        return f"components: {len(self.components)}; highest weights: {weights}"


def crystal_graph(shape: SkewShape, m: int) -> CrystalGraph:
    vertices = list(enumerate_rpp(shape, m))
    index = {t: k for k, t in enumerate(vertices)}
    edges = []
    neighbours: list[list[int]] = [[] for _ in vertices]
    for k, t in enumerate(vertices):
        for i in range(1, m):
            target = lower_rpp(t, i)
            if target is not None:
                edges.append((k, i, index[target]))
                neighbours[k].append(index[target])
                neighbours[index[target]].append(k)

    seen = [False] * len(vertices)
    components = []
    for start in range(len(vertices)):
        if seen[start]:
            continue
        seen[start] = True
        members, stack = [], [start]
        while stack:
            v = stack.pop()
            members.append(v)
            for w in neighbours[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        members.sort()
        highest = tuple(
            v for v in members
            if all(raise_rpp(vertices[v], i) is None for i in range(1, m))
        )
        hw = None
        if len(highest) == 1:
            weight = rpp_weight(vertices[highest[0]])
            try:
                hw = Partition(weight)
            except ValueError:
                hw = None
        components.append(Component(tuple(members), highest, hw))
    return CrystalGraph(shape, m, vertices, edges, components)


_COLORS = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gray"]


def to_dot(graph: CrystalGraph) -> str:
    """Graphviz source with one cluster per component and edges labelled ``f<i>``."""
    m = graph.m
    lines = ["digraph crystal {", "\tnode [shape=box, fontname=monospace];"]
    for k, comp in enumerate(graph.components):
        lines.append(f"\tsubgraph cluster_{k} {{")
        hw = comp.highest_weight if comp.highest_weight is not None else "?"
        lines.append(f'\t\tlabel="component {k}: highest weight {hw}, size {comp.size}";')
        for v in comp.vertices:
            t = graph.vertices[v]
            word = reading_word(t)
            if m <= 9:
                wtext = "".join(map(str, word))
            else:
                wtext = ",".join(map(str, word))
            weight = ",".join(map(str, rpp_weight(t)))
            lines.append(f'\t\tv{v} [label="{wtext or "()"}\\n({weight})"];')
        lines.append("\t}")
    for s, i, t in graph.edges:
        color = _COLORS[(i - 1) % len(_COLORS)]
        lines.append(f'\tv{s} -> v{t} [label="f{i}", color={color}, fontcolor={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
