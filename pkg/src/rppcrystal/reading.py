"""Reading words, height vectors and reconstruction from them."""

from __future__ import annotations

import math
from typing import Sequence

from .errors import ReconstructionFailed
from .shapes import Cell, SkewShape
from .tableaux import Filling

Word = tuple[int, ...]


def surviving_cells(t: Filling) -> list[Cell]:
    """Cells that contribute to the reading word, in reading order.

    A cell is skipped when the cell directly below it holds the same entry.
    """
    ent = t.entries
    return [
        (r, c)
        for (r, c) in t.shape.reading_order
        if ent.get((r + 1, c)) != ent[(r, c)]
    ]


def reading_word(t: Filling) -> Word:
    ent = t.entries
    return tuple(ent[cell] for cell in surviving_cells(t))


def height_vector(t: Filling) -> tuple[int, ...]:
    return tuple(r for r, _ in surviving_cells(t))


def format_word(word: Sequence[int], max_entry: int | None = None) -> str:
    """Digit-concatenated when every letter is a single digit, comma form otherwise."""
    bound = max_entry if max_entry is not None else max(word, default=0)
    if bound <= 9:
        return "".join(map(str, word))
    return ",".join(map(str, word))


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(tok) for tok in text.split(","))
    return tuple(int(ch) for ch in text)


def reconstruct(
    shape: SkewShape,
    word: Sequence[int],
    heights: Sequence[int],
    max_entry: int | None = None,
) -> Filling:
    """Recover the RPP with the given reading word and height vector.

    Cells are filled in reading order.  A cell takes the next letter ``r_j``
    when it sits in row ``h_j`` and ``left <= r_j < below``; otherwise it
    copies the entry below it.  The result is re-checked, so a pair with no
    preimage raises :class:`ReconstructionFailed` instead of returning junk.
    """
    word = tuple(word)
    heights = tuple(heights)
    if len(word) != len(heights):
        raise ReconstructionFailed("word and height vector differ in length")
    if max_entry is None:
        max_entry = max(word, default=1)

    values: dict[Cell, float] = {}
    j = 0
    for r, c in shape.reading_order:
        below = values.get((r + 1, c), math.inf)
        left = values.get((r, c - 1), 0)
        if j < len(word) and heights[j] == r and left <= word[j] < below:
            values[(r, c)] = word[j]
            j += 1
        elif below == math.inf:
            raise ReconstructionFailed(f"cell {(r, c)} has nothing below it to copy")
        else:
            values[(r, c)] = below

    if j != len(word):
        raise ReconstructionFailed(f"only {j} of {len(word)} letters were placed")
    try:
        t = Filling.from_cells(shape, {k: int(v) for k, v in values.items()}, max_entry)
    except ValueError as exc:
        raise ReconstructionFailed(str(exc)) from None
    if not t.is_rpp():
        raise ReconstructionFailed(f"result is not a reverse plane partition: {t.violation()}")
    if reading_word(t) != word or height_vector(t) != heights:
        raise ReconstructionFailed("result does not reproduce the word and heights")
    return t
