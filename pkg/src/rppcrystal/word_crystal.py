"""The crystal on words: bracket pairing and the operators E_i, F_i.

Letters ``i + 1`` are opening brackets and letters ``i`` closing ones.  An
``i + 1`` to the left of an ``i`` cancels with it; what survives is a run of
unmatched ``i``'s followed by a run of unmatched ``i + 1``'s.  Operators
return ``None`` for the zero element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Pairing:
    """Bracket matching of a word at index ``i``; positions are 0-based."""

    i: int
    pairs: tuple[tuple[int, int], ...]
    unmatched_opens: tuple[int, ...]
    unmatched_closes: tuple[int, ...]

    def matched_positions(self) -> set[int]:
        return {p for pair in self.pairs for p in pair}


def pairing(s: Sequence[int], i: int) -> Pairing:
    stack: list[int] = []
    pairs = []
    closes = []
    for pos, letter in enumerate(s):
        if letter == i + 1:
            stack.append(pos)
        elif letter == i:
            if stack:
                pairs.append((stack.pop(), pos))
            else:
                closes.append(pos)
    return Pairing(i, tuple(sorted(pairs)), tuple(stack), tuple(closes))


def raise_word(s: Sequence[int], i: int) -> tuple[int, ...] | None:
    """E_i: leftmost unmatched ``i + 1`` becomes ``i``."""
    opens = pairing(s, i).unmatched_opens
    if not opens:
        return None
    out = list(s)
    out[opens[0]] = i
    return tuple(out)


def lower_word(s: Sequence[int], i: int) -> tuple[int, ...] | None:
    """F_i: rightmost unmatched ``i`` becomes ``i + 1``."""
    closes = pairing(s, i).unmatched_closes
    if not closes:
        return None
    out = list(s)
    out[closes[-1]] = i + 1
    return tuple(out)


def word_weight(s: Sequence[int], m: int | None = None) -> tuple[int, ...]:
    if m is None:
        m = max(s, default=0)
    weight = [0] * m
    for letter in s:
        weight[letter - 1] += 1
    return tuple(weight)


def is_lattice(s: Sequence[int]) -> bool:
    """Every suffix has at least as many ``i``'s as ``(i + 1)``'s, for all ``i``."""
    counts: dict[int, int] = {}
    for letter in reversed(s):
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True
