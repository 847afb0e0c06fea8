"""Signature-rule bracket strings shared by both realizations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

OPEN = "("
CLOSE = ")"


@dataclass(frozen=True)
class Bracket:
    """One bracket together with where it came from (a box, or a root)."""

    symbol: str
    source: Any


@dataclass(frozen=True)
class Reduction:
    """Indices (into the bracket string) of the brackets left after cancelling ()-pairs."""

    closes: tuple[int, ...]
    opens: tuple[int, ...]

    @property
    def n_close(self) -> int:
        return len(self.closes)

    @property
    def n_open(self) -> int:
        return len(self.opens)


def reduce_brackets(seq: Sequence[Bracket]) -> Reduction:
    """Cancel every '(' against the nearest later unmatched ')'.

    What remains has the shape )...)(...( .
    """
    closes: list[int] = []
    stack: list[int] = []
    for idx, b in enumerate(seq):
        if b.symbol == OPEN:
            stack.append(idx)
        elif stack:
            stack.pop()
        else:
            closes.append(idx)
    return Reduction(tuple(closes), tuple(stack))


def bracket_text(seq: Sequence[Bracket]) -> str:
    return "".join(b.symbol for b in seq)
