"""Marginally large tableaux of type D_n and their Kashiwara operators.

Letters are signed integers: ``k`` for k and ``-k`` for k-bar. Rows are
1-indexed in every public position (row, column) pair. A tableau is stored
with its shaded boxes (the leading j's of row j) included.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .brackets import CLOSE, OPEN, Bracket, reduce_brackets
from .cartan import Weight, check_rank, coroot_pairing

MIDDLE = "middle"
FAR = "far"
READINGS = (MIDDLE, FAR)


class InvalidTableauError(ValueError):
    pass


def letter_rank(x: int, n: int) -> int:
    """Position in 1 < ... < n-1 < {n, n-bar} < (n-1)-bar < ... < 1-bar."""
    if x > 0:
        return x
    return 2 * n + x if -x < n else n


def letter_str(x: int, unicode: bool = False) -> str:
    if x > 0:
        return str(x)
    if unicode:
        return "".join(ch + "̅" for ch in str(-x))
    return f"-{-x}"


def _arrows(i: int, n: int) -> dict[int, int]:
    """The i-colored arrows x -> y of the vector-representation crystal."""
    if i <= n - 2:
        return {i: i + 1, -(i + 1): -i}
    if i == n - 1:
        return {n - 1: n, -n: -(n - 1)}
    if i == n:
        return {n - 1: -n, n: -(n - 1)}
    raise ValueError(f"index {i} out of range 1..{n}")


def successor(x: int, i: int, n: int) -> int | None:
    return _arrows(i, n).get(x)


def predecessor(x: int, i: int, n: int) -> int | None:
    for src, dst in _arrows(i, n).items():
        if dst == x:
            return src
    return None


def bracket_symbol(x: int, i: int, n: int) -> str | None:
    """'(' if an i-arrow leaves x, ')' if one enters x."""
    arrows = _arrows(i, n)
    if x in arrows:
        return OPEN
    if x in arrows.values():
        return CLOSE
    return None


@dataclass(frozen=True)
class Violation:
    condition: str
    row: int
    col: int | None
    message: str


@dataclass(frozen=True)
class MLTableau:
    """A type D_n tableau with n-1 rows. Not validated on construction; see :func:`validate`."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[Sequence[int]]) -> "MLTableau":
        """Build and validate; raises InvalidTableauError listing every violation."""
        check_rank(n)
        t = cls(n, tuple(tuple(r) for r in rows))
        problems = validate(t)
        if problems:
            raise InvalidTableauError("; ".join(f"{p.condition}: {p.message}" for p in problems))
        return t

    def row(self, j: int) -> tuple[int, ...]:
        return self.rows[j - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "MLTableau":
        return cls.from_rows(int(obj["n"]), obj["rows"])

    def __str__(self) -> str:
        return render_ascii(self)


def validate(t: MLTableau) -> list[Violation]:
    """Every violated marginal-largeness condition, located by row and column."""
    n = t.n
    out: list[Violation] = []
    if len(t.rows) != n - 1:
        return [Violation("shape", 0, None, f"expected {n - 1} rows, got {len(t.rows)}")]
    for j, row in enumerate(t.rows, start=1):
        for c, x in enumerate(row, start=1):
            if x == 0 or abs(x) > n:
                out.append(Violation("alphabet", j, c, f"row {j} col {c}: letter {x} not in J(D_{n})"))
        if not row or row[0] != j:
            out.append(Violation("C1", j, 1, f"row {j} must start with {j}"))
        for c in range(1, len(row)):
            if letter_rank(row[c - 1], n) > letter_rank(row[c], n):
                out.append(Violation("C2", j, c + 1, f"row {j} decreases at col {c + 1}"))
        below = len(t.rows[j]) if j < n - 1 else 0
        count = row.count(j)
        if count != below + 1:
            out.append(
                Violation("C3", j, None, f"row {j} has {count} {j}-boxes, needs {below + 1}")
            )
        for c, x in enumerate(row, start=1):
            if x != 0 and abs(x) <= n and (letter_rank(x, n) > 2 * n - j or 0 < x < j):
                out.append(Violation("C4", j, c, f"row {j} col {c}: {letter_str(x)} exceeds bar {j}"))
        if n in row and -n in row:
            out.append(Violation("C5", j, None, f"row {j} contains both {n} and -{n}"))
    return out


def highest_weight_tableau(n: int) -> MLTableau:
    check_rank(n)
    return MLTableau(n, tuple((j,) * (n - j) for j in range(1, n)))


def reading_word_middle(t: MLTableau) -> list[tuple[int, tuple[int, int]]]:
    """Rows top to bottom, each row right to left."""
    return [
        (row[c - 1], (j, c))
        for j, row in enumerate(t.rows, start=1)
        for c in range(len(row), 0, -1)
    ]


def reading_word_far(t: MLTableau) -> list[tuple[int, tuple[int, int]]]:
    """Columns right to left, each column top to bottom."""
    width = max((len(r) for r in t.rows), default=0)
    return [
        (row[c - 1], (j, c))
        for c in range(width, 0, -1)
        for j, row in enumerate(t.rows, start=1)
        if len(row) >= c
    ]


def reading_word(t: MLTableau, reading: str = MIDDLE):
    if reading == MIDDLE:
        return reading_word_middle(t)
    if reading == FAR:
        return reading_word_far(t)
    raise ValueError(f"unknown reading {reading!r}")


def bracket_sequence(t: MLTableau, i: int, reading: str = MIDDLE) -> list[Bracket]:
    seq = []
    for x, pos in reading_word(t, reading):
        s = bracket_symbol(x, i, t.n)
        if s is not None:
            seq.append(Bracket(s, pos))
    return seq


def row_bracket_sequence(t: MLTableau, j: int, i: int) -> list[Bracket]:
    """Brackets contributed by row j alone, in middle reading order."""
    row = t.rows[j - 1]
    seq = []
    for c in range(len(row), 0, -1):
        s = bracket_symbol(row[c - 1], i, t.n)
        if s is not None:
            seq.append(Bracket(s, (j, c)))
    return seq


def f_box(t: MLTableau, i: int, reading: str = MIDDLE) -> tuple[int, int] | None:
    """(row, col) of the box f_i changes: the leftmost uncanceled '('."""
    seq = bracket_sequence(t, i, reading)
    red = reduce_brackets(seq)
    return seq[red.opens[0]].source if red.opens else None


def e_box(t: MLTableau, i: int, reading: str = MIDDLE) -> tuple[int, int] | None:
    """(row, col) of the box e_i changes: the rightmost uncanceled ')'."""
    seq = bracket_sequence(t, i, reading)
    red = reduce_brackets(seq)
    return seq[red.closes[-1]].source if red.closes else None


def _replace(t: MLTableau, j: int, old: int, new: int) -> list[list[int]]:
    rows = [list(r) for r in t.rows]
    row = rows[j - 1]
    row.remove(old)
    row.append(new)
    row.sort(key=lambda x: letter_rank(x, t.n))
    return rows


def _c3_holds(rows: list[list[int]]) -> bool:
    m = len(rows)
    return all(rows[j].count(j + 1) == 1 + (len(rows[j + 1]) if j + 1 < m else 0) for j in range(m))


def f(t: MLTableau, i: int, reading: str = MIDDLE) -> MLTableau:
    """Lower along color i. Total on marginally large tableaux."""
    n = t.n
    pos = f_box(t, i, reading)
    if pos is None:
        # cannot happen: row i (or n-1) always carries an uncanceled shaded '('
        raise AssertionError(f"no uncanceled '(' for f_{i}; tableau is not marginally large")
    j, c = pos
    x = t.rows[j - 1][c - 1]
    rows = _replace(t, j, x, successor(x, i, n))
    if not _c3_holds(rows):
        for r in range(1, min(i, n - 1) + 1):
            rows[r - 1].insert(0, r)
    return MLTableau(n, tuple(tuple(r) for r in rows))


def e(t: MLTableau, i: int, reading: str = MIDDLE) -> MLTableau | None:
    """Raise along color i; None when there is no uncanceled ')'."""
    n = t.n
    pos = e_box(t, i, reading)
    if pos is None:
        return None
    j, c = pos
    x = t.rows[j - 1][c - 1]
    rows = _replace(t, j, x, predecessor(x, i, n))
    if not _c3_holds(rows):
        for r in range(1, min(i, n - 1) + 1):
            rows[r - 1].remove(r)
    return MLTableau(n, tuple(tuple(r) for r in rows))


def epsilon_t(t: MLTableau, i: int, reading: str = MIDDLE) -> int:
    return reduce_brackets(bracket_sequence(t, i, reading)).n_close


def weight(t: MLTableau) -> Weight:
    """Content weight minus (row length) * e_j for each row j; zero at the highest weight."""
    w = [0] * t.n
    for j, row in enumerate(t.rows, start=1):
        for x in row:
            w[abs(x) - 1] += 1 if x > 0 else -1
        w[j - 1] -= len(row)
    return tuple(w)


def phi_t(t: MLTableau, i: int, reading: str = MIDDLE) -> int:
    return epsilon_t(t, i, reading) + coroot_pairing(i, weight(t), t.n)


def reduced_form(t: MLTableau) -> tuple[tuple[int, ...], ...]:
    """Drop the shaded boxes (every j in row j)."""
    return tuple(tuple(x for x in row if x != j) for j, row in enumerate(t.rows, start=1))


def expand(n: int, reduced_rows: Sequence[Sequence[int]]) -> MLTableau:
    """Inverse of reduced_form: re-insert as many shaded boxes as marginal largeness demands."""
    check_rank(n)
    if len(reduced_rows) != n - 1:
        raise InvalidTableauError(f"expected {n - 1} rows, got {len(reduced_rows)}")
    full: list[tuple[int, ...]] = []
    below = 0
    for j in range(n - 1, 0, -1):
        body = tuple(reduced_rows[j - 1])
        row = (j,) * (below + 1) + body
        full.append(row)
        below = len(row)
    return MLTableau.from_rows(n, reversed(full))


def row_counts(t: MLTableau, j: int) -> Counter:
    return Counter(t.rows[j - 1])


def render_ascii(t: MLTableau, reduced: bool = False, unicode: bool = False) -> str:
    rows = reduced_form(t) if reduced else t.rows
    cells = [[letter_str(x, unicode) for x in row] for row in rows]
    width = max((len(s) for row in cells for s in row), default=1)
    return "\n".join(" ".join(s.rjust(width) for s in row) for row in cells)
