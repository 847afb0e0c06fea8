"""The crystal isomorphism from marginally large tableaux to Kostant partitions.

Row j is mapped on its own and the images are summed. Within row j the letters
pair off as follows (a letter j-bar counts as paired with a shaded j):

    pair (k, k-bar), j <= k <= n-1   ->  beta(j, k) + gamma(j, k+1)
    unpaired k,      j <  k <= n     ->  beta(j, k-1)
    unpaired k-bar,  j <  k <= n     ->  gamma(j, k)

Shaded j's carry nothing. Letters n and n-bar never share a row, so never pair.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cartan import Root, check_rank
from .kostant import KostantPartition
from .tableaux import MLTableau, letter_rank, validate


@dataclass(frozen=True)
class RowDecomposition:
    """Letter counts of row j; ``plain[k]`` counts k and ``barred[k]`` counts k-bar."""

    j: int
    n: int
    shaded: int
    plain: tuple[int, ...]
    barred: tuple[int, ...]

    @classmethod
    def from_row(cls, j: int, row: Sequence[int], n: int) -> "RowDecomposition":
        check_rank(n)
        if not 1 <= j <= n - 1:
            raise ValueError(f"row index {j} out of range 1..{n - 1}")
        for x in row:
            if x == 0 or abs(x) > n or (0 < x < j) or letter_rank(x, n) > 2 * n - j:
                raise ValueError(f"letter {x} cannot occur in row {j} of a D_{n} tableau")
        cnt = Counter(row)
        if cnt[n] and cnt[-n]:
            raise ValueError(f"row {j} contains both {n} and -{n}")
        plain = tuple(cnt[k] for k in range(n + 1))
        barred = tuple(cnt[-k] for k in range(n + 1))
        return cls(j, n, cnt[j], plain, barred)

    def pairs(self) -> dict[int, int]:
        """Number of (k, k-bar) pairs for j <= k <= n-1; for k = j that is the count of j-bar."""
        out = {self.j: self.barred[self.j]}
        for k in range(self.j + 1, self.n):
            out[k] = min(self.plain[k], self.barred[k])
        return out


def psi_row(j: int, row: Sequence[int] | RowDecomposition, n: int) -> KostantPartition:
    d = row if isinstance(row, RowDecomposition) else RowDecomposition.from_row(j, row, n)
    pairs = d.pairs()
    parts: list[tuple[Root, int]] = []
    for k, p in pairs.items():
        parts += [(Root.beta(j, k), p), (Root.gamma(j, k + 1), p)]
    for k in range(j + 1, n + 1):
        p = pairs.get(k, 0)
        parts.append((Root.beta(j, k - 1), d.plain[k] - p))
        parts.append((Root.gamma(j, k), d.barred[k] - p))
    return KostantPartition(n, parts)


def psi(t: MLTableau) -> KostantPartition:
    problems = validate(t)
    if problems:
        detail = "; ".join(f"{p.condition}: {p.message}" for p in problems)
        raise ValueError(f"not a marginally large tableau: {detail}")
    total = KostantPartition.empty(t.n)
    for j, row in enumerate(t.rows, start=1):
        total = total + psi_row(j, row, t.n)
    return total


def _row_letters(j: int, a: dict[Root, int], n: int) -> list[int]:
    """Unshaded letters of row j recovered from the parts beta(j, .) and gamma(j, .)."""
    c_beta = {k: a.get(Root.beta(j, k), 0) for k in range(j, n)}
    c_gamma = {k: a.get(Root.gamma(j, k), 0) for k in range(j + 1, n + 1)}
    letters: list[int] = []
    for k in range(j, n):
        # beta(j,k) and gamma(j,k+1) come from pairs at k plus unpaired k+1 / (k+1)-bar,
        # and unpaired k+1 and (k+1)-bar exclude each other
        p = min(c_beta[k], c_gamma[k + 1])
        extra_plain = c_beta[k] - p
        extra_bar = c_gamma[k + 1] - p
        if k == j:
            letters += [-j] * p
        else:
            letters += [k] * p + [-k] * p
        letters += [k + 1] * extra_plain + [-(k + 1)] * extra_bar
    return letters


def psi_inverse(a: KostantPartition) -> MLTableau:
    n = a.n
    d = a.as_dict()
    bodies = {j: _row_letters(j, d, n) for j in range(1, n)}
    rows: list[tuple[int, ...]] = []
    below = 0
    for j in range(n - 1, 0, -1):
        body = sorted(bodies[j], key=lambda x: letter_rank(x, n))
        row = (j,) * (below + 1) + tuple(body)
        rows.append(row)
        below = len(row)
    return MLTableau(n, tuple(reversed(rows)))


def psi_rows(t: MLTableau) -> list[KostantPartition]:
    """Per-row images, in row order."""
    return [psi_row(j, row, t.n) for j, row in enumerate(t.rows, start=1)]


def sum_partitions(n: int, items: Iterable[KostantPartition]) -> KostantPartition:
    total = KostantPartition.empty(n)
    for x in items:
        total = total + x
    return total
