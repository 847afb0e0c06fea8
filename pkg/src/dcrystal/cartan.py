"""Root system data for type D_n.

Positive roots come in two families, indexed as in the usual tables:

    beta(i, k)  = alpha_i + ... + alpha_k                 = e_i - e_{k+1},  1 <= i <= k <= n-1
    gamma(i, k) = alpha_i + ... + alpha_{n-2} + alpha_n
                  + alpha_{n-1} + ... + alpha_k            = e_i + e_k,      1 <= i < k <= n

Roots are kept symbolic; vectors are derived on demand. Weights live in the
epsilon basis as plain integer tuples of length n.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

BETA = "beta"
GAMMA = "gamma"

Weight = tuple[int, ...]


def check_rank(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"rank must be an int, got {type(n).__name__}")
    if n < 4:
        raise ValueError(f"rank must be ≥ 4, got {n}")
    return n


@dataclass(frozen=True, order=True)
class Root:
    """A positive root of D_n, stored by family and index pair."""

    kind: str
    i: int
    k: int

    @classmethod
    def beta(cls, i: int, k: int) -> "Root":
        return cls(BETA, i, k)

    @classmethod
    def gamma(cls, i: int, k: int) -> "Root":
        return cls(GAMMA, i, k)

    def is_valid(self, n: int) -> bool:
        if self.kind == BETA:
            return 1 <= self.i <= self.k <= n - 1
        if self.kind == GAMMA:
            return 1 <= self.i < self.k <= n
        return False

    def check(self, n: int) -> "Root":
        if not self.is_valid(n):
            raise ValueError(f"{self} is not a positive root of D_{n}")
        return self

    def to_json(self) -> dict:
        return {"kind": self.kind, "i": self.i, "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "Root":
        kind = obj["kind"]
        if kind not in (BETA, GAMMA):
            raise ValueError(f"unknown root kind {kind!r}")
        return cls(kind, int(obj["i"]), int(obj["k"]))

    def __str__(self) -> str:
        letter = "β" if self.kind == BETA else "γ"
        return f"{letter}{self.i},{self.k}"


class _Zero:
    """Stands in for the zero root: subtracting alpha_i from alpha_i."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __bool__(self) -> bool:
        return False


ZERO = _Zero()


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Root, ...]:
    """All n(n-1) positive roots, betas first, each family in lexicographic index order."""
    check_rank(n)
    betas = [Root.beta(i, k) for i in range(1, n) for k in range(i, n)]
    gammas = [Root.gamma(i, k) for i in range(1, n) for k in range(i + 1, n + 1)]
    return tuple(betas + gammas)


def root_to_epsilon(r: Root, n: int) -> Weight:
    r.check(n)
    v = [0] * n
    v[r.i - 1] += 1
    if r.kind == BETA:
        v[r.k] -= 1
    else:
        v[r.k - 1] += 1
    return tuple(v)


def root_to_simple_coords(r: Root, n: int) -> tuple[int, ...]:
    """Coefficients of r on alpha_1, ..., alpha_n, read off the defining chain."""
    r.check(n)
    c = [0] * n
    if r.kind == BETA:
        for t in range(r.i, r.k + 1):
            c[t - 1] += 1
        return tuple(c)
    # alpha_i + ... + alpha_{n-2}, then alpha_n, then alpha_{n-1} + ... + alpha_k
    for t in range(r.i, n - 1):
        c[t - 1] += 1
    c[n - 1] += 1
    for t in range(r.k, n):
        c[t - 1] += 1
    return tuple(c)


def simple_root(i: int, n: int) -> Root:
    check_rank(n)
    if not 1 <= i <= n:
        raise ValueError(f"simple root index {i} out of range 1..{n}")
    if i <= n - 1:
        return Root.beta(i, i)
    return Root.gamma(n - 1, n)


@lru_cache(maxsize=None)
def simple_root_epsilon(i: int, n: int) -> Weight:
    return root_to_epsilon(simple_root(i, n), n)


@lru_cache(maxsize=None)
def _roots_by_epsilon(n: int) -> dict[Weight, Root]:
    return {root_to_epsilon(r, n): r for r in positive_roots(n)}


def root_from_epsilon(v: Sequence[int], n: int) -> Root | None:
    return _roots_by_epsilon(n).get(tuple(v))


def add_simple(r: Root, i: int, n: int) -> Root | None:
    """The positive root r + alpha_i, or None."""
    a = simple_root_epsilon(i, n)
    v = root_to_epsilon(r, n)
    return root_from_epsilon([x + y for x, y in zip(v, a)], n)


def subtract_simple(r: Root, i: int, n: int) -> Root | _Zero | None:
    """The positive root r - alpha_i; ZERO when r is alpha_i itself; None otherwise."""
    if r == simple_root(i, n):
        return ZERO
    a = simple_root_epsilon(i, n)
    v = root_to_epsilon(r, n)
    return root_from_epsilon([x - y for x, y in zip(v, a)], n)


def coroot_pairing(i: int, w: Sequence[int], n: int) -> int:
    """<alpha_i^vee, w> for w in the epsilon basis."""
    if len(w) != n:
        raise ValueError(f"weight has length {len(w)}, expected {n}")
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    if i <= n - 1:
        return w[i - 1] - w[i]
    return w[n - 2] + w[n - 1]


def cartan_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """a_ij with the D_n Dynkin diagram: a chain 1..n-2, and n-1, n both attached to n-2."""
    check_rank(n)

    def adjacent(i, j):
        if {i, j} in ({n - 2, n - 1}, {n - 2, n}):
            return True
        return abs(i - j) == 1 and max(i, j) <= n - 2

    return tuple(
        tuple(2 if i == j else (-1 if adjacent(i, j) else 0) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def epsilon_to_simple(w: Sequence[int], n: int) -> tuple[int, ...]:
    """Coordinates of an epsilon-basis vector on the simple roots (must lie in the root lattice)."""
    if len(w) != n:
        raise ValueError(f"weight has length {len(w)}, expected {n}")
    partial = 0
    coords = []
    for t in range(n - 2):
        partial += w[t]
        coords.append(partial)
    s = partial + w[n - 2]
    if (s - w[n - 1]) % 2:
        raise ValueError(f"{tuple(w)} is not in the root lattice of D_{n}")
    coords.append((s - w[n - 1]) // 2)
    coords.append((s + w[n - 1]) // 2)
    return tuple(coords)


def simple_to_epsilon(c: Sequence[int], n: int) -> Weight:
    v = [0] * n
    for idx, m in enumerate(c, start=1):
        if m:
            for t, x in enumerate(simple_root_epsilon(idx, n)):
                v[t] += m * x
    return tuple(v)


def height(r: Root, n: int) -> int:
    return sum(root_to_simple_coords(r, n))


def reduced_word_w0(n: int) -> tuple[int, ...]:
    """(s_1 ... s_{n-1} s_n s_{n-2} ... s_1) ... (s_{n-2} s_{n-1} s_n s_{n-2}) s_{n-1} s_n."""
    check_rank(n)
    word: list[int] = []
    for j in range(1, n - 1):
        word += list(range(j, n + 1)) + list(range(n - 2, j - 1, -1))
    word += [n - 1, n]
    return tuple(word)


def _reflect(i: int, v: Sequence[int], n: int) -> Weight:
    c = coroot_pairing(i, v, n)
    a = simple_root_epsilon(i, n)
    return tuple(x - c * y for x, y in zip(v, a))


@lru_cache(maxsize=None)
def pbw_root_order(n: int) -> tuple[Root, ...]:
    """Convex order on positive roots induced by reduced_word_w0.

    The k-th root is s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}). This is the order
    used to list the parts of a Kostant partition.
    """
    word = reduced_word_w0(n)
    out = []
    for pos, i in enumerate(word):
        v = simple_root_epsilon(i, n)
        for j in reversed(word[:pos]):
            v = _reflect(j, v, n)
        r = root_from_epsilon(v, n)
        if r is None:
            raise AssertionError(f"word for w0 is not reduced at position {pos}")
        out.append(r)
    if len(set(out)) != len(out):
        raise AssertionError("word for w0 is not reduced")
    return tuple(out)


@lru_cache(maxsize=None)
def pbw_rank(n: int) -> dict[Root, int]:
    return {r: idx for idx, r in enumerate(pbw_root_order(n))}


def kostant_partition_count(mu: Sequence[int], n: int) -> int:
    """Number of multisets of positive roots summing to mu (simple-root coordinates).

    Brute-force recursion over the fixed root list, choosing a multiplicity
    for each root in turn.
    """
    check_rank(n)
    mu = tuple(mu)
    if len(mu) != n:
        raise ValueError(f"mu has length {len(mu)}, expected {n}")
    if any(x < 0 for x in mu):
        return 0
    vecs = [root_to_simple_coords(r, n) for r in positive_roots(n)]

    @lru_cache(maxsize=None)
    def count(idx: int, rem: tuple[int, ...]) -> int:
        if idx == len(vecs):
            return int(not any(rem))
        total = 0
        v = vecs[idx]
        cur = rem
        while all(x >= 0 for x in cur):
            total += count(idx + 1, cur)
            cur = tuple(x - y for x, y in zip(cur, v))
        return total

    return count(0, mu)


def compositions_up_to(n: int, total: int):
    """All nonnegative integer vectors of length n with coordinate sum <= total."""

    def rec(prefix, left, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for x in range(left + 1):
            yield from rec(prefix + [x], left - x, slots - 1)

    yield from rec([], total, n)
