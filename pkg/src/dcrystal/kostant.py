"""Kostant partitions with the bracketing crystal structure.

A Kostant partition is a finite multiset of positive roots. For each color i
a fixed ordered subset of roots (``phi_set``) contributes brackets; the
operators move one part by +/- alpha_i.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .brackets import CLOSE, OPEN, Bracket, reduce_brackets
from .cartan import (
    ZERO,
    Root,
    Weight,
    add_simple,
    check_rank,
    coroot_pairing,
    height,
    pbw_rank,
    positive_roots,
    root_to_epsilon,
    simple_root,
    subtract_simple,
)


class KostantPartition:
    """Immutable multiset of positive roots of D_n.

    Parts are iterated in the convex order of the fixed reduced word for w0,
    which is also the serialization order.
    """

    __slots__ = ("n", "_parts", "_hash")

    def __init__(self, n: int, parts: Mapping[Root, int] | Iterable[tuple[Root, int]] = ()):
        check_rank(n)
        items = parts.items() if isinstance(parts, Mapping) else parts
        acc: dict[Root, int] = {}
        for r, m in items:
            r.check(n)
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {r}")
            if m:
                acc[r] = acc.get(r, 0) + m
        order = pbw_rank(n)
        self.n = n
        self._parts = tuple(sorted(acc.items(), key=lambda kv: order[kv[0]]))
        self._hash = hash((n, self._parts))

    @classmethod
    def empty(cls, n: int) -> "KostantPartition":
        return cls(n)

    def parts(self) -> tuple[tuple[Root, int], ...]:
        return self._parts

    def mult(self, r: Root) -> int:
        for s, m in self._parts:
            if s == r:
                return m
        return 0

    def as_dict(self) -> dict[Root, int]:
        return dict(self._parts)

    def size(self) -> int:
        return sum(m for _, m in self._parts)

    def __add__(self, other: "KostantPartition") -> "KostantPartition":
        if self.n != other.n:
            raise ValueError("ranks differ")
        return KostantPartition(self.n, list(self._parts) + list(other._parts))

    def add(self, r: Root, m: int = 1) -> "KostantPartition":
        d = self.as_dict()
        d[r] = d.get(r, 0) + m
        if d[r] < 0:
            raise ValueError(f"{r} has multiplicity {d[r] - m}, cannot remove {-m}")
        return KostantPartition(self.n, d)

    def __eq__(self, other) -> bool:
        return isinstance(other, KostantPartition) and self.n == other.n and self._parts == other._parts

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __repr__(self) -> str:
        if not self._parts:
            return f"KostantPartition({self.n}, 0)"
        body = " + ".join(f"{m}({r})" if m > 1 else f"({r})" for r, m in self._parts)
        return f"KostantPartition({self.n}, {body})"

    def to_json(self) -> dict:
        return {"n": self.n, "parts": [{**r.to_json(), "mult": m} for r, m in self._parts]}

    @classmethod
    def from_json(cls, obj: dict) -> "KostantPartition":
        n = int(obj["n"])
        return cls(n, [(Root.from_json(p), int(p["mult"])) for p in obj["parts"]])


@lru_cache(maxsize=None)
def phi_set(i: int, n: int) -> tuple[tuple[Root, str], ...]:
    """Ordered roots that carry an i-bracket, each with its bracket symbol.

    ')' when root - alpha_i is a positive root or zero, '(' when root + alpha_i is.
    """
    check_rank(n)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    if i <= n - 1:
        seq = []
        for k in range(1, i):
            seq += [Root.beta(k, i), Root.beta(k, i - 1), Root.gamma(k, i), Root.gamma(k, i + 1)]
        seq.append(Root.beta(i, i))
    else:
        seq = []
        for k in range(1, n - 1):
            seq += [Root.gamma(k, n), Root.beta(k, n - 2), Root.gamma(k, n - 1), Root.beta(k, n - 1)]
        seq.append(Root.gamma(n - 1, n))
    out = []
    for r in seq:
        down = subtract_simple(r, i, n)
        up = add_simple(r, i, n)
        closes = down is not None
        opens = up is not None
        if closes == opens:
            raise AssertionError(f"{r} has no unique {i}-direction")
        out.append((r, CLOSE if closes else OPEN))
    return tuple(out)


def bracket_sequence_kp(a: KostantPartition, i: int) -> list[Bracket]:
    d = a.as_dict()
    seq = []
    for r, sym in phi_set(i, a.n):
        seq += [Bracket(sym, r)] * d.get(r, 0)
    return seq


def f_kp(a: KostantPartition, i: int) -> KostantPartition:
    seq = bracket_sequence_kp(a, i)
    red = reduce_brackets(seq)
    if not red.opens:
        return a.add(simple_root(i, a.n))
    r = seq[red.opens[0]].source
    return a.add(r, -1).add(add_simple(r, i, a.n))


def e_kp(a: KostantPartition, i: int) -> KostantPartition | None:
    seq = bracket_sequence_kp(a, i)
    red = reduce_brackets(seq)
    if not red.closes:
        return None
    r = seq[red.closes[-1]].source
    out = a.add(r, -1)
    lower = subtract_simple(r, i, a.n)
    return out if lower is ZERO else out.add(lower)


def weight_kp(a: KostantPartition) -> Weight:
    w = [0] * a.n
    for r, m in a.parts():
        for t, x in enumerate(root_to_epsilon(r, a.n)):
            w[t] -= m * x
    return tuple(w)


def epsilon_kp(a: KostantPartition, i: int) -> int:
    return reduce_brackets(bracket_sequence_kp(a, i)).n_close


def phi_kp(a: KostantPartition, i: int) -> int:
    return epsilon_kp(a, i) + coroot_pairing(i, weight_kp(a), a.n)


def all_partitions(n: int, max_height: int) -> set[KostantPartition]:
    """Every Kostant partition whose weight has height <= max_height (exhaustive)."""
    roots = positive_roots(n)
    hts = [height(r, n) for r in roots]
    out: set[KostantPartition] = set()

    def rec(idx: int, left: int, chosen: list):
        if idx == len(roots):
            out.add(KostantPartition(n, chosen))
            return
        m = 0
        while m * hts[idx] <= left:
            rec(idx + 1, left - m * hts[idx], chosen + [(roots[idx], m)] if m else chosen)
            m += 1

    rec(0, max_height, [])
    return out
