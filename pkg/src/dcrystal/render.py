"""Text renderings: tableaux as rows, Kostant partitions as stacks of simple-root indices."""
from __future__ import annotations

from .cartan import BETA, Root
from .kostant import KostantPartition
from .tableaux import MLTableau, render_ascii


def stack(r: Root, n: int) -> list[tuple[int, ...]]:
    """Levels of the stack for r, bottom first; the branch level holds n-1 and n side by side."""
    r.check(n)
    if r.kind == BETA:
        return [(t,) for t in range(r.i, r.k + 1)]
    levels = [(t,) for t in range(r.i, n - 1)]
    levels.append((n - 1, n) if r.k <= n - 1 else (n,))
    levels += [(t,) for t in range(n - 2, r.k - 1, -1)]
    return levels


def stacks(a: KostantPartition) -> list[list[tuple[int, ...]]]:
    """One stack per part, repeated by multiplicity, in canonical part order."""
    return [stack(r, a.n) for r, m in a.parts() for _ in range(m)]


def render_stacks(a: KostantPartition) -> str:
    blocks = [[" ".join(map(str, lvl)) for lvl in s] for s in stacks(a)]
    if not blocks:
        return ""
    tall = max(len(b) for b in blocks)
    widths = [max(len(x) for x in b) for b in blocks]
    lines = []
    for level in range(tall - 1, -1, -1):
        cells = [(b[level] if level < len(b) else "").center(w) for b, w in zip(blocks, widths)]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def render(x, style: str = "ascii", unicode: bool = False) -> str:
    if style == "stack":
        if not isinstance(x, KostantPartition):
            raise TypeError("stack rendering needs a Kostant partition")
        return render_stacks(x)
    if isinstance(x, MLTableau):
        if style not in ("ascii", "reduced"):
            raise ValueError(f"unknown style {style!r}")
        return render_ascii(x, reduced=style == "reduced", unicode=unicode)
    if style in ("ascii", "reduced"):
        if not x:
            return "0"
        return " + ".join(f"{m}({r})" if m > 1 else f"({r})" for r, m in x.parts())
    raise ValueError(f"unknown style {style!r}")
