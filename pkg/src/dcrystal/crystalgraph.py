"""Breadth-first generation of B(infinity) balls and cross-realization checks."""
from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

from . import kostant as kp
from . import tableaux as tab
from .cartan import check_rank, coroot_pairing, epsilon_to_simple, simple_root_epsilon
from .isomorphism import psi, psi_inverse

TABLEAUX = "tableaux"
KOSTANT = "kostant"
REALIZATIONS = (TABLEAUX, KOSTANT)

DEFAULT_MAX_NODES = 500_000


class GenerationLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class Realization:
    """The operations a BFS needs from one model of B(infinity)."""

    name: str
    top: Callable[[int], Any]
    f: Callable[[Any, int], Any]
    e: Callable[[Any, int], Any]
    weight: Callable[[Any], tuple]
    epsilon: Callable[[Any, int], int]
    phi: Callable[[Any, int], int]


def realization(name: str, n: int, reading: str = tab.MIDDLE) -> Realization:
    if name == TABLEAUX:
        return Realization(
            TABLEAUX,
            tab.highest_weight_tableau,
            lambda t, i: tab.f(t, i, reading),
            lambda t, i: tab.e(t, i, reading),
            tab.weight,
            lambda t, i: tab.epsilon_t(t, i, reading),
            lambda t, i: tab.phi_t(t, i, reading),
        )
    if name == KOSTANT:
        return Realization(KOSTANT, kp.KostantPartition.empty, kp.f_kp, kp.e_kp, kp.weight_kp, kp.epsilon_kp, kp.phi_kp)
    raise ValueError(f"unknown realization {name!r}; expected one of {REALIZATIONS}")


def element_json(x) -> dict:
    return x.to_json()


def canonical_json(x) -> str:
    return json.dumps(element_json(x), sort_keys=True, separators=(",", ":"))


def element_key(x) -> str:
    return hashlib.sha256(canonical_json(x).encode()).hexdigest()[:16]


def depth_of(w, n: int) -> int:
    """Number of f-steps from the highest weight: the height of -wt."""
    return -sum(epsilon_to_simple(w, n))


@dataclass
class CrystalGraph:
    realization: str
    n: int
    depth: int
    nodes: list = field(default_factory=list)
    edges: list[tuple[Any, int, Any]] = field(default_factory=list)
    node_depth: dict = field(default_factory=dict)

    def layer(self, d: int) -> list:
        return [x for x in self.nodes if self.node_depth[x] == d]

    def layer_sizes(self) -> list[int]:
        c = Counter(self.node_depth.values())
        return [c[d] for d in range(self.depth + 1)]


def generate(
    name: str,
    n: int,
    depth: int,
    reading: str = tab.MIDDLE,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> CrystalGraph:
    """All elements reachable from the highest weight by at most ``depth`` lowering steps.

    Edges x -i-> f_i(x) are recorded for every node of depth < ``depth``.
    """
    check_rank(n)
    if depth < 0:
        raise ValueError("depth must be ≥ 0")
    ops = realization(name, n, reading)
    top = ops.top(n)
    g = CrystalGraph(name, n, depth, [top], [], {top: 0})
    frontier = [top]
    for d in range(depth):
        nxt = []
        for x in frontier:
            for i in range(1, n + 1):
                y = ops.f(x, i)
                g.edges.append((x, i, y))
                if y not in g.node_depth:
                    g.node_depth[y] = d + 1
                    g.nodes.append(y)
                    nxt.append(y)
                    if len(g.nodes) > max_nodes:
                        raise GenerationLimitError(
                            f"more than {max_nodes} nodes at depth {d + 1}; raise max_nodes or lower depth"
                        )
        frontier = nxt
    return g


def weight_multiplicities(g: CrystalGraph) -> dict[tuple[int, ...], int]:
    """Node counts keyed by -wt in simple-root coordinates."""
    ops = realization(g.realization, g.n)
    out: Counter = Counter()
    for x in g.nodes:
        mu = tuple(-c for c in epsilon_to_simple(ops.weight(x), g.n))
        out[mu] += 1
    return dict(out)


@dataclass(frozen=True)
class Failure:
    invariant: str
    key: str
    i: int | None
    detail: str = ""


@dataclass
class VerificationReport:
    n: int
    depth: int
    nodes_checked: int = 0
    edges_checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, invariant: str, x, i: int | None, detail: str = "") -> None:
        self.failures.append(Failure(invariant, element_key(x), i, detail))

    def summary(self, limit: int = 20) -> str:
        lines = [
            f"D_{self.n}, depth {self.depth}: {self.nodes_checked} nodes, {self.edges_checked} edges checked, "
            f"{len(self.failures)} failures"
        ]
        for fl in self.failures[:limit]:
            lines.append(f"  FAIL {fl.invariant} key={fl.key} i={fl.i} {fl.detail}".rstrip())
        if len(self.failures) > limit:
            lines.append(f"  ... {len(self.failures) - limit} more")
        return "\n".join(lines)


def check_axioms(g: CrystalGraph, report: VerificationReport) -> VerificationReport:
    """Crystal bookkeeping on every node of one generated graph."""
    n = g.n
    ops = realization(g.realization, n)
    for x in g.nodes:
        report.nodes_checked += 1
        wx = ops.weight(x)
        for i in range(1, n + 1):
            report.edges_checked += 1
            y = ops.f(x, i)
            if ops.e(y, i) != x:
                report.fail("e_i f_i = id", x, i)
            ex = ops.e(x, i)
            if ex is not None and ops.f(ex, i) != x:
                report.fail("f_i e_i = id", x, i)
            a = simple_root_epsilon(i, n)
            if ops.weight(y) != tuple(p - q for p, q in zip(wx, a)):
                report.fail("wt(f_i x) = wt(x) - alpha_i", x, i)
            eps = ops.epsilon(x, i)
            if ops.epsilon(y, i) != eps + 1:
                report.fail("eps_i(f_i x) = eps_i(x) + 1", x, i)
            if ops.phi(x, i) != eps + coroot_pairing(i, wx, n):
                report.fail("phi_i = eps_i + <h_i, wt>", x, i)
            steps, z = 0, x
            while (z := ops.e(z, i)) is not None:
                steps += 1
            if steps != eps:
                report.fail("eps_i = max e_i-string length", x, i, f"{eps} != {steps}")
    return report


def check_isomorphism(
    n: int,
    depth: int,
    psi_map: Callable = psi,
    psi_inv: Callable = psi_inverse,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> VerificationReport:
    """Generate both balls and check that psi_map intertwines all of their structure.

    ``psi_map`` is injectable so a deliberately broken map can be shown to fail.
    """
    gt = generate(TABLEAUX, n, depth, max_nodes=max_nodes)
    gk = generate(KOSTANT, n, depth, max_nodes=max_nodes)
    report = VerificationReport(n, depth)
    kset = set(gk.nodes)

    images = {}
    for t in gt.nodes:
        report.nodes_checked += 1
        try:
            a = psi_map(t)
        except Exception as exc:  # a broken map may produce invalid roots
            report.fail("psi defined", t, None, repr(exc))
            continue
        images[t] = a
        if a not in kset:
            report.fail("psi(T) in Kp ball", t, None)
        if tab.weight(t) != kp.weight_kp(a):
            report.fail("wt(T) = wt(psi T)", t, None)
        try:
            back = psi_inv(a)
        except Exception as exc:
            report.fail("psi_inverse defined", t, None, repr(exc))
            back = None
        if back != t:
            report.fail("psi_inverse(psi T) = T", t, None)
        for i in range(1, n + 1):
            if tab.epsilon_t(t, i) != kp.epsilon_kp(a, i):
                report.fail("eps_i(T) = eps_i(psi T)", t, i)
            if tab.phi_t(t, i) != kp.phi_kp(a, i):
                report.fail("phi_i(T) = phi_i(psi T)", t, i)

    if len(set(images.values())) != len(images):
        report.failures.append(Failure("psi injective on ball", "-", None))
    if set(images.values()) != kset:
        report.failures.append(
            Failure("psi(ball) = Kp ball", "-", None, f"{len(set(images.values()))} vs {len(kset)}")
        )

    for a in gk.nodes:
        try:
            t = psi_inv(a)
            ok = psi_map(t) == a
        except Exception:
            ok = False
        if not ok:
            report.fail("psi(psi_inverse a) = a", a, None)

    for t, a in images.items():
        for i in range(1, n + 1):
            report.edges_checked += 1
            ft = tab.f(t, i)
            try:
                if psi_map(ft) != kp.f_kp(a, i):
                    report.fail("psi f_i = f_i psi", t, i)
            except Exception as exc:
                report.fail("psi f_i = f_i psi", t, i, repr(exc))
            et = tab.e(t, i)
            ea = kp.e_kp(a, i)
            if (et is None) != (ea is None):
                report.fail("e_i defined on both sides", t, i)
            elif et is not None and psi_map(et) != ea:
                report.fail("psi e_i = e_i psi", t, i)
    return report


def check_readings(n: int, depth: int, max_nodes: int = DEFAULT_MAX_NODES) -> VerificationReport:
    """Middle- and far-Eastern readings must pick boxes of the same row and letter, and agree on results."""
    g = generate(TABLEAUX, n, depth, max_nodes=max_nodes)
    report = VerificationReport(n, depth)
    for t in g.nodes:
        report.nodes_checked += 1
        for i in range(1, n + 1):
            report.edges_checked += 1
            for op, box in (("f", tab.f_box), ("e", tab.e_box)):
                bm, bf = box(t, i, tab.MIDDLE), box(t, i, tab.FAR)
                same = (bm is None and bf is None) or (
                    bm is not None and bf is not None and bm[0] == bf[0]
                    and t.rows[bm[0] - 1][bm[1] - 1] == t.rows[bf[0] - 1][bf[1] - 1]
                )
                if not same:
                    report.fail(f"{op}_i box agrees across readings", t, i, f"{bm} vs {bf}")
            if tab.f(t, i, tab.MIDDLE) != tab.f(t, i, tab.FAR):
                report.fail("f_i agrees across readings", t, i)
            if tab.e(t, i, tab.MIDDLE) != tab.e(t, i, tab.FAR):
                report.fail("e_i agrees across readings", t, i)
    return report


def _sorted_nodes(g: CrystalGraph) -> list:
    return sorted(g.nodes, key=lambda x: (g.node_depth[x], canonical_json(x)))


def _sorted_edges(g: CrystalGraph) -> list[tuple[str, int, str]]:
    return sorted((element_key(x), i, element_key(y)) for x, i, y in g.edges)


def node_label(x) -> str:
    if isinstance(x, tab.MLTableau):
        rows = tab.reduced_form(x)
        return "\\n".join(" ".join(tab.letter_str(c) for c in r) or "." for r in rows)
    if not x:
        return "0"
    return " + ".join(f"{m}({r})" if m > 1 else f"({r})" for r, m in x.parts())


def export_dot(g: CrystalGraph) -> str:
    lines = [f'digraph "B_infinity_D{g.n}_{g.realization}_depth{g.depth}" {{', "  node [shape=box];"]
    for x in _sorted_nodes(g):
        lines.append(f'  "{element_key(x)}" [label="{node_label(x)}"];')
    for src, i, dst in _sorted_edges(g):
        lines.append(f'  "{src}" -> "{dst}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: CrystalGraph) -> str:
    ops = realization(g.realization, g.n)
    doc = {
        "realization": g.realization,
        "n": g.n,
        "depth": g.depth,
        "nodes": [
            {"key": element_key(x), "element": element_json(x), "wt": list(ops.weight(x))}
            for x in _sorted_nodes(g)
        ],
        "edges": [{"src": s, "i": i, "dst": d} for s, i, d in _sorted_edges(g)],
    }
    return json.dumps(doc, indent=1) + "\n"
