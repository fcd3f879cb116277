"""Full kernel for path contraction via one frontier-bounded BFS.

Long degree-2 chains are truncated on the fly: chain vertices past position
k+1 are never copied into the kernel, and the chain terminator is bridged to
the (k+1)-th chain vertex carried along in each BFS quadruple.  When two BFS
fronts meet inside one chain, both sides are walked backwards until the kept
positions sum to k+2.  Every truncation appends a correspondence record so
removed chain segments stay reconstructible from the kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphcore import Kernel, KernelGraph, NoInstance, SpaceMeter, StaticGraph, Verdict


@dataclass(frozen=True)
class Quadruple:
    """BFS queue entry: vertex, predecessor, chain position, (k+1)-th chain vertex."""

    v: int
    p: Optional[int]
    i: int
    vstar: Optional[int]


@dataclass(frozen=True)
class ChainRecord:
    """Kernel edge {u, v} replacing the original path u - via_u - ... - via_v - v."""

    u: int
    v: int
    via_u: int
    via_v: int


def _edge_budget(n: int, k: int) -> int:
    return n - 1 + (k * k + 5 * k + 4) // 2


def _other_neighbor(graph: StaticGraph, v: int, not_this: int) -> int:
    a, b = graph.neighbors(v)
    return b if a == not_this else a


class _Run:
    """Single kernelization run: kernel, frontier, counters, chain table."""

    def __init__(self, graph: StaticGraph, k: int, meter: SpaceMeter):
        self.g = graph
        self.k = k
        self.meter = meter
        self.kernel = KernelGraph(meter)
        self.chains: list[ChainRecord] = []
        self.merges = 0
        self.bridges = 0

    def record_chain(self, rec: ChainRecord) -> None:
        self.chains.append(rec)
        self.meter.charge(4)

    def place(self, q: Quadruple) -> None:
        """Copy the quadruple's vertex (and its tree edge) into the kernel."""
        v, k = q.v, self.k
        if self.g.degree(v) != 2:
            self.kernel.add_vertex(v)
            if q.p is None:
                return
            if q.i <= k + 1:
                self.kernel.add_edge_if_absent(v, q.p)
            else:
                self.bridge(q.vstar, v, last_chain_vertex=q.p)
        elif q.i <= k + 1:
            self.kernel.add_vertex(v)
            self.kernel.add_edge_if_absent(v, q.p)

    def bridge(self, vstar: int, terminator: int, last_chain_vertex: int) -> None:
        """Connect a truncated chain's (k+1)-th vertex to its terminator."""
        if vstar == last_chain_vertex:
            # nothing was skipped: the bridge is the original edge
            self.kernel.add_edge_if_absent(vstar, terminator)
            return
        self.bridges += 1
        self.kernel.add_edge_if_absent(vstar, terminator)
        prev, cur = terminator, last_chain_vertex
        while cur != vstar:
            nxt = _other_neighbor(self.g, cur, prev)
            prev, cur = cur, nxt
        self.record_chain(ChainRecord(vstar, terminator, prev, last_chain_vertex))

    def walk_back(self, tip: int, came_from: int, pos: int, target: int):
        """Back off a chain tip to the target position, removing kernel copies.

        Returns (stop vertex, first removed vertex next to it or None).
        Positions past k+1 were never copied, so only placed ones are removed.
        """
        prev, cur = came_from, tip
        while pos > target:
            if pos <= self.k + 1 and self.kernel.has_vertex(cur):
                self.kernel.remove_vertex(cur)
            nxt = _other_neighbor(self.g, cur, prev)
            prev, cur = cur, nxt
            pos -= 1
        return cur, (prev if prev != came_from else None)

    def merge(self, q: Quadruple, other: Quadruple) -> None:
        """Two degree-2 fronts met on one chain; enforce the k+2 position cap."""
        i, ip = q.i, other.i
        if i + ip <= self.k + 2:
            self.kernel.add_edge_if_absent(q.v, other.v)
            return
        self.merges += 1
        j, jp = i, ip
        while j + jp > self.k + 2:
            if j >= jp:
                j -= 1  # ties shrink the side being processed
            else:
                jp -= 1
        w, via_w = self.walk_back(q.v, other.v, i, j)
        wp, via_wp = self.walk_back(other.v, q.v, ip, jp)
        self.kernel.add_edge_if_absent(w, wp)
        self.record_chain(ChainRecord(
            w, wp,
            via_w if via_w is not None else other.v,
            via_wp if via_wp is not None else q.v,
        ))

    def meet(self, q: Quadruple, other: Quadruple) -> None:
        """Handle a non-tree edge between two visited vertices."""
        v, u = q.v, other.v
        dv, du = self.g.degree(v), self.g.degree(u)
        if dv == 2 and du == 2:
            self.merge(q, other)
        elif dv == 2:
            if q.i <= self.k + 1:
                self.kernel.add_edge_if_absent(v, u)
            else:
                self.bridge(q.vstar, u, last_chain_vertex=v)
        elif du == 2:
            if other.i <= self.k + 1:
                self.kernel.add_edge_if_absent(v, u)
            else:
                self.bridge(other.vstar, v, last_chain_vertex=u)
        else:
            self.kernel.add_edge_if_absent(v, u)


def _cycle_case(g: StaticGraph, k: int, meter: SpaceMeter, stats: dict) -> Verdict:
    """Every vertex has degree 2: the graph is a disjoint union of cycles."""
    prev, cur = 0, g.neighbors(0)[0]
    length = 1
    while cur != 0:
        prev, cur = cur, _other_neighbor(g, cur, prev)
        length += 1
    stats["visited"] = length
    if length < g.n:
        return NoInstance("disconnected input", stats=stats)
    if g.m > k + 2:
        return NoInstance(f"cycle of {g.m} edges needs {g.m - 2} contractions", stats=stats)
    kernel = KernelGraph(meter)
    for v in range(g.n):
        kernel.add_vertex(v)
    for u, v in g.edges():
        kernel.add_edge(u, v)
    stats["peak_words"] = meter.peak
    return Kernel(kernel, k, stats=stats)


def kernelize_path_contraction(g: StaticGraph, k: int,
                               meter: Optional[SpaceMeter] = None) -> Verdict:
    """Compute a full kernel for (g, k) or certify a no-instance."""
    if k < 0:
        raise ValueError("k must be non-negative")
    meter = meter if meter is not None else SpaceMeter()
    stats = {"problem": "pc", "rounds": 0, "merges": 0, "bridges": 0, "leaves": 0}

    if g.m > _edge_budget(g.n, k):
        return NoInstance(f"{g.m} edges exceed the contraction budget", stats=stats)
    if g.n == 0:
        stats["peak_words"] = meter.peak
        return Kernel(KernelGraph(meter), k, stats=stats)

    root = next((v for v in range(g.n) if g.degree(v) != 2), None)
    if root is None:
        return _cycle_case(g, k, meter, stats)

    run = _Run(g, k, meter)
    cur: dict[int, Quadruple] = {root: Quadruple(root, None, 0, None)}
    prev: dict[int, Quadruple] = {}
    meter.charge(4)
    visited = 1
    leaves = 0
    root_children = 0

    while cur:
        stats["rounds"] += 1
        nxt: dict[int, Quadruple] = {}
        processed: dict[int, Quadruple] = {}
        for v, q in cur.items():
            run.place(q)
            children = 0
            deg_v = g.degree(v)
            for u in g.neighbors(v):
                if u == q.p or u in nxt:
                    continue
                if u in processed:
                    run.meet(q, processed[u])
                elif u in cur:
                    continue  # same-round neighbor not yet processed handles it
                elif u in prev:
                    run.meet(q, prev[u])
                else:
                    if deg_v != 2:
                        nq = Quadruple(u, v, 1, None)
                    else:
                        nq = Quadruple(u, v, q.i + 1, v if q.i == k + 1 else q.vstar)
                    nxt[u] = nq
                    meter.charge(4)
                    if len(nxt) > k + 2:
                        stats["leaves"] = leaves
                        return NoInstance("BFS frontier exceeds k+2", stats=stats)
                    visited += 1
                    children += 1
            if children == 0:
                leaves += 1
            if v == root:
                root_children = children
            processed[v] = q
            meter.charge(1)
        meter.release(4 * len(prev) + len(processed))
        prev, cur = cur, nxt

    meter.release(4 * len(prev))
    if root_children == 1:
        leaves += 1  # the root is a leaf of the unrooted BFS tree
    stats["visited"] = visited
    stats["leaves"] = leaves
    stats["merges"] = run.merges
    stats["bridges"] = run.bridges
    if leaves > k + 2:
        return NoInstance(f"BFS tree has {leaves} leaves > k+2", stats=stats)
    if visited < g.n:
        return NoInstance("disconnected input", stats=stats)
    stats["peak_words"] = meter.peak
    return Kernel(run.kernel, k, chains=tuple(run.chains), stats=stats)


def merge_fronts(graph: StaticGraph, q: Quadruple, other: Quadruple,
                 kernel: KernelGraph, k: int,
                 meter: Optional[SpaceMeter] = None) -> KernelGraph:
    """Merge two adjacent degree-2 frontier quadruples into the kernel.

    Exposed for direct testing; kernelize_path_contraction drives the same
    logic internally.
    """
    if not graph.has_edge(q.v, other.v):
        raise ValueError(f"{q.v} and {other.v} are not adjacent")
    if graph.degree(q.v) != 2 or graph.degree(other.v) != 2:
        raise ValueError("both merge endpoints must have degree 2")
    run = _Run(graph, k, meter if meter is not None else SpaceMeter())
    run.kernel = kernel
    run.merge(q, other)
    return kernel
