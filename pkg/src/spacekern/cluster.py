"""Full kernels for cluster editing and cluster deletion by counting
conflict triples over a virtually modified read-only graph.

A conflict triple is an induced path a-c-b (edge {a,b} missing).  Each scan
counts, per vertex pair, how many triples contain it as an edge (C) or as
the missing pair (C').  A pair reaching k+1 is forced: deleted if present,
added if absent (editing) or a no-instance (deletion).  Forced changes live
in a modification log; the graph is never copied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphcore import (
    Kernel,
    KernelGraph,
    NoInstance,
    SpaceMeter,
    StaticGraph,
    Verdict,
)


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class ModificationLog:
    """Ordered forced modifications applied virtually to the input graph."""

    def __init__(self, meter: Optional[SpaceMeter] = None):
        self._meter = meter if meter is not None else SpaceMeter()
        self.entries: list[tuple[str, int, int]] = []  # (kind, u, v), u < v
        self._flipped: set[tuple[int, int]] = set()

    def __len__(self):
        return len(self.entries)

    def __contains__(self, pair) -> bool:
        return _key(*pair) in self._flipped

    def apply(self, kind: str, u: int, v: int) -> None:
        key = _key(u, v)
        if key in self._flipped:
            raise ValueError(f"pair {key} already modified")
        self.entries.append((kind, *key))
        self._flipped.add(key)
        self._meter.charge(3)


class VirtualGraph:
    """The input graph with the modification log overlaid, all queries O(log)."""

    def __init__(self, g: StaticGraph, log: ModificationLog):
        self.g = g
        self.log = log

    def has_edge(self, u: int, v: int) -> bool:
        return self.g.has_edge(u, v) ^ ((u, v) in self.log)

    def neighbors(self, u: int):
        flipped = self.log._flipped
        base = self.g.neighbors(u)
        if not flipped:
            return base
        out = [v for v in base if _key(u, v) not in flipped]
        for a, b in flipped:
            if a == u and not self.g.has_edge(a, b):
                out.append(b)
            elif b == u and not self.g.has_edge(a, b):
                out.append(a)
        return sorted(out)

    def edges(self):
        for u in range(self.g.n):
            for v in self.neighbors(u):
                if u < v:
                    yield (u, v)


@dataclass
class ConflictCounters:
    """Sparse conflict-triple counters keyed by vertex pair."""

    present: dict  # pair -> count of triples where the pair is an edge
    absent: dict   # pair -> count of triples missing the pair
    words: int = 0  # meter words held by the tables, released by the caller

    def nonzero_pairs(self) -> set:
        return set(self.present) | set(self.absent)


def _triples_of_edge(vg: VirtualGraph, u: int, v: int):
    """Yield conflict triples (leaf, center, leaf) counted once from {u, v}."""
    nu = vg.neighbors(u)
    nv = vg.neighbors(v)
    for w in set(nu) | set(nv):
        if w == u or w == v:
            continue
        wu = vg.has_edge(w, u)
        wv = vg.has_edge(w, v)
        if wu and wv:
            continue  # triangle
        if wu:
            if w > v:  # count triple w-u-v once, from its edge with smaller mate
                yield (w, u, v)
        elif wv:
            if w > u:
                yield (u, v, w)


def scan_conflicts(g: StaticGraph, log: Optional[ModificationLog] = None,
                   meter: Optional[SpaceMeter] = None) -> ConflictCounters:
    """Count conflict triples of the virtually modified graph.

    The returned tables stay charged against the meter; the caller releases
    `counters.words` when done with them.
    """
    meter = meter if meter is not None else SpaceMeter()
    log = log if log is not None else ModificationLog(meter)
    vg = VirtualGraph(g, log)
    counters = ConflictCounters({}, {})

    def bump(table, a, b):
        key = _key(a, b)
        if key not in table:
            table[key] = 0
            counters.words += 3
            meter.charge(3)
        table[key] += 1

    for u, v in vg.edges():
        for a, c, b in _triples_of_edge(vg, u, v):
            bump(counters.present, a, c)
            bump(counters.present, c, b)
            bump(counters.absent, a, b)
    return counters


def _witness_triples(vg: VirtualGraph, pair, cap: int):
    """First `cap` conflict triples (leaf, center, leaf) containing the pair."""
    u, v = pair
    out = []
    if vg.has_edge(u, v):
        for center in (u, v):
            leaf = v if center == u else u
            for w in vg.neighbors(center):
                if w == leaf or vg.has_edge(w, leaf):
                    continue
                t = (min(w, leaf), center, max(w, leaf))
                if t not in out:
                    out.append(t)
                    if len(out) == cap:
                        return out
    else:
        for c in vg.neighbors(u):
            if vg.has_edge(c, v):
                out.append((min(u, v), c, max(u, v)))
                if len(out) == cap:
                    return out
    return out


def kernelize_cluster(g: StaticGraph, k: int, mode: str = "editing",
                      meter: Optional[SpaceMeter] = None) -> Verdict:
    """Full kernel for cluster editing or deletion, or a no-instance."""
    if mode not in ("editing", "deletion"):
        raise ValueError(f"unknown mode {mode!r}")
    if k < 0:
        raise ValueError("k must be non-negative")
    meter = meter if meter is not None else SpaceMeter()
    stats = {"problem": "ce" if mode == "editing" else "cd", "rounds": 0,
             "forced": 0}
    log = ModificationLog(meter)
    triples: list[tuple[int, int, int]] = []
    limit = (k + 1) * (k + 1)

    while True:
        stats["rounds"] += 1
        counters = scan_conflicts(g, log, meter=meter)
        vg = VirtualGraph(g, log)
        if mode == "deletion":
            bad = [p for p, c in counters.absent.items() if c >= k + 1]
            if bad:
                meter.release(counters.words)
                return NoInstance(
                    f"missing pair {min(bad)} forced in deletion mode", stats=stats)
            candidates = [p for p, c in counters.present.items() if c >= k + 1]
        else:
            candidates = [p for p, c in counters.present.items() if c >= k + 1]
            candidates += [p for p, c in counters.absent.items() if c >= k + 1]
        if not candidates:
            # stable: every solvable instance confines its conflicts to at
            # most k(k+2) < (k+1)^2 vertices
            touched = set()
            for a, b in counters.nonzero_pairs():
                touched.add(a)
                touched.add(b)
            if len(touched) > limit:
                meter.release(counters.words)
                return NoInstance(
                    f"{len(touched)} conflict vertices exceed {limit}", stats=stats)
            break
        if len(log) == k:
            meter.release(counters.words)
            return NoInstance("still forcing changes after k modifications",
                              stats=stats)
        pair = min(candidates)
        for t in _witness_triples(vg, pair, k + 1):
            triples.append(t)
            meter.charge(3)
        kind = "del" if vg.has_edge(*pair) else "add"
        log.apply(kind, *pair)
        stats["forced"] += 1
        meter.release(counters.words)

    # stable: kernel is the virtual graph induced on conflict vertices,
    # augmented with the recorded witness-triple vertices
    vg = VirtualGraph(g, log)
    core = set()
    for a, b in counters.nonzero_pairs():
        core.add(a)
        core.add(b)
    stats["core_vertices"] = len(core)
    full = set(core)
    for a, c, b in triples:
        full.update((a, c, b))

    kernel = KernelGraph(meter)
    for v in sorted(full):
        kernel.add_vertex(v)
    order = sorted(full)
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if vg.has_edge(u, v):
                kernel.add_edge(u, v)

    meter.release(counters.words)
    mods = tuple((kind, u, v) for kind, u, v in log.entries)
    stats["kernel_n"] = kernel.vertex_count
    stats["kernel_m"] = kernel.edge_count
    stats["peak_words"] = meter.peak
    return Kernel(kernel, k - len(log), mods=mods, triples=tuple(triples),
                  stats=stats)
