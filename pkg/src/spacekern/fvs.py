"""Approximate feedback vertex set and the tree-shrinking kernelization.

The approximation repeatedly enumerates the on-demand reduced graph of the
current view: a self-loop vertex is forced, otherwise the 3k largest-degree
vertices join the approximation, spending one budget unit per round.  The
kernelization classifies the trees hanging off the approximation, discards
or trims them through six reduction steps (restarting whenever a vertex is
proven to belong to every solution), and rebuilds the survivors into a
mutable kernel.  The approximation burns its own copy of k purely for
no-instance detection; the reduction steps work with the caller's k and
only forced-vertex moves decrement it.
"""

from __future__ import annotations

import heapq
from collections import Counter
from typing import Iterable, Optional

from .graphcore import (
    ExclusionView,
    Kernel,
    KernelGraph,
    NoInstance,
    SpaceMeter,
    StaticGraph,
    Verdict,
)
from .reduced import g2_neighbors
from .traversal import _tour_arrivals, find_back_edge, first_visits, subtree_touches


class ForestViolation(RuntimeError):
    """The view that must be a forest contains a cycle (internal invariant)."""


def approx_fvs(g: StaticGraph, k: int, meter: Optional[SpaceMeter] = None):
    """Feedback vertex set of at most 3k^2 vertices, or NoInstance."""
    if k < 0:
        raise ValueError("k must be non-negative")
    meter = meter if meter is not None else SpaceMeter()
    x: set[int] = set()
    budget = k
    rounds = 0
    while True:
        view = ExclusionView(g, x)
        loop_vertex = None
        # bounded selection buffer: min-heap of the 3*budget largest (deg, -id)
        top: list[tuple[int, int]] = []
        cap = 3 * budget
        empty = True
        for v in view.vertices():
            rep = g2_neighbors(view, v)
            if not rep.in_g2:
                continue
            empty = False
            if rep.loops:
                loop_vertex = v
                break
            if cap > 0:
                entry = (rep.deg_g2, -v)
                if len(top) < cap:
                    heapq.heappush(top, entry)
                    meter.charge(2)
                elif entry > top[0]:
                    heapq.heapreplace(top, entry)
        if empty:
            meter.release(2 * len(top))
            return frozenset(x)
        if loop_vertex is not None:
            x.add(loop_vertex)
            meter.charge(1)
        else:
            for _, neg in top:
                if -neg not in x:
                    x.add(-neg)
                    meter.charge(1)
        meter.release(2 * len(top))
        budget -= 1
        rounds += 1
        if budget < 0:
            return NoInstance("approximation budget exhausted",
                              stats={"rounds": rounds})


# -- tree classification ------------------------------------------------------


class TreeRecord:
    """One tree of the view, summarized by its representative and X touches."""

    __slots__ = ("representative", "touch", "kind")

    def __init__(self, representative: int, touch: Counter, kind: str):
        self.representative = representative
        self.touch = touch
        self.kind = kind

    def __repr__(self):
        return (f"TreeRecord(rep={self.representative}, kind={self.kind},"
                f" touch={dict(self.touch)})")


def _scan_tree(g: StaticGraph, view: ExclusionView, root: int, xset: frozenset):
    """Walk the tree containing root; return (representative, touch multiset).

    The representative is the smallest-id tree vertex adjacent to X; the
    multiset counts, per x in X, how many tree vertices x touches.
    """
    if find_back_edge(view, root) is not None:
        raise ForestViolation(f"component of {root} is not acyclic")
    rep = None
    touch: Counter = Counter()
    for w in first_visits(view, root):
        touched = False
        for u in g.neighbors(w):
            if u in xset:
                touch[u] += 1
                touched = True
        if touched and (rep is None or w < rep):
            rep = w
    return rep, touch


def _kind(touch: Counter) -> str:
    total = sum(touch.values())
    if total <= 1:
        return "T0"
    if max(touch.values()) <= 1:
        return "T1"
    return "T2"


def classify_trees(g: StaticGraph, f: Iterable[int], x: Iterable[int],
                   meter: Optional[SpaceMeter] = None):
    """Yield one TreeRecord per tree of G[V \\ (F u X)] touched by X."""
    xset = frozenset(x)
    view = ExclusionView(g, frozenset(f) | xset)
    seen = set()
    for xi in sorted(xset):
        for w in g.neighbors(xi):
            if view.is_excluded(w):
                continue
            rep, touch = _scan_tree(g, view, w, xset)
            if rep in seen:
                continue
            seen.add(rep)
            yield TreeRecord(rep, touch, _kind(touch))


# -- kernelization ------------------------------------------------------------


class _BoundedRepSet:
    """Keeps the `cap` smallest representative ids inserted (Step 2 choice)."""

    __slots__ = ("cap", "_heap")

    def __init__(self, cap: int):
        self.cap = cap
        self._heap: list[int] = []  # max-heap via negation

    def add(self, rep: int) -> bool:
        if -rep in self._heap:
            return False
        if len(self._heap) < self.cap:
            heapq.heappush(self._heap, -rep)
            return True
        if rep < -self._heap[0]:
            heapq.heapreplace(self._heap, -rep)
        return False  # size unchanged

    def __iter__(self):
        return iter(sorted(-i for i in self._heap))

    def __len__(self):
        return len(self._heap)


class _Maps:
    """One classification pass: M1/M2 and the Step-3 verdict."""

    def __init__(self):
        self.m1: dict[frozenset, _BoundedRepSet] = {}
        self.m2: dict[int, set] = {}
        self.forced = None  # Step 3: x to move into F
        self.words = 0

    def reps(self):
        out = set()
        for b in self.m1.values():
            out.update(b)
        for b in self.m2.values():
            out.update(b)
        return out


def _classify_pass(g, view, xset, kb, meter) -> _Maps:
    maps = _Maps()

    def charge(n):
        maps.words += n
        meter.charge(n)

    for xi in sorted(xset):
        for w in g.neighbors(xi):
            if view.is_excluded(w):
                continue
            rep, touch = _scan_tree(g, view, w, xset)
            kind = _kind(touch)
            if kind == "T0":
                continue  # Step 1: dropped
            if kind == "T1":
                for xo in touch:
                    if xo == xi:
                        continue
                    key = frozenset((xi, xo))
                    bucket = maps.m1.get(key)
                    if bucket is None:
                        bucket = maps.m1[key] = _BoundedRepSet(kb + 2)
                        charge(2)
                    if bucket.add(rep):
                        charge(1)
            elif touch[xi] >= 2:
                bucket = maps.m2.get(xi)
                if bucket is None:
                    bucket = maps.m2[xi] = set()
                    charge(1)
                if rep not in bucket:
                    bucket.add(rep)
                    charge(1)
        if len(maps.m2.get(xi, ())) >= kb + 1:
            maps.forced = xi  # Step 3
            return maps
    return maps


def _first_parent(view, root, v):
    """Parent of v in the tree rooted at root (None for the root itself)."""
    if v == root:
        return None
    for a, b in _tour_arrivals(view, root):
        if b == v:
            return a
    raise ForestViolation(f"{v} not reachable from {root}")


def kernelize_fvs(g: StaticGraph, k: int,
                  meter: Optional[SpaceMeter] = None) -> Verdict:
    """Kernelize (g, k) for feedback vertex set, or certify a no-instance."""
    if k < 0:
        raise ValueError("k must be non-negative")
    meter = meter if meter is not None else SpaceMeter()
    stats = {"problem": "fvs", "restarts": 0, "step3": 0, "step4_pairs": 0,
             "step4_forced": 0, "step5": 0}

    approx = approx_fvs(g, k, meter)
    if isinstance(approx, NoInstance):
        stats["stage"] = "approx"
        return NoInstance(approx.reason, stats=stats)
    x = set(approx)  # words already held by approx_fvs
    stats["approx_x"] = len(x)

    f: set[int] = set()
    kb = k
    pairs: set[frozenset] = set()  # Step 4 pair set Y; persists across restarts

    def force(w):
        nonlocal kb
        if w in x:
            x.discard(w)  # the word moves from X to F
        else:
            meter.charge(1)
        f.add(w)
        kb -= 1
        stats["restarts"] += 1
        stale = {p for p in pairs if w in p}
        if stale:
            meter.release(2 * len(stale))
            pairs.difference_update(stale)

    while True:
        if kb < 0:
            return NoInstance("forced vertices exceed the budget", stats=stats)

        xset = frozenset(x)
        view = ExclusionView(g, frozenset(f) | xset)
        maps = _classify_pass(g, view, xset, kb, meter)
        if maps.forced is not None:
            stats["step3"] += 1
            meter.release(maps.words)
            force(maps.forced)
            continue

        outcome = _steps_4_and_5(g, view, xset, kb, pairs, maps, meter, stats)
        if outcome == "stable":
            verdict = _build_kernel(g, view, xset, f, kb, maps, meter, stats)
            meter.release(maps.words)
            return verdict
        meter.release(maps.words)
        if isinstance(outcome, NoInstance):
            return outcome
        if isinstance(outcome, tuple):
            tag, payload = outcome
            if tag == "force":
                force(payload)
            else:  # buffered Step-4 X additions, applied between scans
                for v in payload:
                    if v not in x:
                        x.add(v)
                        meter.charge(1)
        # reclassify with the updated sets


def _steps_4_and_5(g, view, xset, kb, pairs, maps, meter, stats):
    """Run Steps 4 and 5 on one classification.

    Returns "stable", a NoInstance, ("force", vertex) for an F-move, or
    ("buffer", vertices) for buffered Step-4 X additions.
    """
    x_buffer: list[int] = []
    for xi in sorted(maps.m2):
        for rep in sorted(maps.m2[xi]):
            for v in first_visits(view, rep):
                parent = _first_parent(view, rep, v)
                count = 0
                for c in view.neighbors(v):
                    if c == parent:
                        continue
                    if subtree_touches(view, v, c, (xi,)) >= 1:
                        count += 1
                if count < kb + 1:
                    continue
                pair = frozenset((v, xi))
                if pair not in pairs:
                    pairs.add(pair)
                    meter.charge(2)
                    stats["step4_pairs"] += 1
                    counts = Counter()
                    for p in pairs:
                        counts.update(p)
                    hot = [w for w, c in counts.items() if c >= kb + 1]
                    if hot:
                        stats["step4_forced"] += 1
                        return ("force", min(hot))
                    if len(pairs) >= 2 * kb * kb + kb - 1:
                        return NoInstance("too many forced vertex pairs",
                                          stats=stats)
                if v not in xset and v not in x_buffer:
                    x_buffer.append(v)
    if x_buffer:
        return ("buffer", x_buffer)

    # Step 5: one tree touching the same x at least k(k+1) times
    for xi in sorted(maps.m2):
        for rep in sorted(maps.m2[xi]):
            _, touch = _scan_tree(g, view, rep, xset)
            if touch[xi] >= kb * (kb + 1):
                stats["step5"] += 1
                return ("force", xi)
    return "stable"


def _build_kernel(g, view, xset, f, kb, maps, meter, stats) -> Verdict:
    """Step 6: rebuild surviving trees, suppress, attach X, density check."""
    kernel = KernelGraph(meter)
    keepset = xset | frozenset(f)

    for rep in sorted(maps.reps()):
        kernel.add_vertex(rep)
        for p, c in _tour_arrivals(view, rep):
            if kernel.has_vertex(c) or not kernel.has_vertex(p):
                continue
            if subtree_touches(view, p, c, xset) >= 1:
                kernel.add_vertex(c)
                kernel.add_edge(p, c)

    # suppress internal degree-2 tree vertices not adjacent to X u F
    changed = True
    while changed:
        changed = False
        for v in kernel.vertices():
            if kernel.degree(v) != 2 or kernel.loop_count(v):
                continue
            if any(g.has_edge(v, t) for t in keepset):
                continue
            a, b = kernel.neighbors(v)
            kernel.remove_vertex(v)
            kernel.add_edge(a, b)
            changed = True

    for xv in sorted(xset):
        kernel.add_vertex(xv)
    for xv in sorted(xset):
        for u in g.neighbors(xv):
            if u in xset:
                if u > xv:
                    kernel.add_edge(xv, u)
            elif kernel.has_vertex(u):
                kernel.add_edge(xv, u)

    t1 = set()
    for bucket in maps.m1.values():
        t1.update(bucket)
    t2 = set()
    for bucket in maps.m2.values():
        t2.update(bucket)
    n_k = kernel.vertex_count
    m_k = kernel.edge_count
    stats.update(kernel_n=n_k, kernel_m=m_k, x_final=len(xset),
                 f_final=len(f), trees_kept=len(maps.reps()),
                 trees_t1=len(t1), trees_t2=len(t2))
    if m_k > max(0, n_k - 1) + kb * n_k:
        return NoInstance("kernel density exceeds the solvable bound", stats=stats)
    stats["peak_words"] = meter.peak
    return Kernel(kernel, kb, stats=stats)
