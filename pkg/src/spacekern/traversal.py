"""Constant-extra-word tree walking and back-edge detection.

The walk keeps only (root, current, previous): from the current vertex it
moves to the neighbor cyclically after the previous one in ascending
adjacency order.  On directed edges this successor map is a permutation, so
the raw walk always terminates back at the root.  Discovery checks are
answered by replaying the walk from the start, never by marking vertices.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


@dataclass(frozen=True)
class WalkCursor:
    root: int
    current: int
    previous: Optional[int] = None


@dataclass
class ProbeCounter:
    """Optional instrumentation: tour steps and discovery re-walk steps."""

    steps: int = 0
    replay_steps: int = 0
    probes: int = 0


def walk_start(view, root: int) -> WalkCursor:
    view.neighbors(root)  # raises if root is excluded
    return WalkCursor(root, root, None)


def walk_step(view, cursor: WalkCursor) -> Optional[WalkCursor]:
    """Advance the Euler tour by one edge; None means the tour is done.

    Precondition: the component of the root is a tree.  The tour reports
    every component vertex at least once and takes exactly 2*(edges) steps.
    """
    ns = view.neighbors(cursor.current)
    if cursor.previous is None:
        if not ns:
            return None  # degenerate single-vertex component
        return WalkCursor(cursor.root, ns[0], cursor.current)
    i = bisect_right(ns, cursor.previous)
    if cursor.current == cursor.root and i == len(ns):
        return None  # successor wraps to the first neighbor: tour complete
    return WalkCursor(cursor.root, ns[i % len(ns)], cursor.current)


def walk_vertices(view, root: int) -> Iterator[int]:
    """Yield the visit sequence of the Euler tour from root (root first)."""
    cursor = walk_start(view, root)
    yield cursor.current
    while True:
        cursor = walk_step(view, cursor)
        if cursor is None:
            return
        yield cursor.current


def _tour_arrivals(view, root: int) -> Iterator[tuple[int, int]]:
    """Yield (from, to) pairs of the raw successor walk from root.

    Never errors on cyclic components: the successor map permutes directed
    edges, so the walk returns to the root and wraps after finitely many
    steps whether or not the component is a tree.
    """
    prev, cur = None, root
    while True:
        ns = view.neighbors(cur)
        if prev is None:
            if not ns:
                return
            nxt = ns[0]
        else:
            i = bisect_right(ns, prev)
            if cur == root and i == len(ns):
                return
            nxt = ns[i % len(ns)]
        yield (cur, nxt)
        prev, cur = cur, nxt


def find_back_edge(view, r: int, counter: Optional[ProbeCounter] = None):
    """Return None iff the component of r is acyclic, else a cycle-closing edge.

    Each arrival is classified with O(1) extra words by re-walking the tour
    prefix ("was this vertex discovered before", "which vertex first reached
    the one we came from").  Until the first back edge every walked edge is
    a tree edge, so at most 2(n-1) steps happen before detection.
    """
    view.neighbors(r)  # raises if r excluded
    if counter is not None:
        counter.probes += 1

    last_left = None  # edge most recently used to leave r
    t = 0
    for u, v in _tour_arrivals(view, r):
        t += 1
        if counter is not None:
            counter.steps += 1
        if u == r:
            last_left = v
        if v == r:
            # returning to the root along any edge other than the one
            # last used to leave it closes a cycle
            if last_left != u:
                return (min(u, v), max(u, v))
            continue
        seen_v = False
        parent_u = r if u == r else None
        tt = 0
        for a, b in _tour_arrivals(view, r):
            tt += 1
            if tt >= t:
                break
            if counter is not None:
                counter.replay_steps += 1
            if b == v:
                seen_v = True
            if parent_u is None and b == u:
                parent_u = a
        if seen_v and v != parent_u:
            return (min(u, v), max(u, v))
    return None


def component_is_tree(view, r: int) -> bool:
    return find_back_edge(view, r) is None


def first_visits(view, root: int) -> Iterator[int]:
    """Yield each component vertex once, in discovery order.

    First-visit detection replays the tour prefix.  The component must be a
    tree (caller-certified), so the tour terminates after 2*(edges) steps.
    """
    yield root
    t = 0
    for u, v in _tour_arrivals(view, root):
        t += 1
        if v == root:
            continue
        fresh = True
        tt = 0
        for a, b in _tour_arrivals(view, root):
            tt += 1
            if tt >= t:
                break
            if b == v:
                fresh = False
                break
        if fresh:
            yield v


def subtree_touches(view, parent: Optional[int], child: int,
                    targets: Iterable[int],
                    counter: Optional[ProbeCounter] = None) -> int:
    """Count (subtree vertex, target) adjacency incidences in the base graph.

    The subtree is the maximal tree below `child` away from `parent` (the
    whole component when parent is None).  Each vertex/target pair counts
    once; adjacency is tested in the base graph, so excluded targets count.
    """
    tset = frozenset(targets)
    if not tset:
        return 0
    sub = view.with_also((parent,)) if parent is not None else view
    base = view.base
    total = 0
    for w in first_visits(sub, child):
        if counter is not None:
            counter.steps += 1
        for target in tset:
            if base.has_edge(w, target):
                total += 1
    return total


def tour_reaches(view, root: int, watch, skip=None) -> bool:
    """True if the raw successor walk from root visits a vertex satisfying
    `watch`, other than `skip`.  Positive answers are sound on any component;
    a negative answer is complete only when the component is a tree (a
    certified tree tour provably visits the whole component)."""
    if root != skip and watch(root):
        return True
    for _, v in _tour_arrivals(view, root):
        if v != skip and watch(v):
            return True
    return False
