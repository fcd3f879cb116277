"""On-demand enumeration of the graph left by exhaustively deleting
degree-<=1 vertices and suppressing degree-2 vertices, computed per query
without ever materializing it.

Terminology: G1 is the view after exhaustive degree-<=1 deletion, G2 after
additionally suppressing degree-2 chains.  A cycle consisting solely of
degree-2 vertices collapses to a single self-loop at its smallest-id vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphcore import ExclusionView
from .traversal import ProbeCounter, find_back_edge, tour_reaches


@dataclass(frozen=True)
class ReducedNeighborReport:
    """What survives of one vertex after both reduction rules."""

    vertex: int
    in_g1: bool
    deg_g1: int
    neighbors: tuple[int, ...]  # G2 neighbors with multiplicity; vertex itself = loop

    @property
    def in_g2(self) -> bool:
        return bool(self.neighbors)

    @property
    def loops(self) -> int:
        return sum(1 for u in self.neighbors if u == self.vertex)

    @property
    def deg_g2(self) -> int:
        # a loop contributes two edge endpoints
        return len(self.neighbors) + self.loops


def _survives_br1(view: ExclusionView, v: int, u: int,
                  counter: Optional[ProbeCounter] = None) -> bool:
    """Does neighbor u of v survive exhaustive degree-<=1 deletion?

    u hangs on a tree appendage iff its component in the view minus v is
    acyclic and contains no other neighbor of v.  Checking the cheap watch
    first lets most probes exit without the certified back-edge walk; when
    the certified walk finds no back edge, its tour provably visited the
    whole component, so the earlier negative watch was complete.
    """
    probe = view.with_also((v,))
    base = view.base
    if tour_reaches(probe, u, lambda w: base.has_edge(w, v), skip=u):
        return True
    return find_back_edge(probe, u, counter) is not None


def br1_survivor_neighbors(view: ExclusionView, v: int,
                           counter: Optional[ProbeCounter] = None) -> tuple[int, ...]:
    """Ascending neighbors of v that survive exhaustive degree-<=1 deletion."""
    return tuple(u for u in view.neighbors(v) if _survives_br1(view, v, u, counter))


def _chain_walk(view: ExclusionView, v: int, start: int,
                counter: Optional[ProbeCounter] = None):
    """Follow the degree-2 chain of G1 from neighbor `start` of v.

    Returns (endpoint, last_chain_vertex, min_id_seen).  The endpoint is v
    itself (a chain closing back), or a vertex of G1-degree != 2.  When the
    chain is empty (start is already branching) last_chain_vertex is None.
    """
    q_start = br1_survivor_neighbors(view, start, counter)
    if len(q_start) != 2:
        return start, None, start
    prev, cur = v, start
    min_id = min(v, start)
    q_cur = q_start
    while True:
        nxt = q_cur[1] if q_cur[0] == prev else q_cur[0]
        if nxt == v:
            return v, cur, min_id
        q_nxt = br1_survivor_neighbors(view, nxt, counter)
        if len(q_nxt) != 2:
            return nxt, cur, min_id
        min_id = min(min_id, nxt)
        prev, cur, q_cur = cur, nxt, q_nxt


def g2_neighbors(view: ExclusionView, v: int,
                 counter: Optional[ProbeCounter] = None) -> ReducedNeighborReport:
    """Report v's fate and neighborhood in the fully reduced graph.

    Degree-2 survivors appear only in the special case of an all-degree-2
    cycle, which is reported as one self-loop at the cycle's smallest id.
    For branching vertices each G1 edge is followed along its chain to the
    far endpoint; two chains to the same endpoint yield a parallel edge and
    a chain returning to v yields one self-loop.
    """
    q = br1_survivor_neighbors(view, v, counter)
    deg1 = len(q)
    if deg1 <= 1:
        return ReducedNeighborReport(v, False, deg1, ())
    if deg1 == 2:
        end, _last, min_id = _chain_walk(view, v, q[0], counter)
        if end != v:
            # v sits on a chain between branching vertices: suppressed
            return ReducedNeighborReport(v, True, 2, ())
        if min_id == v:
            return ReducedNeighborReport(v, True, 2, (v,))
        return ReducedNeighborReport(v, True, 2, ())
    out = []
    for u in q:
        end, last, _ = _chain_walk(view, v, u, counter)
        if end == v:
            # chain closes back on v; count the loop from its smaller entry
            if u < last:
                out.append(v)
        else:
            out.append(end)
    out.sort()
    return ReducedNeighborReport(v, True, deg1, tuple(out))
