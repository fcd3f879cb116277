"""Read-only input graphs, exclusion views, mutable kernel multigraphs, and the word meter.

The input graph is immutable once loaded; every mutable structure an algorithm
allocates is charged against a SpaceMeter in whole words (one word per stored
vertex id, counter, or adjacency entry).
"""

from __future__ import annotations

import warnings
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class GraphFormatError(ValueError):
    """Raised for malformed graph documents."""


class MeterUnderflowError(RuntimeError):
    """Raised when a meter release would drive the current word count negative."""


class GraphWarning(UserWarning):
    """Non-fatal input anomalies (duplicate edges)."""


class SpaceMeter:
    """Accountant for mutable working-memory words.

    Tracked structures call charge/release as they grow and shrink; `peak`
    is the high-water mark over the run.  The optional trace keeps a bounded
    sample of (event index, current words) points for plotting.
    """

    __slots__ = ("current", "peak", "_events", "_trace", "_stride")

    def __init__(self, trace: bool = False):
        self.current = 0
        self.peak = 0
        self._events = 0
        self._trace = [] if trace else None
        self._stride = 1

    def charge(self, delta: int) -> None:
        new = self.current + delta
        if new < 0:
            raise MeterUnderflowError(
                f"meter would go negative: {self.current} + {delta}"
            )
        self.current = new
        if new > self.peak:
            self.peak = new
        if self._trace is not None:
            self._events += 1
            if self._events % self._stride == 0:
                self._trace.append((self._events, self.current))
                if len(self._trace) >= 4096:
                    # halve resolution to keep the trace bounded
                    self._trace = self._trace[::2]
                    self._stride *= 2

    def release(self, amount: int) -> None:
        self.charge(-amount)

    @property
    def trace(self):
        return list(self._trace) if self._trace is not None else []

    def __repr__(self):
        return f"SpaceMeter(current={self.current}, peak={self.peak})"


def _null_meter() -> SpaceMeter:
    return SpaceMeter()


class StaticGraph:
    """Immutable simple undirected graph with sorted adjacency.

    Vertices are 0..n-1.  This is the read-only input memory: it is never
    charged against any meter and is safe to share between runs.
    """

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u} not allowed")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                warnings.warn(f"duplicate edge {key} ignored", GraphWarning)
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        self.n = n
        self.m = m
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def base(self) -> "StaticGraph":
        return self

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self._adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def __repr__(self):
        return f"StaticGraph(n={self.n}, m={self.m})"


class ExclusionView:
    """Virtual induced subgraph G[V \\ excluded], realized by filtering on the fly."""

    __slots__ = ("base", "excluded", "_exset")

    def __init__(self, base: StaticGraph, excluded: Iterable[int] = ()):
        self.base = base
        self._exset = frozenset(excluded)
        self.excluded = tuple(sorted(self._exset))

    def _check(self, v: int) -> None:
        if v in self._exset:
            raise ValueError(f"vertex {v} is excluded from this view")

    def is_excluded(self, v: int) -> bool:
        return v in self._exset

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        ex = self._exset
        if not ex:
            return self.base.neighbors(v)
        return tuple(u for u in self.base.neighbors(v) if u not in ex)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def vertices(self) -> Iterator[int]:
        ex = self._exset
        return (v for v in range(self.base.n) if v not in ex)

    def with_also(self, extra: Iterable[int]) -> "ExclusionView":
        return ExclusionView(self.base, self._exset.union(extra))

    def __repr__(self):
        return f"ExclusionView(n={self.base.n}, excluded={self.excluded})"


def view_neighbors(view: ExclusionView, v: int) -> tuple[int, ...]:
    """Ascending neighbors of v under the view; error if v is excluded."""
    return view.neighbors(v)


def meter_charge(meter: SpaceMeter, delta: int) -> SpaceMeter:
    """Apply a signed word delta to the meter and return it."""
    meter.charge(delta)
    return meter


class KernelGraph:
    """Mutable multigraph built as the output kernel.

    Vertices keep their original ids.  Parallel edges are stored as
    multiplicity counters, self-loops as per-vertex loop counters.  Every
    stored id is charged one word against the meter.
    """

    def __init__(self, meter: Optional[SpaceMeter] = None):
        self._meter = meter if meter is not None else _null_meter()
        self._adj: dict[int, dict[int, int]] = {}
        self._loops: dict[int, int] = {}

    # -- queries ---------------------------------------------------------

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return self._loops.get(u, 0) > 0
        return v in self._adj.get(u, ())

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return self._loops.get(u, 0)
        return self._adj.get(u, {}).get(v, 0)

    def loop_count(self, v: int) -> int:
        return self._loops.get(v, 0)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        """Exact edge count including multiplicities and loops."""
        half = sum(sum(mult.values()) for mult in self._adj.values())
        return half // 2 + sum(self._loops.values())

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def neighbors(self, v: int) -> list[int]:
        """Ascending neighbors of v with multiplicity, loops reported as v itself."""
        out = []
        for u in sorted(self._adj[v]):
            out.extend([u] * self._adj[v][u])
        out.extend([v] * self._loops.get(v, 0))
        return sorted(out)

    def degree(self, v: int) -> int:
        """Degree with multiplicities, loops counting twice."""
        return sum(self._adj[v].values()) + 2 * self._loops.get(v, 0)

    def edge_multiset(self) -> list[tuple[int, int]]:
        """Sorted edge list with repetition; loops appear as (v, v)."""
        out = []
        for u, mult in self._adj.items():
            for v, c in mult.items():
                if u < v:
                    out.extend([(u, v)] * c)
        for v, c in self._loops.items():
            out.extend([(v, v)] * c)
        out.sort()
        return out

    # -- mutation --------------------------------------------------------

    def add_vertex(self, v: int) -> None:
        if v not in self._adj:
            self._adj[v] = {}
            self._meter.charge(1)

    def add_edge(self, u: int, v: int) -> None:
        self.add_vertex(u)
        if u == v:
            self._loops[u] = self._loops.get(u, 0) + 1
            if self._loops[u] == 1:
                self._meter.charge(1)
            return
        self.add_vertex(v)
        au, av = self._adj[u], self._adj[v]
        if v in au:
            au[v] += 1
            av[u] += 1
        else:
            au[v] = 1
            av[u] = 1
            self._meter.charge(2)

    def add_edge_if_absent(self, u: int, v: int) -> bool:
        if self.has_edge(u, v):
            return False
        self.add_edge(u, v)
        return True

    def remove_edge(self, u: int, v: int) -> None:
        if u == v:
            c = self._loops.get(u, 0)
            if c == 0:
                raise KeyError(f"no loop at {u}")
            if c == 1:
                del self._loops[u]
                self._meter.release(1)
            else:
                self._loops[u] = c - 1
            return
        c = self._adj[u].get(v, 0)
        if c == 0:
            raise KeyError(f"no edge ({u}, {v})")
        if c == 1:
            del self._adj[u][v]
            del self._adj[v][u]
            self._meter.release(2)
        else:
            self._adj[u][v] = c - 1
            self._adj[v][u] = c - 1

    def remove_vertex(self, v: int) -> None:
        """Remove v and all incident edges (refunding their words)."""
        for u in list(self._adj[v]):
            while self.has_edge(v, u):
                self.remove_edge(v, u)
        while self._loops.get(v, 0):
            self.remove_edge(v, v)
        del self._adj[v]
        self._meter.release(1)

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        lines = [f"p {self.vertex_count} {self.edge_count}"]
        for v in self.vertices():
            lines.append(f"v {v}")
        for u, v in self.edge_multiset():
            if u == v:
                lines.append(f"l {u}")
            else:
                lines.append(f"e {u} {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, meter: Optional[SpaceMeter] = None) -> "KernelGraph":
        doc = parse_graph_text(text)
        g = cls(meter)
        for v in doc.vertices:
            g.add_vertex(v)
        for u, v in doc.edges:
            g.add_edge(u, v)
        for v in doc.loops:
            g.add_edge(v, v)
        return g

    def __repr__(self):
        return f"KernelGraph(n={self.vertex_count}, m={self.edge_count})"


# -- verdicts -------------------------------------------------------------


@dataclass(frozen=True)
class Kernel:
    """Successful kernelization outcome: an equivalent instance (graph, k)."""

    graph: KernelGraph
    k: int
    chains: tuple = ()          # path-contraction chain correspondence records
    mods: tuple = ()            # cluster forced modifications (kind, u, v)
    triples: tuple = ()         # cluster witness triples (a, center, b)
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NoInstance:
    """Certified answer that no solution of size <= k exists."""

    reason: str = ""
    stats: dict = field(default_factory=dict)


Verdict = Kernel | NoInstance


# -- text format ----------------------------------------------------------


@dataclass
class GraphDocument:
    n: int
    m: int
    vertices: list[int]     # explicit "v" declarations (kernel files); empty for inputs
    edges: list[tuple[int, int]]
    loops: list[int]


def parse_graph_text(text: str) -> GraphDocument:
    """Parse the edge-list format: 'p n m' header, 'e u v' lines, optional
    'v id' vertex declarations and 'l v' loop lines, '#' comments."""
    n = m = None
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    loops: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "p":
                if n is not None:
                    raise GraphFormatError(f"line {lineno}: repeated header")
                n, m = int(parts[1]), int(parts[2])
            elif tag == "e":
                edges.append((int(parts[1]), int(parts[2])))
            elif tag == "v":
                vertices.append(int(parts[1]))
            elif tag == "l":
                loops.append(int(parts[1]))
            else:
                raise GraphFormatError(f"line {lineno}: unknown line tag {tag!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: malformed line {line!r}") from exc
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    return GraphDocument(n=n, m=m, vertices=vertices, edges=edges, loops=loops)


def load_graph(text: str) -> StaticGraph:
    """Load a simple-graph input document into a StaticGraph.

    Duplicate edges are tolerated with a warning; self-loops and out-of-range
    ids are errors.
    """
    doc = parse_graph_text(text)
    if doc.loops:
        raise GraphFormatError(f"self-loop at vertex {doc.loops[0]} not allowed")
    if doc.vertices:
        raise GraphFormatError("input graphs may not carry 'v' declarations")
    return StaticGraph(doc.n, doc.edges)


def dump_graph(g: StaticGraph) -> str:
    lines = [f"p {g.n} {g.m}"]
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
