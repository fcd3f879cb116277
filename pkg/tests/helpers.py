"""Shared test oracles, independent of the library's algorithm paths.

Everything here uses conventional marked traversals and literal rule
application; nothing calls into the kernelization code it is used to check.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

import networkx as nx

from spacekern.graphcore import StaticGraph


# -- canonical graph corpora -------------------------------------------------

_KNOWN_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
_KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

_atlas_cache: dict[int, dict[int, list]] = {}


def _certificate(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    tri = {v: 0 for v in range(n)}
    for u, v in edges:
        tri_uv = len(adj[u] & adj[v])
        tri[u] += tri_uv
        tri[v] += tri_uv
    profile = sorted(
        (len(adj[v]), tri[v], tuple(sorted(len(adj[u]) for u in adj[v])))
        for v in range(n)
    )
    return (n, len(edges), tuple(profile))


def _nx_graph(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def graph_atlas(max_n: int) -> dict[int, list[frozenset]]:
    """All graphs on 1..max_n vertices up to isomorphism, as edge frozensets.

    Built by extending each (n-1)-vertex graph with every neighborhood of a
    new vertex and deduplicating by certificate bucket + exact isomorphism.
    Counts are asserted against the known sequence.
    """
    if max_n in _atlas_cache:
        return _atlas_cache[max_n]
    levels: dict[int, list[frozenset]] = {1: [frozenset()]}
    for n in range(2, max_n + 1):
        buckets: dict = {}
        for smaller in levels[n - 1]:
            for mask in range(2 ** (n - 1)):
                edges = set(smaller)
                for j in range(n - 1):
                    if mask >> j & 1:
                        edges.add((j, n - 1))
                cand = frozenset(edges)
                cert = _certificate(n, cand)
                bucket = buckets.setdefault(cert, [])
                if not any(
                    nx.is_isomorphic(_nx_graph(n, cand), _nx_graph(n, other))
                    for other in bucket
                ):
                    bucket.append(cand)
        levels[n] = [g for bucket in buckets.values() for g in bucket]
        assert len(levels[n]) == _KNOWN_ALL[n], (n, len(levels[n]))
    _atlas_cache[max_n] = levels
    return levels


def connected_graphs_upto(max_n: int) -> list[StaticGraph]:
    """Connected graphs on 1..max_n vertices, one per isomorphism class."""
    out = []
    for n, gs in graph_atlas(max_n).items():
        for edges in gs:
            if _is_connected(n, edges):
                out.append(StaticGraph(n, sorted(edges)))
    expected = sum(_KNOWN_CONNECTED[i] for i in range(1, max_n + 1))
    assert len(out) == expected, (len(out), expected)
    return out


def all_graphs_upto(max_n: int) -> list[StaticGraph]:
    out = []
    for n, gs in graph_atlas(max_n).items():
        for edges in gs:
            out.append(StaticGraph(n, sorted(edges)))
    return out


def _is_connected(n, edges):
    if n <= 1:
        return True
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


# -- conventional marked traversals ------------------------------------------


def marked_component(view, root) -> set:
    """Vertex set of root's component under the view, by marked DFS."""
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in view.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def component_edge_count(view, comp: set) -> int:
    return sum(len(view.neighbors(v)) for v in comp) // 2


def component_is_acyclic(view, root) -> bool:
    comp = marked_component(view, root)
    return component_edge_count(view, comp) == len(comp) - 1


def enumerate_simple_cycles(n, edges) -> list[frozenset]:
    """All simple cycles (as edge sets) of a small graph, by brute force."""
    g = _nx_graph(n, edges)
    cycles = []
    for cyc in nx.simple_cycles(g):
        if len(cyc) >= 3:
            es = set()
            for i in range(len(cyc)):
                a, b = cyc[i], cyc[(i + 1) % len(cyc)]
                es.add((min(a, b), max(a, b)))
            cycles.append(frozenset(es))
    return cycles


# -- literal reduction-rule fixpoint -----------------------------------------


def materialize_reduction(g: StaticGraph, excluded=()):
    """Apply the degree-<=1 deletion and degree-2 suppression rules to an
    adjacency-multiset copy of G[V \\ excluded] until fixpoint.

    Degree-2 suppression always removes the largest-id candidate, so a pure
    degree-2 cycle canonically collapses onto its smallest vertex.  Returns
    (vertices, loops Counter, edge multiplicity Counter keyed (u<v)).
    """
    ex = set(excluded)
    verts = set(range(g.n)) - ex
    mult: Counter = Counter()
    loops: Counter = Counter()
    for u, v in g.edges():
        if u not in ex and v not in ex:
            mult[(u, v)] += 1

    def degree(v):
        d = 2 * loops[v]
        for (a, b), c in mult.items():
            if a == v or b == v:
                d += c
        return d

    def incident(v):
        return [((a, b), c) for (a, b), c in mult.items() if a == v or b == v]

    while True:
        removable = [v for v in verts if degree(v) <= 1]
        if removable:
            v = removable[0]
            verts.discard(v)
            for key, _c in incident(v):
                del mult[key]
            loops.pop(v, None)
            continue
        suppressible = [
            v for v in verts
            if loops[v] == 0 and degree(v) == 2
        ]
        if not suppressible:
            break
        v = max(suppressible)
        ends = []
        for (a, b), c in incident(v):
            other = b if a == v else a
            ends.extend([other] * c)
        assert len(ends) == 2, (v, ends)
        for key, _c in incident(v):
            del mult[key]
        verts.discard(v)
        u, w = ends
        if u == w:
            loops[u] += 1
        else:
            mult[(min(u, w), max(u, w))] += 1
    loops = Counter({v: c for v, c in loops.items() if c})
    mult = Counter({k: c for k, c in mult.items() if c})
    return verts, loops, mult


# -- random instances ---------------------------------------------------------


def random_graph(rng: random.Random, n: int, extra_edges: int) -> StaticGraph:
    """Random tree plus extra edges (possibly disconnected if n tiny)."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for p in pairs:
        if extra_edges <= 0:
            break
        if p not in edges:
            edges.add(p)
            extra_edges -= 1
    return StaticGraph(n, sorted(edges))


def random_forest(rng: random.Random, n: int, drop: int) -> StaticGraph:
    """Random tree with `drop` edges removed (a forest)."""
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    rng.shuffle(edges)
    return StaticGraph(n, sorted(edges[max(0, drop):]))
