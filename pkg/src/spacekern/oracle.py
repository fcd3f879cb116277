"""Deliberately naive exact solvers used as ground truth.

Everything here enumerates subsets and tests definitions directly; none of
it shares code with the kernelization paths it validates.  Desk-scale caps
guard against accidental use on large instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

PC_EDGE_CAP = 25
FVS_VERTEX_CAP = 20
CE_VERTEX_CAP = 7
CD_VERTEX_CAP = 9


class OracleScaleError(ValueError):
    """Instance exceeds the desk-scale cap of a brute-force solver."""


@dataclass(frozen=True)
class SolutionSet:
    problem: str
    minimal: tuple[frozenset, ...]  # inclusion-minimal solutions of size <= k

    @property
    def feasible(self) -> bool:
        return bool(self.minimal)


def _minimal_only(solutions):
    """Drop every solution that strictly contains another solution."""
    sols = sorted(set(solutions), key=len)
    out = []
    for s in sols:
        if not any(t < s for t in out):
            out.append(s)
    return tuple(out)


# -- shared multigraph helpers ---------------------------------------------


def _as_multigraph(graph):
    """Normalize input to (vertices, edge multiset Counter-style dict).

    Accepts StaticGraph, KernelGraph, or (n, edges) with edges possibly
    repeated and possibly containing loops (u, u).
    """
    from .graphcore import KernelGraph, StaticGraph

    if isinstance(graph, StaticGraph):
        verts = set(range(graph.n))
        edges = {}
        for e in graph.edges():
            edges[e] = edges.get(e, 0) + 1
        return verts, edges
    if isinstance(graph, KernelGraph):
        verts = set(graph.vertices())
        edges = {}
        for e in graph.edge_multiset():
            edges[e] = edges.get(e, 0) + 1
        return verts, edges
    n, edge_list = graph
    verts = set(range(n))
    edges = {}
    for u, v in edge_list:
        key = (u, v) if u <= v else (v, u)
        edges[key] = edges.get(key, 0) + 1
    return verts, edges


def _is_acyclic(verts, edges) -> bool:
    """Multigraph acyclicity: loops and parallel edges are cycles."""
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v), mult in edges.items():
        if u == v or mult >= 2:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# -- path contraction -------------------------------------------------------


def _contract(verts, edges, contracted):
    """Contract the chosen edges, then drop loops and parallel edges."""
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in contracted:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    new_verts = {find(v) for v in verts}
    new_edges = set()
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            new_edges.add((ru, rv) if ru < rv else (rv, ru))
    return new_verts, new_edges


def _is_path(verts, edges) -> bool:
    """Simple path test: connected, m = n - 1, max degree 2."""
    if len(verts) <= 1:
        return True
    if len(edges) != len(verts) - 1:
        return False
    deg = {v: 0 for v in verts}
    adj = {v: [] for v in verts}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    if any(d > 2 for d in deg.values()):
        return False
    start = next(iter(verts))
    stack, seen = [start], {start}
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


def exact_path_contraction(graph, k: int):
    """Exhaustive search over edge subsets of size <= k for a contraction
    to a path.  Returns (yes, SolutionSet of minimal solutions)."""
    verts, edges = _as_multigraph(graph)
    if any(u == v for u, v in edges):
        raise OracleScaleError("path contraction is undefined on graphs with loops")
    distinct = sorted(edges)
    if len(distinct) > PC_EDGE_CAP:
        raise OracleScaleError(f"{len(distinct)} edges exceeds desk cap {PC_EDGE_CAP}")
    found = []
    for size in range(0, k + 1):
        for combo in combinations(distinct, size):
            nv, ne = _contract(verts, edges, combo)
            if _is_path(nv, ne):
                found.append(frozenset(combo))
    minimal = _minimal_only(found)
    return bool(found), SolutionSet("path-contraction", minimal)


# -- feedback vertex set ------------------------------------------------------


def exact_fvs(graph, k: int):
    """Exhaustive search over vertex subsets of size <= k whose removal
    leaves an acyclic multigraph."""
    verts, edges = _as_multigraph(graph)
    if len(verts) > FVS_VERTEX_CAP:
        raise OracleScaleError(f"{len(verts)} vertices exceeds desk cap {FVS_VERTEX_CAP}")
    order = sorted(verts)
    found = []
    for size in range(0, k + 1):
        for combo in combinations(order, size):
            s = set(combo)
            rv = verts - s
            re = {e: m for e, m in edges.items() if e[0] not in s and e[1] not in s}
            if _is_acyclic(rv, re):
                found.append(frozenset(combo))
    minimal = _minimal_only(found)
    return bool(found), SolutionSet("feedback-vertex-set", minimal)


# -- cluster editing / deletion ----------------------------------------------


def _is_cluster_graph(n_verts, adj) -> bool:
    """Every connected component is a clique."""
    seen = set()
    for v in n_verts:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        inner = sum(1 for x in comp for y in adj[x] if y in comp) // 2
        c = len(comp)
        if inner != c * (c - 1) // 2:
            return False
    return True


def exact_cluster(graph, k: int, mode: str = "editing"):
    """Exhaustive search over modification sets of size <= k (deletions only
    in deletion mode) turning the graph into disjoint cliques.  Solutions
    are frozensets of vertex pairs; a pair present in G means deletion."""
    if mode not in ("editing", "deletion"):
        raise ValueError(f"unknown mode {mode!r}")
    verts, edges = _as_multigraph(graph)
    if any(u == v or m > 1 for (u, v), m in edges.items()):
        raise OracleScaleError("cluster oracle accepts simple graphs only")
    cap = CE_VERTEX_CAP if mode == "editing" else CD_VERTEX_CAP
    if len(verts) > cap:
        raise OracleScaleError(f"{len(verts)} vertices exceeds desk cap {cap}")
    order = sorted(verts)
    present = set(edges)
    if mode == "editing":
        universe = [tuple(p) for p in combinations(order, 2)]
    else:
        universe = sorted(present)
    found = []
    for size in range(0, k + 1):
        for combo in combinations(universe, size):
            adj = {v: set() for v in order}
            mods = set(combo)
            for p in present:
                if p not in mods:
                    adj[p[0]].add(p[1])
                    adj[p[1]].add(p[0])
            for p in mods:
                if p not in present:
                    adj[p[0]].add(p[1])
                    adj[p[1]].add(p[0])
            if _is_cluster_graph(order, adj):
                found.append(frozenset(combo))
    minimal = _minimal_only(found)
    return bool(found), SolutionSet(f"cluster-{mode}", minimal)
