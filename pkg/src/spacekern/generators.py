"""Deterministic test-instance families.

All randomness comes from Python's random.Random (Mersenne Twister,
MT19937) seeded with the caller's integer, so corpora reproduce exactly
across machines and runs.
"""

from __future__ import annotations

import random

from .graphcore import StaticGraph


def cycle_with_chords(n: int, chords: int = 1, seed: int = 0) -> StaticGraph:
    """A long cycle 0..n-1 plus `chords` random non-cycle chords."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % n) for i in range(n)]
    present = {(min(u, v), max(u, v)) for u, v in edges}
    added = 0
    while added < chords:
        u = rng.randrange(n)
        v = rng.randrange(n)
        key = (min(u, v), max(u, v))
        if u == v or key in present:
            continue
        present.add(key)
        edges.append(key)
        added += 1
    return StaticGraph(n, edges)


def random_tree_with_feedback(n: int, extra: int = 0, seed: int = 0) -> StaticGraph:
    """A uniform random tree plus `extra` feedback edges."""
    if n < 1:
        raise ValueError("tree needs at least 1 vertex")
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    present = {(min(u, v), max(u, v)) for u, v in edges}
    added = 0
    limit = n * (n - 1) // 2
    while added < extra and len(present) < limit:
        u = rng.randrange(n)
        v = rng.randrange(n)
        key = (min(u, v), max(u, v))
        if u == v or key in present:
            continue
        present.add(key)
        edges.append(key)
        added += 1
    return StaticGraph(n, edges)


def cluster_with_conflicts(n: int, clique_size: int = 4, planted: int = 1,
                           seed: int = 0) -> StaticGraph:
    """Disjoint cliques of `clique_size` (last one smaller if needed) plus
    `planted` random edges between different cliques."""
    if n < 1:
        raise ValueError("cluster graph needs at least 1 vertex")
    clique_size = max(1, clique_size)
    rng = random.Random(seed)
    edges = []
    clique_of = {}
    for start in range(0, n, clique_size):
        members = range(start, min(start + clique_size, n))
        for v in members:
            clique_of[v] = start
        for i in members:
            for j in members:
                if i < j:
                    edges.append((i, j))
    present = set(edges)
    added = 0
    attempts = 0
    while added < planted and attempts < 100 * planted + 100:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        key = (min(u, v), max(u, v))
        if u == v or key in present or clique_of[u] == clique_of[v]:
            continue
        present.add(key)
        edges.append(key)
        added += 1
    return StaticGraph(n, edges)


FAMILIES = {
    "cycle-chord": lambda n, p, seed: cycle_with_chords(n, chords=p, seed=seed),
    "tree-feedback": lambda n, p, seed: random_tree_with_feedback(n, extra=p, seed=seed),
    "cluster-conflict": lambda n, p, seed: cluster_with_conflicts(n, planted=p, seed=seed),
}
