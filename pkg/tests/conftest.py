"""Shared graph builders, independent brute-force oracles, and strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from genrig.graph import Graph


def build(n: int, edges) -> Graph:
    return Graph(n, frozenset(edges))


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    return build(n, [(0, i) for i in range(1, n)])


def complete_minus_edge(n: int) -> Graph:
    g = complete(n)
    return g.with_edges_removed([(0, 1)])


def prism() -> Graph:
    # Two triangles joined by a perfect matching.
    return build(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def two_k4_bridge() -> Graph:
    # Two disjoint K4s joined by one edge.
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(i, j) for i in range(4, 8) for j in range(i + 1, 8)]
    edges.append((0, 4))
    return build(8, edges)


def k4_with_two_path() -> Graph:
    # K4 plus a path 0-4-1 through a new degree-2 vertex.
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(0, 4), (1, 4)]
    return build(5, edges)


def wheel(n: int) -> Graph:
    # Hub 0 joined to an (n-1)-cycle.
    rim = list(range(1, n))
    edges = [(0, v) for v in rim]
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return build(n, edges)


def k33() -> Graph:
    return build(6, [(i, j) for i in range(3) for j in range(3, 6)])


def random_gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return build(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


# ---------------------------------------------------------------------------
# Independent brute-force oracles (no library graph code involved)


def brute_component_count(n: int, edges) -> int:
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    comps = 0
    for v in range(n):
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return comps


def brute_bridges(n: int, edges) -> list[tuple[int, int]]:
    edges = sorted(edges)
    base = brute_component_count(n, edges)
    return [
        e
        for e in edges
        if brute_component_count(n, [x for x in edges if x != e]) == base + 1
    ]


def brute_two_cuts(n: int, edges) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    edges = sorted(edges)
    base = brute_component_count(n, edges)
    bridges = set(brute_bridges(n, edges))
    out = []
    for ai, e1 in enumerate(edges):
        if e1 in bridges:
            continue
        for e2 in edges[ai + 1 :]:
            if e2 in bridges:
                continue
            rest = [x for x in edges if x not in (e1, e2)]
            if brute_component_count(n, rest) == base + 1:
                out.append((e1, e2))
    return out


# ---------------------------------------------------------------------------
# Hypothesis strategies


@st.composite
def graphs(draw, min_vertices: int = 2, max_vertices: int = 8):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return build(n, edges)


@st.composite
def connected_graphs(draw, min_vertices: int = 2, max_vertices: int = 8):
    n = draw(st.integers(min_vertices, max_vertices))
    tree = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    extra = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return build(n, tree | extra)
