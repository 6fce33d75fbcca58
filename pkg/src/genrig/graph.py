"""Finite simple graphs with stable integer vertex ids.

Vertices are the contiguous integers ``0 .. vertex_count - 1``. Edges are
unordered pairs stored once as ``(min, max)`` tuples. Graph values are
immutable and hashable, so they are safe to share across threads; the
generators in this module are pure functions of their arguments and seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]


class EdgeListError(ValueError):
    """Malformed edge-list text."""


class GenerationError(RuntimeError):
    """A randomized generator exhausted its retry budget."""


def normalize_edge(i: int, j: int) -> Edge:
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph."""

    vertex_count: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        norm = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            e = normalize_edge(i, j)
            if e[0] < 0 or e[1] >= self.vertex_count:
                raise ValueError(
                    f"edge {e} outside vertex range 0..{self.vertex_count - 1}"
                )
            norm.add(e)
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> tuple[Edge, ...]:
        """Edges in canonical lexicographic order on (min id, max id)."""
        return tuple(sorted(self.edges))

    def has_edge(self, i: int, j: int) -> bool:
        return normalize_edge(i, j) in self.edges

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise ValueError(f"invalid vertex id {v}")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        out = [0] * self.vertex_count
        for i, j in self.edges:
            out[i] += 1
            out[j] += 1
        return out

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return tuple(sorted(j if i == v else i for i, j in self.edges if v in (i, j)))

    def adjacency(self) -> list[list[int]]:
        """Sorted adjacency lists indexed by vertex id."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for lst in adj:
            lst.sort()
        return adj

    def incident_edges(self, v: int) -> tuple[Edge, ...]:
        self.check_vertex(v)
        return tuple(sorted(e for e in self.edges if v in e))

    def with_edges_added(self, new: Iterable[Edge]) -> "Graph":
        return Graph(self.vertex_count, self.edges | {normalize_edge(*e) for e in new})

    def with_edges_removed(self, gone: Iterable[Edge]) -> "Graph":
        drop = {normalize_edge(*e) for e in gone}
        missing = drop - self.edges
        if missing:
            raise ValueError(f"edges not present: {sorted(missing)}")
        return Graph(self.vertex_count, self.edges - drop)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Compactly relabeled induced subgraph plus the old-to-new id map."""
    keep = sorted(set(vertices))
    for v in keep:
        g.check_vertex(v)
    relabel = {v: i for i, v in enumerate(keep)}
    edges = {
        (relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel
    }
    return Graph(len(keep), frozenset(edges)), relabel


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Components as sorted vertex tuples, ordered by smallest member."""
    adj = g.adjacency()
    seen = [False] * g.vertex_count
    comps = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def component_count(g: Graph) -> int:
    return len(connected_components(g))


def is_connected(g: Graph) -> bool:
    return component_count(g) <= 1


def nontrivial_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Components that carry at least one edge."""
    touched = set()
    for i, j in g.edges:
        touched.add(i)
        touched.add(j)
    return tuple(c for c in connected_components(g) if any(v in touched for v in c))


def nontrivial_component_count(g: Graph) -> int:
    return len(nontrivial_components(g))


def degree_sum_defect(g: Graph) -> int:
    """Sum of (degree(v) - 2) over all vertices of a connected graph.

    Always at least -2 for connected inputs, with equality exactly on trees.
    """
    if g.vertex_count < 1:
        raise ValueError("graph must have at least one vertex")
    if not is_connected(g):
        raise ValueError("degree_sum_defect requires a connected graph")
    return 2 * g.edge_count - 2 * g.vertex_count


@dataclass(frozen=True)
class CutReport:
    """Bridges, two-edge cuts, and component counts of a graph."""

    bridges: tuple[Edge, ...]
    two_edge_cuts: tuple[tuple[Edge, Edge], ...]
    component_count: int
    nontrivial_component_count: int


def _bridges(n: int, adj: list[list[int]], skip: Edge | None = None) -> list[Edge]:
    # Iterative lowlink DFS; `skip` excludes one edge from the traversal.
    preorder = [-1] * n
    low = [0] * n
    counter = 0
    found: list[Edge] = []
    for root in range(n):
        if preorder[root] != -1:
            continue
        preorder[root] = low[root] = counter
        counter += 1
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack[-1]
            advanced = False
            while idx < len(adj[v]):
                w = adj[v][idx]
                idx += 1
                if skip is not None and normalize_edge(v, w) == skip:
                    continue
                if preorder[w] == -1:
                    preorder[w] = low[w] = counter
                    counter += 1
                    stack[-1] = (v, parent, idx)
                    stack.append((w, v, 0))
                    advanced = True
                    break
                if w != parent:
                    if preorder[w] < low[v]:
                        low[v] = preorder[w]
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] > preorder[parent]:
                    found.append(normalize_edge(parent, v))
    return sorted(found)


def find_bridges(g: Graph) -> tuple[Edge, ...]:
    """All bridges of g in lexicographic order."""
    return tuple(_bridges(g.vertex_count, g.adjacency()))


def cut_analysis(g: Graph) -> CutReport:
    """Exhaustive bridges and two-edge cuts.

    A listed pair disconnects the graph only jointly: neither member is a
    bridge on its own, and removing both raises the component count by
    exactly one.
    """
    adj = g.adjacency()
    n = g.vertex_count
    bridges = _bridges(n, adj)
    bridge_set = set(bridges)
    pairs = set()
    for e in g.sorted_edges():
        if e in bridge_set:
            continue
        for b in _bridges(n, adj, skip=e):
            if b in bridge_set or b == e:
                continue
            pairs.add((e, b) if e < b else (b, e))
    return CutReport(
        bridges=tuple(bridges),
        two_edge_cuts=tuple(sorted(pairs)),
        component_count=component_count(g),
        nontrivial_component_count=nontrivial_component_count(g),
    )


# ---------------------------------------------------------------------------
# Generators


def generate_complete(n: int) -> Graph:
    """Complete graph on n vertices (n >= 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def generate_clique_chain(clique_size: int, k: int) -> Graph:
    """Cycle of k cliques, each missing one edge, rejoined to regularity.

    Copy t occupies vertices ``t*s .. t*s + s - 1``. The edge between the
    first two vertices of each copy is deleted, and copy t's second vertex
    is joined to copy (t+1)'s first vertex, wrapping around. The result is
    connected and (clique_size - 1)-regular on ``k * clique_size`` vertices.
    """
    if clique_size not in (5, 6):
        raise ValueError("clique_size must be 5 or 6")
    if k < 2:
        raise ValueError("k must be at least 2")
    s = clique_size
    edges = set()
    for t in range(k):
        base = t * s
        for a in range(s):
            for b in range(a + 1, s):
                if (a, b) != (0, 1):
                    edges.add((base + a, base + b))
        edges.add(normalize_edge(base + 1, ((t + 1) % k) * s))
    return Graph(k * s, frozenset(edges))


def generate_random_regular(n: int, d: int, seed: int, max_attempts: int = 20000) -> Graph:
    """Uniform-ish simple connected d-regular graph via stub pairing.

    Whole attempts are rejected on any collision (loop, repeated edge) or
    on a disconnected outcome, so only exact simple regular graphs are
    returned. Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if d < 0 or d >= n:
        raise ValueError("degree must satisfy 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n} d={d}")
    if d == 0 and n > 1:
        raise GenerationError("0-regular graphs on more than one vertex are disconnected")
    rng = random.Random(seed)
    stubs_template = [v for v in range(n) for _ in range(d)]
    for _ in range(max_attempts):
        stubs = stubs_template[:]
        rng.shuffle(stubs)
        edges: set[Edge] = set()
        ok = True
        for pos in range(0, len(stubs), 2):
            a, b = stubs[pos], stubs[pos + 1]
            if a == b:
                ok = False
                break
            e = normalize_edge(a, b)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if not ok:
            continue
        g = Graph(n, frozenset(edges))
        if not is_connected(g):
            continue
        return g
    raise GenerationError(
        f"no simple connected {d}-regular graph on {n} vertices after {max_attempts} attempts"
    )


# ---------------------------------------------------------------------------
# Edge-list text format and DOT export


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated edge-list text.

    One edge per line as two integers; lines starting with ``#`` are
    ignored; an optional line ``n <count>`` pins the vertex count, which
    otherwise is inferred as max id + 1.
    """
    edges: set[Edge] = set()
    declared: int | None = None
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2:
                raise EdgeListError(f"line {lineno}: malformed header {line!r}")
            try:
                declared = int(parts[1])
            except ValueError:
                raise EdgeListError(f"line {lineno}: malformed header {line!r}") from None
            if declared < 0:
                raise EdgeListError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two vertex ids, got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if i < 0 or j < 0:
            raise EdgeListError(f"line {lineno}: negative vertex id")
        if i == j:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {i}")
        e = normalize_edge(i, j)
        if e in edges:
            raise EdgeListError(f"line {lineno}: duplicate edge {e}")
        edges.add(e)
        max_id = max(max_id, e[1])
    count = declared if declared is not None else max_id + 1
    if max_id >= count:
        raise EdgeListError(f"vertex id {max_id} exceeds declared count {count}")
    return Graph(count, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def to_dot(g: Graph) -> str:
    lines = ["graph g {"]
    lines.extend(f"  {v};" for v in range(g.vertex_count))
    lines.extend(f"  {i} -- {j};" for i, j in g.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
