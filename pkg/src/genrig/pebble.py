"""Combinatorial rank oracle: the (2,3)-sparsity pebble game.

Independence in the 2D generic rigidity matroid is characterized by
(2,3)-sparsity: every vertex subset with at least two vertices spans at
most 2|V'| - 3 edges. The pebble game decides this greedily. Each vertex
starts with two pebbles; inserting an edge needs four pebbles on its
endpoints, found by depth-first search along accepted edge orientations
with path reversal. Edges are offered in canonical order, and matroid
greediness makes the number of accepted edges the matroid rank.

This oracle is deterministic and independent of the linear algebra in
``rigidity``; agreement of the two is the certification backbone of this
package. A disagreement is always raised, never resolved silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Edge, Graph, normalize_edge
from .rigidity import generic_rank


@dataclass(frozen=True)
class PebbleState:
    """Final state of a pebble game run.

    Conservation invariant: the pebbles still on vertices plus the oriented
    edges always total 2 * vertex_count, since inserting an edge trades one
    pebble for one orientation.
    """

    pebbles: tuple[int, ...]
    oriented_edges: tuple[tuple[int, int], ...]
    accepted: tuple[Edge, ...]


class OracleMismatchError(RuntimeError):
    """Pebble-game rank and linear-algebra rank disagree."""

    def __init__(self, g: Graph, pebble: int, linear: int):
        self.graph = g
        self.pebble_rank = pebble
        self.linear_rank = linear
        super().__init__(
            f"rank oracles disagree on a graph with {g.vertex_count} vertices, "
            f"{g.edge_count} edges: pebble={pebble}, linear-algebra={linear}"
        )


def _collect_pebble(root: int, forbidden: int, pebbles: list[int], out: list[set[int]]) -> bool:
    # DFS from root along oriented edges; on finding a pebble, reverse the
    # path to carry it back to root.
    seen = {root, forbidden}
    parent: dict[int, int] = {}
    stack = [root]
    while stack:
        a = stack.pop()
        for b in sorted(out[a]):
            if b in seen:
                continue
            seen.add(b)
            parent[b] = a
            if pebbles[b] > 0:
                pebbles[b] -= 1
                x = b
                while x != root:
                    pa = parent[x]
                    out[pa].discard(x)
                    out[x].add(pa)
                    x = pa
                pebbles[root] += 1
                return True
            stack.append(b)
    return False


def _play(vertex_count: int, edges: Sequence[Edge]) -> PebbleState:
    pebbles = [2] * vertex_count
    out: list[set[int]] = [set() for _ in range(vertex_count)]
    accepted: list[Edge] = []
    for u, v in edges:
        while pebbles[u] + pebbles[v] < 4:
            if not _collect_pebble(u, v, pebbles, out):
                if not _collect_pebble(v, u, pebbles, out):
                    break
        if pebbles[u] + pebbles[v] >= 4:
            accepted.append((u, v))
            pebbles[u] -= 1
            out[u].add(v)
    oriented = tuple(
        (a, b) for a in range(vertex_count) for b in sorted(out[a])
    )
    return PebbleState(tuple(pebbles), oriented, tuple(accepted))


def run_pebble_game(g: Graph) -> PebbleState:
    """Play the game over the canonical edge order and return the state."""
    return _play(g.vertex_count, g.sorted_edges())


def pebble_basis(g: Graph) -> tuple[Edge, ...]:
    """A maximal independent edge subset, built in canonical edge order."""
    return run_pebble_game(g).accepted


def pebble_rank(g: Graph) -> int:
    """Rank of the 2D generic rigidity matroid of g."""
    return len(pebble_basis(g))


def pebble_independent(g: Graph, f: Iterable[Edge]) -> bool:
    """True iff the edge subset f is independent in the rigidity matroid."""
    subset = sorted(normalize_edge(*e) for e in f)
    missing = [e for e in subset if e not in g.edges]
    if missing:
        raise ValueError(f"edges not in graph: {missing}")
    return len(_play(g.vertex_count, subset).accepted) == len(subset)


def certified_rank(g: Graph, trials: int = 3, seed: int = 0) -> int:
    """Generic rank agreed on by both oracles.

    The pebble result is authoritative; the randomized linear-algebra rank
    must match or an OracleMismatchError is raised.
    """
    comb = pebble_rank(g)
    lin = generic_rank(g, trials=trials, seed=seed)
    if comb != lin:
        raise OracleMismatchError(g, comb, lin)
    return comb


def certified_stress(g: Graph, trials: int = 3, seed: int = 0) -> int:
    """Stress count |E| - rank with cross-checked rank."""
    return g.edge_count - certified_rank(g, trials=trials, seed=seed)
