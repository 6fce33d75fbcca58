"""Degree potentials, theorem verifiers, and batch bound reports.

The degree potential caps the stress count of a graph from its degree
census alone: with n_i vertices of degree i and c nontrivial components,

* max degree 4:  (n3 + 2*n4 + 2*c) / 5
* max degree 5:  5 * (n3 + 2*n4 + 3*n5 + 2*c) / 18

Both require every nontrivial component to contain a vertex strictly
below the cap. The theorem verifiers check the rank lower bounds
r >= 8|V|/5 - 1 for connected 4-regular graphs and r >= 5|V|/3 - 1 for
connected 5-regular graphs, computing the rank with both oracles and
comparing exact rationals throughout: no value in a report is a float
except the runtime.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, replace
from fractions import Fraction

from .graph import (
    Graph,
    generate_clique_chain,
    generate_complete,
    generate_random_regular,
    is_connected,
    nontrivial_component_count,
)
from .pebble import pebble_rank
from .rigidity import generic_rank


def _degree_census(g: Graph) -> dict[int, int]:
    census: dict[int, int] = {}
    for d in g.degrees():
        census[d] = census.get(d, 0) + 1
    return census


def _check_cap(g: Graph, cap: int) -> None:
    from .reductions import check_degree_hypotheses

    check_degree_hypotheses(g, cap)


def stress_cap4(g: Graph) -> Fraction:
    """Exact stress-count cap for graphs of maximum degree 4."""
    _check_cap(g, 4)
    census = _degree_census(g)
    c = nontrivial_component_count(g)
    return Fraction(census.get(3, 0) + 2 * census.get(4, 0) + 2 * c, 5)


def stress_cap5(g: Graph) -> Fraction:
    """Exact stress-count cap for graphs of maximum degree 5."""
    _check_cap(g, 5)
    census = _degree_census(g)
    c = nontrivial_component_count(g)
    total = census.get(3, 0) + 2 * census.get(4, 0) + 3 * census.get(5, 0) + 2 * c
    return Fraction(5 * total, 18)


@dataclass(frozen=True)
class BoundReport:
    """Per-graph verification record with exact rational bounds."""

    graph_id: str
    vertex_count: int
    edge_count: int
    rank: int
    stress: int
    stress_cap: Fraction | None
    theorem_bound: Fraction | None
    satisfied: bool
    oracle_agreement: bool
    runtime_ms: float

    def to_json_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "rank": self.rank,
            "stress": self.stress,
            "stress_cap": None if self.stress_cap is None else str(self.stress_cap),
            "theorem_bound": None
            if self.theorem_bound is None
            else str(self.theorem_bound),
            "satisfied": self.satisfied,
            "oracle_agreement": self.oracle_agreement,
            "runtime_ms": self.runtime_ms,
        }


CSV_COLUMNS = (
    "graph_id",
    "vertex_count",
    "edge_count",
    "rank",
    "stress",
    "stress_cap",
    "theorem_bound",
    "satisfied",
    "oracle_agreement",
    "runtime_ms",
)


def reports_to_csv(reports: list[BoundReport]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in reports:
        row = r.to_json_dict()
        lines.append(
            ",".join("" if row[c] is None else str(row[c]) for c in CSV_COLUMNS)
        )
    return "\n".join(lines) + "\n"


def reports_to_jsonl(reports: list[BoundReport]) -> str:
    return "".join(json.dumps(r.to_json_dict(), sort_keys=True) + "\n" for r in reports)


def strip_runtimes(reports: list[BoundReport]) -> list[BoundReport]:
    """Zero the wall-clock field so serialized output is reproducible."""
    return [replace(r, runtime_ms=0.0) for r in reports]


def _ranked_report(
    g: Graph,
    graph_id: str,
    theorem_bound: Fraction,
    trials: int,
    seed: int,
) -> BoundReport:
    t0 = time.perf_counter()
    comb = pebble_rank(g)
    lin = generic_rank(g, trials=trials, seed=seed)
    runtime = (time.perf_counter() - t0) * 1000.0
    rank = comb
    return BoundReport(
        graph_id=graph_id,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        rank=rank,
        stress=g.edge_count - rank,
        stress_cap=None,
        theorem_bound=theorem_bound,
        satisfied=Fraction(rank) >= theorem_bound,
        oracle_agreement=comb == lin,
        runtime_ms=runtime,
    )


def _require_regular(g: Graph, d: int) -> None:
    if not is_connected(g):
        raise ValueError("graph must be connected")
    bad = [v for v, deg in enumerate(g.degrees()) if deg != d]
    if bad:
        raise ValueError(f"graph is not {d}-regular (vertices {bad[:5]} differ)")


def verify_theorem1(
    g: Graph, trials: int = 3, seed: int = 0, graph_id: str = "degree4"
) -> BoundReport:
    """Rank lower bound 8|V|/5 - 1 for a connected 4-regular graph."""
    _require_regular(g, 4)
    bound = Fraction(8 * g.vertex_count, 5) - 1
    return _ranked_report(g, graph_id, bound, trials, seed)


def verify_theorem2(
    g: Graph, trials: int = 3, seed: int = 0, graph_id: str = "degree5"
) -> BoundReport:
    """Rank lower bound 5|V|/3 - 1 for a connected 5-regular graph."""
    _require_regular(g, 5)
    bound = Fraction(5 * g.vertex_count, 3) - 1
    return _ranked_report(g, graph_id, bound, trials, seed)


def verify_cubic(
    g: Graph, trials: int = 3, seed: int = 0, graph_id: str = "degree3"
) -> BoundReport:
    """Connected 3-regular graphs: rank equals |E| except on 4 vertices,
    where it is 5."""
    _require_regular(g, 3)
    bound = Fraction(5 if g.vertex_count == 4 else g.edge_count)
    return _ranked_report(g, graph_id, bound, trials, seed)


def verify_complete(
    g: Graph, trials: int = 3, seed: int = 0, graph_id: str = "complete"
) -> BoundReport:
    """Complete graphs on at least two vertices have rank 2|V| - 3."""
    n = g.vertex_count
    if n < 2 or g.edge_count != n * (n - 1) // 2:
        raise ValueError("graph is not complete on at least two vertices")
    return _ranked_report(g, graph_id, Fraction(2 * n - 3), trials, seed)


def verify_lemma_bound(
    g: Graph, max_degree: int, trials: int = 3, seed: int = 0, graph_id: str = "lemma"
) -> BoundReport:
    """Check stress <= degree potential, independent of the certification
    driver."""
    if max_degree == 4:
        cap = stress_cap4(g)
    elif max_degree == 5:
        cap = stress_cap5(g)
    else:
        raise ValueError("max_degree must be 4 or 5")
    t0 = time.perf_counter()
    comb = pebble_rank(g)
    lin = generic_rank(g, trials=trials, seed=seed)
    runtime = (time.perf_counter() - t0) * 1000.0
    stress = g.edge_count - comb
    return BoundReport(
        graph_id=graph_id,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        rank=comb,
        stress=stress,
        stress_cap=cap,
        theorem_bound=None,
        satisfied=Fraction(stress) <= cap,
        oracle_agreement=comb == lin,
        runtime_ms=runtime,
    )


REGULAR_VERIFIERS = {3: verify_cubic, 4: verify_theorem1, 5: verify_theorem2}


def sweep_random_regular(
    degree: int, count: int, seed: int = 0, size_min: int = 6, size_max: int = 40
) -> list[tuple[str, Graph]]:
    """Deterministic test population: sizes cycle through the feasible
    range while the generator seed advances by one per graph."""
    sizes = [
        n
        for n in range(size_min, size_max + 1)
        if n > degree and (n * degree) % 2 == 0
    ]
    if not sizes:
        raise ValueError(f"no feasible sizes in [{size_min}, {size_max}] for degree {degree}")
    out = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        g = generate_random_regular(n, degree, seed + i)
        out.append((f"random-regular-d{degree}-n{n}-seed{seed + i}", g))
    return out


def batch_verify(
    family: str,
    count: int,
    seed: int = 0,
    degree: int | None = None,
    size_min: int | None = None,
    size_max: int | None = None,
    trials: int = 3,
) -> list[BoundReport]:
    """Generate a graph family and verify the applicable bound on each.

    Families: ``random-regular`` (degree 3, 4, or 5), ``k5chain`` and
    ``k6chain`` (chains of k = 2, 3, ... cliques), and ``complete``.
    Reports come back in generation order; identical arguments give
    identical graphs and identical non-runtime fields.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    reports: list[BoundReport] = []
    if family == "random-regular":
        if degree not in REGULAR_VERIFIERS:
            raise ValueError("random-regular needs degree 3, 4, or 5")
        lo = 6 if size_min is None else size_min
        hi = 40 if size_max is None else size_max
        verifier = REGULAR_VERIFIERS[degree]
        for i, (gid, g) in enumerate(
            sweep_random_regular(degree, count, seed, lo, hi)
        ):
            reports.append(verifier(g, trials=trials, seed=seed + i, graph_id=gid))
    elif family in ("k5chain", "k6chain"):
        size = 5 if family == "k5chain" else 6
        verifier = verify_theorem1 if size == 5 else verify_theorem2
        for i in range(count):
            k = 2 + i
            g = generate_clique_chain(size, k)
            gid = f"clique-chain-{size}x{k}"
            reports.append(verifier(g, trials=trials, seed=seed + i, graph_id=gid))
    elif family == "complete":
        lo = 3 if size_min is None else size_min
        for i in range(count):
            n = lo + i
            g = generate_complete(n)
            reports.append(
                verify_complete(g, trials=trials, seed=seed + i, graph_id=f"complete-{n}")
            )
    else:
        raise ValueError(f"unknown family {family!r}")
    return reports


def oracle_agreement_sweep(
    count: int, seed: int = 0, max_vertices: int = 15
) -> list[dict]:
    """Compare both rank oracles on random graphs of mixed densities."""
    densities = (0.15, 0.3, 0.5, 0.7, 0.85)
    results = []
    for i in range(count):
        n = 2 + (i % (max_vertices - 1))
        p = densities[i % len(densities)]
        rng = random.Random(seed * 7_368_787 + i)
        edges = frozenset(
            (a, b)
            for a in range(n)
            for b in range(a + 1, n)
            if rng.random() < p
        )
        g = Graph(n, edges)
        comb = pebble_rank(g)
        lin = generic_rank(g, trials=3, seed=seed + i)
        results.append(
            {
                "graph_id": f"random-gnp-n{n}-p{p}-seed{seed + i}",
                "vertex_count": n,
                "edge_count": g.edge_count,
                "pebble_rank": comb,
                "matrix_rank": lin,
                "agreement": comb == lin,
            }
        )
    return results
