"""Stress-count-aware graph reductions and the certification driver.

Every operation returns the reduced graph together with a ReductionStep
carrying the relation between the stress counts before and after, as
justified by the governing fact:

* deleting a vertex of degree <= 2 preserves the stress count;
* deleting a vertex of degree d >= 3 lowers it by at most d - 2 and
  never raises it;
* removing a bridge, or both edges of a two-edge cut, preserves it;
* removing a whole edge cut whose auxiliary clique graph has no stresses
  splits it additively across the two sides;
* removing a single edge lowers it by at most 1 and never raises it;
* replacing a degree-3 vertex by the missing edge between two of its
  neighbors cannot lower it, and the degree-4 variant costs at most 1.

Reduced graphs keep the original vertex-id space; deleted vertices are
left isolated. Isolated vertices carry no matrix rows, so they affect
neither stress counts nor degree censuses nor nontrivial component
counts.

``certify_stress_bound`` replays the six-case induction that bounds the
stress count by the degree potential for graphs of maximum degree 4 or 5,
re-verifying the stress relation of every step numerically through both
rank oracles.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import (
    Edge,
    Graph,
    component_count,
    connected_components,
    cut_analysis,
    find_bridges,
    is_connected,
    normalize_edge,
    nontrivial_components,
)
from .pebble import certified_stress


class SplitGateError(ValueError):
    """The disconnecting split's zero-stress side condition failed."""

    def __init__(self, gate_graph: Graph, gate_stress: int):
        self.gate_graph = gate_graph
        self.gate_stress = gate_stress
        super().__init__(
            f"auxiliary cut graph has stress count {gate_stress}, not 0; "
            "the additive split does not apply"
        )


class CertificationError(RuntimeError):
    """The certification driver hit a state its case analysis excludes."""


@dataclass(frozen=True)
class StressRelation:
    """Relation s(pre) REL s(post) + offset with REL in {=, <=}."""

    kind: str  # "equal" | "le" | "le_plus"
    offset: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("equal", "le", "le_plus"):
            raise ValueError(f"unknown relation kind {self.kind!r}")
        if self.kind == "le_plus" and self.offset < 1:
            raise ValueError("le_plus needs a positive offset")
        if self.kind in ("equal", "le") and self.offset != 0:
            raise ValueError(f"{self.kind} relation cannot carry an offset")

    def holds(self, s_pre: int, s_post: int) -> bool:
        if self.kind == "equal":
            return s_pre == s_post
        return s_pre <= s_post + self.offset

    def compose(self, other: "StressRelation") -> "StressRelation":
        if self.kind == "equal" and other.kind == "equal":
            return EQUAL
        total = self.offset + other.offset
        return le_plus(total) if total else LE

    def describe(self) -> str:
        if self.kind == "equal":
            return "s(pre) = s(post)"
        if self.offset:
            return f"s(pre) <= s(post) + {self.offset}"
        return "s(pre) <= s(post)"


EQUAL = StressRelation("equal")
LE = StressRelation("le")


def le_plus(k: int) -> StressRelation:
    return StressRelation("le_plus", k) if k else LE


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    removed_vertices: tuple[int, ...]
    removed_edges: tuple[Edge, ...]
    added_edges: tuple[Edge, ...]
    relation: StressRelation

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "removed_vertices": list(self.removed_vertices),
            "removed_edges": [list(e) for e in self.removed_edges],
            "added_edges": [list(e) for e in self.added_edges],
            "relation": {"kind": self.relation.kind, "offset": self.relation.offset},
        }


STEP_KINDS = (
    "delete-low-degree-vertex",
    "delete-vertex-general",
    "remove-bridge",
    "remove-two-cut",
    "remove-edge",
    "disconnect-split",
    "inverse-one-extension",
    "inverse-one-extension-deg4",
    "peel-closure",
)


def apply_step(g: Graph, step: ReductionStep) -> Graph:
    """Apply a step's edge edits; removed vertices must end up isolated."""
    removed = {normalize_edge(*e) for e in step.removed_edges}
    added = {normalize_edge(*e) for e in step.added_edges}
    out = g.with_edges_removed(removed).with_edges_added(added)
    for v in step.removed_vertices:
        if out.degree(v) != 0:
            raise ValueError(f"removed vertex {v} still has incident edges")
    return out


@dataclass(frozen=True)
class ReductionTrace:
    initial: Graph
    steps: tuple[ReductionStep, ...]
    final: Graph

    @property
    def accumulated(self) -> StressRelation:
        rel = EQUAL
        for step in self.steps:
            rel = rel.compose(step.relation)
        return rel

    def replay(self) -> Graph:
        g = self.initial
        for step in self.steps:
            g = apply_step(g, step)
        return g

    def to_json_dict(self) -> dict:
        acc = self.accumulated
        return {
            "initial": _graph_json(self.initial),
            "final": _graph_json(self.final),
            "steps": [s.to_json_dict() for s in self.steps],
            "accumulated": {"kind": acc.kind, "offset": acc.offset},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def _graph_json(g: Graph) -> dict:
    return {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.sorted_edges()]}


# ---------------------------------------------------------------------------
# Single reductions


def delete_vertex(g: Graph, v: int) -> tuple[Graph, ReductionStep]:
    """Remove v with its edges; relation depends on the degree of v."""
    g.check_vertex(v)
    incident = g.incident_edges(v)
    deg = len(incident)
    relation = EQUAL if deg <= 2 else le_plus(deg - 2)
    kind = "delete-low-degree-vertex" if deg <= 2 else "delete-vertex-general"
    step = ReductionStep(kind, (v,), incident, (), relation)
    return apply_step(g, step), step


def remove_edge(g: Graph, e: Edge) -> tuple[Graph, ReductionStep]:
    """Remove a single edge; dropping one row costs at most one stress."""
    e = normalize_edge(*e)
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    step = ReductionStep("remove-edge", (), (e,), (), le_plus(1))
    return apply_step(g, step), step


def remove_bridge(g: Graph, e: Edge) -> tuple[Graph, ReductionStep]:
    e = normalize_edge(*e)
    if e not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    before = component_count(g)
    after = component_count(g.with_edges_removed([e]))
    if after != before + 1:
        raise ValueError(f"edge {e} is not a bridge")
    step = ReductionStep("remove-bridge", (), (e,), (), EQUAL)
    return apply_step(g, step), step


def remove_two_cut(g: Graph, e1: Edge, e2: Edge) -> tuple[Graph, ReductionStep]:
    e1, e2 = normalize_edge(*e1), normalize_edge(*e2)
    if e1 == e2:
        raise ValueError("the two cut edges must be distinct")
    for e in (e1, e2):
        if e not in g.edges:
            raise ValueError(f"edge {e} not in graph")
    base = component_count(g)
    for e in (e1, e2):
        if component_count(g.with_edges_removed([e])) != base:
            raise ValueError(f"edge {e} disconnects on its own; not a two-edge cut")
    if component_count(g.with_edges_removed([e1, e2])) != base + 1:
        raise ValueError("removing both edges does not split off exactly one component")
    step = ReductionStep("remove-two-cut", (), tuple(sorted((e1, e2))), (), EQUAL)
    return apply_step(g, step), step


def split_gate_graph(cut: Sequence[Edge], side1: set[int], side2: set[int]) -> Graph:
    """Auxiliary graph: cliques on the cut endpoints of each side plus the cut."""
    v3 = sorted({i for e in cut for i in e if i in side1})
    v4 = sorted({i for e in cut for i in e if i in side2})
    labels = {v: i for i, v in enumerate(v3 + v4)}
    edges = set()
    for group in (v3, v4):
        for ai, a in enumerate(group):
            for b in group[ai + 1 :]:
                edges.add(normalize_edge(labels[a], labels[b]))
    for i, j in cut:
        edges.add(normalize_edge(labels[i], labels[j]))
    return Graph(len(labels), frozenset(edges))


def disconnect_split(
    g: Graph, cut: Iterable[Edge], trials: int = 3, seed: int = 0
) -> tuple[Graph, Graph, ReductionStep]:
    """Split a connected graph along an edge cut with a zero-stress gate.

    Returns the two sides as graphs on the original vertex-id space; their
    stress counts add up to the stress count of g.
    """
    if not is_connected(g):
        raise ValueError("disconnect_split expects a connected graph")
    cut = sorted({normalize_edge(*e) for e in cut})
    if not cut:
        raise ValueError("cut must be nonempty")
    for e in cut:
        if e not in g.edges:
            raise ValueError(f"edge {e} not in graph")
    remainder = g.with_edges_removed(cut)
    comps = connected_components(remainder)
    if len(comps) != 2:
        raise ValueError(f"removing the cut leaves {len(comps)} parts, not 2")
    side1, side2 = set(comps[0]), set(comps[1])
    for i, j in cut:
        if (i in side1) == (j in side1):
            raise ValueError(f"cut edge ({i}, {j}) does not cross the split")
    gate = split_gate_graph(cut, side1, side2)
    gate_stress = certified_stress(gate, trials=trials, seed=seed)
    if gate_stress != 0:
        raise SplitGateError(gate, gate_stress)
    edges1 = frozenset(e for e in remainder.edges if e[0] in side1)
    edges2 = frozenset(e for e in remainder.edges if e[0] in side2)
    g1 = Graph(g.vertex_count, edges1)
    g2 = Graph(g.vertex_count, edges2)
    step = ReductionStep("disconnect-split", (), tuple(cut), (), EQUAL)
    return g1, g2, step


def inverse_one_extension(g: Graph, s_vertex: int, i: int, j: int) -> tuple[Graph, ReductionStep]:
    """Remove a degree-3 vertex and reconnect two of its neighbors."""
    g.check_vertex(s_vertex)
    nbrs = g.neighbors(s_vertex)
    if len(nbrs) != 3:
        raise ValueError(f"vertex {s_vertex} has degree {len(nbrs)}, expected 3")
    if i not in nbrs or j not in nbrs or i == j:
        raise ValueError(f"{i} and {j} must be two distinct neighbors of {s_vertex}")
    if g.has_edge(i, j):
        raise ValueError(f"edge ({i}, {j}) already present")
    step = ReductionStep(
        "inverse-one-extension",
        (s_vertex,),
        g.incident_edges(s_vertex),
        (normalize_edge(i, j),),
        LE,
    )
    return apply_step(g, step), step


def inverse_one_extension_deg4(
    g: Graph, s_vertex: int, i: int, j: int
) -> tuple[Graph, ReductionStep]:
    """Degree-4 variant; costs at most one stress."""
    g.check_vertex(s_vertex)
    nbrs = g.neighbors(s_vertex)
    if len(nbrs) != 4:
        raise ValueError(f"vertex {s_vertex} has degree {len(nbrs)}, expected 4")
    if i not in nbrs or j not in nbrs or i == j:
        raise ValueError(f"{i} and {j} must be two distinct neighbors of {s_vertex}")
    if g.has_edge(i, j):
        raise ValueError(f"edge ({i}, {j}) already present")
    step = ReductionStep(
        "inverse-one-extension-deg4",
        (s_vertex,),
        g.incident_edges(s_vertex),
        (normalize_edge(i, j),),
        le_plus(1),
    )
    return apply_step(g, step), step


def _peel_cascade(g: Graph, start: int) -> tuple[list[int], Graph]:
    """Round-based low-degree cascade from a degree-2 start vertex.

    Each round removes every candidate of current degree 1 or 2, where the
    candidates are the surviving neighbors of previously removed vertices.
    Vertices whose degree never dropped are not candidates even if their
    degree is 2.
    """
    current = g.with_edges_removed(g.incident_edges(start))
    removed_order = [start]
    removed = {start}
    candidates = set(g.neighbors(start))
    while True:
        degs = current.degrees()
        batch = sorted(v for v in candidates if v not in removed and 1 <= degs[v] <= 2)
        if not batch:
            break
        for v in batch:
            incident = current.incident_edges(v)
            current = current.with_edges_removed(incident)
            removed.add(v)
            removed_order.append(v)
            for a, b in incident:
                candidates.add(a if b == v else b)
    return removed_order, current


def peel_closure(g: Graph, start_vertex: int) -> tuple[Graph, ReductionTrace]:
    """Iterated low-degree deletion starting at a degree-2 vertex.

    Emits one stress-preserving deletion step per removed vertex; the
    accumulated relation is exact equality of stress counts.
    """
    g.check_vertex(start_vertex)
    if g.degree(start_vertex) != 2:
        raise ValueError(
            f"start vertex {start_vertex} has degree {g.degree(start_vertex)}, expected 2"
        )
    steps = []
    current = g
    order, _ = _peel_cascade(g, start_vertex)
    for v in order:
        current, step = delete_vertex(current, v)
        if step.kind != "delete-low-degree-vertex":
            raise AssertionError(f"peel removed vertex {v} at degree > 2")
        steps.append(step)
    return current, ReductionTrace(g, tuple(steps), current)


def simplify(g: Graph) -> tuple[Graph, ReductionTrace]:
    """Apply stress-preserving moves until none fits.

    Deletes degree <= 2 vertices, bridges, and two-edge cuts repeatedly;
    the final graph has the same stress count as the input.
    """
    current = g
    steps: list[ReductionStep] = []
    while True:
        degs = current.degrees()
        low = [v for v in range(current.vertex_count) if 1 <= degs[v] <= 2]
        if low:
            current, step = delete_vertex(current, low[0])
            steps.append(step)
            continue
        report = cut_analysis(current)
        if report.bridges:
            current, step = remove_bridge(current, report.bridges[0])
            steps.append(step)
            continue
        if report.two_edge_cuts:
            e1, e2 = report.two_edge_cuts[0]
            current, step = remove_two_cut(current, e1, e2)
            steps.append(step)
            continue
        break
    return current, ReductionTrace(g, tuple(steps), current)


# ---------------------------------------------------------------------------
# Certification driver


def _find_bridge(g: Graph, comp_edges: set[Edge]) -> Edge | None:
    for e in find_bridges(g):
        if e in comp_edges:
            return e
    return None


def _find_two_cut(g: Graph, comp: tuple[int, ...]) -> tuple[Edge, Edge] | None:
    """First verified two-edge cut of a bridgeless component.

    Uses random XOR labels on a DFS spanning tree: two edges can form a cut
    pair only if every cycle uses both, which makes their labels collide.
    Candidates are then verified by honest component counting, so a hash
    collision can never produce a wrong answer.
    """
    comp_set = set(comp)
    adj = g.adjacency()
    rng = random.Random(0x2C3)
    parent: dict[int, int] = {}
    order: list[int] = []
    root = comp[0]
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    tree_edges = {normalize_edge(v, parent[v]) for v in parent}
    acc = {v: 0 for v in comp}
    labels: dict[Edge, int] = {}
    for e in sorted(x for x in g.edges if x[0] in comp_set):
        if e in tree_edges:
            continue
        lab = rng.getrandbits(64)
        labels[e] = lab
        acc[e[0]] ^= lab
        acc[e[1]] ^= lab
    # Propagate subtree XOR accumulators bottom-up along the DFS order.
    for v in reversed(order):
        if v in parent:
            labels[normalize_edge(v, parent[v])] = acc[v]
            acc[parent[v]] ^= acc[v]
    groups: dict[int, list[Edge]] = {}
    for e, lab in labels.items():
        if lab:
            groups.setdefault(lab, []).append(e)
    base = component_count(g)
    for lab in sorted(groups, key=lambda k: sorted(groups[k])[0]):
        cand = sorted(groups[lab])
        for ai, e1 in enumerate(cand):
            for e2 in cand[ai + 1 :]:
                if component_count(g.with_edges_removed([e1, e2])) == base + 1:
                    return e1, e2
    return None


def _terminal_component(g: Graph, comp: Sequence[int], max_degree: int) -> bool:
    # Base shapes: K4 and the one-missing-edge K5 for the degree-4 analysis;
    # K5 and the one-missing-edge K6 for degree-5.
    k = len(comp)
    inside = set(comp)
    m = sum(1 for e in g.edges if e[0] in inside)
    if max_degree == 4:
        return (k == 4 and m == 6) or (k == 5 and m == 9)
    return (k == 5 and m == 10) or (k == 6 and m == 14)


def _outward_partner(g: Graph, v: int, clique: set[int]) -> int:
    outside = [w for w in g.neighbors(v) if w not in clique]
    if len(outside) != 1:
        raise CertificationError(
            f"vertex {v} should have exactly one neighbor outside {sorted(clique)}, "
            f"found {outside}"
        )
    return outside[0]


class _StepEmitter:
    """Applies steps to the working graph and re-verifies each relation."""

    def __init__(self, g: Graph, trials: int, seed: int):
        self.graph = g
        self.trials = trials
        self.seed = seed
        self.counter = 0
        self.stress = certified_stress(g, trials=trials, seed=seed)
        self.steps: list[ReductionStep] = []
        self.offset = 0

    def emit(self, step: ReductionStep) -> None:
        new_graph = apply_step(self.graph, step)
        self.counter += 1
        new_stress = certified_stress(
            new_graph, trials=self.trials, seed=self.seed + self.counter
        )
        if not step.relation.holds(self.stress, new_stress):
            raise CertificationError(
                f"step {step.kind} claims {step.relation.describe()} but "
                f"s(pre)={self.stress}, s(post)={new_stress}"
            )
        if step.kind not in ("inverse-one-extension", "inverse-one-extension-deg4"):
            # Every other move only removes rows, so stress cannot grow.
            if new_stress > self.stress:
                raise CertificationError(
                    f"step {step.kind} raised the stress count "
                    f"{self.stress} -> {new_stress}"
                )
        self.graph = new_graph
        self.stress = new_stress
        self.offset += step.relation.offset
        self.steps.append(step)

    def emit_peel(self, start: int) -> None:
        g = self.graph
        order, final = _peel_cascade(g, start)
        removed_edges = tuple(sorted(g.edges - final.edges))
        self.emit(
            ReductionStep("peel-closure", tuple(order), removed_edges, (), EQUAL)
        )

    def emit_gated_split(self, cut: list[Edge], clique: set[int], comp_set: set[int]) -> None:
        """Verify the two-part structure and zero-stress gate, then split."""
        side2 = comp_set - clique
        if not side2:
            raise CertificationError("split has an empty far side")
        remainder = self.graph.with_edges_removed(cut)
        rem_adj = remainder.adjacency()
        start = min(side2)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in rem_adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen & clique or not side2 <= seen:
            raise CertificationError(
                f"cut {cut} does not split the component into the clique side "
                f"and one connected remainder"
            )
        gate = split_gate_graph(cut, clique, side2)
        gate_stress = certified_stress(gate, trials=self.trials, seed=self.seed)
        if gate_stress != 0:
            raise SplitGateError(gate, gate_stress)
        self.emit(ReductionStep("disconnect-split", (), tuple(cut), (), EQUAL))


def _missing_neighbor_pair(g: Graph, v: int) -> tuple[int, int] | None:
    nbrs = g.neighbors(v)
    for ai, a in enumerate(nbrs):
        for b in nbrs[ai + 1 :]:
            if not g.has_edge(a, b):
                return a, b
    return None


def _dispatch_deg4(g: Graph, comp: tuple[int, ...], emitter: _StepEmitter) -> None:
    degs = g.degrees()
    comp_set = set(comp)
    deg1 = [v for v in comp if degs[v] == 1]
    if deg1:
        _, step = delete_vertex(g, deg1[0])
        emitter.emit(step)
        return
    deg2 = [v for v in comp if degs[v] == 2]
    if deg2:
        emitter.emit_peel(deg2[0])
        return
    comp_edges = {e for e in g.edges if e[0] in comp_set}
    bridge = _find_bridge(g, comp_edges)
    if bridge is not None:
        _, step = remove_bridge(g, bridge)
        emitter.emit(step)
        return
    pair = _find_two_cut(g, comp)
    if pair is not None:
        _, step = remove_two_cut(g, *pair)
        emitter.emit(step)
        return
    deg3 = [v for v in comp if degs[v] == 3]
    if not deg3:
        raise CertificationError(f"component {comp} has no vertex of degree below 4")
    for s in deg3:
        missing = _missing_neighbor_pair(g, s)
        if missing is not None:
            _, step = inverse_one_extension(g, s, *missing)
            emitter.emit(step)
            return
    # Every degree-3 vertex closes a K4 with its neighbors.
    s = deg3[0]
    i, j, k = g.neighbors(s)
    if not all(degs[t] == 4 for t in (i, j, k)):
        raise CertificationError(
            f"K4 neighbors of {s} have degrees {[degs[t] for t in (i, j, k)]}; "
            "a cut of at most two edges must exist"
        )
    clique = {s, i, j, k}
    partners = [(t, _outward_partner(g, t, clique)) for t in (i, j, k)]
    if len({x for _, x in partners}) == 1:
        raise CertificationError(
            f"all outward edges of the K4 at {s} meet one vertex; the component "
            "should have matched the one-missing-edge K5 base shape"
        )
    cut = sorted(normalize_edge(t, x) for t, x in partners)
    emitter.emit_gated_split(cut, clique, comp_set)


def _dispatch_deg5(g: Graph, comp: tuple[int, ...], emitter: _StepEmitter) -> None:
    degs = g.degrees()
    comp_set = set(comp)
    deg1 = [v for v in comp if degs[v] == 1]
    if deg1:
        _, step = delete_vertex(g, deg1[0])
        emitter.emit(step)
        return
    deg2 = [v for v in comp if degs[v] == 2]
    if deg2:
        emitter.emit_peel(deg2[0])
        return
    comp_edges = {e for e in g.edges if e[0] in comp_set}
    bridge = _find_bridge(g, comp_edges)
    if bridge is not None:
        _, step = remove_bridge(g, bridge)
        emitter.emit(step)
        return
    pair = _find_two_cut(g, comp)
    if pair is not None:
        _, step = remove_two_cut(g, *pair)
        emitter.emit(step)
        return
    deg3 = [v for v in comp if degs[v] == 3]
    if deg3:
        _, step = delete_vertex(g, deg3[0])
        emitter.emit(step)
        return
    deg4 = [v for v in comp if degs[v] == 4]
    if not deg4:
        raise CertificationError(f"component {comp} has no vertex of degree below 5")
    for s in deg4:
        missing = _missing_neighbor_pair(g, s)
        if missing is not None:
            _, step = inverse_one_extension_deg4(g, s, *missing)
            emitter.emit(step)
            return
    # Every degree-4 vertex closes a K5 with its neighbors.
    s = deg4[0]
    nbrs = g.neighbors(s)
    clique = {s, *nbrs}
    five_deg = [t for t in nbrs if degs[t] == 5]
    if len(five_deg) < 3:
        raise CertificationError(
            f"K5 at {s} has only {len(five_deg)} degree-5 members; a cut of at "
            "most two edges must exist"
        )
    partners = [(t, _outward_partner(g, t, clique)) for t in five_deg]
    if len({x for _, x in partners}) == 1:
        raise CertificationError(
            f"all outward edges of the K5 at {s} meet one vertex; with "
            f"{len(five_deg)} degree-5 members this component admits a small cut "
            "or the one-missing-edge K6 base shape"
        )
    if len(five_deg) == 3:
        cut = sorted(normalize_edge(t, x) for t, x in partners)
        emitter.emit_gated_split(cut, clique, comp_set)
        return
    # All four outward edges present: shed one, then split along the other
    # three. Take the first choice whose residual gate has no stresses.
    for drop_t, drop_x in partners:
        residual = [(t, x) for t, x in partners if (t, x) != (drop_t, drop_x)]
        cut = sorted(normalize_edge(t, x) for t, x in residual)
        gate = split_gate_graph(cut, clique, comp_set - clique)
        if certified_stress(gate, trials=emitter.trials, seed=emitter.seed) != 0:
            continue
        _, drop_step = remove_edge(g, normalize_edge(drop_t, drop_x))
        emitter.emit(drop_step)
        emitter.emit_gated_split(cut, clique, comp_set)
        return
    raise CertificationError(
        f"no outward edge of the K5 at {s} leaves a zero-stress residual gate"
    )


def check_degree_hypotheses(g: Graph, max_degree: int) -> None:
    """Degree cap plus a strictly smaller degree in every nontrivial component."""
    degs = g.degrees()
    over = [v for v in range(g.vertex_count) if degs[v] > max_degree]
    if over:
        raise ValueError(f"vertices {over} exceed the degree cap {max_degree}")
    for comp in nontrivial_components(g):
        if all(degs[v] == max_degree for v in comp):
            raise ValueError(
                f"component {comp} is {max_degree}-regular; it needs a vertex of "
                f"degree below {max_degree}"
            )


def certify_stress_bound(
    g: Graph, max_degree: int, trials: int = 1, seed: int = 0
) -> tuple[ReductionTrace, Fraction]:
    """Reduce g to base shapes, certifying s(g) <= the degree potential.

    Dispatches the reduction cases in a fixed priority (pendant deletion,
    low-degree peel, bridge, two-edge cut, vertex deletion or inverse
    one-extension, clique split), always on the component with the smallest
    vertex id and the smallest qualifying vertex or edge. Each emitted
    step's stress relation is re-verified numerically with both rank
    oracles, and the accumulated inequality is checked against the degree
    potential of the input graph.
    """
    from .bounds import stress_cap4, stress_cap5

    if max_degree not in (4, 5):
        raise ValueError("max_degree must be 4 or 5")
    check_degree_hypotheses(g, max_degree)
    cap_value = stress_cap4(g) if max_degree == 4 else stress_cap5(g)
    emitter = _StepEmitter(g, trials, seed)
    guard = 0
    while True:
        guard += 1
        if guard > 4 * g.edge_count + 8:
            raise CertificationError("reduction failed to make progress")
        pending = [
            comp
            for comp in nontrivial_components(emitter.graph)
            if not _terminal_component(emitter.graph, comp, max_degree)
        ]
        if not pending:
            break
        check_degree_hypotheses(emitter.graph, max_degree)
        if max_degree == 4:
            _dispatch_deg4(emitter.graph, pending[0], emitter)
        else:
            _dispatch_deg5(emitter.graph, pending[0], emitter)
    if Fraction(emitter.stress + emitter.offset) > cap_value:
        raise CertificationError(
            f"certified chain gives s <= {emitter.stress + emitter.offset}, which "
            f"exceeds the potential {cap_value}"
        )
    trace = ReductionTrace(g, tuple(emitter.steps), emitter.graph)
    return trace, cap_value
