"""Rigidity matrices at exact planar realizations, ranks, and stresses.

A realization places every vertex at an exact point, either with rational
coordinates or in a prime field. The matrix row for an edge carries the
coordinate differences of its endpoints in the four columns of the two
endpoint vertices; all rank and kernel computations are exact, so there is
no floating point anywhere in a rank decision.

Generic behavior is obtained by random sampling: the default rank engine
draws coordinates uniformly from a prime field of size near 2**61, where a
rank drop at a random point has Schwartz-Zippel-scale probability. The
rational mode is kept for stress bases and for general-position geometry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import linalg
from .graph import Edge, Graph

DEFAULT_PRIME = (1 << 61) - 1
RATIONAL_COORD_MAX = 1 << 31

Scalar = object  # Fraction in rational mode, int mod p in field mode


class DomainError(ValueError):
    """Operation not meaningful for the realization's scalar domain."""


@dataclass(frozen=True)
class Realization:
    """Exact 2D coordinates for each vertex of a target graph."""

    coords: tuple[tuple[Scalar, Scalar], ...]
    prime: int | None = None

    def __post_init__(self) -> None:
        if self.prime is None:
            fixed = tuple((Fraction(x), Fraction(y)) for x, y in self.coords)
        else:
            p = self.prime
            fixed = tuple((int(x) % p, int(y) % p) for x, y in self.coords)
        object.__setattr__(self, "coords", fixed)

    @property
    def is_rational(self) -> bool:
        return self.prime is None

    @property
    def vertex_count(self) -> int:
        return len(self.coords)

    def to_json_dict(self) -> dict:
        if self.is_rational:
            return {
                "mode": "rational",
                "coords": [
                    [[x.numerator, x.denominator], [y.numerator, y.denominator]]
                    for x, y in self.coords
                ],
            }
        return {
            "mode": "field",
            "prime": self.prime,
            "coords": [[x, y] for x, y in self.coords],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Realization":
        if data["mode"] == "rational":
            coords = tuple(
                (Fraction(x[0], x[1]), Fraction(y[0], y[1])) for x, y in data["coords"]
            )
            return cls(coords, None)
        if data["mode"] == "field":
            return cls(tuple((x, y) for x, y in data["coords"]), int(data["prime"]))
        raise ValueError(f"unknown realization mode {data.get('mode')!r}")


def is_general_position(r: Realization) -> bool:
    """True iff no three points are collinear (rational mode only)."""
    if not r.is_rational:
        raise DomainError("general position is only defined in rational mode")
    pts = r.coords
    n = len(pts)
    for a in range(n):
        xa, ya = pts[a]
        for b in range(a + 1, n):
            xb, yb = pts[b]
            dx1, dy1 = xb - xa, yb - ya
            for c in range(b + 1, n):
                xc, yc = pts[c]
                if dx1 * (yc - ya) - dy1 * (xc - xa) == 0:
                    return False
    return True


def sample_generic_realization(g: Graph, seed: int, mode: str = "field") -> Realization:
    """Deterministically sample coordinates for every vertex of g.

    Field mode draws uniformly from F_p with p = 2**61 - 1. Rational mode
    draws integers from [1, 2**31] and resamples until the points are in
    general position.
    """
    rng = random.Random(seed)
    n = g.vertex_count
    if mode == "field":
        p = DEFAULT_PRIME
        return Realization(
            tuple((rng.randrange(p), rng.randrange(p)) for _ in range(n)), p
        )
    if mode == "rational":
        for _ in range(128):
            coords = tuple(
                (
                    Fraction(rng.randrange(1, RATIONAL_COORD_MAX + 1)),
                    Fraction(rng.randrange(1, RATIONAL_COORD_MAX + 1)),
                )
                for _ in range(n)
            )
            r = Realization(coords, None)
            if is_general_position(r):
                return r
        raise RuntimeError("failed to sample a general-position realization")
    raise ValueError(f"unknown realization mode {mode!r}")


@dataclass(frozen=True)
class RigidityMatrix:
    """Edge-by-coordinate matrix of a graph at a fixed realization.

    Rows follow the canonical lexicographic edge order. The row of edge
    (i, j) holds (x_i - x_j, y_i - y_j) in columns 2i, 2i+1 and the
    negated pair in columns 2j, 2j+1.
    """

    edge_order: tuple[Edge, ...]
    rows: tuple[tuple[Scalar, ...], ...]
    realization: Realization

    @property
    def prime(self) -> int | None:
        return self.realization.prime

    @property
    def row_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_order)}

    def row_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self.rows]


def build_rigidity_matrix(g: Graph, r: Realization) -> RigidityMatrix:
    if r.vertex_count != g.vertex_count:
        raise ValueError(
            f"realization covers {r.vertex_count} vertices, graph has {g.vertex_count}"
        )
    p = r.prime
    width = 2 * g.vertex_count
    order = g.sorted_edges()
    rows = []
    zero = 0 if p is not None else Fraction(0)
    for i, j in order:
        xi, yi = r.coords[i]
        xj, yj = r.coords[j]
        row = [zero] * width
        if p is None:
            row[2 * i] = xi - xj
            row[2 * i + 1] = yi - yj
            row[2 * j] = xj - xi
            row[2 * j + 1] = yj - yi
        else:
            row[2 * i] = (xi - xj) % p
            row[2 * i + 1] = (yi - yj) % p
            row[2 * j] = (xj - xi) % p
            row[2 * j + 1] = (yj - yi) % p
        rows.append(tuple(row))
    return RigidityMatrix(order, tuple(rows), r)


def matrix_rank(m: RigidityMatrix) -> int:
    """Exact rank of the matrix over its scalar domain."""
    if not m.rows:
        return 0
    if m.prime is not None:
        return linalg.rank_mod_p(m.row_lists(), m.prime)
    return linalg.rank_rational(m.row_lists())


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def generic_rank(g: Graph, trials: int = 3, seed: int = 0, mode: str = "field") -> int:
    """Max matrix rank over independently sampled realizations.

    Specialization only ever lowers the rank, so the max over trials equals
    the generic rank except with Schwartz-Zippel-scale probability.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not g.edges:
        return 0
    best = 0
    for t in range(trials):
        r = sample_generic_realization(g, _trial_seed(seed, t), mode)
        best = max(best, matrix_rank(build_rigidity_matrix(g, r)))
    return best


def stress_count(g: Graph, rank: int) -> int:
    """Dimension of the stress space: edge count minus rank."""
    if rank > g.edge_count:
        raise ValueError(f"rank {rank} exceeds edge count {g.edge_count}")
    return g.edge_count - rank


@dataclass(frozen=True)
class StressBasis:
    """Exact basis of the left kernel of a rigidity matrix.

    Every vector, paired with edges in edge_order, combines the matrix rows
    to exactly zero. Rational-mode vectors are scaled to coprime integers.
    """

    vectors: tuple[tuple[Scalar, ...], ...]
    edge_order: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.vectors)


def stress_basis(m: RigidityMatrix) -> StressBasis:
    nrows = len(m.rows)
    if nrows == 0:
        return StressBasis((), m.edge_order)
    transpose = [[row[c] for row in m.rows] for c in range(len(m.rows[0]))]
    kernel = linalg.nullspace(transpose, nrows, m.prime)
    if m.prime is None:
        vectors = tuple(tuple(linalg.primitive_integer_vector(v)) for v in kernel)
    else:
        vectors = tuple(tuple(v) for v in kernel)
    return StressBasis(vectors, m.edge_order)


def h1_dimension(g: Graph, trials: int = 3, seed: int = 0) -> int:
    """Dimension 2|V| - rank of the degree-one graph cohomology."""
    return 2 * g.vertex_count - generic_rank(g, trials=trials, seed=seed)


def restriction_containment(g: Graph, r: Realization, u: Iterable[int]) -> bool:
    """Check that row-space vectors supported on U lie in the span of K(U).

    Computes a spanning set of the intersection of the row space with the
    coordinate subspace of U by exact linear algebra, then tests membership
    of each vector in the row space of the complete graph on U at the same
    realization. Expected to hold at generic realizations.
    """
    subset = sorted(set(u))
    if not subset:
        raise ValueError("u must be nonempty")
    for v in subset:
        g.check_vertex(v)
    if not g.edges:
        return True
    m = build_rigidity_matrix(g, r)
    p = m.prime
    inside = set(subset)
    drop_cols = [c for v in range(g.vertex_count) if v not in inside for c in (2 * v, 2 * v + 1)]
    nrows = len(m.rows)
    if drop_cols:
        restricted_t = [[m.rows[i][c] for i in range(nrows)] for c in drop_cols]
        coeffs = linalg.nullspace(restricted_t, nrows, p)
    else:
        # U = V: every row-space vector qualifies.
        one = 1 if p is not None else Fraction(1)
        zero = 0 if p is not None else Fraction(0)
        coeffs = [[one if i == k else zero for i in range(nrows)] for k in range(nrows)]
    complete_u = Graph(
        g.vertex_count,
        frozenset((a, b) for ai, a in enumerate(subset) for b in subset[ai + 1 :]),
    )
    k_rows = build_rigidity_matrix(complete_u, r).row_lists()
    width = 2 * g.vertex_count
    for c in coeffs:
        vec = [0 if p is not None else Fraction(0)] * width
        for i, ci in enumerate(c):
            if ci:
                row = m.rows[i]
                if p is not None:
                    vec = [(a + ci * b) % p for a, b in zip(vec, row)]
                else:
                    vec = [a + ci * b for a, b in zip(vec, row)]
        if not linalg.in_row_space(k_rows, vec, p):
            return False
    return True
