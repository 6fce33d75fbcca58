"""Exact dense linear algebra over the rationals and prime fields.

Matrices are lists of equal-length rows. Rational ranks go through
fraction-free (Bareiss) elimination on integer rows so entries stay
integral; kernels and reduced echelon forms use Fractions. Prime-field
paths keep everything as Python ints reduced mod p.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Row = list
Matrix = list


def rank_mod_p(rows: Matrix, p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        inv = pow(pr[c], -1, p)
        pr[c:] = [x * inv % p for x in pr[c:]]
        prc = pr[c:]
        for i in range(rank + 1, nrows):
            ri = m[i]
            f = ri[c]
            if f:
                ri[c:] = [(a - f * b) % p for a, b in zip(ri[c:], prc)]
        rank += 1
    return rank


def rank_bareiss(rows: Matrix) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Each pivot step divides by the previous pivot; all divisions are exact,
    so entries remain integers (they are minors of the input).
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[c]
        prc = pr[c:]
        for i in range(rank + 1, nrows):
            ri = m[i]
            f = ri[c]
            ri[c:] = [(pv * a - f * b) // prev for a, b in zip(ri[c:], prc)]
        prev = pv
        rank += 1
    return rank


def scale_rows_to_int(rows: Matrix) -> Matrix:
    """Clear denominators row by row (row scaling preserves rank)."""
    out = []
    for r in rows:
        fracs = [Fraction(x) for x in r]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * mult) for f in fracs])
    return out


def rank_rational(rows: Matrix) -> int:
    return rank_bareiss(scale_rows_to_int(rows))


def rref(rows: Matrix, ncols: int, p: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns, over Q or F_p."""
    if p is None:
        m = [[Fraction(x) for x in r] for r in rows]
    else:
        m = [[x % p for x in r] for r in rows]
    nrows = len(m)
    pivots: list[int] = []
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        if p is None:
            inv = 1 / pr[c]
            m[rank] = pr = [x * inv for x in pr]
        else:
            inv = pow(pr[c], -1, p)
            m[rank] = pr = [x * inv % p for x in pr]
        for i in range(nrows):
            if i == rank:
                continue
            f = m[i][c]
            if f:
                if p is None:
                    m[i] = [a - f * b for a, b in zip(m[i], pr)]
                else:
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], pr)]
        pivots.append(c)
        rank += 1
    return m, pivots


def nullspace(rows: Matrix, ncols: int, p: int | None = None) -> list[Row]:
    """Canonical right-kernel basis: one vector per free column."""
    reduced, pivots = rref(rows, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols if p is None else [0] * ncols
        vec[free] = Fraction(1) if p is None else 1
        for r, c in enumerate(pivots):
            coef = reduced[r][free]
            vec[c] = -coef if p is None else (-coef) % p
        basis.append(vec)
    return basis


def in_row_space(rows: Matrix, vec: Row, p: int | None = None) -> bool:
    if all(x == 0 for x in vec):
        return True
    if p is None:
        base = scale_rows_to_int(rows)
        extended = base + scale_rows_to_int([vec])
        return rank_bareiss(base) == rank_bareiss(extended)
    return rank_mod_p(rows, p) == rank_mod_p(rows + [vec], p)


def primitive_integer_vector(vec: list[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers with positive lead."""
    fracs = [Fraction(x) for x in vec]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * mult) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints
