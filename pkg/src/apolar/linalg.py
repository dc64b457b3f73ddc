"""Exact rational row reduction with an integer core.

Rows enter as rationals or integers, are scaled to primitive integer
vectors, and are eliminated fraction-free with per-row content removal;
pivots are normalized to 1 only at the boundary.  Pivoting is
deterministic: the first nonzero column, scanning left to right.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _intify(row) -> list[int]:
    """Scale a rational row to a primitive integer row (content 1)."""
    fracs = [Fraction(x) for x in row]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * mult) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def rref(rows, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.

    Returns the nonzero rows (each with pivot 1, zeros above and below every
    pivot) and the list of pivot column indices, in order.
    """
    work = [_intify(r) for r in rows]
    work = [r for r in work if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        piv = work[r][c]
        base = work[r]
        for i in range(len(work)):
            if i == r or not work[i][c]:
                continue
            f = work[i][c]
            row = [piv * x - f * y for x, y in zip(work[i], base)]
            g = 0
            for v in row:
                g = gcd(g, v)
            if g > 1:
                row = [v // g for v in row]
            work[i] = row
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    work = work[:r]
    reduced = []
    for row, c in zip(work, pivots):
        piv = row[c]
        reduced.append([Fraction(v, piv) for v in row])
    return reduced, pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[free]
        basis.append(vec)
    return basis


def left_kernel(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of {c : sum_i c_i row_i = 0}."""
    nrows = len(rows)
    if nrows == 0:
        return []
    transpose = [[rows[i][c] for i in range(nrows)] for c in range(ncols)]
    return nullspace(transpose, nrows)


def reduce_vector(vec, reduced, pivots) -> list[Fraction]:
    """Remainder of vec modulo the row space of an RREF matrix."""
    out = [Fraction(x) for x in vec]
    for row, p in zip(reduced, pivots):
        c = out[p]
        if c:
            out = [x - c * y for x, y in zip(out, row)]
    return out


def in_row_space(vec, reduced, pivots) -> bool:
    return not any(reduce_vector(vec, reduced, pivots))


class SpanBuilder:
    """Incrementally maintained RREF of a growing set of rows."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.reduced: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def add(self, vec) -> bool:
        """Add a vector to the span; returns True if it was independent."""
        rem = reduce_vector(vec, self.reduced, self.pivots)
        lead = next((i for i, x in enumerate(rem) if x), None)
        if lead is None:
            return False
        inv = rem[lead]
        rem = [x / inv for x in rem]
        for row in self.reduced:
            c = row[lead]
            if c:
                for i in range(self.ncols):
                    row[i] -= c * rem[i]
        at = next(
            (k for k, p in enumerate(self.pivots) if p > lead), len(self.pivots)
        )
        self.reduced.insert(at, rem)
        self.pivots.insert(at, lead)
        return True

    def contains(self, vec) -> bool:
        return in_row_space(vec, self.reduced, self.pivots)

    @property
    def dim(self) -> int:
        return len(self.pivots)
