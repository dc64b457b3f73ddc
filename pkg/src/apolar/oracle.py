"""Deliberately naive reference implementations.

Everything here recomputes results of the main modules by full enumeration
and plain dense Gaussian elimination over Fraction, with no shortcuts and
no shared machinery, so that agreement is meaningful.  Guarded for small
instances only.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DomainError, NotArtinianError
from .exponents import Context, ExponentVector, leq
from .monomial_ideal import Antichain, MonomialIdeal
from .polynomial import Polynomial, diff_action


def brute_docle(ideal: MonomialIdeal, box: ExponentVector) -> Antichain:
    """Scan every point below box for the docle conditions, literally."""
    ctx = ideal.ctx
    for g in ideal.gens:
        if not leq(g, box):
            raise DomainError(f"box {box} does not dominate generator {g}")
    found = []
    ranges = [range(b + 1) for b in box.coords]
    for coords in itertools.product(*ranges):
        m = ExponentVector(ctx, coords)
        if ideal.contains(m):
            continue
        bumped = [
            ExponentVector(ctx, tuple(c + 1 if j == i else c for j, c in enumerate(coords)))
            for i in range(ctx.dim)
        ]
        if all(ideal.contains(b) for b in bumped):
            found.append(m)
    return Antichain(ctx, tuple(found))


def _echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Plain Gaussian elimination over Fraction; returns nonzero echelon rows."""
    work = [list(map(Fraction, r)) for r in rows]
    out: list[list[Fraction]] = []
    ncols = len(work[0]) if work else 0
    lead = 0
    for c in range(ncols):
        src = None
        for i in range(lead, len(work)):
            if work[i][c] != 0:
                src = i
                break
        if src is None:
            continue
        work[lead], work[src] = work[src], work[lead]
        piv = work[lead][c]
        work[lead] = [x / piv for x in work[lead]]
        for i in range(len(work)):
            if i != lead and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[lead])]
        lead += 1
        if lead == len(work):
            break
    return [r for r in work if any(r)]


def _kernel(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Vectors c with sum_i c_i row_i = 0, by eliminating the transpose."""
    nrows = len(rows)
    if nrows == 0:
        return []
    transpose = [[rows[i][c] for i in range(nrows)] for c in range(ncols)]
    ech = _echelon(transpose)
    pivots = []
    for r in ech:
        pivots.append(next(i for i, x in enumerate(r) if x != 0))
    basis = []
    for free in range(nrows):
        if free in pivots:
            continue
        vec = [Fraction(0)] * nrows
        vec[free] = Fraction(1)
        for r, p in zip(ech, pivots):
            vec[p] = -r[free]
        basis.append(vec)
    return basis


def brute_ann(q: Polynomial, max_deg: int, operator_ctx: Context | None = None) -> dict[int, list[Polynomial]]:
    """Kernel bases of the differentiation maps, one degree at a time,
    recomputed by applying the action to every basis monomial."""
    from .exponents import monomials_of_degree

    top = q.homogeneous_degree()
    if top is None:
        raise DomainError("annihilator of the zero polynomial is undefined")
    if max_deg < top + 1:
        raise DomainError("max_deg must be at least deg(q) + 1")
    ctx = operator_ctx or Context.of_dim(q.ctx.dim)
    kernels: dict[int, list[Polynomial]] = {}
    for e in range(max_deg + 1):
        basis = monomials_of_degree(ctx, e)
        images = [diff_action(Polynomial.monomial(m), q) for m in basis]
        support = sorted(
            {ev for img in images for ev in img.support()},
            key=lambda ev: ev.coords,
        )
        rows = [[img.coeff(ev) for ev in support] for img in images]
        vectors = _kernel(rows, len(support)) if support else [
            [Fraction(1) if i == j else Fraction(0) for j in range(len(basis))]
            for i in range(len(basis))
        ]
        kernels[e] = [
            Polynomial(ctx, {m: c for m, c in zip(basis, vec) if c})
            for vec in vectors
        ]
    return kernels


def brute_quotient_dim(generators, cutoff: int) -> int:
    """dim_K R/I by per-degree rank counting over a spanning set."""
    from .exponents import monomials_of_degree

    gens = [g for g in generators if not g.is_zero]
    if not gens:
        raise NotArtinianError("the zero ideal has an infinite-dimensional quotient")
    ctx = gens[0].ctx
    for g in gens:
        g.homogeneous_degree()
    total = 0
    for e in range(cutoff + 1):
        basis = monomials_of_degree(ctx, e)
        index = {ev: i for i, ev in enumerate(basis)}
        rows = []
        for g in gens:
            dg = g.homogeneous_degree()
            if dg > e:
                continue
            for m in monomials_of_degree(ctx, e - dg):
                prod = Polynomial.monomial(m) * g
                rows.append([prod.coeff(ev) for ev in basis])
        standard = len(basis) - len(_echelon(rows) if rows else [])
        if standard == 0:
            return total
        total += standard
    raise NotArtinianError(f"quotient still nonzero at degree {cutoff}")
