"""Degree-by-degree linear algebra over Q for homogeneous artinian ideals.

Instead of a Groebner-basis engine, each graded slice of an ideal is a
Macaulay matrix: rows span the degree-e piece, columns are the degree-e
monomials in LEX-descending order, and row reduction makes the pivot of
every row its LEX-leading monomial.  That is enough to read off Hilbert
functions, socles, initial ideals, colon ideals against power ideals and
apolarity annihilators at desk scale.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import AmbientMismatchError, DomainError, NotArtinianError
from .exponents import (
    Context,
    ExponentVector,
    box_monomials_of_degree,
    monomials_of_degree,
)
from .linalg import SpanBuilder, left_kernel, reduce_vector, rref
from .monomial_ideal import MonomialIdeal
from .polynomial import Polynomial


class GradedSlice:
    """The degree-e piece of a homogeneous ideal, row reduced.

    ``monomial_basis`` lists the degree-e monomials LEX-descending; all row
    and coordinate vectors in this module follow that column order.
    ``pivot_monomials`` is the degree-e piece of the LEX initial ideal and
    ``standard_monomials`` its complement, a basis of (R/I)_e.
    """

    def __init__(self, degree: int, monomial_basis, reduced_rows, pivots):
        self.degree = degree
        self.monomial_basis: tuple[ExponentVector, ...] = tuple(monomial_basis)
        self.reduced_rows: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(r) for r in reduced_rows
        )
        self._pivot_cols: tuple[int, ...] = tuple(pivots)
        pivot_set = set(pivots)
        self.pivot_monomials: frozenset[ExponentVector] = frozenset(
            self.monomial_basis[c] for c in pivots
        )
        self.standard_monomials: tuple[ExponentVector, ...] = tuple(
            ev for c, ev in enumerate(self.monomial_basis) if c not in pivot_set
        )
        self._col_index = {ev: i for i, ev in enumerate(self.monomial_basis)}
        self._std_index = {ev: i for i, ev in enumerate(self.standard_monomials)}
        self._row_of_pivot = {
            self.monomial_basis[c]: row for row, c in zip(self.reduced_rows, pivots)
        }

    @property
    def hilbert_value(self) -> int:
        return len(self.standard_monomials)

    def reduce_monomial(self, ev: ExponentVector) -> list[Fraction]:
        """Coordinates of the coset of a degree-e monomial over the standard
        monomials."""
        out = [Fraction(0)] * len(self.standard_monomials)
        if ev in self._std_index:
            out[self._std_index[ev]] = Fraction(1)
            return out
        row = self._row_of_pivot[ev]
        for s, i in self._std_index.items():
            c = row[self._col_index[s]]
            if c:
                out[i] = -c
        return out

    def reduce_polynomial(self, poly: Polynomial) -> list[Fraction]:
        out = [Fraction(0)] * len(self.standard_monomials)
        for ev, c in poly.terms():
            if ev.degree != self.degree:
                raise DomainError("polynomial degree does not match the slice")
            for i, v in enumerate(self.reduce_monomial(ev)):
                out[i] += c * v
        return out

    def contains(self, vec) -> bool:
        """Membership of a degree-e coefficient vector in the slice row space."""
        return not any(reduce_vector(vec, self.reduced_rows, self._pivot_cols))


class HomogeneousIdealPresentation:
    """A homogeneous ideal given by generators, with cached graded slices."""

    def __init__(self, ctx: Context, generators):
        self.ctx = ctx
        gens = []
        for g in generators:
            if g.ctx != ctx:
                raise AmbientMismatchError("generator from a different context")
            if g.is_zero:
                continue
            g.homogeneous_degree()  # raises DomainError when inhomogeneous
            gens.append(g)
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._slices: dict[int, GradedSlice] = {}
        self._hilbert: list[int] | None = None

    @classmethod
    def from_monomial_ideal(cls, ideal: MonomialIdeal) -> "HomogeneousIdealPresentation":
        return cls(ideal.ctx, [Polynomial.monomial(g) for g in ideal.gens])

    def max_generator_degree(self) -> int:
        return max((g.homogeneous_degree() for g in self.generators), default=0)

    def slice(self, e: int) -> GradedSlice:
        if e < 0:
            raise DomainError("slice degree must be >= 0")
        cached = self._slices.get(e)
        if cached is not None:
            return cached
        basis = monomials_of_degree(self.ctx, e)
        col = {ev.coords: i for i, ev in enumerate(basis)}
        rows = []
        for g in self.generators:
            dg = g.homogeneous_degree()
            if dg > e:
                continue
            g_terms = list(g._terms.items())
            for m in monomials_of_degree(self.ctx, e - dg):
                row = [0] * len(basis)
                mc = m.coords
                for ev, c in g_terms:
                    target = tuple(a + b for a, b in zip(mc, ev.coords))
                    row[col[target]] = c
                rows.append(row)
        reduced, pivots = rref(rows, len(basis))
        sl = GradedSlice(e, basis, reduced, pivots)
        self._slices[e] = sl
        return sl

    def hilbert_function(self, cutoff: int | None = None) -> list[int]:
        """Values of dim (R/I)_e from 0 until the first vanishing degree."""
        if self._hilbert is not None:
            return list(self._hilbert)
        if cutoff is None:
            cutoff = sum(g.homogeneous_degree() for g in self.generators) + self.ctx.dim
        values = []
        e = 0
        while True:
            h = self.slice(e).hilbert_value
            if h == 0:
                break
            values.append(h)
            e += 1
            if e > cutoff:
                raise NotArtinianError(
                    f"no vanishing slice up to degree {cutoff}; ideal is not artinian"
                )
        self._hilbert = values
        return list(values)

    def dimension(self, cutoff: int | None = None) -> int:
        return sum(self.hilbert_function(cutoff))

    def top_degree(self, cutoff: int | None = None) -> int:
        return len(self.hilbert_function(cutoff)) - 1

    def socle(self, cutoff: int | None = None) -> list["SocleClass"]:
        """Per-degree kernel of multiplication by the variables on R/I."""
        hilbert = self.hilbert_function(cutoff)
        d = self.ctx.dim
        classes: list[SocleClass] = []
        for e in range(len(hilbert)):
            std = self.slice(e).standard_monomials
            nxt = self.slice(e + 1)
            width = len(nxt.standard_monomials)
            rows = []
            for s in std:
                blocks: list[Fraction] = []
                for i in range(d):
                    shifted = ExponentVector(
                        self.ctx,
                        tuple(c + 1 if j == i else c for j, c in enumerate(s.coords)),
                    )
                    blocks.extend(nxt.reduce_monomial(shifted))
                rows.append(blocks)
            for vec in left_kernel(rows, d * width):
                classes.append(SocleClass(e, std, tuple(vec)))
        return classes

    def socle_dimension(self, cutoff: int | None = None) -> int:
        return len(self.socle(cutoff))

    def initial_monomials(self, cutoff: int | None = None) -> MonomialIdeal:
        """The LEX initial ideal, assembled from slice pivots (artinian only)."""
        hilbert = self.hilbert_function(cutoff)
        pivots = []
        for e in range(len(hilbert) + 1):
            pivots.extend(self.slice(e).pivot_monomials)
        return MonomialIdeal.from_generators(self.ctx, pivots)

    def equals(self, other: "HomogeneousIdealPresentation") -> bool:
        """Slice-by-slice row space equality through the last generator degree."""
        if self.ctx != other.ctx:
            raise AmbientMismatchError("ideal comparison across contexts")
        top = max(self.max_generator_degree(), other.max_generator_degree())
        for e in range(top + 1):
            if self.slice(e).reduced_rows != other.slice(e).reduced_rows:
                return False
        return True

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


class SocleClass:
    """A socle basis element: coordinates over one degree's standard monomials."""

    def __init__(self, degree, basis_monomials, coords):
        self.degree = degree
        self.basis_monomials = tuple(basis_monomials)
        self.coords = tuple(Fraction(c) for c in coords)

    def polynomial(self) -> Polynomial:
        ctx = self.basis_monomials[0].ctx
        return Polynomial(
            ctx, {ev: c for ev, c in zip(self.basis_monomials, self.coords) if c}
        )

    def __str__(self) -> str:
        return str(self.polynomial())


def ideal_equals(a: HomogeneousIdealPresentation, b: HomogeneousIdealPresentation) -> bool:
    return a.equals(b)


def _vector_to_polynomial(ctx: Context, vec, basis) -> Polynomial:
    """Primitive-integer polynomial from a coefficient vector, LEX-leading
    coefficient positive (columns are LEX-descending, so the first nonzero
    entry is the leading one)."""
    fracs = [Fraction(v) for v in vec]
    denoms = [f.denominator for f in fracs if f]
    mult = lcm(*denoms) if denoms else 1
    ints = [int(f * mult) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return Polynomial(ctx, {ev: c for ev, c in zip(basis, ints) if c})


def _assemble_minimal(ctx: Context, kernel_fn, max_degree: int) -> list[Polynomial]:
    """Collect minimal generators from per-degree kernels.

    kernel_fn(e) must return a basis of the full degree-e piece of the ideal
    as coefficient vectors over the LEX-descending degree-e monomials.  In
    each degree the kernel is reduced against R_1 times the previous degree;
    the surviving independent vectors become new generators.
    """
    d = ctx.dim
    gens: list[Polynomial] = []
    prev_kernel: list[list[Fraction]] = []
    for e in range(max_degree + 1):
        basis = monomials_of_degree(ctx, e)
        span = SpanBuilder(len(basis))
        if e > 0 and prev_kernel:
            prev_basis = monomials_of_degree(ctx, e - 1)
            col = {ev.coords: i for i, ev in enumerate(basis)}
            for i in range(d):
                for vec in prev_kernel:
                    lifted = [Fraction(0)] * len(basis)
                    for c, ev in zip(vec, prev_basis):
                        if c:
                            target = tuple(
                                a + 1 if j == i else a for j, a in enumerate(ev.coords)
                            )
                            lifted[col[target]] = c
                    span.add(lifted)
        kernel = kernel_fn(e)
        for vec in kernel:
            rem = reduce_vector(vec, span.reduced, span.pivots)
            if any(rem):
                gens.append(_vector_to_polynomial(ctx, rem, basis))
                span.add(rem)
        prev_kernel = kernel
    return gens


def power_ideal(ctx: Context, k: int) -> MonomialIdeal:
    """(x_1^k, ..., x_d^k)."""
    if k < 1:
        raise DomainError("power exponent k must be >= 1")
    d = ctx.dim
    return MonomialIdeal.from_generators(
        ctx,
        [
            ExponentVector(ctx, tuple(k if j == i else 0 for j in range(d)))
            for i in range(d)
        ],
    )


def reduce_mod_power_ideal(p: Polynomial, k: int) -> Polynomial:
    """Drop the terms of p lying in (x_1^k, ..., x_d^k)."""
    return Polynomial(
        p.ctx,
        {ev: c for ev, c in p._terms.items() if all(a <= k - 1 for a in ev.coords)},
    )


def colon_power_ideal(k: int, p: Polynomial) -> HomogeneousIdealPresentation:
    """The quotient ideal ((x_1^k, ..., x_d^k) : p) for homogeneous p.

    Degree by degree, the kernel of multiplication by p into the monomial
    quotient R/(x_1^k, ..., x_d^k); minimal generators are extracted along
    the way.  The result is artinian Gorenstein.
    """
    if k < 1:
        raise DomainError("power exponent k must be >= 1")
    ctx = p.ctx
    d = ctx.dim
    n = p.homogeneous_degree()
    if n is None:
        raise DomainError("p must be nonzero")
    p_red = reduce_mod_power_ideal(p, k)
    if p_red.is_zero:
        raise DomainError("p lies in the power ideal (x_1^k, ..., x_d^k)")
    top = d * (k - 1) - n  # top degree of R/I
    p_terms = list(p_red._terms.items())

    def kernel_fn(e: int) -> list[list[Fraction]]:
        cols = box_monomials_of_degree(ctx, e + n, k - 1)
        col = {ev.coords: i for i, ev in enumerate(cols)}
        rows = []
        for m in monomials_of_degree(ctx, e):
            row = [Fraction(0)] * len(cols)
            for q, a in p_terms:
                s = tuple(x + y for x, y in zip(m.coords, q.coords))
                idx = col.get(s)
                if idx is not None:
                    row[idx] += a
            rows.append(row)
        return left_kernel(rows, len(cols))

    return HomogeneousIdealPresentation(
        ctx, _assemble_minimal(ctx, kernel_fn, top + 1)
    )


def ann_partial(
    q: Polynomial, operator_ctx: Context | None = None
) -> HomogeneousIdealPresentation:
    """The apolarity annihilator Ann(q) = {f : f(d/dt_1, ..., d/dt_d) q = 0}.

    Computed from the catalecticant maps R_e -> S_(deg q - e) given by the
    differential action, degree by degree up to deg q + 1.
    """
    m_deg = q.homogeneous_degree()
    if m_deg is None:
        raise DomainError("annihilator of the zero polynomial is undefined")
    ctx = operator_ctx or Context.of_dim(q.ctx.dim)
    if ctx.dim != q.ctx.dim:
        raise AmbientMismatchError("operator and target dimensions differ")
    from .polynomial import diff_action

    def kernel_fn(e: int) -> list[list[Fraction]]:
        if e > m_deg:
            cols: tuple[ExponentVector, ...] = ()
        else:
            cols = monomials_of_degree(q.ctx, m_deg - e)
        col = {ev: i for i, ev in enumerate(cols)}
        rows = []
        for m in monomials_of_degree(ctx, e):
            image = diff_action(Polynomial.monomial(m), q)
            row = [Fraction(0)] * len(cols)
            for ev, c in image._terms.items():
                row[col[ev]] = c
            rows.append(row)
        return left_kernel(rows, len(cols))

    return HomogeneousIdealPresentation(
        ctx, _assemble_minimal(ctx, kernel_fn, m_deg + 1)
    )
