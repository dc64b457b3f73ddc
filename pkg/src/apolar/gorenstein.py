"""The Gorenstein pipeline for homogeneous zero-dimensional colon ideals
((x_1^k, ..., x_d^k) : p).

Provides the antipodal polynomial (the multinomial-weighted reflection of p
through (k-1)*(1,...,1)), the dual socle polynomial computed through quotient
reductions, the annihilator identity check, the monomial if-and-only-if
test, and the power-series freedom check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exponents import Context, ExponentVector, lex_key, monomials_of_degree
from .graded_engine import (
    HomogeneousIdealPresentation,
    ann_partial,
    colon_power_ideal,
    reduce_mod_power_ideal,
)
from .linalg import left_kernel, rank, rref
from .polynomial import Polynomial


def multinomial(total: int, parts) -> int:
    parts = tuple(parts)
    if any(p < 0 for p in parts) or sum(parts) != total:
        raise DomainError(f"invalid multinomial arguments {total}; {parts}")
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


class GorensteinSpec:
    """Ambient data (d, k, p) of a colon ideal ((x_1^k, ..., x_d^k) : p).

    p is stored reduced modulo the power ideal: support exponents with a
    coordinate >= k vanish in the quotient and are dropped on construction.
    """

    def __init__(self, k: int, p: Polynomial, dual_ctx: Context | None = None):
        if k < 1:
            raise DomainError("power exponent k must be >= 1")
        if p.homogeneous_degree() is None:
            raise DomainError("p must be nonzero")
        reduced = reduce_mod_power_ideal(p, k)
        if reduced.is_zero:
            raise DomainError("p lies in the power ideal (x_1^k, ..., x_d^k)")
        self.ctx = p.ctx
        self.k = k
        self.p = reduced
        self.p_degree: int = reduced.homogeneous_degree()
        self.d = self.ctx.dim
        self.top_degree: int = self.d * (k - 1) - self.p_degree
        self.leading_exponent: ExponentVector = max(reduced.support(), key=lex_key)
        self.dual_ctx = dual_ctx or self.ctx.dual("t")
        if self.dual_ctx.dim != self.d:
            raise DomainError("dual context dimension mismatch")
        self._colon: HomogeneousIdealPresentation | None = None

    @property
    def socle_monomial(self) -> ExponentVector:
        """x^((k-1)*(1,...,1) - mu), mu the LEX-largest exponent of p."""
        return ExponentVector(
            self.ctx, tuple(self.k - 1 - c for c in self.leading_exponent.coords)
        )

    def colon_ideal(self) -> HomogeneousIdealPresentation:
        if self._colon is None:
            self._colon = colon_power_ideal(self.k, self.p)
        return self._colon

    def __repr__(self) -> str:
        return f"GorensteinSpec(d={self.d}, k={self.k}, p={self.p})"


def antipodal(spec: GorensteinSpec) -> Polynomial:
    """The antipodal polynomial: support reflected through (k-1)*(1,...,1),
    each coefficient scaled by the multinomial coefficient of the reflection."""
    terms = {}
    for ev, a in spec.p.terms():
        comp = tuple(spec.k - 1 - c for c in ev.coords)
        weight = multinomial(spec.top_degree, comp)
        terms[ExponentVector(spec.dual_ctx, comp)] = a * weight
    return Polynomial(spec.dual_ctx, terms)


def dual_socle_poly(spec: GorensteinSpec) -> Polynomial:
    """(t_1 xbar_1 + ... + t_d xbar_d)^M read off against the socle monomial.

    Expanded by the multinomial theorem, with every x-monomial reduced in the
    quotient by the colon ideal; the result is normalized so its LEX-largest
    term agrees with the antipodal polynomial exactly.
    """
    ideal = spec.colon_ideal()
    sl = ideal.slice(spec.top_degree)
    std = sl.standard_monomials
    if len(std) != 1 or std[0] != spec.socle_monomial:
        raise DomainError(
            "top graded piece is not spanned by the socle monomial"
        )
    raw = {}
    for j in monomials_of_degree(spec.ctx, spec.top_degree):
        c = sl.reduce_monomial(j)[0]
        if c:
            weight = multinomial(spec.top_degree, j.coords)
            raw[ExponentVector(spec.dual_ctx, j.coords)] = weight * c
    raw_poly = Polynomial(spec.dual_ctx, raw)
    lead = max(raw_poly.support(), key=lex_key)
    reference = antipodal(spec).coeff(lead)
    if reference == 0:
        raise DomainError("dual socle polynomial support differs from antipodal")
    return raw_poly.scale(reference / raw_poly.coeff(lead))


def verify_gorenstein_ann(spec: GorensteinSpec) -> bool:
    """((x_1^k, ..., x_d^k) : p) == Ann(antipodal(p)), slice by slice."""
    return spec.colon_ideal().equals(ann_partial(antipodal(spec), spec.ctx))


@dataclass(frozen=True)
class MonomialIffResult:
    is_monomial_ideal: bool
    socle_monomial: ExponentVector
    ann_of_socle_equals_ideal: bool

    @property
    def agree(self) -> bool:
        return self.is_monomial_ideal == self.ann_of_socle_equals_ideal


def monomial_iff_test(spec: GorensteinSpec) -> MonomialIffResult:
    """The ideal equals the annihilator of its socle monomial iff it is a
    monomial ideal; both sides are computed independently."""
    ideal = spec.colon_ideal()
    initial = ideal.initial_monomials()
    is_monomial = ideal.equals(
        HomogeneousIdealPresentation.from_monomial_ideal(initial)
    )
    q = Polynomial.monomial(
        ExponentVector(spec.dual_ctx, spec.socle_monomial.coords)
    )
    ann_equal = ideal.equals(ann_partial(q, spec.ctx))
    return MonomialIffResult(is_monomial, spec.socle_monomial, ann_equal)


@dataclass(frozen=True)
class SeriesSpec:
    """Truncated coefficients a_0, ..., a_M of a formal power series, all
    required nonzero."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coerced = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coerced)
        if any(c == 0 for c in coerced):
            raise DomainError("series coefficients must all be nonzero")

    @classmethod
    def exponential(cls, top: int) -> "SeriesSpec":
        return cls(tuple(Fraction(1, math.factorial(n)) for n in range(top + 1)))

    @classmethod
    def geometric(cls, top: int) -> "SeriesSpec":
        return cls((Fraction(1),) * (top + 1))


def _falling(q: int, p: int) -> int:
    out = 1
    for v in range(q - p + 1, q + 1):
        out *= v
    return out


def series_annihilator_check(spec: GorensteinSpec, series: SeriesSpec) -> bool:
    """Verify I = {g : g(d/dt) f(t_1 xbar_1 + ... + t_d xbar_d) = 0} degree by
    degree, plus the vanishing boundary of the powers of t_1 xbar_1 + ....

    Requires the truncated coefficients a_0, ..., a_M (M the top quotient
    degree); longer lists are truncated.
    """
    ideal = spec.colon_ideal()
    top = spec.top_degree
    if len(series.coeffs) < top + 1:
        raise DomainError(f"need series coefficients a_0..a_{top}")
    coeffs = series.coeffs[: top + 1]

    # Reduction tables: degree n -> {exponent coords -> coordinates over the
    # standard monomials of degree n}.
    tables = {}
    for n in range(top + 1):
        sl = ideal.slice(n)
        tables[n] = {
            j.coords: sl.reduce_monomial(j)
            for j in monomials_of_degree(spec.ctx, n)
        }

    # Power boundary: (t_1 xbar_1 + ...)^n is nonzero iff n <= top.
    if not any(any(v) for v in tables[top].values()):
        return False
    if ideal.slice(top + 1).standard_monomials:
        return False

    d = spec.d
    for e in range(top + 1):
        basis = monomials_of_degree(spec.ctx, e)
        columns: dict[tuple, int] = {}
        raw_rows = []
        for m in basis:
            row: dict[tuple, Fraction] = {}
            for n in range(e, top + 1):
                scale = coeffs[n]
                for j, red in tables[n].items():
                    if any(jc < mc for jc, mc in zip(j, m.coords)):
                        continue
                    fall = 1
                    for jc, mc in zip(j, m.coords):
                        fall = fall * _falling(jc, mc)
                    c = scale * multinomial(n, j) * fall
                    tkey = tuple(jc - mc for jc, mc in zip(j, m.coords))
                    for pos, v in enumerate(red):
                        if v:
                            key = (tkey, pos)
                            columns.setdefault(key, len(columns))
                            row[key] = row.get(key, Fraction(0)) + c * v
            raw_rows.append(row)
        ncols = len(columns)
        rows = []
        for row in raw_rows:
            vec = [Fraction(0)] * ncols
            for key, v in row.items():
                vec[columns[key]] = v
            rows.append(vec)
        kernel = left_kernel(rows, ncols)
        reduced, _ = rref(kernel, len(basis))
        if tuple(tuple(r) for r in reduced) != ideal.slice(e).reduced_rows:
            return False
    return True


def pairing_matrix(spec: GorensteinSpec, i: int) -> list[list[Fraction]]:
    """Matrix of the multiplication pairing (R/I)_i x (R/I)_(M-i) -> (R/I)_M
    in the standard monomial bases, read against the socle monomial."""
    if not 0 <= i <= spec.top_degree:
        raise DomainError("pairing degree out of range")
    ideal = spec.colon_ideal()
    top_slice = ideal.slice(spec.top_degree)
    rows_basis = ideal.slice(i).standard_monomials
    cols_basis = ideal.slice(spec.top_degree - i).standard_monomials
    out = []
    for r in rows_basis:
        row = []
        for c in cols_basis:
            prod = ExponentVector(
                spec.ctx, tuple(a + b for a, b in zip(r.coords, c.coords))
            )
            red = top_slice.reduce_monomial(prod)
            row.append(red[0] if red else Fraction(0))
        out.append(row)
    return out


def pairing_is_nondegenerate(spec: GorensteinSpec, i: int) -> bool:
    matrix = pairing_matrix(spec, i)
    rows = len(matrix)
    cols = len(matrix[0]) if matrix else 0
    if rows == 0 or cols == 0:
        return rows == cols
    return rank(matrix, cols) == min(rows, cols)


def random_spec(rng, dims=(2, 3), max_k: int = 4, max_support: int = 4) -> GorensteinSpec:
    """A random ambient spec: search tooling for experiments and tests."""
    d = rng.choice(list(dims))
    k = rng.randint(1, max_k)
    ctx = Context.of_dim(d)
    n = rng.randint(0, d * (k - 1))
    pool = [
        ev
        for ev in monomials_of_degree(ctx, n)
        if all(c <= k - 1 for c in ev.coords)
    ]
    size = rng.randint(1, min(max_support, len(pool)))
    support = rng.sample(pool, size)
    terms = {}
    for ev in support:
        num = rng.randint(1, 6) * rng.choice([1, -1])
        terms[ev] = Fraction(num, rng.randint(1, 4))
    return GorensteinSpec(k, Polynomial(ctx, terms))
