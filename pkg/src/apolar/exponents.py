"""Exponent vectors of a fixed ambient dimension and the two orders on them.

A monomial x1^a1*...*xd^ad is identified with its exponent vector
(a1, ..., ad).  Two orders matter: the componentwise partial order ``leq``
(divisibility of monomials) and the total order ``lex_cmp`` determined by
x1 < x2 < ... < xd, which compares the *last* coordinate first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AmbientMismatchError, DomainError


@dataclass(frozen=True)
class Context:
    """Ambient context: the number of variables and their display names.

    Every exponent vector, ideal and polynomial is tied to a context.
    Values whose contexts differ structurally never mix in arithmetic;
    operator/target actions only require equal dimension.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) < 1:
            raise DomainError("ambient context needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise DomainError("variable names must be distinct")

    @classmethod
    def of_dim(cls, d: int, prefix: str = "x") -> "Context":
        if d < 1:
            raise DomainError("ambient dimension must be >= 1")
        return cls(tuple(f"{prefix}{i}" for i in range(1, d + 1)))

    @property
    def dim(self) -> int:
        return len(self.names)

    def dual(self, prefix: str = "t") -> "Context":
        """Same dimension, fresh variable alphabet (operators vs targets)."""
        return Context.of_dim(self.dim, prefix)


@dataclass(frozen=True)
class ExponentVector:
    """A point of N_0^d, i.e. the exponent vector of a monomial."""

    ctx: Context
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.ctx.dim:
            raise AmbientMismatchError(
                f"expected {self.ctx.dim} coordinates, got {len(self.coords)}"
            )
        if any(c < 0 for c in self.coords):
            raise DomainError(f"negative exponent in {self.coords}")

    @property
    def degree(self) -> int:
        return sum(self.coords)

    def __str__(self) -> str:
        parts = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(self.ctx.names, self.coords)
            if e != 0
        ]
        return "*".join(parts) if parts else "1"


def zero_vector(ctx: Context) -> ExponentVector:
    return ExponentVector(ctx, (0,) * ctx.dim)


def unit_vector(ctx: Context, i: int) -> ExponentVector:
    """The i-th (0-based) standard unit vector e_i."""
    if not 0 <= i < ctx.dim:
        raise DomainError(f"variable index {i} out of range for dim {ctx.dim}")
    return ExponentVector(ctx, tuple(1 if j == i else 0 for j in range(ctx.dim)))


def _require_same_dim(a: ExponentVector, b: ExponentVector) -> None:
    if a.ctx.dim != b.ctx.dim:
        raise AmbientMismatchError(
            f"ambient dimensions differ: {a.ctx.dim} vs {b.ctx.dim}"
        )


def _require_same_ctx(a: ExponentVector, b: ExponentVector) -> None:
    if a.ctx != b.ctx:
        raise AmbientMismatchError(f"ambient contexts differ: {a.ctx} vs {b.ctx}")


def leq(a: ExponentVector, b: ExponentVector) -> bool:
    """Componentwise a <= b, i.e. the monomial of a divides that of b."""
    _require_same_dim(a, b)
    return all(x <= y for x, y in zip(a.coords, b.coords))


def lex_cmp(a: ExponentVector, b: ExponentVector) -> int:
    """LEX comparison (-1, 0, +1) with the last coordinate most significant."""
    _require_same_dim(a, b)
    for x, y in zip(reversed(a.coords), reversed(b.coords)):
        if x != y:
            return -1 if x < y else 1
    return 0


def lex_key(a: ExponentVector) -> tuple[int, ...]:
    """Sort key realizing lex_cmp: ascending sort puts LEX-smallest first."""
    return tuple(reversed(a.coords))


def add(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    _require_same_ctx(a, b)
    return ExponentVector(a.ctx, tuple(x + y for x, y in zip(a.coords, b.coords)))


def sub_checked(a: ExponentVector, b: ExponentVector) -> ExponentVector | None:
    """a - b componentwise, or None if any coordinate would go negative."""
    _require_same_ctx(a, b)
    diff = tuple(x - y for x, y in zip(a.coords, b.coords))
    if any(c < 0 for c in diff):
        return None
    return ExponentVector(a.ctx, diff)


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomials_of_degree(ctx: Context, n: int) -> tuple[ExponentVector, ...]:
    """All exponent vectors of total degree n, LEX-descending (leading first)."""
    evs = [ExponentVector(ctx, c) for c in _compositions(n, ctx.dim)]
    evs.sort(key=lex_key, reverse=True)
    return tuple(evs)


@lru_cache(maxsize=None)
def box_monomials_of_degree(ctx: Context, n: int, cap: int) -> tuple[ExponentVector, ...]:
    """Degree-n exponent vectors with every coordinate <= cap, LEX-descending."""
    return tuple(
        ev for ev in monomials_of_degree(ctx, n) if all(c <= cap for c in ev.coords)
    )
