"""Sparse multivariate polynomials over exact rationals, plus the
differential action and its coefficient-free contraction variant.

The left operand of an action is read as a differential operator, the right
operand as a target; they may live in different variable alphabets (for
instance x-operators acting on t-targets) as long as the dimensions agree.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AmbientMismatchError, DomainError
from .exponents import (
    Context,
    ExponentVector,
    add as ev_add,
    lex_key,
    sub_checked,
    unit_vector,
)

Rational = Fraction


class Polynomial:
    """A finitely supported map from exponent vectors to rationals."""

    __slots__ = ("ctx", "_terms")
    __hash__ = None

    def __init__(self, ctx: Context, terms=None):
        self.ctx = ctx
        clean: dict[ExponentVector, Fraction] = {}
        for ev, c in dict(terms or {}).items():
            if ev.ctx != ctx:
                raise AmbientMismatchError("term exponent from a different context")
            c = Fraction(c)
            if c != 0:
                clean[ev] = c
        self._terms = clean

    @classmethod
    def zero(cls, ctx: Context) -> "Polynomial":
        return cls(ctx)

    @classmethod
    def constant(cls, ctx: Context, c) -> "Polynomial":
        return cls(ctx, {ExponentVector(ctx, (0,) * ctx.dim): Fraction(c)})

    @classmethod
    def monomial(cls, ev: ExponentVector, coeff=1) -> "Polynomial":
        return cls(ev.ctx, {ev: Fraction(coeff)})

    @classmethod
    def variable(cls, ctx: Context, i: int) -> "Polynomial":
        return cls.monomial(unit_vector(ctx, i))

    def terms(self) -> list[tuple[ExponentVector, Fraction]]:
        """Terms in canonical order (LEX ascending)."""
        return sorted(self._terms.items(), key=lambda t: lex_key(t[0]))

    def coeff(self, ev: ExponentVector) -> Fraction:
        return self._terms.get(ev, Fraction(0))

    def support(self) -> set[ExponentVector]:
        return set(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ctx == other.ctx
            and self._terms == other._terms
        )

    def _require_same_ctx(self, other: "Polynomial") -> None:
        if self.ctx != other.ctx:
            raise AmbientMismatchError("polynomial arithmetic across contexts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_ctx(other)
        acc = dict(self._terms)
        for ev, c in other._terms.items():
            acc[ev] = acc.get(ev, Fraction(0)) + c
        return Polynomial(self.ctx, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ctx, {ev: -c for ev, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.ctx, {ev: c * v for ev, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._require_same_ctx(other)
        acc: dict[ExponentVector, Fraction] = {}
        for ev1, c1 in self._terms.items():
            for ev2, c2 in other._terms.items():
                ev = ev_add(ev1, ev2)
                acc[ev] = acc.get(ev, Fraction(0)) + c1 * c2
        return Polynomial(self.ctx, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.constant(self.ctx, 1)
        for _ in range(n):
            result = result * self
        return result

    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        if self.is_zero:
            return None
        return max(ev.degree for ev in self._terms)

    def is_homogeneous(self) -> bool:
        return len({ev.degree for ev in self._terms}) <= 1

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms; None for zero, error otherwise."""
        degrees = {ev.degree for ev in self._terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise DomainError("polynomial is not homogeneous")
        return degrees.pop()

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for ev, c in self.terms():
            mono = str(ev)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _falling(q: int, p: int) -> int:
    """q! / (q-p)! as an exact integer."""
    out = 1
    for v in range(q - p + 1, q + 1):
        out *= v
    return out


def _action(op: Polynomial, target: Polynomial, with_coeffs: bool) -> Polynomial:
    if op.ctx.dim != target.ctx.dim:
        raise AmbientMismatchError("action across different ambient dimensions")
    acc: dict[ExponentVector, Fraction] = {}
    for p, a in op._terms.items():
        p_in_target = ExponentVector(target.ctx, p.coords)
        for q, b in target._terms.items():
            rest = sub_checked(q, p_in_target)
            if rest is None:
                continue
            c = a * b
            if with_coeffs:
                for qi, pi in zip(q.coords, p.coords):
                    c *= _falling(qi, pi)
            acc[rest] = acc.get(rest, Fraction(0)) + c
    return Polynomial(target.ctx, acc)


def diff_action(op: Polynomial, target: Polynomial) -> Polynomial:
    """The formal-derivative action: x^p o y^q = prod(q_i!/(q_i-p_i)!) y^(q-p)
    when p <= q componentwise, else 0, extended bilinearly."""
    return _action(op, target, with_coeffs=True)


def contraction_action(op: Polynomial, target: Polynomial) -> Polynomial:
    """The same action with every factorial coefficient replaced by 1."""
    return _action(op, target, with_coeffs=False)


def annihilates(op: Polynomial, target: Polynomial) -> bool:
    """True iff the differential action of op kills the target."""
    return diff_action(op, target).is_zero
