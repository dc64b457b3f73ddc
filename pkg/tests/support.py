"""Shared random generators for the property tests (seeded, deterministic)."""

from __future__ import annotations

from apolar import Antichain, Context, ExponentVector, MonomialIdeal


def rand_point(rng, ctx, max_coord):
    return ExponentVector(ctx, tuple(rng.randint(0, max_coord) for _ in range(ctx.dim)))


def rand_antichain(rng, d, max_coord=8, max_pts=6) -> Antichain:
    ctx = Context.of_dim(d)
    pts = [rand_point(rng, ctx, max_coord) for _ in range(rng.randint(1, max_pts))]
    return Antichain.maxima(ctx, pts)


def rand_zero_dim_ideal(rng, d, max_coord=8) -> MonomialIdeal:
    """A proper zero-dimensional monomial ideal: pure powers plus noise."""
    ctx = Context.of_dim(d)
    while True:
        gens = [
            ExponentVector(
                ctx,
                tuple(rng.randint(1, max_coord) if j == i else 0 for j in range(d)),
            )
            for i in range(d)
        ]
        for _ in range(rng.randint(0, 2 * d)):
            gens.append(rand_point(rng, ctx, max_coord))
        ideal = MonomialIdeal.from_generators(ctx, gens)
        if not ideal.is_unit:
            return ideal


def rand_proper_ideal(rng, d, max_coord=6, max_gens=5) -> MonomialIdeal:
    """A proper nonzero monomial ideal, not necessarily zero-dimensional."""
    ctx = Context.of_dim(d)
    while True:
        gens = [rand_point(rng, ctx, max_coord) for _ in range(rng.randint(1, max_gens))]
        ideal = MonomialIdeal.from_generators(ctx, gens)
        if not ideal.is_unit and not ideal.is_zero:
            return ideal
