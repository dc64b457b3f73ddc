import random
from fractions import Fraction

import pytest

from apolar import (
    Context,
    DomainError,
    ExponentVector,
    HomogeneousIdealPresentation,
    MonomialIdeal,
    NotArtinianError,
    Polynomial,
    ann_partial,
    colon_power_ideal,
    ideal_equals,
    monomials_of_degree,
    parse_ideal,
    parse_polynomial,
    power_ideal,
    random_spec,
)
from apolar.oracle import brute_ann, brute_quotient_dim

CTX = Context(("x", "y"))
TCTX = CTX.dual()

I1 = parse_ideal("(x^3, y^2 - x*y)", CTX)
P1 = parse_polynomial("x*y^2 + x^2*y + x^3", CTX)


def as_pres(text, ctx=CTX):
    ideal = parse_ideal(text, ctx)
    if isinstance(ideal, MonomialIdeal):
        return HomogeneousIdealPresentation.from_monomial_ideal(ideal)
    return ideal


def test_slice_fixtures():
    s2 = I1.slice(2)
    assert {str(m) for m in s2.standard_monomials} == {"x^2", "x*y"}
    s0 = I1.slice(0)
    assert [str(m) for m in s0.standard_monomials] == ["1"]
    assert I1.slice(4).standard_monomials == ()


def test_slice_invariants():
    for e in range(5):
        sl = I1.slice(e)
        assert set(sl.pivot_monomials) | set(sl.standard_monomials) == set(
            sl.monomial_basis
        )
        assert not set(sl.pivot_monomials) & set(sl.standard_monomials)
        assert len(sl.reduced_rows) + len(sl.standard_monomials) == len(
            sl.monomial_basis
        )


def test_hilbert_fixtures():
    assert I1.hilbert_function() == [1, 2, 2, 1]
    assert I1.dimension() == 6
    p3 = parse_polynomial("y^6 + x^3*y^3 + x^5*y", CTX)
    assert colon_power_ideal(10, p3).dimension() == 49
    m = as_pres("(x1, x2, x3)", Context.of_dim(3))
    assert m.hilbert_function() == [1]


def test_hilbert_not_artinian():
    with pytest.raises(NotArtinianError):
        as_pres("(x)").hilbert_function()
    with pytest.raises(NotArtinianError):
        HomogeneousIdealPresentation(CTX, []).hilbert_function()


def test_colon_power_fixtures():
    assert colon_power_ideal(4, P1).equals(I1)
    assert colon_power_ideal(3, parse_polynomial("y", CTX)).equals(
        as_pres("(x^3, y^2)")
    )
    with pytest.raises(DomainError):
        colon_power_ideal(2, parse_polynomial("x^2*y^2", CTX))
    with pytest.raises(DomainError):
        colon_power_ideal(0, parse_polynomial("y", CTX))


def test_colon_power_of_constant_is_power_ideal():
    pres = colon_power_ideal(3, Polynomial.constant(CTX, 5))
    assert pres.equals(
        HomogeneousIdealPresentation.from_monomial_ideal(power_ideal(CTX, 3))
    )


def test_socle_fixtures():
    classes = I1.socle()
    assert [(c.degree, str(c.polynomial())) for c in classes] == [(3, "x^2*y")]
    mono = as_pres("(x^3, y^2)")
    assert [(c.degree, str(c.polynomial())) for c in mono.socle()] == [(3, "x^2*y")]
    fat = as_pres("(x^2, x*y, y^2)")
    got = {(c.degree, str(c.polynomial())) for c in fat.socle()}
    assert got == {(1, "x"), (1, "y")}
    assert fat.socle_dimension() == 2
    assert I1.socle_dimension() == 1


def test_initial_monomials_fixtures():
    init = I1.initial_monomials()
    assert {g.coords for g in init.gens} == {(0, 2), (3, 0)}
    mono = parse_ideal("(x^2, x*y^3)", CTX)
    pres = HomogeneousIdealPresentation.from_monomial_ideal(
        MonomialIdeal.from_generators(
            CTX, list(mono.gens) + [ExponentVector(CTX, (0, 5))]
        )
    )
    assert pres.initial_monomials() == MonomialIdeal.from_generators(
        CTX,
        [ExponentVector(CTX, (2, 0)), ExponentVector(CTX, (1, 3)),
         ExponentVector(CTX, (0, 5))],
    )


def test_example3_initial_ideal():
    p3 = parse_polynomial("y^6 + x^3*y^3 + x^5*y", CTX)
    ideal = colon_power_ideal(10, p3)
    init = ideal.initial_monomials()
    assert {g.coords for g in init.gens} == {(0, 7), (1, 6), (3, 5), (5, 4), (10, 0)}
    assert ideal.dimension() == 49
    # pure powers of both variables appear
    assert any(g.coords[1] == 0 for g in init.gens)
    assert any(g.coords[0] == 0 for g in init.gens)


def test_ann_partial_fixtures():
    q = parse_polynomial("t1^2*t2", TCTX)
    assert ann_partial(q, CTX).equals(as_pres("(x^3, y^2)"))
    p = parse_polynomial("3*t1^2*t2 + 3*t1*t2^2 + t2^3", TCTX)
    assert ann_partial(p, CTX).equals(I1)
    cubic = parse_polynomial("t1^3", TCTX)
    assert ann_partial(cubic, CTX).equals(as_pres("(x^4, y)"))
    with pytest.raises(DomainError):
        ann_partial(Polynomial.zero(TCTX), CTX)


def test_ann_partial_contains_high_powers_and_is_artinian():
    rng = random.Random(61)
    for _ in range(10):
        spec = random_spec(rng, dims=(2,), max_k=3)
        from apolar import antipodal

        q = antipodal(spec)
        ann = ann_partial(q, spec.ctx)
        top = q.homogeneous_degree()
        hilbert = ann.hilbert_function()
        assert len(hilbert) <= top + 1
        assert ann.slice(top + 1).standard_monomials == ()


def test_ideal_equals_fixtures():
    assert ideal_equals(colon_power_ideal(4, P1), I1)
    assert not ideal_equals(as_pres("(x^3, y^2)"), I1)
    assert ideal_equals(I1, I1)


def test_minimal_generators_are_minimal():
    # Dropping any generator of a colon presentation changes the ideal.
    pres = colon_power_ideal(4, P1)
    for skip in range(len(pres.generators)):
        rest = [g for i, g in enumerate(pres.generators) if i != skip]
        assert not HomogeneousIdealPresentation(CTX, rest).equals(pres)


def test_oracle_equivalence_random():
    rng = random.Random(62)
    for _ in range(15):
        spec = random_spec(rng, dims=(2, 3), max_k=3)
        ideal = spec.colon_ideal()
        # dimension agrees with naive per-degree reduction
        cutoff = spec.top_degree + 2
        assert ideal.dimension() == brute_quotient_dim(
            list(ideal.generators), cutoff
        )
    for _ in range(10):
        d = rng.choice([2, 3])
        ctx = Context.of_dim(d)
        tctx = ctx.dual()
        deg = rng.randint(1, 3)
        terms = {}
        for ev in monomials_of_degree(tctx, deg):
            if rng.random() < 0.5:
                terms[ev] = Fraction(rng.randint(1, 3))
        if not terms:
            continue
        q = Polynomial(tctx, terms)
        ann = ann_partial(q, ctx)
        kernels = brute_ann(q, deg + 1, ctx)
        for e, vectors in kernels.items():
            expected = len(monomials_of_degree(ctx, e)) - ann.slice(e).hilbert_value
            assert len(vectors) == expected


def test_slice_counts_match_oracle_small_inputs():
    # Brute monomial-by-monomial reduction per degree, d <= 3, k <= 5.
    rng = random.Random(63)
    for _ in range(8):
        spec = random_spec(rng, dims=(2, 3), max_k=5, max_support=3)
        ideal = spec.colon_ideal()
        hilbert = ideal.hilbert_function()
        total = brute_quotient_dim(list(ideal.generators), len(hilbert) + 1)
        assert total == sum(hilbert)
