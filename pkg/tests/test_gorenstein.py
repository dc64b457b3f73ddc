import itertools
import random
from fractions import Fraction

import pytest

from apolar import (
    Context,
    DomainError,
    ExponentVector,
    GorensteinSpec,
    Polynomial,
    SeriesSpec,
    antipodal,
    dual_socle_poly,
    monomial_iff_test,
    monomials_of_degree,
    multinomial,
    pairing_is_nondegenerate,
    pairing_matrix,
    parse_polynomial,
    random_spec,
    series_annihilator_check,
    verify_gorenstein_ann,
)
from apolar.linalg import rank

CTX = Context(("x", "y"))
TCTX = CTX.dual()

SPEC1 = GorensteinSpec(4, parse_polynomial("x*y^2 + x^2*y + x^3", CTX))
SPEC2 = GorensteinSpec(3, parse_polynomial("y", CTX))
SPEC3 = GorensteinSpec(10, parse_polynomial("y^6 + x^3*y^3 + x^5*y", CTX))


def test_spec_construction():
    assert SPEC1.p_degree == 3 and SPEC1.top_degree == 3
    assert SPEC1.leading_exponent.coords == (1, 2)
    assert SPEC1.socle_monomial.coords == (2, 1)
    assert SPEC3.top_degree == 12
    assert SPEC3.socle_monomial.coords == (9, 3)
    # terms inside the power ideal are dropped on construction
    trimmed = GorensteinSpec(2, parse_polynomial("x^2 + x*y", CTX))
    assert trimmed.p == parse_polynomial("x*y", CTX)
    with pytest.raises(DomainError):
        GorensteinSpec(2, parse_polynomial("x^2", CTX))
    with pytest.raises(DomainError):
        GorensteinSpec(3, parse_polynomial("x^2 + y", CTX))


def test_multinomial():
    assert multinomial(3, (2, 1)) == 3
    assert multinomial(12, (9, 3)) == 220
    assert multinomial(0, (0, 0)) == 1
    with pytest.raises(DomainError):
        multinomial(3, (1, 1))


def test_antipodal_fixtures():
    assert antipodal(SPEC1) == parse_polynomial(
        "3*t1^2*t2 + 3*t1*t2^2 + t2^3", TCTX
    )
    assert antipodal(SPEC2) == parse_polynomial("3*t1^2*t2", TCTX)
    assert antipodal(SPEC3) == parse_polynomial(
        "220*t1^9*t2^3 + 924*t1^6*t2^6 + 495*t1^4*t2^8", TCTX
    )


def test_antipodal_monomial_iff_p_monomial():
    rng = random.Random(71)
    for _ in range(60):
        spec = random_spec(rng)
        anti = antipodal(spec)
        assert len(anti.support()) == len(spec.p.support())
        assert anti.homogeneous_degree() == spec.top_degree


def test_dual_socle_poly_fixtures():
    assert dual_socle_poly(SPEC1) == antipodal(SPEC1)
    assert dual_socle_poly(SPEC2) == antipodal(SPEC2)
    assert dual_socle_poly(SPEC3) == antipodal(SPEC3)


def test_dual_socle_poly_single_monomial_support():
    spec = GorensteinSpec(3, parse_polynomial("x*y", CTX))
    poly = dual_socle_poly(spec)
    assert len(poly.support()) == 1


def test_dual_socle_matches_antipodal_random():
    rng = random.Random(72)
    for _ in range(40):
        spec = random_spec(rng, dims=(2, 3), max_k=4)
        assert dual_socle_poly(spec) == antipodal(spec)


def test_verify_gorenstein_ann_fixtures():
    assert verify_gorenstein_ann(SPEC1)
    assert verify_gorenstein_ann(SPEC2)
    assert verify_gorenstein_ann(SPEC3)


def test_monomial_iff_fixtures():
    r1 = monomial_iff_test(SPEC1)
    assert (r1.is_monomial_ideal, r1.ann_of_socle_equals_ideal) == (False, False)
    assert r1.agree
    r2 = monomial_iff_test(SPEC2)
    assert (r2.is_monomial_ideal, r2.ann_of_socle_equals_ideal) == (True, True)
    assert str(r2.socle_monomial) == "x^2*y"
    r3 = monomial_iff_test(SPEC3)
    assert (r3.is_monomial_ideal, r3.ann_of_socle_equals_ideal) == (False, False)
    assert str(r3.socle_monomial) == "x^9*y^3"


def test_socle_pair_binomials_in_ideal():
    # a_i x^((k-1)1 - j) - a_j x^((k-1)1 - i) lies in the colon ideal.
    for spec in (SPEC1, SPEC3):
        ideal = spec.colon_ideal()
        support = spec.p.terms()
        for (i_ev, a_i), (j_ev, a_j) in itertools.combinations(support, 2):
            comp_i = ExponentVector(
                spec.ctx, tuple(spec.k - 1 - c for c in i_ev.coords)
            )
            comp_j = ExponentVector(
                spec.ctx, tuple(spec.k - 1 - c for c in j_ev.coords)
            )
            binomial = Polynomial(spec.ctx, {comp_j: a_i, comp_i: -a_j})
            sl = ideal.slice(spec.top_degree)
            assert not any(sl.reduce_polynomial(binomial))


def test_one_element_socle_classes():
    # Each x^((k-1)1 - i), i in the support, lies in (I : m) \ I.
    for spec in (SPEC1, SPEC2, SPEC3):
        ideal = spec.colon_ideal()
        sl = ideal.slice(spec.top_degree)
        above = ideal.slice(spec.top_degree + 1)
        assert above.standard_monomials == ()
        for i_ev, _ in spec.p.terms():
            comp = ExponentVector(
                spec.ctx, tuple(spec.k - 1 - c for c in i_ev.coords)
            )
            assert any(sl.reduce_monomial(comp))  # not in I


def test_claim_ij_combinatorics():
    # Pairs summing to d(k-1): either a coordinate sum reaches k, or the sum
    # is exactly (k-1) everywhere.
    for d in (1, 2, 3):
        ctx = Context.of_dim(d)
        for k in (1, 2, 3, 4):
            for s in monomials_of_degree(ctx, d * (k - 1)):
                assert max(s.coords) >= k or all(c == k - 1 for c in s.coords)


def test_box_of_standard_monomials():
    for spec in (SPEC1, SPEC2, SPEC3):
        ideal = spec.colon_ideal()
        cap = spec.socle_monomial.coords
        for coords in itertools.product(*(range(c + 1) for c in cap)):
            ev = ExponentVector(spec.ctx, coords)
            assert ev in ideal.slice(ev.degree).standard_monomials


def test_hilbert_symmetry_and_pairing_fixtures():
    for spec in (SPEC1, SPEC2, SPEC3):
        h = spec.colon_ideal().hilbert_function()
        top = spec.top_degree
        assert len(h) == top + 1
        assert all(h[i] == h[top - i] for i in range(top + 1))
        for i in range(top + 1):
            matrix = pairing_matrix(spec, i)
            assert len(matrix) == h[i] and len(matrix[0]) == h[top - i]
            assert rank(matrix, h[top - i]) == min(h[i], h[top - i])
            assert pairing_is_nondegenerate(spec, i)


def test_series_spec_validation():
    with pytest.raises(DomainError):
        SeriesSpec((1, 0, 1))
    assert SeriesSpec.exponential(3).coeffs == (
        Fraction(1),
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 6),
    )
    assert SeriesSpec.geometric(2).coeffs == (1, 1, 1)


def test_series_annihilator_fixtures():
    assert series_annihilator_check(SPEC1, SeriesSpec.exponential(3))
    assert series_annihilator_check(SPEC1, SeriesSpec.geometric(3))
    with pytest.raises(DomainError):
        series_annihilator_check(SPEC1, SeriesSpec((1, 1)))


def test_series_annihilator_random():
    rng = random.Random(73)
    for _ in range(10):
        spec = random_spec(rng, dims=(2,), max_k=3)
        top = spec.top_degree
        series = SeriesSpec(
            tuple(Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(top + 1))
        )
        assert series_annihilator_check(spec, series)


def test_search_tooling_reproducible():
    a = random_spec(random.Random(99))
    b = random_spec(random.Random(99))
    assert a.k == b.k and a.p == b.p
