"""The full apolarity pipeline on three Gorenstein colon ideals.

For I = ((x1^k, ..., xd^k) : p) the antipodal polynomial of p generates the
inverse system of I: Ann(antipodal(p)) recovers I exactly, and it is a
monomial precisely when I is a monomial ideal.
"""

from apolar import (
    Context,
    GorensteinSpec,
    ann_partial,
    antipodal,
    dual_socle_poly,
    monomial_iff_test,
    parse_polynomial,
    verify_gorenstein_ann,
)

ctx = Context(("x", "y"))

cases = [
    (4, "x*y^2 + x^2*y + x^3"),
    (3, "y"),
    (10, "y^6 + x^3*y^3 + x^5*y"),
]

for k, p_text in cases:
    spec = GorensteinSpec(k, parse_polynomial(p_text, ctx))
    ideal = spec.colon_ideal()
    print(f"k = {k}, p = {spec.p}")
    print("  I = ((x^k, y^k) : p) =", ideal)
    print("  Hilbert function:", ideal.hilbert_function(), "dim =", ideal.dimension())
    print("  LEX initial ideal:", ideal.initial_monomials())
    print("  socle monomial:", spec.socle_monomial)

    anti = antipodal(spec)
    print("  antipodal polynomial:", anti)
    print("  dual socle polynomial (engine):", dual_socle_poly(spec))
    print("  Ann(antipodal) =", ann_partial(anti, ctx))
    print("  colon == Ann(antipodal):", verify_gorenstein_ann(spec))

    result = monomial_iff_test(spec)
    print(
        "  monomial ideal:", result.is_monomial_ideal,
        "| I == Ann(socle monomial):", result.ann_of_socle_equals_ideal,
    )
    print()
