"""Command-line front end.

Every subcommand reads ideals/polynomials in the shared text syntax, runs
one pipeline operation and prints text or JSON (schema version 1).  Exit
codes: 0 success, 1 domain error, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import monomial_ideal as mi
from . import oracle
from .errors import ApolarError, DomainError, ParseError
from .exponents import Context, ExponentVector
from .gorenstein import (
    GorensteinSpec,
    SeriesSpec,
    antipodal,
    monomial_iff_test,
    series_annihilator_check,
    verify_gorenstein_ann,
)
from .graded_engine import HomogeneousIdealPresentation, ann_partial, colon_power_ideal
from .parsing import parse_antichain, parse_ideal, parse_polynomial

SCHEMA = 1


def _context(args) -> Context:
    if args.vars_names:
        names = tuple(n.strip() for n in args.vars_names.split(",") if n.strip())
        if not names:
            raise DomainError("--vars-names must list at least one name")
        if args.vars and args.vars != len(names):
            raise DomainError("--vars disagrees with --vars-names")
        return Context(names)
    if not args.vars:
        raise DomainError("one of --vars or --vars-names is required")
    return Context.of_dim(args.vars)


def _dual_context(ctx: Context) -> Context:
    return ctx.dual("t")


def _monomial_ideal(text: str, ctx: Context) -> mi.MonomialIdeal:
    ideal = parse_ideal(text, ctx)
    if not isinstance(ideal, mi.MonomialIdeal):
        raise DomainError("this operation requires a monomial ideal")
    return ideal


def _presentation(text: str, ctx: Context) -> HomogeneousIdealPresentation:
    ideal = parse_ideal(text, ctx)
    if isinstance(ideal, mi.MonomialIdeal):
        return HomogeneousIdealPresentation.from_monomial_ideal(ideal)
    return ideal


def _ideal_payload(ideal: mi.MonomialIdeal) -> dict:
    return {"ideal": str(ideal), "gens": [list(g.coords) for g in ideal.gens]}


def _antichain_payload(chain: mi.Antichain) -> dict:
    return {"antichain": str(chain), "elems": [list(e.coords) for e in chain.elems]}


def _rename(chain: mi.Antichain, ctx: Context) -> mi.Antichain:
    return mi.Antichain(ctx, tuple(ExponentVector(ctx, e.coords) for e in chain.elems))


def _spec(args, ctx: Context) -> GorensteinSpec:
    p = parse_polynomial(args.p, ctx)
    return GorensteinSpec(args.k, p, dual_ctx=_dual_context(ctx))


def cmd_docle(args, ctx):
    chain = mi.docle(_monomial_ideal(args.ideal, ctx))
    return str(chain), _antichain_payload(chain)


def cmd_closure(args, ctx):
    closed = mi.closure(_monomial_ideal(args.ideal, ctx))
    payload = _ideal_payload(closed)
    payload["whole_poset"] = closed.whole_poset
    text = str(closed) + (" (whole poset)" if closed.whole_poset else "")
    return text, payload


def cmd_saturate(args, ctx):
    sat = mi.saturate(_monomial_ideal(args.ideal, ctx))
    return str(sat), _ideal_payload(sat)


def cmd_decompose(args, ctx):
    j, h = mi.decompose(_monomial_ideal(args.ideal, ctx))
    return f"J = {j}, H = {h}", {"J": str(j), "H": str(h)}


def cmd_inverse_ideal(args, ctx):
    chain = parse_antichain(args.antichain, ctx)
    ideal = mi.inverse_ideal(chain)
    return str(ideal), _ideal_payload(ideal)


def cmd_inverse_system(args, ctx):
    ideal = _monomial_ideal(args.ideal, ctx)
    if not ideal.is_zero_dimensional:
        raise DomainError(
            "inverse-system output is finite only for zero-dimensional ideals"
        )
    chain = _rename(mi.docle(ideal), _dual_context(ctx))
    return str(chain), _antichain_payload(chain)


def cmd_intersect(args, ctx):
    out = mi.intersect(
        _monomial_ideal(args.ideal, ctx), _monomial_ideal(args.other, ctx)
    )
    return str(out), _ideal_payload(out)


def cmd_hilbert(args, ctx):
    pres = _presentation(args.ideal, ctx)
    values = pres.hilbert_function(args.max_degree)
    text = f"{values} dim={sum(values)}"
    return text, {"values": values, "dimension": sum(values)}


def cmd_socle(args, ctx):
    pres = _presentation(args.ideal, ctx)
    classes = pres.socle(args.max_degree)
    lines = [f"degree {c.degree}: {c.polynomial()}" for c in classes]
    payload = {
        "dimension": len(classes),
        "classes": [
            {"degree": c.degree, "polynomial": str(c.polynomial())} for c in classes
        ],
    }
    return "\n".join(lines) or "(empty)", payload


def cmd_initial_ideal(args, ctx):
    pres = _presentation(args.ideal, ctx)
    init = pres.initial_monomials(args.max_degree)
    return str(init), _ideal_payload(init)


def cmd_colon_power(args, ctx):
    pres = colon_power_ideal(args.k, parse_polynomial(args.p, ctx))
    return str(pres), {"generators": [str(g) for g in pres.generators]}


def cmd_ann(args, ctx):
    q = parse_polynomial(args.q, _dual_context(ctx))
    pres = ann_partial(q, ctx)
    return str(pres), {"generators": [str(g) for g in pres.generators]}


def cmd_antipodal(args, ctx):
    poly = antipodal(_spec(args, ctx))
    payload = {
        "polynomial": str(poly),
        "terms": [[list(ev.coords), str(c)] for ev, c in poly.terms()],
    }
    return str(poly), payload


def cmd_gorenstein_check(args, ctx):
    holds = verify_gorenstein_ann(_spec(args, ctx))
    return str(holds).lower(), {"holds": holds}


def cmd_monomial_iff(args, ctx):
    result = monomial_iff_test(_spec(args, ctx))
    payload = {
        "is_monomial_ideal": result.is_monomial_ideal,
        "socle_monomial": str(result.socle_monomial),
        "ann_of_socle_equals_ideal": result.ann_of_socle_equals_ideal,
        "agree": result.agree,
    }
    text = (
        f"is_monomial_ideal={result.is_monomial_ideal} "
        f"socle_monomial={result.socle_monomial} "
        f"ann_of_socle_equals_ideal={result.ann_of_socle_equals_ideal}"
    )
    return text, payload


def cmd_series_check(args, ctx):
    coeffs = tuple(Fraction(c.strip()) for c in args.coeffs.split(","))
    holds = series_annihilator_check(_spec(args, ctx), SeriesSpec(coeffs))
    return str(holds).lower(), {"holds": holds}


def _staircase_grid(ideal: mi.MonomialIdeal):
    if ideal.ctx.dim != 2:
        raise DomainError("staircase diagrams exist only for d = 2")
    chain = mi._docle_or_empty(ideal)
    doc = {e.coords for e in chain.elems}
    width = max([g.coords[0] for g in ideal.gens] + [x for x, _ in doc] + [2]) + 2
    height = max([g.coords[1] for g in ideal.gens] + [y for _, y in doc] + [2]) + 2
    cells = []
    for y in range(height):
        row = []
        for x in range(width):
            ev = ExponentVector(ideal.ctx, (x, y))
            if (x, y) in doc:
                row.append("*")
            elif ideal.contains(ev):
                row.append("#")
            else:
                row.append(".")
        cells.append(row)
    return cells


def cmd_staircase(args, ctx):
    ideal = _monomial_ideal(args.ideal, ctx)
    cells = _staircase_grid(ideal)
    if args.svg:
        size = 20
        h = len(cells)
        w = len(cells[0])
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{w * size}" height="{h * size}">'
        ]
        fill = {"#": "#4477aa", "*": "#ee6677", ".": "#ffffff"}
        for y, row in enumerate(cells):
            for x, c in enumerate(row):
                parts.append(
                    f'<rect x="{x * size}" y="{(h - 1 - y) * size}" '
                    f'width="{size}" height="{size}" fill="{fill[c]}" '
                    f'stroke="#999999"/>'
                )
        parts.append("</svg>")
        text = "\n".join(parts)
        return text, {"svg": text}
    lines = ["".join(row) for row in reversed(cells)]
    legend = "# in ideal, * docle, . outside"
    text = "\n".join(lines + [legend])
    return text, {"rows": ["".join(r) for r in cells], "legend": legend}


def cmd_oracle(args, ctx):
    if args.oracle_op == "docle":
        ideal = _monomial_ideal(args.ideal, ctx)
        box = ExponentVector(ctx, tuple(int(v) for v in args.box.split(",")))
        chain = oracle.brute_docle(ideal, box)
        return str(chain), _antichain_payload(chain)
    if args.oracle_op == "ann":
        q = parse_polynomial(args.q, _dual_context(ctx))
        kernels = oracle.brute_ann(q, args.max_deg, ctx)
        payload = {
            str(e): [str(p) for p in polys] for e, polys in kernels.items()
        }
        text = "\n".join(
            f"degree {e}: {len(polys)} kernel vector(s)"
            for e, polys in kernels.items()
        )
        return text, {"kernels": payload}
    if args.oracle_op == "dim":
        pres = _presentation(args.ideal, ctx)
        dim = oracle.brute_quotient_dim(list(pres.generators), args.cutoff)
        return str(dim), {"dimension": dim}
    if args.oracle_op == "slice":
        pres = _presentation(args.ideal, ctx)
        sl = pres.slice(args.degree)
        payload = {
            "degree": sl.degree,
            "monomial_basis": [list(ev.coords) for ev in sl.monomial_basis],
            "reduced_rows": [[str(c) for c in row] for row in sl.reduced_rows],
            "pivot_monomials": sorted(
                [list(ev.coords) for ev in sl.pivot_monomials]
            ),
            "standard_monomials": [list(ev.coords) for ev in sl.standard_monomials],
        }
        text = (
            f"degree {sl.degree}: rank {len(sl.reduced_rows)}, "
            f"standard monomials {len(sl.standard_monomials)}"
        )
        return text, payload
    raise DomainError(f"unknown oracle operation {args.oracle_op!r}")


def _add_common(sub):
    sub.add_argument("--vars", type=int, help="ambient dimension d (names x1..xd)")
    sub.add_argument(
        "--vars-names", help="comma-separated variable names, e.g. 'x,y'"
    )
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument(
        "--max-degree", type=int, default=None, help="artinian detection cutoff"
    )
    sub.add_argument("--out", help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apolar",
        description="Socles, docles, inverse systems and apolarity, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        p.set_defaults(handler=handler)
        return p

    p = add("docle", cmd_docle, "maximal monomials outside a monomial ideal")
    p.add_argument("ideal")
    p = add("closure", cmd_closure, "closure of a monomial ideal")
    p.add_argument("ideal")
    p = add("saturate", cmd_saturate, "saturation (I : m^infinity)")
    p.add_argument("ideal")
    p = add("decompose", cmd_decompose, "unique I = J cap H decomposition")
    p.add_argument("ideal")
    p = add("inverse-ideal", cmd_inverse_ideal, "ideal with a given docle")
    p.add_argument("antichain")
    p = add(
        "inverse-system",
        cmd_inverse_system,
        "minimal generators of the inverse system (zero-dimensional input)",
    )
    p.add_argument("ideal")
    p = add("intersect", cmd_intersect, "intersection of two monomial ideals")
    p.add_argument("ideal")
    p.add_argument("other")
    p = add("hilbert", cmd_hilbert, "Hilbert function of an artinian quotient")
    p.add_argument("ideal")
    p = add("socle", cmd_socle, "socle classes of an artinian quotient")
    p.add_argument("ideal")
    p = add("initial-ideal", cmd_initial_ideal, "LEX initial ideal (artinian)")
    p.add_argument("ideal")
    p = add("colon-power", cmd_colon_power, "((x1^k, ..., xd^k) : p)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", required=True)
    p = add("ann", cmd_ann, "apolarity annihilator of a t-polynomial")
    p.add_argument("--q", required=True)
    p = add("antipodal", cmd_antipodal, "antipodal polynomial of (d, k, p)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", required=True)
    p = add(
        "gorenstein-check",
        cmd_gorenstein_check,
        "colon ideal equals annihilator of the antipodal polynomial",
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", required=True)
    p = add("monomial-iff", cmd_monomial_iff, "monomial iff annihilator test")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", required=True)
    p = add("series-check", cmd_series_check, "power series annihilator check")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--coeffs", required=True, help="comma-separated a_0..a_M")
    p = add("staircase", cmd_staircase, "d=2 staircase diagram (ASCII or SVG)")
    p.add_argument("ideal")
    p.add_argument("--svg", action="store_true")
    p = sub.add_parser("oracle", help="brute-force reference computations (debugging)")
    osub = p.add_subparsers(dest="oracle_op", required=True)
    op = osub.add_parser("docle", help="definition-level docle scan")
    _add_common(op)
    op.set_defaults(handler=cmd_oracle)
    op.add_argument("ideal")
    op.add_argument("--box", required=True, help="comma-separated bounding box")
    op = osub.add_parser("ann", help="annihilator kernels by direct differentiation")
    _add_common(op)
    op.set_defaults(handler=cmd_oracle)
    op.add_argument("--q", required=True, help="t-polynomial")
    op.add_argument("--max-deg", type=int, required=True)
    op = osub.add_parser("dim", help="quotient dimension by rank counting")
    _add_common(op)
    op.set_defaults(handler=cmd_oracle)
    op.add_argument("ideal")
    op.add_argument("--cutoff", type=int, default=40)
    op = osub.add_parser("slice", help="JSON dump of one graded slice")
    _add_common(op)
    op.set_defaults(handler=cmd_oracle)
    op.add_argument("ideal")
    op.add_argument("--degree", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = _context(args)
        text, payload = args.handler(args, ctx)
        if args.format == "json":
            output = json.dumps({"schema": SCHEMA, **payload})
        else:
            output = text
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(output + "\n")
        else:
            print(output)
        return 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ApolarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
