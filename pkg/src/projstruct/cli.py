"""Command-line front end.

Every command prints one document on stdout in the chosen format (``json``,
``csv`` or ``plain``; default from ``$PROJSTRUCT_FORMAT``, else ``plain``).
Exit status is 0 on success, 1 on a domain error and 2 on a usage error; errors
go to stderr as ``{"error": {"code": ..., "message": ...}}``.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import math
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import action, hyperelliptic, orbifold, origami, torus
from .errors import ProjStructError
from .io import format_series, parse_scalar, parse_series, read_action_file, write_action_file
from .sampling import random_series_pair
from .scalars import format_scalar
from .series import DEFAULT_ORDER, cocycle_residual, schwarzian

FORMAT_ENV = "PROJSTRUCT_FORMAT"
FORMATS = ("json", "csv", "plain")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _vec(values) -> list[str]:
    return [format_scalar(x) for x in values]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def _series_arg(text: str, order):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    return parse_series(text, order)


# commands ---------------------------------------------------------------------


def cmd_schwarzian(args) -> dict:
    f = _series_arg(args.series, args.order)
    s = schwarzian(f)
    return {"order": s.order, "coefficients": format_series(s), "is_zero": s.is_zero()}


def cmd_cocycle(args) -> dict:
    order = args.order if args.order is not None else DEFAULT_ORDER
    if args.random is not None:
        rng = random.Random(args.seed)
        bad = []
        for k in range(args.random):
            f, g = random_series_pair(rng, order)
            if not cocycle_residual(f, g).is_zero():
                bad.append(k)
        return {
            "pairs": args.random,
            "seed": args.seed,
            "order": order,
            "all_zero": not bad,
            "nonzero_pairs": bad,
        }
    if args.f is None or args.g is None:
        raise UsageError("cocycle needs F and G series, or --random N")
    r = cocycle_residual(_series_arg(args.f, args.order), _series_arg(args.g, args.order))
    return {"order": r.order, "residual": format_series(r), "is_zero": r.is_zero()}


def cmd_fixed_locus(args) -> dict:
    G = read_action_file(Path(args.file).read_text())
    locus = action.fixed_locus(G)
    return {
        "genus": G.genus,
        "base": G.base,
        "dimension": locus.dimension,
        "empty": locus.is_empty,
        "basepoint": None if locus.is_empty else _vec(locus.basepoint),
        "directions": [_vec(d) for d in locus.directions],
        "pathway": locus.metadata["pathway"],
    }


def cmd_hyperelliptic(args) -> dict:
    names = [tok.strip() for tok in args.group.split(",") if tok.strip()]
    for name in names:
        if name not in ("J", "R"):
            raise UsageError(f"unknown generator {name!r}; use J and/or R")
    rotation = args.rotation or "R" in names
    model = (
        hyperelliptic.HyperellipticModel.rotation_family(args.genus)
        if rotation
        else hyperelliptic.HyperellipticModel(args.genus)
    )
    gens = [
        hyperelliptic.pullback_of_involution(model) if name == "J" else hyperelliptic.pullback_of_rotation(model)
        for name in names
    ]
    dim = hyperelliptic.invariant_dimension(model, gens)
    G = hyperelliptic.export_action(model, gens)
    locus = action.fixed_locus(G)
    if args.export:
        Path(args.export).write_text(write_action_file(G))
    triv = [all(g.trivial_entries()[i] for g in gens) for i in range(3 * args.genus - 3)]
    return {
        "genus": args.genus,
        "model": f"y^2 = 1 - x^{model.rotation_order}" if rotation else "y^2 = p(x), deg p = 2g+2",
        "group": names,
        "dimension": dim,
        "fixed_locus_dimension": locus.dimension,
        "pathway": locus.metadata["pathway"],
        "basis": [str(e) for e in hyperelliptic.basis(model)],
        "invariant": triv,
    }


def cmd_orbifold_rh(args) -> dict:
    sig = orbifold.OrbifoldSignature(args.order, args.g0, tuple(_int_list(args.orders)))
    g = orbifold.riemann_hurwitz_genus(sig)
    return {
        "order": sig.order,
        "quotient_genus": sig.quotient_genus,
        "branch_orders": list(sig.branch_orders),
        "genus": g,
        "integral": g is not None,
    }


def cmd_orbifold_dim(args) -> dict:
    return {
        "g0": args.g0,
        "n": args.n,
        "dimension": orbifold.invariant_quadratic_dimension(args.g0, args.n),
        "very_large": orbifold.is_very_large(args.g0, args.n),
    }


def cmd_orbifold_triangles(args) -> dict:
    ratio_min = Fraction(args.ratio_min)
    rows = orbifold.enumerate_triangle_signatures(ratio_min, args.c_max)
    return {
        "ratio_min": str(ratio_min),
        "c_max": args.c_max,
        "rows": [{"a": s.a, "b": s.b, "c": s.c, "ratio": str(r)} for s, r in rows],
    }


def cmd_orbifold_quotient(args) -> dict:
    value, holo = orbifold.quotient_differential_order(args.s, args.m)
    return {"s": args.s, "m": args.m, "order": str(value), "holomorphic": holo}


def cmd_orbifold_fermat(args) -> dict:
    return {"n": args.n, "genus": orbifold.fermat_genus(args.n)}


def cmd_torus_classify(args) -> dict:
    tau = torus.TauClass(args.tau)
    c = parse_scalar(args.c)
    autos = [torus.TorusAutomorphism.translation_by(Fraction(1, 2), tau)]
    autos += [
        torus.TorusAutomorphism(a, tau=tau, label=_multiplier_label(a))
        for a in torus.multipliers(tau)
        if a != 1
    ]
    rows = []
    for A in autos:
        row = {"automorphism": A.label, "multiplier": format_scalar(A.multiplier)}
        if args.method in ("formula", "both"):
            row["formula"] = torus.classify_by_formula(c, A).value
        if args.method in ("series", "both"):
            row["series"] = torus.classify_by_series(c, A, args.order).value
        rows.append(row)
    return {
        "tau": tau.value,
        "c": format_scalar(c),
        "order": args.order,
        "rows": rows,
        "relatively_hurwitz_affine": torus.relatively_hurwitz_affine(tau, c),
        "relatively_hurwitz_projective": torus.relatively_hurwitz_projective(tau, c),
    }


def _multiplier_label(a) -> str:
    if a == -1:
        return "J"
    return f"R_{format_scalar(a)}"


def cmd_origami_census(args) -> dict:
    rows = [origami.census_row(o) for o in origami.enumerate_origamis(args.n_max, args.n_min)]
    return {"n_max": args.n_max, "n_min": args.n_min, "count": len(rows), "rows": rows}


def cmd_origami_check(args) -> dict:
    o = origami.Origami.from_cycles(args.h, args.v, args.n)
    g = origami.genus(o)
    out = {
        "n": o.n,
        "h": origami.format_cycles(o.h),
        "v": origami.format_cycles(o.v),
        "genus": g,
        "trans_order": origami.translation_group(o).order,
        "normal": origami.is_normal(o),
        "monodromy_order": origami.monodromy_group_order(o, args.cap),
        "commutator_order": math.lcm(*origami.cone_orders(o)),
        "bound": None,
        "tight": None,
        "genus_condition": None,
    }
    if g >= 2:
        report = origami.check_hurwitz_translation_bound(o)
        out["bound"] = report["bound"]
        out["tight"] = report["tight"]
        out["genus_condition"] = origami.normal_origami_genus_condition(g)
    return out


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help=f"output format (default ${FORMAT_ENV} or plain)")

    parser = _Parser(prog="projstruct", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("schwarzian", parents=[common], help="Schwarzian derivative of a series")
    p.add_argument("series", help="coefficients c0 c1 ... (or @file)")
    p.add_argument("--order", type=int, default=None, help="pad the series to this order")
    p.set_defaults(func=cmd_schwarzian, name="schwarzian")

    p = sub.add_parser("cocycle", parents=[common], help="chain-rule residual S(f o g) - (S(f) o g) g'^2 - S(g)")
    p.add_argument("f", nargs="?")
    p.add_argument("g", nargs="?")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--random", type=int, default=None, metavar="N", help="check N seeded random pairs instead")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cocycle, name="cocycle")

    p = sub.add_parser("action", help="affine action on quadratic differentials")
    asub = p.add_subparsers(dest="action_command", required=True, parser_class=_Parser)
    q = asub.add_parser("fixed-locus", parents=[common], help="fixed locus of an action file")
    q.add_argument("file")
    q.set_defaults(func=cmd_fixed_locus, name="action fixed-locus")

    p = sub.add_parser("hyperelliptic", help="hyperelliptic pullback actions")
    hsub = p.add_subparsers(dest="hyperelliptic_command", required=True, parser_class=_Parser)
    q = hsub.add_parser("invariants", parents=[common], help="dimension of invariant quadratic differentials")
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--group", default="J", help="comma-separated generators from J, R")
    q.add_argument("--rotation", action="store_true", help="use y^2 = 1 - x^(2g+2) even without R")
    q.add_argument("--export", metavar="FILE", help="write the action file here")
    q.set_defaults(func=cmd_hyperelliptic, name="hyperelliptic invariants")

    p = sub.add_parser("orbifold", help="Riemann-Hurwitz and signature arithmetic")
    osub = p.add_subparsers(dest="orbifold_command", required=True, parser_class=_Parser)
    q = osub.add_parser("rh", parents=[common], help="genus from a signature")
    q.add_argument("--order", type=int, required=True, help="group order N")
    q.add_argument("--g0", type=int, default=0)
    q.add_argument("--orders", default="", help="branch orders, e.g. 2,3,7")
    q.set_defaults(func=cmd_orbifold_rh, name="orbifold rh")
    q = osub.add_parser("dim", parents=[common], help="invariant quadratic-differential dimension")
    q.add_argument("--g0", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_orbifold_dim, name="orbifold dim")
    q = osub.add_parser("triangles", parents=[common], help="hyperbolic triangle signatures by N/(g-1)")
    q.add_argument("--ratio-min", required=True, help="rational lower bound on N/(g-1)")
    q.add_argument("--c-max", type=int, default=None)
    q.set_defaults(func=cmd_orbifold_triangles, name="orbifold triangles")
    q = osub.add_parser("quotient-order", parents=[common], help="order of a pushed-forward quadratic differential")
    q.add_argument("--s", type=int, required=True, help="zero order upstairs")
    q.add_argument("--m", type=int, required=True, help="stabilizer order")
    q.set_defaults(func=cmd_orbifold_quotient, name="orbifold quotient-order")
    q = osub.add_parser("fermat", parents=[common], help="genus of the Fermat curve of degree n")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_orbifold_fermat, name="orbifold fermat")

    p = sub.add_parser("torus", help="affine structures on tori")
    tsub = p.add_subparsers(dest="torus_command", required=True, parser_class=_Parser)
    q = tsub.add_parser("classify", parents=[common], help="classify automorphisms for sigma_c")
    q.add_argument("--tau", choices=[t.value for t in torus.TauClass], default="generic")
    q.add_argument("--c", required=True, help="exact parameter, e.g. 0, 1, 1+i")
    q.add_argument("--order", type=int, default=12)
    q.add_argument("--method", choices=("formula", "series", "both"), default="both")
    q.set_defaults(func=cmd_torus_classify, name="torus classify")

    p = sub.add_parser("origami", help="square-tiled surfaces")
    gsub = p.add_subparsers(dest="origami_command", required=True, parser_class=_Parser)
    q = gsub.add_parser("census", parents=[common], help="all origamis up to relabeling")
    q.add_argument("--n-max", type=int, required=True)
    q.add_argument("--n-min", type=int, default=1)
    q.set_defaults(func=cmd_origami_census, name="origami census")
    q = gsub.add_parser("check", parents=[common], help="genus, translations and the 4(g-1) bound")
    q.add_argument("--h", required=True, help="right-neighbour permutation, 1-based cycles")
    q.add_argument("--v", required=True, help="up-neighbour permutation, 1-based cycles")
    q.add_argument("--n", type=int, default=None, help="number of squares (default: largest label)")
    q.add_argument("--cap", type=int, default=origami.DEFAULT_GROUP_CAP)
    q.set_defaults(func=cmd_origami_check, name="origami check")
    return parser


# output -----------------------------------------------------------------------


def render(name: str, result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"command": name, "result": result}, indent=2) + "\n"
    rows = result.get("rows")
    if fmt == "csv":
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if rows is not None:
            header = list(rows[0]) if rows else []
            writer.writerow(header)
            for row in rows:
                writer.writerow([_cell(row[k]) for k in header])
        else:
            writer.writerow(["key", "value"])
            for k, v in result.items():
                writer.writerow([k, _cell(v)])
        return buf.getvalue()
    lines = [f"# {name}"]
    for k, v in result.items():
        if k != "rows":
            lines.append(f"{k}: {_cell(v)}")
    if rows:
        header = list(rows[0])
        table = [header] + [[_cell(r[k]) for k in header] for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list):
        return json.dumps(v)
    return str(v)


def _emit_error(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"code": code, "message": message}}) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        fmt = args.format or os.environ.get(FORMAT_ENV, "plain")
        if fmt not in FORMATS:
            raise UsageError(f"${FORMAT_ENV}={fmt!r} is not one of {', '.join(FORMATS)}")
        result = args.func(args)
    except UsageError as exc:
        _emit_error("usage_error", str(exc))
        return 2
    except ProjStructError as exc:
        _emit_error(exc.code, str(exc))
        return 1
    except (ValueError, OSError) as exc:
        _emit_error("invalid_input", str(exc))
        return 1
    sys.stdout.write(render(args.name, result, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
