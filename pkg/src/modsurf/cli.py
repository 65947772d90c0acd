"""Command-line front end.

Exit codes: 0 success, 1 usage error (bad flags, malformed classes, missing
files), 2 mathematical validation failure (series hypotheses violated,
nonzero residuals, failing self-test).  Output is deterministic byte for
byte for a fixed invocation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Sequence

from . import __version__
from .configio import (
    bundled_series_names,
    format_kclass,
    moduli_label,
    parse_kclass,
    parse_surface,
    resolve_series,
)
from .goettsche import BettiData, hilb_epoly, rank1_moduli_epoly
from .invariants import (
    ExceptionalPair,
    alpha_class,
    beta_class,
    birational_fiber_check,
    gr_bundle_params,
    moduli_dim,
    mu_stable_exists,
    nef_rays,
    perp_basis,
    stack_dim_mu_ss,
    syst_dim,
)
from .ktheory import KClass, PairingContext
from .selftest import run_selftest
from .series import SeriesValidationError, extend_series, series_params
from .strata import (
    brill_noether_index,
    enumerate_strata,
    hom_dim,
    normality_hypothesis_ok,
    stratum_dim,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _surface_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--surface",
        required=True,
        help='surface preset ("p2", "p1xp1:<n>") or a path to a surface JSON file',
    )


def _emit_arg(parser: argparse.ArgumentParser, choices=("text", "json")) -> None:
    parser.add_argument("--emit", choices=choices, default="text")


def _load_surface(token: str):
    if token.lower().startswith(("p2", "p1xp1")):
        return parse_surface(token)
    with open(token) as fh:
        return parse_surface(json.load(fh))


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modsurf", description=__doc__)
    parser.add_argument("--version", action="version", version=f"modsurf {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pair", help="Euler pairing chi(x, y) of two classes")
    _surface_arg(p)
    p.add_argument("--x", required=True, help='class as "r,c1...,chi"')
    p.add_argument("--y", required=True, help='class as "r,c1...,chi"')
    _emit_arg(p)

    p = sub.add_parser("reflect", help="left/right reflection of a class across e0")
    _surface_arg(p)
    p.add_argument("--e0", required=True, help="exceptional class")
    p.add_argument("--x", required=True, help="class to reflect")
    p.add_argument("--side", choices=("left", "right"), default="left")
    _emit_arg(p)

    p = sub.add_parser("invariants", help="dimension/existence report for a class")
    _surface_arg(p)
    p.add_argument("--e0", required=True, help="exceptional class")
    p.add_argument("--e", required=True, help="class to analyze")
    p.add_argument("--sections", type=int, default=1, help="coherent-system section count")
    _emit_arg(p)

    p = sub.add_parser("series", help="solve a moduli series from a config file")
    p.add_argument(
        "--config",
        required=True,
        help="path to a JSON/TOML series config, or a bundled name "
        f'({", ".join(bundled_series_names())})',
    )
    _emit_arg(p, ("text", "json", "csv"))

    p = sub.add_parser("strata", help="boundary stratum types for given (rk e0, a, r)")
    p.add_argument("--rk-e0", type=int, required=True, dest="rk_e0")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _emit_arg(p, ("text", "json", "csv"))

    p = sub.add_parser("nef", help="claimed nef-cone boundary classes alpha, beta")
    _surface_arg(p)
    p.add_argument("--e0", required=True)
    p.add_argument("--e", required=True)
    _emit_arg(p)

    p = sub.add_parser("hilb", help="Hilbert-scheme / rank-one moduli E-polynomial")
    _surface_arg(p)
    p.add_argument("--n", type=int, help="number of points")
    p.add_argument("--c1", help="first Chern coordinates for a rank-one class")
    p.add_argument("--chi", type=int, help="Euler characteristic for a rank-one class")
    _emit_arg(p)

    sub.add_parser("selftest", help="recompute the published tables; exit 2 on mismatch")
    return parser


# -- command handlers ---------------------------------------------------------


def _cmd_pair(args) -> int:
    surface = _load_surface(args.surface)
    ctx = PairingContext(surface)
    x = parse_kclass(args.x, surface.rho)
    y = parse_kclass(args.y, surface.rho)
    value = ctx.euler_pairing(x, y)
    if args.emit == "json":
        _print_json({"x": x.to_dict(), "y": y.to_dict(), "pairing": value})
    else:
        print(value)
    return 0


def _cmd_reflect(args) -> int:
    surface = _load_surface(args.surface)
    ctx = PairingContext(surface)
    e0 = parse_kclass(args.e0, surface.rho)
    x = parse_kclass(args.x, surface.rho)
    op = ctx.reflect_left if args.side == "left" else ctx.reflect_right
    out = op(e0, x)
    if args.emit == "json":
        _print_json({"side": args.side, "result": out.to_dict()})
    else:
        print(format_kclass(out))
    return 0


def _cmd_invariants(args) -> int:
    surface = _load_surface(args.surface)
    ctx = PairingContext(surface)
    e0 = parse_kclass(args.e0, surface.rho)
    e = parse_kclass(args.e, surface.rho)
    pair = ExceptionalPair(ctx, e0)
    n = max(args.sections, 1)

    report: dict = {
        "class": e.to_dict(),
        "label": moduli_label(e),
        "chi_ee": ctx.euler_pairing(e, e),
        "moduli_dim": moduli_dim(ctx, e),
    }
    # decomposition e = r e0 - a omega, when it exists
    if e.r > 0 and e.r % e0.r == 0 and e.c1 == (e.r // e0.r) * e0.c1:
        r = e.r // e0.r
        a = r * e0.chi - e.chi
        report["exceptional_form"] = {
            "r": r,
            "a": a,
            "stack_dim_mu_ss": stack_dim_mu_ss(pair, r, a),
            "mu_stable": mu_stable_exists(pair, r, a).value,
        }
    if e.r > 0:
        bundle = gr_bundle_params(pair, e, n)
        report["coherent_systems"] = {
            "sections": n,
            "syst_dim": syst_dim(pair, e, n),
            "fiber": f"Gr({bundle.space_dim},{bundle.sub_dim})",
            "base": bundle.base.to_dict(),
            "base_label": moduli_label(bundle.base),
            "dualized": bundle.dualized,
        }
        try:
            fiber = birational_fiber_check(pair, e)
            report["birational_fiber"] = {
                "k": fiber.k,
                "s": fiber.s,
                "dim_drop": fiber.dim_drop,
            }
        except ValueError:
            report["birational_fiber"] = None
        rays = nef_rays(pair, e)
        report["alpha"] = rays.alpha.to_dict()
        report["beta"] = rays.beta.to_dict()
        report["nef_applicable"] = rays.applicable
    report["perp_basis"] = [b.to_dict() for b in perp_basis(ctx, e)]

    if args.emit == "json":
        _print_json(report)
        return 0
    print(f"class {format_kclass(e)}  [{report['label']}]")
    print(f"chi(e,e) = {report['chi_ee']}")
    print(f"moduli_dim = {report['moduli_dim']}")
    if "exceptional_form" in report:
        ef = report["exceptional_form"]
        print(
            f"e = {ef['r']} e0 - {ef['a']} omega: stack_dim_mu_ss = "
            f"{ef['stack_dim_mu_ss']}, mu-stable locus {ef['mu_stable']}"
        )
    if "coherent_systems" in report:
        cs = report["coherent_systems"]
        where = "dual side" if cs["dualized"] else "direct"
        print(
            f"coherent systems with {cs['sections']} section(s): dim = {cs['syst_dim']}, "
            f"{cs['fiber']}-bundle over {cs['base_label']} ({where})"
        )
        if report["birational_fiber"]:
            bf = report["birational_fiber"]
            print(
                f"projection to the reflected class: generic Gr({bf['s']},{bf['k']}) "
                f"fiber, dimension drop {bf['dim_drop']}"
            )
        else:
            print("projection to the reflected class: outside the fibered range")
        print(f"alpha = {format_kclass(KClass.from_dict(report['alpha']))}")
        print(f"beta = {format_kclass(KClass.from_dict(report['beta']))}")
        print(f"nef rays applicable: {'yes' if report['nef_applicable'] else 'no'}")
    print(
        "perp basis: "
        + "; ".join(format_kclass(KClass.from_dict(b)) for b in report["perp_basis"])
    )
    return 0


def _series_payload(name: str, surface_name: str, spec, result) -> dict:
    a, s, ok = series_params(spec)

    def rows(table):
        return [
            {
                "k": k,
                "class": spec.class_at(k).to_dict(),
                "label": moduli_label(spec.class_at(k)),
                "coeffs": list(table[k].coeffs),
                "poly": str(table[k]),
            }
            for k in sorted(table)
        ]

    return {
        "name": name,
        "surface": surface_name,
        "gamma": spec.gamma.to_dict(),
        "gamma0": spec.gamma0.to_dict(),
        "a": a,
        "s": s,
        "k_min": spec.k_min,
        "assumption_ok": ok,
        "values": rows(result.values),
        "zero_strata": rows(result.zero_strata),
        "diagnostics": [
            {"name": d.name, "status": d.status, "detail": d.detail}
            for d in result.diagnostics
        ],
    }


def _cmd_series(args) -> int:
    config = resolve_series(args.config)
    spec = config.spec
    result = extend_series(spec)
    payload = _series_payload(config.name, config.surface_name, spec, result)
    if args.emit == "json":
        _print_json(payload)
    elif args.emit == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["k", "class", "poly"])
        for row in payload["values"]:
            writer.writerow([row["k"], row["label"], row["poly"]])
    else:
        print(
            f"series {payload['name']} on {payload['surface']}: "
            f"a={payload['a']}, s={payload['s']}, k_min={payload['k_min']}"
        )
        for row in payload["values"]:
            origin = "base" if row["k"] in spec.bases else "solved"
            print(f"e({row['label']}) = {row['poly']}  [{origin}]")
        failures = [d for d in payload["diagnostics"] if d["status"] == "failed"]
        unverified = [
            d for d in payload["diagnostics"] if d["status"] == "unverified-hypothesis"
        ]
        if failures:
            for d in failures:
                print(f"FAILED {d['name']}: {d['detail']}")
        elif unverified:
            print("diagnostics: consistent, but the standing rank assumption fails")
        else:
            print("diagnostics: all ok")
    return 0 if result.all_ok else 2


def _cmd_strata(args) -> int:
    strata = enumerate_strata(args.rk_e0, args.a, args.r)
    table = [
        {
            "parts": [list(p) for p in st.parts],
            "l": st.l,
            "dim": stratum_dim(args.rk_e0, st),
            "hom_dim": hom_dim(args.rk_e0, st, args.a),
        }
        for st in strata
    ]
    payload = {
        "rk_e0": args.rk_e0,
        "a": args.a,
        "r": args.r,
        "brill_noether_index": brill_noether_index(args.rk_e0, args.a, args.r),
        "hypothesis_r_rk_ge_2": normality_hypothesis_ok(args.rk_e0, args.r),
        "strata": table,
    }

    def parts_str(parts) -> str:
        if not parts:
            return "-"
        return " + ".join(f"{n}x({r},{a})" for r, a, n in parts)

    if args.emit == "json":
        _print_json(payload)
    elif args.emit == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["parts", "l", "dim", "hom_dim"])
        for row in table:
            writer.writerow([parts_str(row["parts"]), row["l"], row["dim"], row["hom_dim"]])
    else:
        print(
            f"strata for rk(e0)={args.rk_e0}, a={args.a}, r={args.r} "
            f"(n = {payload['brill_noether_index']})"
        )
        if not payload["hypothesis_r_rk_ge_2"]:
            print("warning: r rk(e0) < 2, outside the proven range")
        for row in table:
            print(
                f"{parts_str(row['parts']):<28} l={row['l']}  dim={row['dim']}  "
                f"hom={row['hom_dim']}"
            )
    return 0


def _cmd_nef(args) -> int:
    surface = _load_surface(args.surface)
    ctx = PairingContext(surface)
    e0 = parse_kclass(args.e0, surface.rho)
    e = parse_kclass(args.e, surface.rho)
    rays = nef_rays(ExceptionalPair(ctx, e0), e)
    if args.emit == "json":
        _print_json(
            {
                "alpha": rays.alpha.to_dict(),
                "beta": rays.beta.to_dict(),
                "applicable": rays.applicable,
            }
        )
    else:
        print(f"alpha = {format_kclass(rays.alpha)}")
        print(f"beta = {format_kclass(rays.beta)}")
        print(f"applicable = {'yes' if rays.applicable else 'no'}")
    return 0


def _cmd_hilb(args) -> int:
    surface = _load_surface(args.surface)
    ctx = PairingContext(surface)
    if args.n is None and (args.c1 is None or args.chi is None):
        print("modsurf hilb: error: give --n, or both --c1 and --chi", file=sys.stderr)
        return 1
    if args.n is not None:
        poly = hilb_epoly(BettiData.for_surface(surface), args.n)
        meta = {"n": args.n}
    else:
        coords = parse_kclass(f"1,{args.c1},{args.chi}", surface.rho)
        poly = rank1_moduli_epoly(ctx, coords.c1, coords.chi)
        meta = {"c1": list(coords.c1.coords), "chi": coords.chi}
    if args.emit == "json":
        _print_json({**meta, "coeffs": list(poly.coeffs), "poly": str(poly)})
    else:
        print(poly)
    return 0


def _cmd_selftest(_args) -> int:
    results = run_selftest()
    use_color = sys.stdout.isatty() and not os.environ.get("NO_COLOR")
    ok_all = True
    for res in results:
        tag = "PASS" if res.ok else "FAIL"
        if use_color:
            color = "\x1b[32m" if res.ok else "\x1b[31m"
            tag = f"{color}{tag}\x1b[0m"
        line = f"[{res.criterion:>2}] {tag} {res.name}"
        if res.detail and not res.ok:
            line += f" — {res.detail}"
        print(line)
        ok_all = ok_all and res.ok
    print(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
    return 0 if ok_all else 2


_HANDLERS = {
    "pair": _cmd_pair,
    "reflect": _cmd_reflect,
    "invariants": _cmd_invariants,
    "series": _cmd_series,
    "strata": _cmd_strata,
    "nef": _cmd_nef,
    "hilb": _cmd_hilb,
    "selftest": _cmd_selftest,
}


def main(argv: "Sequence[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse --help exits 0; our errors exit 1
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except SeriesValidationError as exc:
        print(f"modsurf: validation error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"modsurf: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
