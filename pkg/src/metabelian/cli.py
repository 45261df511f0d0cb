"""Command-line front end; JSON for single results, CSV for tables.

Exit codes: 0 success, 2 input errors, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .elements import Ambient, parse_element
from .errors import BudgetExceeded, ParseError, TamenessViolation
from .geometry import presentation_constants, tameness_check
from .groebner import divide_with_certificate, normal_form
from .presentation import Presentation, parse_presentation, parse_word
from .presets import PresetSpec, build, norm_growth, witness_family
from .wordproblem import (area_certificate, brute_force_min_certificate,
                          dehn_profile, is_identity, module_context,
                          module_dehn_upper, relative_area_certificate)


def _load_presentation(args) -> Presentation:
    if getattr(args, "preset", None):
        return build(_preset_spec(args))
    if not args.presentation:
        raise ParseError("a presentation file (-p) or --preset is required")
    with open(args.presentation, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def _preset_spec(args) -> PresetSpec:
    fs = ()
    if getattr(args, "f", None):
        fs = tuple(tuple(int(c) for c in chunk.split(","))
                   for chunk in args.f.split(";"))
    orders = ()
    if getattr(args, "orders", None):
        orders = tuple(int(c) for c in args.orders.split(","))
    return PresetSpec(name=args.preset, n=args.n or 2, m=args.m or 2,
                      r=args.r or 1, k=args.k or 1, fs=fs,
                      torsion_orders=orders)


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _emit_csv(header, rows, meta=None) -> None:
    out = io.StringIO()
    if meta:
        out.write(f"# {meta}\n")
    writer = csv.writer(out)
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(out.getvalue())


def _parse_budget(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError("budget must be D,C,S (degree, coefficient, size)")
    return tuple(int(x) for x in parts)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="metabelian",
        description="Word problem and area certificates for finitely "
                    "presented metabelian groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, presentation=True):
        if presentation:
            sp.add_argument("-p", "--presentation", help="presentation file")
            sp.add_argument("--preset", choices=(
                "bs", "lamplighter", "zwrz", "baumslag_gamma", "wf",
                "free_abelian"))
            sp.add_argument("--n", type=int, default=None)
            sp.add_argument("--m", type=int, default=None)
            sp.add_argument("--r", type=int, default=None)
            sp.add_argument("--k", type=int, default=None)
            sp.add_argument("--f", help="wf polynomials, e.g. '1,1;1,2,1'")
            sp.add_argument("--orders", help="wf torsion orders, e.g. '2,3'")
        sp.add_argument("--format", choices=("json", "csv"), default=None)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("groebner", help="basis of the relator submodule")
    common(sp)
    sp = sub.add_parser("nf", help="normal form of a module element")
    common(sp)
    sp.add_argument("-e", "--element", required=True)
    sp = sub.add_parser("member", help="submodule membership with certificate")
    common(sp)
    sp.add_argument("-e", "--element", required=True)
    sp = sub.add_parser("solve", help="decide w = 1")
    common(sp)
    sp.add_argument("-w", "--word", required=True)
    sp = sub.add_parser("area", help="area certificate of an identity word")
    common(sp)
    sp.add_argument("-w", "--word", required=True)
    sp.add_argument("--K", type=int, default=None)
    sp = sub.add_parser("rel-area", help="relative area certificate")
    common(sp)
    sp.add_argument("-w", "--word", required=True)
    sp = sub.add_parser("module-dehn", help="certificate sizes over small norms")
    common(sp)
    sp.add_argument("-n", type=int, default=4, dest="norm")
    sp.add_argument("--sampler", choices=("exhaustive", "random"),
                    default="exhaustive")
    sp.add_argument("--samples", type=int, default=200)
    sp = sub.add_parser("profile", help="growth table of witnessed costs")
    common(sp)
    sp.add_argument("-n", type=int, default=6, dest="nmax")
    sp.add_argument("--samples", type=int, default=10)
    sp = sub.add_parser("constants", help="geometric constants of the datum")
    common(sp)
    sp = sub.add_parser("norm-growth", help="norms |f^n| and the fitted base")
    sp.add_argument("-f", "--poly", required=True)
    sp.add_argument("-n", type=int, default=10, dest="nmax")
    sp.add_argument("--format", choices=("json", "csv"), default=None)
    sp = sub.add_parser("preset", help="emit a preset presentation file")
    sp.add_argument("name", choices=("bs", "lamplighter", "zwrz",
                                     "baumslag_gamma", "wf", "free_abelian"))
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--f", help="wf polynomials, e.g. '1,1;1,2,1'")
    sp.add_argument("--orders", help="wf torsion orders")
    sp = sub.add_parser("oracle", help="brute-force minimal certificate")
    common(sp)
    sp.add_argument("-e", "--element", required=True)
    sp.add_argument("--budget", default="2,3,4")

    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (ParseError, TamenessViolation, FileNotFoundError, ValueError,
            KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return 3


def _run(args) -> int:
    cmd = args.command

    if cmd == "preset":
        spec = PresetSpec(
            name=args.name, n=args.n, m=args.m, r=args.r, k=args.k,
            fs=tuple(tuple(int(c) for c in chunk.split(","))
                     for chunk in args.f.split(";")) if args.f else (),
            torsion_orders=tuple(int(c) for c in args.orders.split(","))
            if args.orders else ())
        sys.stdout.write(build(spec).render() + "\n")
        return 0

    if cmd == "norm-growth":
        f = _parse_growth_poly(args.poly)
        norms, alpha = norm_growth(f, args.nmax)
        if args.format == "json":
            _emit_json({"norms": [str(v) for v in norms], "alpha": alpha})
        else:
            _emit_csv(("n", "norm"),
                      [(i + 1, v) for i, v in enumerate(norms)])
        return 0

    p = _load_presentation(args)

    if cmd == "groebner":
        ctx = module_context(p)
        doc = ctx.basis.to_json()
        doc["relator_vectors"] = [v.render() for v in ctx.relator_vectors]
        _emit_json(doc)
        return 0

    if cmd in ("nf", "member", "oracle"):
        g = parse_element(args.element, p.module_ambient())
        ctx = module_context(p)
        if cmd == "nf":
            nf = normal_form(ctx.embed(g), ctx.basis)
            _emit_json({"input": g.render(), "normal_form": nf.render(),
                        "is_zero": nf.is_zero()})
            return 0
        if cmd == "member":
            cert = divide_with_certificate(ctx.embed(g), ctx.basis)
            _emit_json({"member": cert.residue.is_zero(),
                        "certificate": cert.to_json()})
            return 0
        budget = _parse_budget(args.budget)
        size = brute_force_min_certificate(g, list(ctx.relator_vectors), budget)
        _emit_json({"minimal_size": size, "conclusive": size is not None,
                    "budget": list(budget)})
        return 0

    if cmd in ("solve", "area", "rel-area"):
        w = parse_word(args.word, p)
        if cmd == "solve":
            ok, cert = is_identity(w, p)
            _emit_json(cert.to_json())
            return 0
        if cmd == "area":
            cert = area_certificate(w, p, K=args.K)
            _emit_json(cert.to_json())
            return 0
        report = relative_area_certificate(w, p)
        _emit_json(report.to_json())
        return 0

    if cmd == "module-dehn":
        rows = module_dehn_upper(p, args.norm, sampler=args.sampler,
                                 samples=args.samples, seed=args.seed)
        _emit_csv(("norm", "max_cert_size"), rows, meta=f"seed={args.seed}")
        return 0

    if cmd == "profile":
        witnesses = witness_family(_preset_spec(args)) if args.preset else None
        rows = dehn_profile(p, args.nmax, samples=args.samples,
                            seed=args.seed, witnesses=witnesses)
        _emit_csv(("n", "max_witnessed", "max_cert_size", "bound"), rows,
                  meta=f"seed={args.seed}")
        return 0

    if cmd == "constants":
        report = presentation_constants(p)
        doc = report.to_json()
        if report.R is None:
            doc["diagnostic"] = ("4kC - 4 <= 0: supply a datum with larger C "
                                 "(e.g. powers of its elements)")
        verdict = tameness_check(
            p.tameness, max(1, p.free_rank),
            tuple(i for i, d in enumerate(p.torsion_orders) if d == 0))
        doc["tame"] = verdict if isinstance(verdict, bool) else verdict[0]
        _emit_json(doc)
        return 0

    raise ParseError(f"unknown command {cmd!r}")


def _parse_growth_poly(text: str):
    import re

    names = sorted(set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text)))
    if len(names) != 1:
        raise ParseError("growth polynomials use exactly one variable")
    ambient = Ambient((names[0],), (0,), 1, None, laurent=True)
    return parse_element(text, ambient)


if __name__ == "__main__":
    sys.exit(main())
