"""Command line entry point: `prym <command> ...`."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence


def _print_checks(checks) -> int:
    for c in checks:
        print(c.line())
    return 0 if all(c.ok for c in checks) else 1


def cmd_roots(args) -> int:
    from .checks import roots_selfcheck

    return _print_checks(roots_selfcheck())


def cmd_lie(args) -> int:
    from .checks import lie_selfcheck

    return _print_checks(lie_selfcheck(samples=args.trials, seed=args.seed))


def _json_value(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, (list, tuple)):
        return [_json_value(y) for y in x]
    return x


def _dump(obj) -> None:
    print(json.dumps({k: _json_value(v) for k, v in obj.items()}, indent=2))


def cmd_resolvent(args) -> int:
    from .lie import lie_discriminant, psi, slice_point
    from .quartics import discriminant_ij, has_rational_linear_factor, inv_I, inv_J
    from .sp6 import VElement, resolvent_quartic

    out = {}
    if args.slice is not None:
        v = slice_point(args.slice)
        img = psi(v)
        out["lie_discriminant"] = lie_discriminant(v)
    elif args.w1 is not None and args.w2 is not None:
        img = VElement.from_coords(list(args.w1) + list(args.w2))
    else:
        raise ValueError("give either --slice or both --w1 and --w2")
    q = resolvent_quartic(img)
    out.update(
        w1=list(img.w1.coords()), w2=list(img.w2.coords()), quartic=str(q), coefficients=list(q.coeffs),
        I=inv_I(q), J=inv_J(q), discriminant=discriminant_ij(q),
    )
    if q:
        out["distinct_roots"] = discriminant_ij(q) != 0
        out["rational_linear_factor"] = has_rational_linear_factor(q)
    _dump(out)
    return 0


def cmd_bigonal(args) -> int:
    from .curves import chi, curve_bundle, discriminants, is_smooth_genus3, rational_two_torsion, two_torsion_cubics

    b = args.b
    bundle = curve_bundle(b)
    de, dh, d = discriminants(b)
    out = {
        "b": list(bundle.b), "chi": list(bundle.bhat),
        "delta_E": de, "delta_Ehat": dh, "delta": d,
        "curve": bundle.genus3, "elliptic": bundle.elliptic,
        "dual_curve": bundle.dual_genus3, "smooth": is_smooth_genus3(b),
    }
    if d != 0:
        g_e, g_h = two_torsion_cubics(b)
        e2, h2 = rational_two_torsion(b)
        out.update(g_E=list(g_e.coeffs), g_Ehat=list(g_h.coeffs), e2_rat=e2, ehat2_rat=h2)
    twice = chi(chi(b))
    ok = all(t == 18**w * x for t, x, w in zip(twice, bundle.b, (2, 6, 8, 12))) and out["smooth"] == (d != 0)
    out["selfcheck"] = ok
    _dump(out)
    return 0 if ok else 1


def cmd_zeta(args) -> int:
    from .curves import chi
    from .zeta import frobenius_data

    b = args.b
    fd = frobenius_data(b, args.p)
    dual = frobenius_data(chi(b), args.p)
    ok = fd.weil_ok() and fd.functional_equation_ok() and fd.l_prym == dual.l_prym
    _dump({
        "p": args.p, "curve_counts": list(fd.curve_counts), "elliptic_count": fd.elliptic_count,
        "L_C": list(fd.l_curve), "L_E": list(fd.l_elliptic), "L_P": list(fd.l_prym),
        "L_P_dual": list(dual.l_prym), "weil_ok": fd.weil_ok(),
        "functional_equation_ok": fd.functional_equation_ok(), "duality": fd.l_prym == dual.l_prym,
    })
    return 0 if ok else 1


def cmd_cusp(args) -> int:
    from .cusp import verify_cusp_certificates

    rep = verify_cusp_certificates(spot_samples=args.spot_samples)
    for line in rep.lines():
        print(line)
    print(f"[{'PASS' if rep.ok else 'FAIL'}] cusp certificates")
    return 0 if rep.ok else 1


def cmd_census(args) -> int:
    from .census import CongruenceFilter, box_count, emit, enumerate_census, singular_count, subsample

    X = Fraction(args.height)
    filters = tuple(CongruenceFilter.parse(m) for m in args.mod)
    records = list(enumerate_census(X, filters, zeta_primes=args.zeta, jobs=args.jobs))
    total, singular = box_count(X, filters), singular_count(X, filters)
    consistent = len(records) + singular == total
    if args.sample is not None:
        records = subsample(records, args.sample, args.seed)
    n = emit(records, args.format, args.out, zeta_primes=args.zeta)
    print(f"box points: {total}")
    print(f"on the discriminant locus: {singular}")
    print(f"records written: {n} -> {args.out}")
    if not args.no_figure:
        from .plotting import census_figure

        fig = census_figure(records, Path(str(args.out) + ".png"))
        print(f"figure: {fig}")
    print(f"[{'PASS' if consistent else 'FAIL'}] records + singular points = box points")
    return 0 if consistent else 1


def cmd_mcdensity(args) -> int:
    from .census import monte_carlo_rs_density

    rep = monte_carlo_rs_density(args.p, args.samples, args.seed)
    for line in rep.lines():
        print(line)
    if args.figure:
        from .plotting import density_figure

        print(f"figure: {density_figure(rep, args.figure)}")
    return 0 if rep.passed() else 1


def _frac_arg(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


def _tuple_arg(n: int | None):
    def parse(s: str) -> tuple[Fraction, ...]:
        try:
            vals = tuple(Fraction(x) for x in s.split(","))
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"not a comma-separated list of rationals: {s!r}") from None
        if n is not None and len(vals) != n:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated values, got {len(vals)}")
        return vals

    return parse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prym", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", help="root data checks")
    r.add_argument("action", choices=["selfcheck"])
    r.set_defaults(func=cmd_roots)

    lie = sub.add_parser("lie", help="graded Lie algebra checks")
    lie.add_argument("action", choices=["selfcheck"])
    lie.add_argument("--trials", type=int, default=100)
    lie.add_argument("--seed", type=int, default=0)
    lie.set_defaults(func=cmd_lie)

    rv = sub.add_parser("resolvent", help="resolvent quartic of (w1, w2) or of the slice point sigma(c)")
    rv.add_argument("--slice", type=_tuple_arg(4), metavar="c1,c2,c3,c4")
    rv.add_argument("--w1", type=_tuple_arg(14), metavar="u,X00,X01,X02,X11,X12,X22,Y00,...,z")
    rv.add_argument("--w2", type=_tuple_arg(14))
    rv.set_defaults(func=cmd_resolvent)

    bg = sub.add_parser("bigonal", help="curves attached to b and its bigonal dual")
    bg.add_argument("--b", type=_tuple_arg(4), required=True, metavar="p2,p6,p8,p12")
    bg.set_defaults(func=cmd_bigonal)

    z = sub.add_parser("zeta", help="L-polynomials at a prime")
    z.add_argument("--p", type=int, required=True)
    z.add_argument("--b", type=_tuple_arg(4), required=True, metavar="p2,p6,p8,p12")
    z.set_defaults(func=cmd_zeta)

    c = sub.add_parser("cusp", help="cusp certificate verification")
    c.add_argument("action", choices=["verify"])
    c.add_argument("--spot-samples", type=int, default=3)
    c.set_defaults(func=cmd_cusp)

    cs = sub.add_parser("census", help="height-bounded census of integral b")
    cs.add_argument("--height", type=_frac_arg, required=True)
    cs.add_argument("--mod", action="append", default=[], metavar="m:coord:residue")
    cs.add_argument("--zeta", action="append", type=int, default=[], metavar="P")
    cs.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    cs.add_argument("--out", type=Path, required=True)
    cs.add_argument("--seed", type=int, default=0)
    cs.add_argument("--jobs", type=int, default=1)
    cs.add_argument("--sample", type=int, default=None, help="keep a seeded random subset of this size")
    cs.add_argument("--no-figure", action="store_true")
    cs.set_defaults(func=cmd_census)

    mc = sub.add_parser("mcdensity", help="Monte Carlo regular-semisimple density over F_p")
    mc.add_argument("--p", type=int, required=True)
    mc.add_argument("--samples", type=int, default=20000)
    mc.add_argument("--seed", type=int, default=0)
    mc.add_argument("--figure", type=Path, default=None)
    mc.set_defaults(func=cmd_mcdensity)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    from .exact.poly import DomainError

    try:
        return args.func(args)
    except (DomainError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
