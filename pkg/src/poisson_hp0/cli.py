"""Command-line front end: ``hp0 <command> [options]``.

Exit codes: 0 success or match, 1 mismatch, 2 invalid input, 3 refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import yaml

from . import acceptance, harness
from .fp import check_prime, primes_between
from .formulas import (
    PlaneCurveSpec,
    SymPowerSpec,
    kleinian_series,
    kleinian_strata,
    mainform_series,
    plane_curve_series,
    quotient_series,
    sym_kleinian_series,
    sympower_series,
)
from .presets import PRESET_LABELS, ade_preset, fermat, surface_preset
from .quotient import GROUP_PRESETS, group_preset, hp0_B_mod_AB, hp0_dims_quotient, swap_group, trivial_group
from .series import (
    check_bk_identity,
    check_indepp,
    check_u_antisymmetry,
    expand,
    f_series,
    g_function,
    hilbert_A,
    jacobi_function,
    s_coefficients,
    u_coefficients,
)
from .specfiles import SpecError, dump_surface, group_to_dict, load_group, load_strata, load_surface
from .surface import RefusalError, hp0_series

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_REFUSED = 0, 1, 2, 3


class _Mismatch(Exception):
    pass


# output -------------------------------------------------------------------------


def _emit(args, records: list[dict], columns: tuple[str, ...], meta: dict) -> None:
    if args.format == "json":
        print(json.dumps({**meta, "records": records}, sort_keys=True))
        return
    print("\t".join(columns))
    for r in records:
        print("\t".join(_cell(r[c]) for c in columns))


def _cell(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    return str(v)


def _emit_series(args, series, meta: dict) -> None:
    _emit(args, [{"m": m, "value": int(v)} for m, v in enumerate(series)], ("m", "value"), meta)


def _emit_compare(args, brute, formula, meta: dict) -> None:
    records = [
        {"m": m, "brute": int(b), "formula": int(f), "match": int(b) == int(f)}
        for m, (b, f) in enumerate(zip(brute, formula))
    ]
    first = next((r["m"] for r in records if not r["match"]), None)
    _emit(args, records, ("m", "brute", "formula", "match"), {**meta, "first_mismatch": first})
    if first is not None:
        raise _Mismatch(f"first mismatch in degree {first}")


# argument helpers ------------------------------------------------------------------


def _prime(text: str) -> int:
    try:
        p = int(text)
        check_prime(p)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    return p


def _primes(text: str) -> list[int]:
    """``3,5,7`` or a range ``3-13`` (inclusive)."""
    if "-" in text and "," not in text:
        lo, hi = (int(x) for x in text.split("-"))
        return primes_between(lo - 1, hi)
    return [_prime(x) for x in text.split(",") if x]


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _need(args, *names):
    for n in names:
        if getattr(args, n.replace("-", "_")) is None:
            raise SpecError(f"--{n} is required for this command and mode")


def _meta(args, **extra) -> dict:
    out = {"command": args.command}
    for k in ("p", "max_deg", "mode"):
        if getattr(args, k, None) is not None:
            out[k] = getattr(args, k)
    out.update(extra)
    return out


def _surface_from_args(args):
    if getattr(args, "spec", None):
        spec = load_surface(args.spec)
    elif getattr(args, "preset", None):
        spec = surface_preset(args.preset)
    else:
        raise SpecError("give --spec FILE or --preset LABEL")
    if not getattr(args, "no_certify", False):
        spec.certify()
    return spec


# commands --------------------------------------------------------------------------


def cmd_surface(args) -> None:
    spec = _surface_from_args(args)
    if args.mode == "sweep":
        return _run_sweep(args, spec, None)
    _need(args, "p")
    N = args.max_deg if args.max_deg is not None else harness.default_N(spec, args.p)
    meta = _meta(args, spec=spec.label, d=spec.d, weights=list(spec.weights), max_deg=N)
    if args.mode == "brute":
        _emit_series(args, hp0_series(spec, args.p, N, order=args.order, spanning=args.spanning), meta)
    elif args.mode == "formula":
        _emit_series(args, mainform_series(spec.weights, spec.d, args.p, N), meta)
    else:
        brute = hp0_series(spec, args.p, N, order=args.order, spanning=args.spanning)
        _emit_compare(args, brute, mainform_series(spec.weights, spec.d, args.p, N), meta)


def _run_sweep(args, spec, preset) -> None:
    if args.primes is None:
        raise SpecError("--primes is required for a sweep")
    rep = harness.sweep(spec, args.primes, args.max_deg, preset=preset)
    if args.format == "json":
        print(harness.to_json(rep))
    else:
        print("p\tN\tstatus\tfirst_mismatch\tabove_threshold")
        for r in rep.rows:
            fm = "" if r.first_mismatch is None else r.first_mismatch
            print(f"{r.p}\t{r.N}\t{r.status}\t{fm}\t{int(r.p > rep.threshold)}")
    if not rep.above_threshold_ok():
        raise _Mismatch(f"a prime above the threshold {rep.threshold} did not match")


def cmd_kleinian(args) -> None:
    pre = ade_preset(args.type)
    if args.mode == "sweep":
        return _run_sweep(args, pre.surface(), pre)
    _need(args, "p")
    N = args.max_deg if args.max_deg is not None else harness.default_N(pre.surface(), args.p)
    meta = _meta(args, type=pre.label, h=pre.h, max_deg=N)
    if args.mode == "formula":
        _emit_series(args, kleinian_series(pre, args.p, N), meta)
    elif args.mode == "brute":
        _emit_series(args, hp0_series(pre.surface(), args.p, N), meta)
    elif pre.label.startswith("A"):
        rep = harness.cross_oracles(pre.h, args.p, N)
        _emit_compare(args, rep.brute, rep.formula, {**meta, "oracle_agrees": rep.oracle == rep.brute})
        if rep.oracle != rep.brute:
            raise _Mismatch("type-A oracle disagrees with the brute force")
    else:
        _emit_compare(args, hp0_series(pre.surface(), args.p, N), kleinian_series(pre, args.p, N), meta)


def cmd_curve(args) -> None:
    curve = PlaneCurveSpec(args.d)
    spec = fermat(args.d)
    if args.mode == "sweep":
        return _run_sweep(args, spec, None)
    _need(args, "p")
    N = args.max_deg if args.max_deg is not None else 3 * args.p + args.d
    meta = _meta(args, d=args.d, chi=curve.chi, max_deg=N)
    if args.mode == "formula":
        _emit_series(args, plane_curve_series(curve, args.p, N), meta)
    elif args.mode == "brute":
        _emit_series(args, hp0_series(spec, args.p, N), meta)
    else:
        _emit_compare(args, hp0_series(spec, args.p, N), plane_curve_series(curve, args.p, N), meta)


def cmd_quotient(args) -> None:
    _need(args, "p", "max-deg")
    if args.spec:
        spec = load_group(args.spec)
    elif args.group:
        spec = group_preset(args.group)
    else:
        raise SpecError("give --spec FILE or --group LABEL")
    fn = hp0_B_mod_AB if args.what == "B-mod-AB" else hp0_dims_quotient
    dims = fn(spec, args.p, args.max_deg, root=args.root, spanning=args.spanning)
    _emit_series(args, dims, _meta(args, group=spec.label, what=args.what))


def cmd_quotient_formula(args) -> None:
    _need(args, "p", "max-deg")
    if args.strata:
        data = load_strata(args.strata)
        data.check_nonnegative()
    elif args.type:
        data = kleinian_strata(ade_preset(args.type))
    else:
        raise SpecError("give --strata FILE or --type LABEL")
    meta = _meta(args, strata=data.name, D=data.D)
    if data.D is not None and args.p <= data.D / 2 + 1:
        warnings.warn(f"p={args.p} does not exceed D/2+1 = {data.D / 2 + 1}")
    _emit_series(args, quotient_series(data, args.p, args.max_deg), meta)


def cmd_sympower(args) -> None:
    _need(args, "p", "max-deg")
    spec = SymPowerSpec(args.d, args.n)
    meta = _meta(args, d=args.d, n=args.n)
    formula = sympower_series(spec, args.p, args.max_deg)
    if args.mode == "compare":
        if args.n == 1:
            brute = hp0_dims_quotient(trivial_group(2 * args.d), args.p, args.max_deg)
        elif args.n == 2 and args.d == 1:
            brute = hp0_dims_quotient(swap_group(), args.p, args.max_deg)
        else:
            raise SpecError("brute force is available for n = 1, or n = 2 with d = 1")
        _emit_compare(args, brute, formula, meta)
    else:
        _emit_series(args, formula, meta)


def cmd_sym_kleinian(args) -> None:
    _need(args, "p", "max-deg")
    pre = ade_preset(args.type)
    _emit_series(args, sym_kleinian_series(pre, args.n, args.p, args.max_deg), _meta(args, type=pre.label, n=args.n))


def cmd_series(args) -> None:
    w, d, op = args.weights, args.d, args.op
    if op in ("f", "s"):
        fn = f_series if op == "f" else s_coefficients
        sl = fn(w, d, args.to)
        records = [{"k": k, "value": c} for k, c in sl.items()]
        _emit(args, records, ("k", "value"), {"command": "series", "op": op})
        return
    if op == "identities":
        _need(args, "p")
        reps = [check_bk_identity(w, d, args.p, args.to), check_u_antisymmetry(w, d, args.to)]
        if args.r is not None:
            reps.append(check_indepp(w, d, args.r, args.to))
        records = [{"identity": r.name, "holds": r.holds, "first_failure": r.first_failure} for r in reps]
        _emit(args, records, ("identity", "holds", "first_failure"), {"command": "series", "op": op})
        if not all(r.holds for r in reps):
            raise _Mismatch("an identity failed")
        return
    table = {"u": None, "g": g_function, "hilbert": hilbert_A, "jacobi": jacobi_function}
    if op == "u":
        sl = u_coefficients(w, d, args.to)
    else:
        lo = args.from_ if args.from_ is not None else min(0, table[op](w, d).valuation() or 0)
        sl = expand(table[op](w, d), lo, args.to)
    _emit(args, [{"k": k, "value": c} for k, c in sl.items()], ("k", "value"), {"command": "series", "op": op})


def cmd_sweep(args) -> None:
    if args.preset and args.preset[0].upper() in "ADE" and not args.preset.lower().startswith("fermat"):
        pre = ade_preset(args.preset)
        return _run_sweep(args, pre.surface(), pre)
    return _run_sweep(args, _surface_from_args(args), None)


def cmd_preset(args) -> None:
    if args.list:
        for label in PRESET_LABELS:
            print(label)
        for label in GROUP_PRESETS:
            print(f"group:{label}")
        return
    if not args.dump:
        raise SpecError("give --list or --dump LABEL")
    if args.dump.startswith("group:"):
        print(yaml.safe_dump(group_to_dict(group_preset(args.dump[6:])), sort_keys=True, default_flow_style=None), end="")
    else:
        print(dump_surface(surface_preset(args.dump)), end="")


def cmd_accept(args) -> None:
    results = acceptance.run_all(only=args.only, echo=args.format != "json")
    if args.format == "json":
        print(json.dumps([r.__dict__ for r in results], sort_keys=True))
    if not all(r.passed for r in results):
        raise _Mismatch("acceptance failures")


# parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_prime, help="prime characteristic")
    common.add_argument("--max-deg", type=int, help="largest degree N")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    modes = argparse.ArgumentParser(add_help=False)
    modes.add_argument("--mode", choices=("brute", "formula", "compare", "sweep"), default="formula")
    modes.add_argument("--primes", type=_primes, help="primes for a sweep: 3,5,7 or 3-13")
    brute = argparse.ArgumentParser(add_help=False)
    brute.add_argument("--order", choices=("wlex", "wrevlex"), default="wlex")
    brute.add_argument("--spanning", choices=("generators", "pairs"), default="generators")

    ap = argparse.ArgumentParser(prog="hp0", description="Zeroth Poisson homology in characteristic p")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("surface", parents=[common, modes, brute], help="weighted surface Q = 0")
    s.add_argument("--spec")
    s.add_argument("--preset")
    s.add_argument("--no-certify", action="store_true", help="skip the isolated-singularity check")
    s.set_defaults(func=cmd_surface)

    s = sub.add_parser("kleinian", parents=[common, modes], help="ADE singularity")
    s.add_argument("--type", required=True)
    s.set_defaults(func=cmd_kleinian)

    s = sub.add_parser("curve", parents=[common, modes], help="cone over a smooth plane curve")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_curve)

    s = sub.add_parser("quotient", parents=[common], help="V/G by brute force")
    s.add_argument("--spec")
    s.add_argument("--group")
    s.add_argument("--root", type=int, help="primitive root of unity to use for zeta")
    s.add_argument("--what", choices=("hp0", "B-mod-AB"), default="hp0")
    s.add_argument("--spanning", choices=("generators", "pairs"), default="generators")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("quotient-formula", parents=[common], help="V/G from stratum data")
    s.add_argument("--strata")
    s.add_argument("--type")
    s.set_defaults(func=cmd_quotient_formula)

    s = sub.add_parser("sympower", parents=[common], help="Sym^n of a symplectic space")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=("formula", "compare"), default="formula")
    s.set_defaults(func=cmd_sympower)

    s = sub.add_parser("sym-kleinian", parents=[common], help="Sym^n of a Kleinian singularity")
    s.add_argument("--type", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_sym_kleinian)

    s = sub.add_parser("series", parents=[common], help="Laurent coefficients of the surface functions")
    s.add_argument("--op", choices=("f", "u", "s", "g", "hilbert", "jacobi", "identities"), required=True)
    s.add_argument("--weights", type=_ints, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--from", dest="from_", type=int)
    s.add_argument("--r", type=int)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("sweep", parents=[common], help="small-prime sweep of a surface")
    s.add_argument("--spec")
    s.add_argument("--preset")
    s.add_argument("--primes", type=_primes, required=True)
    s.add_argument("--no-certify", action="store_true")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("preset", help="list or dump embedded presets")
    s.add_argument("--list", action="store_true")
    s.add_argument("--dump")
    s.set_defaults(func=cmd_preset)

    s = sub.add_parser("accept", help="run the acceptance suite")
    s.add_argument("--only", type=lambda t: set(_ints(t)))
    s.add_argument("--format", choices=("tsv", "json"), default="tsv")
    s.set_defaults(func=cmd_accept)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        args.func(args)
    except _Mismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (SpecError, ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
