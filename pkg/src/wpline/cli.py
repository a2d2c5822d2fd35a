"""Command-line frontend: group queries, algebra queries, verification runs.

Exit codes: 0 for success (verification passed, or a query answered),
1 when a verification ran and came out false, 2 for usage and configuration
errors.  Verification reports are JSON with sorted keys, byte-for-byte
deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import CoordinateAlgebra
from .cases import CASE_IDS, auto_prime, builtin_case, builtin_group_hom
from .config import VerifyConfig, parse_scalar
from .field import (ConstantUnavailable, InvalidLambda, PrimeField,
                    field_from_spec)
from .homverify import GradednessError, RelationError
from .stringgroup import (InfiniteFiberError, WeightSequence,
                          WellDefinednessError, _kernel_sort_key, _sort_key)


class UsageError(ValueError):
    pass


def _weights(text: str) -> WeightSequence:
    try:
        return WeightSequence(tuple(int(v) for v in text.split(",")))
    except ValueError as exc:
        raise UsageError("bad --weights value %r: %s" % (text, exc)) from None


def _render(elem, pretty: bool) -> str:
    return elem.pretty() if pretty else str(elem)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpline",
        description="string groups, graded coordinate algebras and graded-isomorphism checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="string group queries")
    gsub = group.add_subparsers(dest="subcommand", required=True)

    def add_group(name, weights=False, elem=0, case=False, window=False):
        p = gsub.add_parser(name)
        if weights:
            p.add_argument("--weights", required=True)
        if elem:
            p.add_argument("--elem", action="append", required=True,
                           help="element as 'l;l1,l2,...'")
        if case:
            p.add_argument("--case", required=True, choices=CASE_IDS)
        if window:
            p.add_argument("--window", type=int, default=64)
        p.add_argument("--pretty", action="store_true")
        return p

    add_group("normal-form", weights=True, elem=1)
    add_group("add", weights=True, elem=2)
    add_group("order", weights=True, elem=1)
    add_group("dualizing", weights=True)
    add_group("tubular", weights=True)
    add_group("kernel", case=True)
    add_group("fiber", case=True, elem=1)
    add_group("admissible", case=True, window=True)

    algebra = sub.add_parser("algebra", help="coordinate algebra queries")
    asub = algebra.add_subparsers(dest="subcommand", required=True)

    def add_algebra(name):
        p = asub.add_parser(name)
        p.add_argument("--weights", required=True)
        p.add_argument("--params", default="",
                       help="parameters beyond the normalized 1, comma separated")
        p.add_argument("--field", default="rationals")
        return p

    p = add_algebra("dim")
    p.add_argument("--degree", required=True)
    p = add_algebra("basis")
    p.add_argument("--degree", required=True)
    p.add_argument("--json", action="store_true", dest="as_json")
    p = add_algebra("reduce")
    p.add_argument("--monomial", required=True, help="exponent vector 'a1,a2,...'")
    p.add_argument("--coeff", default="1")
    p = add_algebra("hilbert")
    p.add_argument("--lmin", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--torsion", default="")

    verify = sub.add_parser("verify", help="verify a built-in case or a config file")
    verify.add_argument("--case", choices=CASE_IDS)
    verify.add_argument("--config")
    verify.add_argument("--field", default=None, help="'rationals' or a prime")
    verify.add_argument("--lambda", dest="lam", default=None,
                        help="target parameter for case D")
    verify.add_argument("--window", type=int, default=None,
                        help="level window (default 20, or the config's value)")
    verify.add_argument("--out", default=None)
    verify.add_argument("--auto-prime", action="store_true",
                        help="scan primes 5..1000 for the smallest admissible one")
    verify.add_argument("--root-pick", choices=("smallest", "largest"),
                        default="smallest")
    verify.add_argument("--tamper", default=None,
                        help="negative control, e.g. lambda=2 replaces the target parameter")
    return parser


# -- group subcommands -------------------------------------------------------

def _cmd_group(args) -> int:
    sc = args.subcommand
    pretty = getattr(args, "pretty", False)
    if sc in ("normal-form", "add", "order", "dualizing", "tubular"):
        ws = _weights(args.weights)
        if sc == "normal-form":
            print(_render(ws.parse(args.elem[0]), pretty))
        elif sc == "add":
            if len(args.elem) != 2:
                raise UsageError("add needs exactly two --elem values")
            a, b = (ws.parse(e) for e in args.elem)
            print(_render(a + b, pretty))
        elif sc == "order":
            n = ws.parse(args.elem[0]).order()
            print("infinity" if n == float("inf") else str(n))
        elif sc == "dualizing":
            print(_render(ws.dualizing_element(), pretty))
        elif sc == "tubular":
            print("true" if ws.is_tubular() else "false")
        return 0

    hom = builtin_group_hom(args.case)
    if sc == "kernel":
        for k in sorted(hom.kernel(), key=_kernel_sort_key):
            print(_render(k, pretty))
        return 0
    if sc == "fiber":
        x = hom.target.parse(args.elem[0])
        for y in sorted(hom.fiber(x), key=_sort_key):
            print(_render(y, pretty))
        return 0
    if sc == "admissible":
        rep = hom.is_admissible(args.window)
        print(json.dumps({
            "admissible": rep.admissible,
            "effective": rep.effective,
            "window": rep.window,
            "checked": rep.checked,
            "failures": [[str(x), got, want] for x, got, want in rep.failures],
            "kernel": [str(k) for k in rep.kernel],
            "edge_regime_ok": rep.edge_regime_ok,
        }, sort_keys=True))
        return 0
    raise UsageError("unknown group subcommand %r" % sc)


# -- algebra subcommands ------------------------------------------------------

def _algebra_from_args(args) -> CoordinateAlgebra:
    ws = _weights(args.weights)
    field = field_from_spec(args.field)
    extra = [parse_scalar(v, field) for v in args.params.split(",") if v.strip()]
    if len(ws) >= 3:
        params = [field.one] + extra
    elif extra:
        raise UsageError("weight sequences of length 2 take no parameters")
    else:
        params = []
    try:
        return CoordinateAlgebra(ws, field, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_algebra(args) -> int:
    alg = _algebra_from_args(args)
    sc = args.subcommand
    if sc == "dim":
        x = alg.weights.parse(args.degree)
        print(alg.dim(x))
        return 0
    if sc == "basis":
        x = alg.weights.parse(args.degree)
        basis = alg.component_basis(x)
        if args.as_json:
            print(json.dumps([list(e) for e in basis]))
        else:
            monos = [str(alg.monomial(e)) for e in basis]
            print("[%s]" % ", ".join(monos))
        return 0
    if sc == "reduce":
        try:
            exps = tuple(int(v) for v in args.monomial.split(","))
        except ValueError:
            raise UsageError("bad --monomial value %r" % args.monomial) from None
        coeff = parse_scalar(args.coeff, alg.field)
        print(alg.reduce_monomial(exps, coeff))
        return 0
    if sc == "hilbert":
        if args.torsion.strip():
            tor = tuple(int(v) for v in args.torsion.split(","))
        else:
            tor = (0,) * len(alg.weights)
        for l in range(args.lmin, args.lmax + 1):
            x = alg.weights.element(l, tor)
            print("%d %d" % (l, alg.dim(x)))
        return 0
    raise UsageError("unknown algebra subcommand %r" % sc)


# -- verify -------------------------------------------------------------------

def _emit_report(report: dict, out_path: str | None):
    text = json.dumps(report, sort_keys=True, indent=2)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _tampered_hom(spec, tamper: str):
    """Rebuild a built-in case with a tampered target parameter."""
    from .homverify import AlgebraHom
    key, _, value = tamper.partition("=")
    if key.strip() != "lambda" or not value:
        raise UsageError("unsupported --tamper directive %r (try lambda=VALUE)" % tamper)
    target = spec.algebra_hom.target
    if len(target.weights) < 4:
        raise UsageError("case %s target has no free parameter to tamper with"
                         % spec.case_id)
    params = list(target.params)
    params[-1] = parse_scalar(value, spec.field)
    new_target = CoordinateAlgebra(target.weights, spec.field, params)
    images = [new_target.element([(c, e) for e, c in im.terms.items()])
              for im in spec.algebra_hom.gen_images]
    return AlgebraHom(spec.algebra_hom.source, new_target, spec.group_hom, images)


def _cmd_verify(args) -> int:
    if bool(args.case) == bool(args.config):
        raise UsageError("verify needs exactly one of --case or --config")

    if args.config:
        cfg = VerifyConfig.load(args.config)
        window = args.window if args.window is not None else cfg.window
        try:
            field, env, phi = cfg.build()
        except (RelationError, GradednessError, WellDefinednessError) as exc:
            report = {
                "case": "custom",
                "field": cfg.field_spec,
                "window": window,
                "records": [],
                "error": {"type": type(exc).__name__, "message": str(exc)},
                "summary": "fail",
            }
            _emit_report(report, args.out)
            return 1
        result = phi.verify_window(window)
        report = result.to_report(case="custom", field_name=field.name,
                                  constants={k: str(v) for k, v in env.items()})
        _emit_report(report, args.out)
        return 0 if result.passed else 1

    case_id = args.case
    window = args.window if args.window is not None else 20
    if args.auto_prime:
        if args.field is not None:
            raise UsageError("--auto-prime replaces --field")
        q = auto_prime(case_id, lam=args.lam)
        field = PrimeField(q)
    else:
        field = field_from_spec(args.field or "rationals")
    lam = args.lam
    if case_id == "D" and lam is None:
        raise UsageError("case D needs --lambda")

    spec = builtin_case(case_id, field, lam=lam, root_pick=args.root_pick)
    hom = spec.algebra_hom
    tamper_note = {}
    if args.tamper:
        tamper_note = {"tamper": args.tamper}
        try:
            hom = _tampered_hom(spec, args.tamper)
        except (RelationError, GradednessError, WellDefinednessError) as exc:
            report = {
                "case": case_id,
                "field": field.name,
                "window": window,
                "admissible": spec.group_hom.is_admissible(window).admissible,
                "kernel": [str(k) for k in spec.expected_kernel],
                "constants": spec.report_constants(),
                "records": [],
                "error": {"type": type(exc).__name__, "message": str(exc)},
                "summary": "fail",
                **tamper_note,
            }
            _emit_report(report, args.out)
            return 1

    result = hom.verify_window(window)
    report = result.to_report(case=case_id, field_name=field.name,
                              constants=spec.report_constants(), extra=tamper_note)
    _emit_report(report, args.out)
    return 0 if result.passed else 1


#: flags whose values can begin with "-" (element literals, parameters, ...)
_RAW_VALUE_FLAGS = ("--elem", "--degree", "--lambda", "--coeff", "--torsion",
                    "--monomial", "--params")


def _join_raw_values(argv: list[str]) -> list[str]:
    """Turn ["--elem", "-2;5,2,1"] into ["--elem=-2;5,2,1"] so argparse does
    not read the value as an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RAW_VALUE_FLAGS and i + 1 < len(argv) and not argv[i + 1].startswith("--"):
            out.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_raw_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "group":
            return _cmd_group(args)
        if args.command == "algebra":
            return _cmd_algebra(args)
        if args.command == "verify":
            return _cmd_verify(args)
        raise UsageError("unknown command %r" % args.command)
    except ConstantUnavailable as exc:
        print("error: %s (try another prime, or --auto-prime)" % exc, file=sys.stderr)
        return 2
    except (UsageError, InvalidLambda, InfiniteFiberError, WellDefinednessError,
            ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entry():  # console-script hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
