"""Command-line front end (``hahnalg``)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import basic as B
from . import dvr, rootalg, tables
from .expr import parse, parse_atom, render, render_atom
from .functors import FunctorName, apply
from .invariants import decompose_report, psi_count
from .series import FiniteSeries, divide, format_exponent, invert_unit, parse_exponent
from .smith import SeriesMatrix, smith, smith_by_elimination

PRECISION_ENV = "HAHN_PRECISION"


class CliError(Exception):
    pass


def default_precision() -> Fraction:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None or not raw.strip():
        return Fraction(8)
    try:
        n = parse_exponent(raw)
    except ValueError as exc:
        raise CliError(f"{PRECISION_ENV}: {exc}") from None
    if n <= 0:
        raise CliError(f"{PRECISION_ENV} must be positive")
    return n


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text + "\n")


def _parse_series(text: str) -> FiniteSeries:
    """Comma-separated exponents such as ``0,1/2,2`` (so ``0`` is the series 1); ``zero`` is 0."""
    text = text.strip()
    if text in ("zero", ""):
        return FiniteSeries.zero()
    exps = [parse_exponent(part) for part in text.split(",")]
    if len(set(exps)) != len(exps):
        raise CliError("repeated exponent in series")
    return FiniteSeries(exps)


def cmd_eval(args) -> None:
    name = FunctorName(args.functor)
    m = parse(args.expr)
    if name is FunctorName.DUAL:
        if args.other is not None:
            raise CliError("dual takes one expression")
        out = apply(name, m)
    else:
        if args.other is None:
            raise CliError(f"{name.value} takes two expressions")
        out = apply(name, m, parse(args.other))
    _emit(args, render(out), {"functor": name.value, "result": render(out)})


def cmd_table(args) -> None:
    p, q = parse_exponent(args.p), parse_exponent(args.q)
    if p <= 0 or q <= 0:
        raise CliError("--p and --q must be positive")
    fmt = args.format or "md"
    if fmt == "json":
        sys.stdout.write(tables.to_json(args.functor, p, q))
    else:
        sys.stdout.write(tables.to_markdown(args.functor, p, q))


def cmd_smith(args) -> None:
    try:
        with open(args.matrix, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CliError(f"{args.matrix}: invalid JSON ({exc.msg})") from None
    m = SeriesMatrix.from_json(data)
    result = smith(m)
    payload = result.to_json()
    if args.check:
        elim = smith_by_elimination(m, default_precision())
        payload["elimination_agrees"] = list(result.valuations) == elim
    text = [
        "valuations: " + (" ".join(format_exponent(s) for s in result.valuations) or "-"),
        "cokernel: " + render(result.cokernel_class),
    ]
    if args.check:
        text.append(f"elimination agrees: {str(payload['elimination_agrees']).lower()}")
    _emit(args, "\n".join(text), payload)


def cmd_invariants(args) -> None:
    report = decompose_report(parse(args.expr))
    sys.stdout.write(json.dumps(report.to_json(), indent=2) + "\n")


def cmd_psi(args) -> None:
    n = psi_count(parse_atom(args.atom), parse(args.expr))
    _emit(args, str(n), {"atom": render_atom(parse_atom(args.atom)), "count": n})


def cmd_resolve(args) -> None:
    m, first, second = B.injective_resolution(parse(args.expr))
    text = f"0 -> {render(m)} -> {render(first)} -> {render(second)} -> 0"
    _emit(args, text, {"module": render(m), "terms": [render(first), render(second)]})


def cmd_p_resolve(args) -> None:
    res = rootalg.p_injective_resolution(parse_atom(args.atom))
    _emit(args, str(res), res.to_json())


def cmd_p_incoherence(args) -> None:
    q = parse_exponent(args.q)
    kernel, fp = rootalg.incoherence_witness(q)
    text = f"kernel: {render(kernel)}\nfinitely presented: {str(fp).lower()}"
    _emit(args, text, {"q": format_exponent(q), "kernel": render(kernel), "finitely_presented": fp})


def cmd_dvr(args) -> None:
    m = dvr.parse(args.expr)
    if args.functor == "invariants":
        inv = dvr.dvr_invariants(m)
        text = " ".join(str(x) for x in inv.dims) + f" ann={inv.ann_text()}"
        _emit(args, text, inv.to_json())
        return
    if args.functor == "dual":
        if args.other is not None:
            raise CliError("dual takes one expression")
        out = dvr.dvr_dual(m)
    else:
        if args.other is None:
            raise CliError(f"{args.functor} takes two expressions")
        fn = dvr.dvr_hom if args.functor == "hom" else dvr.dvr_tensor
        out = fn(m, dvr.parse(args.other))
    _emit(args, dvr.render(out), {"functor": args.functor, "result": dvr.render(out)})


def cmd_series(args) -> None:
    a = _parse_series(args.a)
    n = parse_exponent(args.precision) if args.precision else default_precision()
    op = args.op
    if op == "valuation":
        v = a.valuation()
        text = "inf" if a.is_zero() else format_exponent(v)
        _emit(args, text, {"valuation": text})
        return
    if op == "invert":
        r = invert_unit(a, n)
    else:
        if args.b is None:
            raise CliError(f"{op} takes two series")
        b = _parse_series(args.b)
        if op == "add":
            r = a + b
        elif op == "mul":
            r = a * b
        else:
            r = divide(a, b, n)
    if op in ("invert", "divide"):
        text = str(r)
        payload = {"series": r.head.to_json(), "precision": format_exponent(r.precision)}
    else:
        text = str(r)
        payload = {"series": r.to_json()}
    _emit(args, text, payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "md"), default=None,
                        help="output format (json for machine-readable output)")
    parser = argparse.ArgumentParser(
        prog="hahnalg",
        description="Multibasic modules over the F2 Hahn ring: functors, invariants, decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="apply D, tensor, Hom, Tor or Ext")
    p.add_argument("functor", choices=[f.value for f in FunctorName])
    p.add_argument("expr")
    p.add_argument("other", nargs="?")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("table", parents=[common], help="regenerate a functor table")
    p.add_argument("functor", choices=[f.value for f in FunctorName])
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("smith", parents=[common], help="invariant factors of a matrix file")
    p.add_argument("matrix")
    p.add_argument("--check", action="store_true",
                   help=f"cross-check by elimination (start precision from {PRECISION_ENV})")
    p.set_defaults(run=cmd_smith)

    p = sub.add_parser("invariants", parents=[common], help="invariant report as JSON")
    p.add_argument("expr")
    p.set_defaults(run=cmd_invariants)

    p = sub.add_parser("psi", parents=[common], help="multiplicity of an atom via invariants")
    p.add_argument("atom")
    p.add_argument("expr")
    p.set_defaults(run=cmd_psi)

    p = sub.add_parser("resolve", parents=[common], help="injective resolution over A")
    p.add_argument("expr")
    p.set_defaults(run=cmd_resolve)

    p = sub.add_parser("p-resolve", parents=[common], help="injective resolution over P")
    p.add_argument("atom")
    p.set_defaults(run=cmd_p_resolve)

    p = sub.add_parser("p-incoherence", parents=[common], help="kernel of P -> I_q/I_(>1)")
    p.add_argument("q")
    p.set_defaults(run=cmd_p_incoherence)

    p = sub.add_parser("dvr", help="discrete valuation ring tables")
    dsub = p.add_subparsers(dest="dvr_command", required=True)
    d = dsub.add_parser("eval", parents=[common])
    d.add_argument("functor", choices=("hom", "tensor", "dual", "invariants"))
    d.add_argument("expr")
    d.add_argument("other", nargs="?")
    d.set_defaults(run=cmd_dvr)

    p = sub.add_parser("series", parents=[common], help="Hahn series arithmetic")
    p.add_argument("op", choices=("add", "mul", "valuation", "invert", "divide"))
    p.add_argument("a", help="comma-separated exponents, or 'zero'")
    p.add_argument("b", nargs="?")
    p.add_argument("--precision", help=f"truncation N (default {PRECISION_ENV} or 8)")
    p.set_defaults(run=cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.run(args)
    except (CliError, ValueError, ArithmeticError, OSError, KeyError) as exc:
        message = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        sys.stderr.write(f"hahnalg: error: {message}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
