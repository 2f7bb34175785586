"""Command line interface.

Subcommands: witt (ring arithmetic over the integers), zeta, sym, series,
reconstruct, check.  Results go to stdout as a single JSON document;
stderr carries only diagnostics.  Document-valued flags accept inline JSON
or @path to read a file.

Wire formats.  A Witt vector is {"precision": N, "coeffs": ["a1", ..,
"aN"]} with coefficients as decimal strings and the constant term 1 left
implicit; nested Witt vectors nest the same object.  Ghost coordinates
are {"precision": N, "ghost": [..]}.  A rational function is {"num":
[..], "den": [..]} with ascending coefficients starting at "1", plus a
factored "display" string when the denominator splits into (1-ct)
factors.

Exit codes: 0 success, 1 failed check suite, 2 malformed input, 3
integrality failure (inconsistent counts, non-divisible Newton step), 4
enumeration budget exceeded, 5 precision shortfall.  The environment
variable WITTZETA_ENUM_BUDGET overrides the default enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from .checks import CRITERIA, run_checks
from .errors import BudgetError, IntegralityError, PrecisionError, SpecError
from .finitefield import DEFAULT_ENUM_BUDGET
from .rings import ZZ
from .varieties import (
    AffineSpace,
    CountsSpec,
    EllipticCurve,
    EquationsSpec,
    ProductSpec,
    ProjectiveSpace,
    VarietySpec,
    point_counts,
)
from .witt import WittVector, frobenius, ghost, ghost_inverse, GhostVector, teichmuller, witt_add, witt_mul, witt_neg
from .zeta import RationalFunction, rational_reconstruct, sym_zeta, zeta_from_counts, zeta_generating_series


def _read_argument(text: str) -> str:
    """Resolve @path arguments to file contents, pass inline text through."""
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as handle:
                return handle.read()
        except OSError as exc:
            raise SpecError(f"cannot read input file {text[1:]!r}: {exc}") from exc
    return text


def _parse_json(text: str, what: str) -> Any:
    try:
        return json.loads(_read_argument(text))
    except json.JSONDecodeError as exc:
        raise SpecError(f"{what} is not valid JSON: {exc}") from exc


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool):
        raise SpecError(f"{what} must be an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError as exc:
            raise SpecError(f"{what} must be a decimal integer, got {value!r}") from exc
    raise SpecError(f"{what} must be an integer, got {type(value).__name__}")


def encode_witt(vector: WittVector) -> dict:
    coeffs: list[Any] = []
    for c in vector.coeffs:
        if isinstance(c, WittVector):
            coeffs.append(encode_witt(c))
        elif isinstance(c, int):
            coeffs.append(str(c))
        else:
            raise SpecError(f"cannot serialize coefficients of type {type(c).__name__}")
    return {"precision": vector.prec, "coeffs": coeffs}


def decode_witt(obj: Any) -> WittVector:
    if not isinstance(obj, dict):
        raise SpecError("a Witt vector document must be a JSON object")
    unknown = set(obj) - {"precision", "coeffs"}
    if unknown:
        raise SpecError(f"unknown Witt vector fields: {sorted(unknown)}")
    prec = _as_int(obj.get("precision"), "precision")
    coeffs = obj.get("coeffs")
    if not isinstance(coeffs, list) or len(coeffs) != prec:
        raise SpecError("coeffs must be a list of length precision")
    values = [_as_int(c, "coefficient") for c in coeffs]
    if prec < 1:
        raise SpecError("precision must be at least 1")
    return WittVector.from_coeffs(ZZ, values)


def decode_ghost(obj: Any) -> GhostVector:
    if not isinstance(obj, list) or not obj:
        raise SpecError("ghost coordinates must be a nonempty JSON array")
    return GhostVector(ZZ, [_as_int(c, "ghost coordinate") for c in obj])


def encode_ghost(g: GhostVector) -> dict:
    return {"precision": g.prec, "ghost": [str(c) for c in g.coords]}


def encode_rational(rf: RationalFunction) -> dict:
    doc = {
        "num": [str(rf.num.coefficient(k)) for k in range(max(rf.num.degree, 0) + 1)],
        "den": [str(rf.den.coefficient(k)) for k in range(max(rf.den.degree, 0) + 1)],
    }
    shown = rf.display()
    if shown is not None:
        doc["display"] = shown
    return doc


def decode_spec(obj: Any) -> VarietySpec:
    if not isinstance(obj, dict) or "type" not in obj:
        raise SpecError('a variety spec is a JSON object with a "type" field')
    kind = obj["type"]
    try:
        if kind == "affine":
            return AffineSpace(_as_int(obj["dim"], "dim"), _as_int(obj["q"], "q"))
        if kind == "projective":
            return ProjectiveSpace(_as_int(obj["dim"], "dim"), _as_int(obj["q"], "q"))
        if kind == "elliptic":
            return EllipticCurve(
                _as_int(obj["p"], "p"), _as_int(obj["a"], "a"), _as_int(obj["b"], "b")
            )
        if kind == "product":
            factors = obj["factors"]
            if not isinstance(factors, list):
                raise SpecError("product factors must be a JSON array")
            return ProductSpec(tuple(decode_spec(f) for f in factors))
        if kind == "counts":
            counts = obj["counts"]
            if not isinstance(counts, list):
                raise SpecError("counts must be a JSON array")
            return CountsSpec(
                _as_int(obj["q"], "q"), tuple(_as_int(c, "count") for c in counts)
            )
        if kind == "equations":
            variables = obj["vars"]
            polys = obj["polys"]
            if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
                raise SpecError("vars must be a JSON array of names")
            if not isinstance(polys, list) or not all(isinstance(f, str) for f in polys):
                raise SpecError("polys must be a JSON array of expressions")
            return EquationsSpec.from_strings(_as_int(obj["p"], "p"), variables, polys)
    except KeyError as exc:
        raise SpecError(f"variety spec of type {kind!r} is missing field {exc}") from exc
    raise SpecError(f"unknown variety type {kind!r}")


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")


def _budget() -> int:
    raw = os.environ.get("WITTZETA_ENUM_BUDGET")
    if raw is None:
        return DEFAULT_ENUM_BUDGET
    try:
        value = int(raw, 10)
    except ValueError as exc:
        raise SpecError(f"WITTZETA_ENUM_BUDGET must be an integer, got {raw!r}") from exc
    if value < 1:
        raise SpecError("WITTZETA_ENUM_BUDGET must be positive")
    return value


def _witt_operands(args: argparse.Namespace) -> list[WittVector]:
    """Teichmueller operands (needing -N) first, then document operands."""
    operands: list[WittVector] = []
    for a in args.teich:
        if args.precision is None:
            raise SpecError("--teich operands need an explicit -N precision")
        if args.precision < 1:
            raise SpecError("precision must be at least 1")
        operands.append(teichmuller(a, args.precision, ZZ))
    for text in args.witt:
        operands.append(decode_witt(_parse_json(text, "Witt vector document")))
    return operands


def cmd_witt(args: argparse.Namespace) -> int:
    op = args.op
    if op == "unghost":
        if args.ghost is None:
            raise SpecError("unghost needs --ghost coordinates")
        g = decode_ghost(_parse_json(args.ghost, "ghost coordinates"))
        _emit(encode_witt(ghost_inverse(g)))
        return 0
    operands = _witt_operands(args)
    if op in ("add", "mul"):
        if len(operands) < 2:
            raise SpecError(f"{op} needs at least two operands")
        acc = operands[0]
        for rhs in operands[1:]:
            acc = witt_add(acc, rhs) if op == "add" else witt_mul(acc, rhs)
        result = acc
    elif op == "neg":
        if len(operands) != 1:
            raise SpecError("neg takes exactly one operand")
        result = witt_neg(operands[0])
    elif op == "teich":
        if len(args.teich) != 1 or args.witt:
            raise SpecError("teich takes exactly one --teich operand")
        result = operands[0]
    elif op == "ghost":
        if len(operands) != 1:
            raise SpecError("ghost takes exactly one operand")
        _emit(encode_ghost(ghost(operands[0])))
        return 0
    elif op == "frob":
        if len(operands) != 1:
            raise SpecError("frob takes exactly one operand")
        if args.index is None or args.index < 1:
            raise SpecError("frob needs a positive -n index")
        result = frobenius(operands[0], args.index)
    else:  # pragma: no cover - argparse restricts choices
        raise SpecError(f"unknown witt operation {op!r}")
    if args.precision is not None and args.precision < result.prec:
        result = result.truncate(args.precision)
    _emit(encode_witt(result))
    return 0


def _decode_spec_arg(args: argparse.Namespace) -> VarietySpec:
    return decode_spec(_parse_json(args.spec, "variety spec"))


def cmd_zeta(args: argparse.Namespace) -> int:
    spec = _decode_spec_arg(args)
    counts = point_counts(spec, args.precision, _budget())
    _emit(encode_witt(zeta_from_counts(counts, args.precision)))
    return 0


def cmd_sym(args: argparse.Namespace) -> int:
    spec = _decode_spec_arg(args)
    _emit(encode_witt(sym_zeta(spec, args.power, args.precision, _budget())))
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    spec = _decode_spec_arg(args)
    _emit(encode_witt(zeta_generating_series(spec, args.outer, args.inner, _budget())))
    return 0


def cmd_reconstruct(args: argparse.Namespace) -> int:
    if (args.spec is None) == (args.witt is None):
        raise SpecError("reconstruct needs exactly one of --spec or --witt")
    if args.spec is not None:
        if args.precision is None:
            raise SpecError("reconstruct --spec needs -N for the zeta precision")
        spec = _decode_spec_arg(args)
        counts = point_counts(spec, args.precision, _budget())
        vector = zeta_from_counts(counts, args.precision)
    else:
        vector = decode_witt(_parse_json(args.witt, "Witt vector document"))
    _emit(encode_rational(rational_reconstruct(vector, args.dmax)))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    names: Sequence[str] | None
    if not args.suites or args.suites == ["all"]:
        names = None
    else:
        names = args.suites
    try:
        results = run_checks(names)
    except KeyError as exc:
        raise SpecError(str(exc)) from exc
    for entry in results:
        status = "PASS" if entry["passed"] else "FAIL"
        sys.stderr.write(f"{entry['criterion']}: {status} - {entry['detail']}\n")
    passed = all(entry["passed"] for entry in results)
    _emit({"passed": passed, "results": results})
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittzeta",
        description="Exact Witt-ring arithmetic and zeta functions of symmetric powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    witt = sub.add_parser("witt", help="Witt-ring arithmetic over the integers")
    witt.add_argument("op", choices=["add", "mul", "neg", "teich", "ghost", "unghost", "frob"])
    witt.add_argument("--teich", action="append", type=int, default=[], metavar="A",
                      help="Teichmueller operand [A]; needs -N (repeatable)")
    witt.add_argument("--witt", action="append", default=[], metavar="DOC",
                      help="Witt vector document, inline JSON or @file (repeatable)")
    witt.add_argument("--ghost", metavar="LIST", help="ghost coordinates for unghost")
    witt.add_argument("-N", "--precision", type=int, help="precision for --teich operands")
    witt.add_argument("-n", "--index", type=int, help="Frobenius index for frob")
    witt.set_defaults(handler=cmd_witt)

    zeta = sub.add_parser("zeta", help="zeta function of a variety")
    zeta.add_argument("--spec", required=True, help="variety spec, inline JSON or @file")
    zeta.add_argument("-N", "--precision", type=int, required=True)
    zeta.set_defaults(handler=cmd_zeta)

    sym = sub.add_parser("sym", help="zeta function of a symmetric power")
    sym.add_argument("--spec", required=True, help="variety spec, inline JSON or @file")
    sym.add_argument("-n", "--power", type=int, required=True)
    sym.add_argument("-N", "--precision", type=int, required=True)
    sym.set_defaults(handler=cmd_sym)

    series = sub.add_parser("series", help="generating series of all symmetric-power zetas")
    series.add_argument("--spec", required=True, help="variety spec, inline JSON or @file")
    series.add_argument("-M", "--outer", type=int, required=True, help="outer precision in u")
    series.add_argument("-N", "--inner", type=int, required=True, help="inner precision in t")
    series.set_defaults(handler=cmd_series)

    rec = sub.add_parser("reconstruct", help="rational function from a truncated zeta")
    rec.add_argument("--spec", help="variety spec, inline JSON or @file")
    rec.add_argument("--witt", help="Witt vector document, inline JSON or @file")
    rec.add_argument("-N", "--precision", type=int, help="zeta precision when using --spec")
    rec.add_argument("--dmax", type=int, required=True, help="degree bound for num and den")
    rec.set_defaults(handler=cmd_reconstruct)

    check = sub.add_parser("check", help="run acceptance check suites")
    check.add_argument("suites", nargs="*",
                       help=f"suite names (default all): {', '.join(name for name, _ in CRITERIA)}")
    check.set_defaults(handler=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SpecError as exc:
        return _fail(2, "malformed-input", str(exc))
    except IntegralityError as exc:
        return _fail(3, "integrality-failure", str(exc), degree=exc.degree)
    except BudgetError as exc:
        return _fail(4, "budget-exceeded", str(exc), required=exc.required, budget=exc.budget)
    except PrecisionError as exc:
        return _fail(5, "precision-shortfall", str(exc), required=exc.required)
    except ValueError as exc:
        return _fail(2, "malformed-input", str(exc))


def _fail(code: int, kind: str, message: str, **extra: Any) -> int:
    payload = {"code": kind, "message": message}
    for key, value in extra.items():
        if value is not None:
            payload[key] = value
    sys.stderr.write(json.dumps({"error": payload}, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
