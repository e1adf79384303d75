"""Command-line front end.

Commands: validate, fpdim, regular, integrality, center, morita, deligne,
catalog.  File arguments take a path, "-" for stdin, or a builtin fixture
name.  Exit codes: 0 success/pass, 1 validation or property failure, 2
usage or schema error.

All output is byte-deterministic: exact rationals are serialized as decimal
strings "p/q", decimal approximations are truncated (never rounded through
floats), and JSON keys are sorted.  --precision only changes interval
widths, never minimal polynomials or exact values.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import __version__
from .catalog import FixtureEntry, get_builtin, list_builtins
from .deligne import deligne_product
from .errors import FusionError, SchemaError
from .fileformat import emit_entry, parse_fusion_file
from .fpengine import (
    AlgebraicNumber,
    ExactValue,
    char_poly,
    fpdim_element,
    left_mult_matrix,
    min_poly,
    normalize_value,
    refine,
)
from .galois import center_fpdim_prediction
from .morphisms import morita_ratio_equal
from .poly import RationalPolynomial
from .regular import (
    certify_integrality,
    fpdim_category,
    regular_element,
    verify_regular_eigenproperty,
)
from .report import ValidationReport
from .validate import check_eps_consistency, check_structural, check_transitivity


# ---------------------------------------------------------------------------
# serialization helpers


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _decimal_str(q: Fraction, places: int = 15) -> str:
    sign = "-" if q < 0 else ""
    q = abs(q)
    digits = (q * 10**places).numerator // (q * 10**places).denominator
    int_part, frac_part = divmod(digits, 10**places)
    tail = str(frac_part).zfill(places).rstrip("0")
    return f"{sign}{int_part}.{tail}" if tail else f"{sign}{int_part}"


def _poly_json(p: RationalPolynomial) -> list:
    return [int(c) if c.denominator == 1 else _frac_str(c) for c in p.coeffs]


def _value_payload(value: ExactValue | AlgebraicNumber, width: Fraction) -> dict[str, Any]:
    value = normalize_value(value)
    if isinstance(value, Fraction):
        return {
            "value": _frac_str(value),
            "approx": _decimal_str(value),
            "min_poly": _poly_json(RationalPolynomial((-value, 1))),
            "interval": [_frac_str(value), _frac_str(value)],
        }
    refined = refine(value, width)
    poly = min_poly(refined)
    return {
        "value": None,
        "approx": _decimal_str(refined.midpoint()),
        "min_poly": _poly_json(poly),
        "interval": [_frac_str(refined.lo), _frac_str(refined.hi)],
    }


def _report_json(report: ValidationReport) -> list[dict[str, Any]]:
    return [
        {"rule": v.rule, "witness": list(v.witness), "message": v.message}
        for v in report.violations
    ]


def _render(payload: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    lines: list[str] = []

    def emit(path: str, value: Any) -> None:
        if isinstance(value, dict):
            for key in sorted(value):
                emit(f"{path}.{key}" if path else key, value[key])
        elif isinstance(value, list):
            if not value:
                lines.append(f"{path}: []")
            for i, item in enumerate(value):
                emit(f"{path}[{i}]", item)
        else:
            lines.append(f"{path}: {_text_scalar(value)}")

    emit("", payload)
    return "\n".join(lines) + "\n"


def _text_scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


# ---------------------------------------------------------------------------
# input loading


def _load(arg: str) -> FixtureEntry:
    if arg == "-":
        return parse_fusion_file(sys.stdin.read()).as_entry()
    path = Path(arg)
    if path.exists():
        return parse_fusion_file(path.read_text(encoding="utf-8")).as_entry()
    if arg in list_builtins():
        return get_builtin(arg)
    raise SchemaError(f"{arg!r} is neither a file, '-', nor a builtin fixture name")


def _gate_structural(entry: FixtureEntry) -> None:
    report = check_structural(entry.data)
    if not report.passed:
        messages = "; ".join(v.message for v in report.violations[:5])
        raise FusionError(
            f"input fails structural checks ({len(report.violations)} violations): "
            f"{messages}"
        )


def _identify(entry: FixtureEntry) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if entry.name:
        out["name"] = entry.name
    if entry.description:
        out["description"] = entry.description
    return out


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_validate(args: argparse.Namespace) -> int:
    entry = _load(args.file)
    data = entry.data
    structural = check_structural(data)
    report = structural
    checks = ["structural"]
    if data.is_fusion:
        report = report.merged(check_eps_consistency(data))
        report = report.merged(check_transitivity(data))
        checks += ["eps_consistency", "transitivity"]
    payload = {
        **_identify(entry),
        "checks": checks,
        "passed": report.passed,
        "violations": _report_json(report),
    }
    sys.stdout.write(_render(payload, args.format))
    return 0 if report.passed else 1


def _cmd_fpdim(args: argparse.Namespace) -> int:
    entry = _load(args.file)
    _gate_structural(entry)
    data = entry.data
    width = Fraction(1, 2**args.precision)
    waive = args.waive_transitivity
    if args.category:
        value = fpdim_category(data, waive_transitivity=waive, width=width)
        payload = {**_identify(entry), **_value_payload(value, width)}
        payload["algebraic_integer"] = all(
            isinstance(c, int) for c in payload["min_poly"]
        )
        sys.stdout.write(_render(payload, args.format))
        return 0
    if args.element is not None:
        x = data.basis(args.element)
        value = fpdim_element(x, waive_transitivity=waive, width=width)
        payload = {
            **_identify(entry),
            "element": args.element,
            **_value_payload(value, width),
            "char_poly": _poly_json(char_poly(left_mult_matrix(x))),
        }
        payload["algebraic_integer"] = all(
            isinstance(c, int) for c in payload["min_poly"]
        )
        sys.stdout.write(_render(payload, args.format))
        return 0
    elements = {}
    for label in data.labels:
        value = fpdim_element(data.basis(label), waive_transitivity=waive, width=width)
        elements[label] = _value_payload(value, width)
    payload = {**_identify(entry), "elements": elements}
    sys.stdout.write(_render(payload, args.format))
    return 0


def _cmd_regular(args: argparse.Namespace) -> int:
    entry = _load(args.file)
    _gate_structural(entry)
    width = Fraction(1, 2**args.precision)
    reg = regular_element(
        entry.data, waive_transitivity=args.waive_transitivity, width=width
    )
    verification = verify_regular_eigenproperty(
        entry.data, waive_transitivity=args.waive_transitivity
    )
    payload = {
        **_identify(entry),
        "coefficients": {
            entry.data.labels[i]: _value_payload(c, width) for i, c in enumerate(reg.coeffs)
        },
        "eigenproperty_passed": verification.passed,
        "violations": _report_json(verification),
    }
    sys.stdout.write(_render(payload, args.format))
    return 0 if verification.passed else 1


def _cmd_integrality(args: argparse.Namespace) -> int:
    entry = _load(args.file)
    _gate_structural(entry)
    width = Fraction(1, 2**args.precision)
    cert = certify_integrality(
        entry.data, waive_transitivity=args.waive_transitivity, width=width
    )
    payload = {
        **_identify(entry),
        **_value_payload(cert.fpdim, width),
        "min_poly": _poly_json(cert.min_poly),
        "algebraic_integer": cert.is_algebraic_integer,
    }
    sys.stdout.write(_render(payload, args.format))
    return 0 if cert.is_algebraic_integer else 1


def _cmd_center(args: argparse.Namespace) -> int:
    entry = _load(args.file)
    _gate_structural(entry)
    if entry.annotation is None and args.dz is None:
        raise FusionError(
            "input has no Galois annotation; annotate the file or pass --dz"
        )
    if entry.annotation is None:
        raise FusionError(
            "--dz alone is not enough: per-simple Galois marks are required "
            "to compute the image of the forgetful functor"
        )
    width = Fraction(1, 2**args.precision)
    prediction = center_fpdim_prediction(
        entry.data, entry.annotation, user_center_degree=args.dz, width=width
    )
    predicted = normalize_value(prediction.predicted)
    payload = {
        **_identify(entry),
        "predicted": _frac_str(predicted)
        if isinstance(predicted, Fraction)
        else _value_payload(predicted, width),
        "bound": "violated"
        if not prediction.bound_ok
        else ("equal" if not prediction.strict else "strict"),
        "equality_iff_all_trivial": prediction.equality,
        "consistent": prediction.consistent,
        "center_degree": prediction.center_degree,
        "image_rank": prediction.image.rank,
        "image_simples": list(prediction.image.labels),
    }
    sys.stdout.write(_render(payload, args.format))
    return 0 if prediction.bound_ok and prediction.consistent else 1


def _cmd_morita(args: argparse.Namespace) -> int:
    entry_a = _load(args.a)
    entry_b = _load(args.b)
    _gate_structural(entry_a)
    _gate_structural(entry_b)
    width = Fraction(1, 2**args.precision)
    result = morita_ratio_equal(entry_a.data, entry_b.data)
    payload = {
        "a": _identify(entry_a) or {"name": args.a},
        "b": _identify(entry_b) or {"name": args.b},
        "ratio_a": _value_payload(result.ratio_a, width),
        "ratio_b": _value_payload(result.ratio_b, width),
        "equal": result.equal,
    }
    sys.stdout.write(_render(payload, args.format))
    return 0 if result.equal else 1


def _cmd_deligne(args: argparse.Namespace) -> int:
    entry_a = _load(args.a)
    entry_b = _load(args.b)
    for arg, entry in ((args.a, entry_a), (args.b, entry_b)):
        if entry.desc is None:
            raise SchemaError(
                f"{arg!r} carries no division types; add a \"division_types\" "
                "section to use it in products"
            )
    simples = deligne_product(entry_a.desc, entry_b.desc)
    payload = {
        "a": _identify(entry_a) or {"name": args.a},
        "b": _identify(entry_b) or {"name": args.b},
        "count": len(simples),
        "simples": [
            {
                "label": s.label,
                "division_type": s.division_type.value,
                "multiplicity": s.multiplicity,
            }
            for s in simples
        ],
    }
    sys.stdout.write(_render(payload, args.format))
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        payload = {"builtins": list(list_builtins())}
        sys.stdout.write(_render(payload, args.format))
        return 0
    if args.name is None:
        raise SchemaError("catalog emit needs a fixture name")
    try:
        entry = get_builtin(args.name)
    except KeyError as exc:
        raise SchemaError(str(exc)) from None
    sys.stdout.write(emit_entry(entry))
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision",
        type=int,
        default=64,
        metavar="BITS",
        help="certified interval width 2^-BITS (default 64)",
    )
    common.add_argument(
        "--format", choices=("json", "text"), default="text", help="output format"
    )
    common.add_argument(
        "--waive-transitivity",
        action="store_true",
        help="evaluate FPdims even on non-transitive data",
    )

    parser = argparse.ArgumentParser(
        prog="fusionring",
        description="Exact Frobenius-Perron arithmetic for fusion semirings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="run all axiom checks")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("fpdim", parents=[common], help="Frobenius-Perron dimensions")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--element", metavar="LABEL", help="one simple element")
    group.add_argument(
        "--category", action="store_true", help="FPdim of the whole category"
    )
    p.set_defaults(handler=_cmd_fpdim)

    p = sub.add_parser(
        "regular", parents=[common], help="regular element and its eigenproperty"
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_regular)

    p = sub.add_parser(
        "integrality", parents=[common], help="algebraic-integrality certificate"
    )
    p.add_argument("file")
    p.set_defaults(handler=_cmd_integrality)

    p = sub.add_parser(
        "center", parents=[common], help="Drinfeld-center FPdim prediction"
    )
    p.add_argument("file")
    p.add_argument("--dz", type=int, default=None, help="center endomorphism degree")
    p.set_defaults(handler=_cmd_center)

    p = sub.add_parser("morita", parents=[common], help="compare FPdim/d invariants")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_morita)

    p = sub.add_parser(
        "deligne", parents=[common], help="real division-type product of two inputs"
    )
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_deligne)

    p = sub.add_parser("catalog", parents=[common], help="builtin fixtures")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(handler=_cmd_catalog)

    return parser


def run_command(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except FusionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
