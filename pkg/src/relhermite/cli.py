"""Command-line surface: construct, evaluate, expand, verify.

Commands: coeffs, eval, series, turan, verify.  Reports are emitted as
JSON (canonical), CSV (flattened params) or text, byte-deterministic
for fixed inputs.  Exit codes: 0 all pass, 1 identity failure, 2 usage
error, 3 mathematical precondition violated (pole or degenerate
parameter).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Iterator, Optional, Sequence, Tuple

from . import __version__
from .algebra import Poly
from .families import (
    Family,
    FamilyId,
    MomentSequence,
    Normalization,
    family_member,
    set_perturbation,
)
from .identities import (
    CheckResult,
    check_cnix,
    check_derivative,
    check_feldheim,
    check_feldheim_rhp,
    check_genfunc_rhp,
    check_hermite_addition,
    check_moment_3665,
    check_nagel,
    check_rhp_addition,
    check_scaling,
    check_shifted_genfunc,
    check_subordination_gegenbauer,
    check_subordination_hermite,
    feldheim_rhp_sides,
    feldheim_sides,
    genfunc_rhp_sides,
    run_guarded,
    shifted_genfunc_sides,
)
from .numeric import DomainError, rational, rational_str
from .turan import (
    WILKS_MAX_N,
    check_turan_gegenbauer,
    check_turan_rhp,
    check_wilks_hankel,
    check_wilks_studentr,
    hankel,
    poly_determinant,
    turan_closed_gegenbauer,
    turan_closed_rhp,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

DEFAULT_PARAMS = ("2", "3", "10", "7/2", "1/3")
DEFAULT_N_MAX = 8
DEFAULT_SERIES_ORDER = 12


class UsageError(ValueError):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational: {text!r}") from exc


def _parse_param(text: str) -> Fraction:
    value = _parse_rational(text)
    if value == 0:
        raise UsageError("parameter N must be nonzero")
    return value


def _parse_param_list(text: str) -> Tuple[Fraction, ...]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError("empty parameter list")
    return tuple(_parse_param(t) for t in items)


def _require_nonnegative(value: int, label: str) -> int:
    if value < 0:
        raise UsageError(f"{label} must be nonnegative")
    return value


# ---------------------------------------------------------------------------
# Suite configuration and registry


@dataclass(frozen=True)
class SuiteConfig:
    """Grid over which the verification suites run.

    n_max, params and series_order come from the command line; the
    auxiliary constants (scale factors, addition vectors, series
    evaluation points) are fixed so that runs are reproducible.
    """

    n_max: int = DEFAULT_N_MAX
    params: Tuple[Fraction, ...] = tuple(Fraction(p) for p in DEFAULT_PARAMS)
    series_order: int = DEFAULT_SERIES_ORDER
    suites: Tuple[str, ...] = ()
    fail_fast: bool = False
    scale_factors: Tuple[Fraction, ...] = (
        Fraction(1),
        Fraction(1, 2),
        Fraction(2, 3),
    )
    addition_vectors: Tuple[Tuple[Fraction, ...], ...] = (
        (Fraction(1),),
        (Fraction(3, 5), Fraction(4, 5)),
        (Fraction(1), Fraction(1), Fraction(1)),
    )
    series_points: Tuple[Fraction, ...] = (Fraction(0), Fraction(1, 2))
    feldheim_point: Tuple[Fraction, Fraction] = (Fraction(3, 5), Fraction(4, 5))
    shift_max: int = 3
    turan_n_max: int = 4

    def __post_init__(self):
        if self.n_max < 0:
            raise UsageError("n-max must be nonnegative")
        if not self.params:
            raise UsageError("parameter set must be nonempty")
        if any(p == 0 for p in self.params):
            raise UsageError("parameter set must exclude 0")


def _gen_nagel(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(cfg.n_max + 1):
        for N in cfg.params:
            yield run_guarded("nagel", {"n": n, "N": N}, partial(check_nagel, n, N))


def _gen_cnix(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(cfg.n_max + 1):
        for N in cfg.params:
            yield run_guarded("cnix", {"n": n, "N": N}, partial(check_cnix, n, N))


def _gen_subordination_hermite(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(cfg.n_max + 1):
        for N in cfg.params:
            yield run_guarded(
                "subordination-hermite",
                {"n": n, "N": N},
                partial(check_subordination_hermite, n, N),
            )


def _gen_subordination_gegenbauer(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(cfg.n_max + 1):
        for N in cfg.params:
            yield run_guarded(
                "subordination-gegenbauer",
                {"n": n, "N": N},
                partial(check_subordination_gegenbauer, n, N),
            )


def _gen_derivative(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(1, cfg.n_max + 1):
        yield run_guarded(
            "derivative",
            {"family": "hermite", "n": n},
            partial(check_derivative, Family.HERMITE, n),
        )
    for family in (Family.GEGENBAUER, Family.RHP):
        for n in range(1, cfg.n_max + 1):
            for N in cfg.params:
                yield run_guarded(
                    "derivative",
                    {"family": family.value, "n": n, "N": N},
                    partial(check_derivative, family, n, N),
                )


def _gen_hermite_addition(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(cfg.n_max + 1):
        for vector in cfg.addition_vectors:
            yield run_guarded(
                "hermite-addition",
                {"n": n, "a": vector},
                partial(check_hermite_addition, n, vector),
            )


def _gen_rhp_addition(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(cfg.n_max + 1):
        for N in cfg.params:
            yield run_guarded(
                "rhp-addition", {"n": n, "N": N}, partial(check_rhp_addition, n, N)
            )


def _gen_scaling(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(cfg.n_max + 1):
        for c in cfg.scale_factors:
            yield run_guarded(
                "scaling",
                {"family": "hermite", "n": n, "c": c},
                partial(check_scaling, Family.HERMITE, n, None, c),
            )
    for family in (Family.GEGENBAUER, Family.RHP):
        for n in range(cfg.n_max + 1):
            for N in cfg.params:
                for c in cfg.scale_factors:
                    yield run_guarded(
                        "scaling",
                        {"family": family.value, "n": n, "N": N, "c": c},
                        partial(check_scaling, family, n, N, c),
                    )


def _gen_genfunc_rhp(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for N in cfg.params:
        for x in cfg.series_points:
            yield run_guarded(
                "genfunc-rhp",
                {"N": N, "x": x, "order": cfg.series_order},
                partial(check_genfunc_rhp, N, x, cfg.series_order),
            )


def _gen_moment_3665(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for N in cfg.params:
        yield run_guarded(
            "moment-3665",
            {"N": N, "a": Fraction(1), "order": cfg.series_order},
            partial(check_moment_3665, N, Fraction(1), cfg.series_order),
        )


def _gen_feldheim(cfg: SuiteConfig) -> Iterator[CheckResult]:
    cos_t, sin_t = cfg.feldheim_point
    for N in cfg.params:
        yield run_guarded(
            "feldheim",
            {"N": N, "cos": cos_t, "sin": sin_t, "order": cfg.series_order},
            partial(check_feldheim, N, cos_t, sin_t, cfg.series_order),
        )


def _gen_feldheim_rhp(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for N in cfg.params:
        for x in cfg.series_points:
            yield run_guarded(
                "feldheim-rhp",
                {"N": N, "x": x, "order": cfg.series_order},
                partial(check_feldheim_rhp, N, x, cfg.series_order),
            )


def _gen_shifted_genfunc(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for N in cfg.params:
        for k in range(cfg.shift_max + 1):
            for x in cfg.series_points:
                yield run_guarded(
                    "shifted-genfunc",
                    {"N": N, "k": k, "x": x, "order": cfg.series_order},
                    partial(check_shifted_genfunc, N, k, x, cfg.series_order),
                )


def _gen_turan_rhp(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(min(cfg.n_max, cfg.turan_n_max) + 1):
        for N in cfg.params:
            yield run_guarded(
                "turan-rhp", {"n": n, "N": N}, partial(check_turan_rhp, n, N)
            )


def _gen_turan_gegenbauer(cfg: SuiteConfig) -> Iterator[CheckResult]:
    for n in range(min(cfg.n_max, cfg.turan_n_max) + 1):
        for N in cfg.params:
            yield run_guarded(
                "turan-gegenbauer",
                {"n": n, "N": N},
                partial(check_turan_gegenbauer, n, N),
            )


def _gen_wilks(cfg: SuiteConfig) -> Iterator[CheckResult]:
    top = min(cfg.n_max, WILKS_MAX_N)
    for n in range(top + 1):
        for N in cfg.params:
            yield run_guarded(
                "wilks-studentr", {"n": n, "N": N}, partial(check_wilks_studentr, n, N)
            )
    for n in range(top + 1):
        yield run_guarded(
            "wilks-hankel",
            {"n": n, "moments": "gaussian"},
            partial(check_wilks_hankel, n, MomentSequence.gaussian_half(), "gaussian"),
        )
        for N in cfg.params:
            label = f"student-r(N={rational_str(N)})"
            yield run_guarded(
                "wilks-hankel",
                {"n": n, "moments": label},
                partial(check_wilks_hankel, n, MomentSequence.student_r(N), label),
            )


SUITES: dict[str, Callable[[SuiteConfig], Iterator[CheckResult]]] = {
    "nagel": _gen_nagel,
    "cnix": _gen_cnix,
    "subordination-hermite": _gen_subordination_hermite,
    "subordination-gegenbauer": _gen_subordination_gegenbauer,
    "derivative": _gen_derivative,
    "hermite-addition": _gen_hermite_addition,
    "rhp-addition": _gen_rhp_addition,
    "scaling": _gen_scaling,
    "genfunc-rhp": _gen_genfunc_rhp,
    "moment-3665": _gen_moment_3665,
    "feldheim": _gen_feldheim,
    "feldheim-rhp": _gen_feldheim_rhp,
    "shifted-genfunc": _gen_shifted_genfunc,
    "turan-rhp": _gen_turan_rhp,
    "turan-gegenbauer": _gen_turan_gegenbauer,
    "wilks": _gen_wilks,
}


def resolve_suites(names: Sequence[str]) -> Tuple[str, ...]:
    resolved: list[str] = []
    for name in names:
        if name == "all":
            resolved.extend(s for s in SUITES if s not in resolved)
            continue
        if name not in SUITES:
            raise UsageError(
                f"unknown suite {name!r}; choose from: all, " + ", ".join(SUITES)
            )
        if name not in resolved:
            resolved.append(name)
    if not resolved:
        raise UsageError("no suites selected")
    return tuple(resolved)


def run_verify(cfg: SuiteConfig) -> dict:
    """Run the configured suites and assemble the canonical report."""
    results: list[CheckResult] = []
    stop = False
    for suite in cfg.suites:
        if stop:
            break
        for result in SUITES[suite](cfg):
            results.append(result)
            if cfg.fail_fast and not result.passed and not result.skipped:
                stop = True
                break
    passed = sum(1 for r in results if r.passed)
    skipped = sum(1 for r in results if r.skipped)
    failed = len(results) - passed - skipped
    return {
        "version": __version__,
        "config": {
            "n_max": cfg.n_max,
            "params": [rational_str(p) for p in cfg.params],
            "series_order": cfg.series_order,
            "suites": list(cfg.suites),
            "fail_fast": cfg.fail_fast,
        },
        "results": [r.to_json_dict() for r in results],
        "summary": {
            "total": len(results),
            "passed": passed,
            "failed": failed,
            "skipped": skipped,
        },
    }


# ---------------------------------------------------------------------------
# Output formatting


def _emit(text: str, out) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    if fmt == "csv":
        lines = ["name,n,N,params,passed,skipped,witness,notes"]
        for r in report["results"]:
            params = dict(r["params"])
            n = params.pop("n", "")
            big_n = params.pop("N", "")
            extra = ";".join(f"{k}={_flat(v)}" for k, v in params.items())
            witness = " ".join(r["witness"]) if r["witness"] else ""
            lines.append(
                ",".join(
                    _csv_cell(str(v))
                    for v in (
                        r["name"],
                        n,
                        big_n,
                        extra,
                        str(r["passed"]).lower(),
                        str(r["skipped"]).lower(),
                        witness,
                        r["notes"],
                    )
                )
            )
        summary = report["summary"]
        lines.append(
            f"# total={summary['total']} passed={summary['passed']} "
            f"failed={summary['failed']} skipped={summary['skipped']}"
        )
        return "\n".join(lines)
    lines = []
    for r in report["results"]:
        status = "SKIP" if r["skipped"] else ("PASS" if r["passed"] else "FAIL")
        params = " ".join(f"{k}={_flat(v)}" for k, v in r["params"].items())
        line = f"{status} {r['name']} {params}"
        if r["witness"]:
            line += f" witness={r['witness']}"
        if r["notes"]:
            line += f" ({r['notes']})"
        lines.append(line)
    summary = report["summary"]
    lines.append(
        f"total={summary['total']} passed={summary['passed']} "
        f"failed={summary['failed']} skipped={summary['skipped']}"
    )
    return "\n".join(lines)


def _flat(value) -> str:
    if isinstance(value, list):
        return "(" + " ".join(str(v) for v in value) + ")"
    return str(value)


def _csv_cell(value: str) -> str:
    if any(ch in value for ch in ",\"\n"):
        return '"' + value.replace('"', '""') + '"'
    return value


# ---------------------------------------------------------------------------
# Commands


_FAMILIES = {f.value: f for f in Family}
_NORMALIZATIONS = {n.value: n for n in Normalization}


def _family_id(args) -> FamilyId:
    family = _FAMILIES[args.family]
    normalization = _NORMALIZATIONS[args.normalization]
    if family is Family.HERMITE:
        if args.param is not None:
            raise UsageError("the Hermite family takes no --param")
        return FamilyId(family, args.n, None, normalization)
    if args.param is None:
        raise UsageError(f"--param is required for the {family.value} family")
    try:
        return FamilyId(family, args.n, _parse_param(args.param), normalization)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_coeffs(args, out) -> int:
    member = family_member(_family_id(args))
    strings = member.to_strings()
    if args.format == "json":
        _emit(json.dumps(strings), out)
    elif args.format == "csv":
        _emit("\n".join(["degree,coefficient"] + [f"{j},{s}" for j, s in enumerate(strings)]), out)
    else:
        _emit(" ".join(strings) if strings else "0", out)
    return EXIT_OK


def cmd_eval(args, out) -> int:
    member = family_member(_family_id(args))
    value = member.evaluate(_parse_rational(args.x))
    if args.format == "json":
        _emit(json.dumps({"value": rational_str(value)}), out)
    else:
        _emit(rational_str(value), out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    N = _parse_param(args.param)
    order = args.order
    if args.kind == "genfunc-rhp":
        if args.x is None:
            raise UsageError("--x is required for genfunc-rhp")
        family, closed = genfunc_rhp_sides(N, _parse_rational(args.x), order)
    elif args.kind == "feldheim":
        if args.cos is None or args.sin is None:
            raise UsageError("--cos and --sin are required for feldheim")
        family, closed = feldheim_sides(
            N, _parse_rational(args.cos), _parse_rational(args.sin), order
        )
    elif args.kind == "feldheim-rhp":
        if args.x is None:
            raise UsageError("--x is required for feldheim-rhp")
        family, closed = feldheim_rhp_sides(N, _parse_rational(args.x), order)
    else:  # shifted
        if args.x is None:
            raise UsageError("--x is required for shifted")
        if args.k is None:
            raise UsageError("--k is required for shifted")
        family, closed = shifted_genfunc_sides(N, args.k, _parse_rational(args.x), order)
    payload = {
        "coefficients": closed.to_strings(),
        "family_coefficients": family.to_strings(),
        "equal": closed == family,
    }
    if args.format == "json":
        _emit(json.dumps(payload), out)
    elif args.format == "csv":
        lines = ["index,coefficient,family_coefficient"]
        for j, (c, f) in enumerate(zip(payload["coefficients"], payload["family_coefficients"])):
            lines.append(f"{j},{c},{f}")
        lines.append(f"# equal={str(payload['equal']).lower()}")
        _emit("\n".join(lines), out)
    else:
        _emit(
            "coefficients: " + " ".join(payload["coefficients"]) + "\n"
            "family:       " + " ".join(payload["family_coefficients"]) + "\n"
            f"equal: {str(payload['equal']).lower()}",
            out,
        )
    return EXIT_OK


def _poly_payload(p: Poly):
    if p.degree <= 0:
        return rational_str(p.coeff(0))
    return p.to_strings()


def cmd_turan(args, out) -> int:
    family = _FAMILIES[args.family]
    if family is Family.HERMITE:
        raise UsageError("turan closed forms cover the rhp and gegenbauer families")
    N = _parse_param(args.param)
    det = poly_determinant(hankel(family, args.n, N))
    if family is Family.RHP:
        closed: Poly = Poly.constant(turan_closed_rhp(args.n, N))
    else:
        closed = turan_closed_gegenbauer(args.n, N)
    payload = {
        "determinant": _poly_payload(det),
        "closed_form": _poly_payload(closed),
        "equal": det == closed,
    }
    if args.format == "json":
        _emit(json.dumps(payload), out)
    elif args.format == "csv":
        _emit(
            "determinant,closed_form,equal\n"
            + ",".join(
                _csv_cell(str(v))
                for v in (
                    _flat(payload["determinant"]),
                    _flat(payload["closed_form"]),
                    str(payload["equal"]).lower(),
                )
            ),
            out,
        )
    else:
        _emit(
            f"determinant: {_flat(payload['determinant'])}\n"
            f"closed form: {_flat(payload['closed_form'])}\n"
            f"equal: {str(payload['equal']).lower()}",
            out,
        )
    return EXIT_OK


def cmd_verify(args, out) -> int:
    suites = resolve_suites([s for s in args.suites.split(",") if s.strip()])
    cfg = SuiteConfig(
        n_max=args.n_max,
        params=_parse_param_list(args.params),
        series_order=args.order,
        suites=suites,
        fail_fast=args.fail_fast,
    )
    report = run_verify(cfg)
    _emit(_format_report(report, args.format), out)
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAILED


# ---------------------------------------------------------------------------
# Parser and entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relhermite",
        description=(
            "Exact construction and verification of relativistic Hermite, "
            "Gegenbauer and Hermite polynomial identities."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="json", help="output format"
        )

    coeffs = sub.add_parser("coeffs", help="print the coefficients of one family member")
    coeffs.add_argument("--family", choices=tuple(_FAMILIES), required=True)
    coeffs.add_argument("--n", type=int, required=True, help="degree")
    coeffs.add_argument("--param", help="parameter N as p/q (not for hermite)")
    coeffs.add_argument(
        "--normalization", choices=tuple(_NORMALIZATIONS), default="raw"
    )
    add_format(coeffs)
    coeffs.set_defaults(func=cmd_coeffs)

    ev = sub.add_parser("eval", help="evaluate one family member at a rational point")
    ev.add_argument("--family", choices=tuple(_FAMILIES), required=True)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--param")
    ev.add_argument("--x", required=True, help="evaluation point as p/q")
    ev.add_argument("--normalization", choices=tuple(_NORMALIZATIONS), default="raw")
    add_format(ev)
    ev.set_defaults(func=cmd_eval)

    series = sub.add_parser("series", help="expand a generating function")
    series.add_argument(
        "--kind",
        choices=("genfunc-rhp", "feldheim", "feldheim-rhp", "shifted"),
        required=True,
    )
    series.add_argument("--param", required=True, help="parameter N as p/q")
    series.add_argument("--x", help="evaluation point")
    series.add_argument("--cos", help="cosine of the angle (feldheim)")
    series.add_argument("--sin", help="sine of the angle (feldheim)")
    series.add_argument("--k", type=int, help="shift (shifted kind)")
    series.add_argument("--order", type=int, default=DEFAULT_SERIES_ORDER)
    add_format(series)
    series.set_defaults(func=cmd_series)

    turan = sub.add_parser("turan", help="Hankel determinant against its closed form")
    turan.add_argument("--family", choices=("rhp", "gegenbauer"), required=True)
    turan.add_argument("--n", type=int, required=True)
    turan.add_argument("--param", required=True)
    add_format(turan)
    turan.set_defaults(func=cmd_turan)

    verify = sub.add_parser("verify", help="run identity suites over an (n, N) grid")
    verify.add_argument(
        "--suites",
        default="all",
        help="comma-separated suite names, or 'all' (default)",
    )
    verify.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    verify.add_argument(
        "--params",
        default=",".join(DEFAULT_PARAMS),
        help="comma-separated rational parameters, 0 excluded",
    )
    verify.add_argument("--order", type=int, default=DEFAULT_SERIES_ORDER)
    verify.add_argument("--fail-fast", action="store_true")
    add_format(verify)
    verify.set_defaults(func=cmd_verify)

    return parser


def _install_env_perturbation() -> None:
    spec = os.environ.get("RELHERMITE_PERTURB")
    if not spec:
        return
    try:
        kind, n, index, delta = spec.split(":")
        set_perturbation(kind, int(n), int(index), rational(delta))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad RELHERMITE_PERTURB value {spec!r}") from exc


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _install_env_perturbation()
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
