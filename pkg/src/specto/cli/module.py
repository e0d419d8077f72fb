"""specto 명령줄 진입점입니다. 종료 코드: 0 정상, 2 입력 오류, 3 내부 불변식 위반, 4 재현 불일치."""

import argparse
import contextlib
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Any

from specto.errors import InputError, InvariantError
from specto.settings import configure_logging

from .commands import (
    ACTIONS,
    BOUND_METHODS,
    cmd_analyze,
    cmd_bound,
    cmd_lyapunov,
    cmd_orbit,
    cmd_reproduce,
    cmd_ud_check,
)
from .const import ExitCode
from .schema import Report

logger = logging.getLogger(__name__)


def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read JSON input {path!r}: {e}") from e


def _substitution_source(args: argparse.Namespace) -> dict[str, Any]:
    if args.family is not None:
        if args.m is None:
            raise InputError("--family requires --m")
        source = {"family": args.family, "m": args.m}
        if args.A is not None:
            source["A"] = args.A
        if args.B is not None:
            source["B"] = args.B
        return source
    if args.input is None:
        raise InputError("give a substitution JSON file (or '-') or --family")
    return _read_json(args.input)


def _add_substitution_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", help="substitution JSON file, or '-' for stdin")
    parser.add_argument("--family", choices=["zeta_m", "sigma_m", "zeta_mAB"])
    parser.add_argument("--m", type=int)
    parser.add_argument("--A", help="0/1 word of length m (zeta_mAB)")
    parser.add_argument("--B", help="0/1 word of length m (zeta_mAB)")


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int)
    parser.add_argument("--threads", type=int)
    parser.add_argument("--output", help="write the report to this path instead of stdout")
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--log-level")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specto", description="Spectral singularity analyzer for substitutions")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="decide pure singularity of Z- or R-actions")
    _add_substitution_arguments(analyze)
    _add_common_arguments(analyze)
    analyze.add_argument("--action", action="append", choices=ACTIONS)
    analyze.add_argument("--vector", help="positive rational vector, e.g. 1,1,1/2")
    analyze.add_argument("--k-max", type=int, default=1)
    analyze.add_argument("--samples", type=int, default=2000)
    analyze.add_argument("--iters", type=int)
    analyze.add_argument("--precision-bits", type=int)
    analyze.add_argument("--numerical", action="store_true", help="allow Monte Carlo evidence (SINGULAR_NUMERICAL)")

    ud = sub.add_parser("ud-check", help="equidistribution of (A^n omega v) mod 1")
    ud.add_argument("input", help='JSON {"matrix": [[...]], "vector": [...]} file, or "-"')
    _add_common_arguments(ud)
    ud.add_argument("--empirical", action="store_true")
    ud.add_argument("--n-steps", type=int, default=10_000)
    ud.add_argument("--h-max", type=int, default=3)
    ud.add_argument("--omegas", type=int, default=10)
    ud.add_argument("--precision-bits", type=int)

    lyapunov = sub.add_parser("lyapunov", help="Monte Carlo estimate of the essential Lyapunov exponent")
    _add_substitution_arguments(lyapunov)
    _add_common_arguments(lyapunov)
    lyapunov.add_argument("--n-steps", type=int, default=200)
    lyapunov.add_argument("--samples", type=int, default=256)
    lyapunov.add_argument("--k-max", type=int, default=1)
    lyapunov.add_argument("--precision-bits", type=int)

    bound = sub.add_parser("bound", help="upper bound for the essential Lyapunov exponent")
    _add_substitution_arguments(bound)
    _add_common_arguments(bound)
    bound.add_argument("--k", type=int, default=1)
    bound.add_argument("--method", choices=BOUND_METHODS, default="auto")
    bound.add_argument("--samples", type=int, default=4096)

    orbit = sub.add_parser("orbit", help="CSV snapshots of an exact fixed-point orbit")
    orbit.add_argument("input", help='JSON {"matrix": [[...]], "x0": ["1/3", ...]} file, or "-"')
    orbit.add_argument("--n-steps", type=int, default=1000)
    orbit.add_argument("--precision-bits", type=int)
    orbit.add_argument("--output")
    orbit.add_argument("--log-level")

    reproduce = sub.add_parser("reproduce", help="reproduce the built-in family constants and decisions")
    _add_common_arguments(reproduce)
    return parser


def render_text(report: Report) -> str:
    """보고서의 사람용 요약입니다."""
    lines = [f"specto {report.tool_version} {report.command} ({report.timing_seconds:.2f} s)"]
    result = report.result
    for cert in result.get("certificates", []) + list(result.get("runs", {}).values()):
        bound = cert.get("chi_bound") or {}
        lines.append(
            f"  {cert['action']}: {cert['decision']}"
            f"  chi <= {bound.get('value', float('nan')):.6f} ({bound.get('method', '-')})"
            f"  theta1 >= {cert.get('theta1_lower')}"
        )
        lines.extend(f"    note: {note}" for note in cert.get("notes", []))
    if "verdict" in result:
        verdict = result["verdict"]
        lines.append(f"  holds: {verdict['holds']}  failed: {verdict['failed_condition']}  witness: {verdict.get('witness')}")
    if "empirical" in result:
        empirical = result["empirical"]
        lines.append(f"  Weyl sums below {empirical['tolerance']}: {empirical['passed']}/{len(empirical['samples'])}")
    if "estimate" in result:
        estimate = result["estimate"]
        lines.append(f"  chi ~ {estimate['value']:.6f} +- {estimate['std_error']:.2e}")
    if "bound" in result:
        b = result["bound"]
        lines.append(f"  chi <= {b['bound']:.6f} ({b['method']}, constant term {b.get('constant_term')})")
    lines.extend(f"  MISMATCH: {line}" for line in report.discrepancies)
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _run(args: argparse.Namespace) -> int:
    match args.command:
        case "analyze":
            report = cmd_analyze(
                _substitution_source(args),
                actions=args.action,
                vector=args.vector,
                k_max=args.k_max,
                samples=args.samples,
                iters=args.iters,
                seed=args.seed,
                precision_bits=args.precision_bits,
                numerical=args.numerical,
                threads=args.threads,
            )
        case "ud-check":
            data = _read_json(args.input)
            if "matrix" not in data or "vector" not in data:
                raise InputError("ud-check input needs 'matrix' and 'vector'")
            report = cmd_ud_check(
                data["matrix"],
                data["vector"],
                empirical=args.empirical,
                n_steps=args.n_steps,
                h_max=args.h_max,
                omegas=args.omegas,
                seed=args.seed,
                precision_bits=args.precision_bits,
                threads=args.threads,
            )
        case "lyapunov":
            report = cmd_lyapunov(
                _substitution_source(args),
                n_steps=args.n_steps,
                samples=args.samples,
                k_max=args.k_max,
                seed=args.seed,
                precision_bits=args.precision_bits,
                threads=args.threads,
            )
        case "bound":
            report = cmd_bound(_substitution_source(args), k=args.k, method=args.method, samples=args.samples, seed=args.seed, threads=args.threads)
        case "orbit":
            data = _read_json(args.input)
            if "matrix" not in data or "x0" not in data:
                raise InputError("orbit input needs 'matrix' and 'x0'")
            snapshots = cmd_orbit(data["matrix"], data["x0"], args.n_steps, args.precision_bits)
            with open(args.output, "w", newline="", encoding="utf-8") if args.output else contextlib.nullcontext(sys.stdout) as handle:
                writer = csv.writer(handle)
                writer.writerow(["n", *(f"x{i}" for i in range(snapshots.shape[1]))])
                writer.writerows([n, *(repr(float(c)) for c in row)] for n, row in enumerate(snapshots))
            return ExitCode.OK
        case _:
            report = cmd_reproduce(threads=args.threads)

    text = render_text(report) if args.format == "text" else report.model_dump_json(indent=2) + "\n"
    _emit(text, args.output)
    return ExitCode.REPRODUCTION_MISMATCH if report.discrepancies else ExitCode.OK


def main(argv: list[str] | None = None) -> int:
    """
    명령줄 인자를 해석하여 하위 명령을 실행하고 종료 코드를 반환합니다.

    Args:
        argv (list[str] | None): 인자 목록. 기본값은 sys.argv[1:].

    Returns:
        int: 종료 코드.
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return int(_run(args))
    except InputError as e:
        logger.error(f"input error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except InvariantError as e:
        logger.error(f"internal invariant violated: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return ExitCode.INVARIANT_ERROR
    except Exception as e:
        logger.exception(f"unexpected failure in {args.command}: {e}")
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return ExitCode.INVARIANT_ERROR
