"""Command-line surface: compositae, loggf, theorem, witness, scan.

Output contract:
  - text (default) or JSON via --format; JSON is a single object
    {"command", "input", "result"} printed to stdout.
  - Mathematical values (triangle entries, g/ng/h, sums, residues) are
    rendered as decimal strings in JSON, never floats, so exactness
    survives any JSON parser.
  - Exit codes: 0 success (witness: passes), 1 composite-witnessed,
    2 usage or input error.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .compositae import CompositaeTable, compositae_dp
from .sequences import CoefficientFileError, SequenceSpec, make_series
from .series import IntSeries
from .superposition import LogSuperposition, log_superposition, theorem_sum
from .witnesses import (
    CENTRAL_BINOMIAL,
    NAMED_TESTS,
    ScanResult,
    WitnessReport,
    scan_pseudoprimes,
    witness_central_binomial,
    witness_fermat2,
    witness_generic,
    witness_lucas,
)

DEFAULT_ORDER = 64

EXIT_OK = 0
EXIT_WITNESSED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one command plus its effective flag values."""

    command: str
    fmt: str = "text"
    seq: str | None = None
    order: int | None = None
    n: int | None = None
    test: str | None = None
    lo: int = 2
    hi: int | None = None
    threads: int = 1


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# JSON codecs.  Encoders render exact values as decimal strings; the paired
# decoders rebuild the original objects, which is what the round-trip tests
# exercise.

def table_to_payload(table: CompositaeTable) -> dict:
    return {
        "order": table.order,
        "rows": [[str(v) for v in row] for row in table.rows],
    }


def table_from_payload(payload: dict) -> CompositaeTable:
    return CompositaeTable(
        order=payload["order"],
        rows=tuple(tuple(int(v) for v in row) for row in payload["rows"]),
    )


def loggf_to_payload(ls: LogSuperposition) -> dict:
    return {
        "order": ls.order,
        "ng": [str(v) for v in ls.ng],
        "g": [str(ls.g.coeff(n)) for n in range(1, ls.order + 1)],
        "h": [str(v) for v in ls.h],
    }


def loggf_from_payload(payload: dict) -> LogSuperposition:
    order = payload["order"]
    from .series import RatSeries

    g = RatSeries(order, {n: Fraction(s) for n, s in enumerate(payload["g"], start=1)})
    return LogSuperposition(
        order=order,
        g=g,
        ng=tuple(int(v) for v in payload["ng"]),
        h=tuple(int(v) for v in payload["h"]),
    )


def witness_to_payload(report: WitnessReport) -> dict:
    return {
        "n": report.n,
        "test": report.test,
        "residue": str(report.residue),
        "verdict": report.verdict,
        "is_prime_actual": report.is_prime_actual,
        "pseudoprime": report.is_pseudoprime,
        "note": report.note,
    }


def witness_from_payload(payload: dict) -> WitnessReport:
    return WitnessReport(
        n=payload["n"],
        test=payload["test"],
        residue=int(payload["residue"]),
        verdict=payload["verdict"],
        is_prime_actual=payload["is_prime_actual"],
        note=payload.get("note", ""),
    )


def scan_to_payload(result: ScanResult) -> dict:
    return {
        "lo": result.lo,
        "hi": result.hi,
        "test": result.test,
        "pseudoprimes": list(result.pseudoprimes),
        "primes_checked": result.primes_checked,
        "composites_checked": result.composites_checked,
    }


def scan_from_payload(payload: dict) -> ScanResult:
    return ScanResult(
        lo=payload["lo"],
        hi=payload["hi"],
        test=payload["test"],
        pseudoprimes=tuple(payload["pseudoprimes"]),
        primes_checked=payload["primes_checked"],
        composites_checked=payload["composites_checked"],
    )


def theorem_to_payload(n: int, value: Fraction) -> dict:
    return {"n": n, "value": str(value), "integral": value.denominator == 1}


def theorem_from_payload(payload: dict) -> tuple[int, Fraction, bool]:
    return payload["n"], Fraction(payload["value"]), payload["integral"]


def render_json(command: str, inputs: dict, result: dict) -> str:
    return json.dumps({"command": command, "input": inputs, "result": result}, indent=2)


# ---------------------------------------------------------------------------
# Commands.  Each returns (exit_code, stdout_text).

def _build_series(cfg: RunConfig, order: int) -> IntSeries:
    if cfg.seq is None:
        raise UsageError("--seq is required for this command")
    return make_series(SequenceSpec(kind=cfg.seq, order=order))


def _resolve_order(cfg: RunConfig, at_least: int = 1) -> int:
    order = cfg.order if cfg.order is not None else max(DEFAULT_ORDER, at_least)
    if order < at_least:
        raise UsageError(f"--order {order} is below the largest requested n ({at_least})")
    return order


def cmd_compositae(cfg: RunConfig) -> tuple[int, str]:
    order = _resolve_order(cfg)
    f = _build_series(cfg, order)
    table = compositae_dp(f, order)
    if cfg.fmt == "json":
        return EXIT_OK, render_json(
            "compositae", {"seq": cfg.seq, "order": order}, table_to_payload(table)
        )
    lines = [f"compositae triangle  seq={cfg.seq}  order={order}"]
    for n in range(1, order + 1):
        lines.append(f"n={n}: " + " ".join(str(v) for v in table.row(n)))
    return EXIT_OK, "\n".join(lines)


def cmd_loggf(cfg: RunConfig) -> tuple[int, str]:
    order = _resolve_order(cfg)
    f = _build_series(cfg, order)
    ls = log_superposition(f, order)
    if cfg.fmt == "json":
        return EXIT_OK, render_json(
            "loggf", {"seq": cfg.seq, "order": order}, loggf_to_payload(ls)
        )
    lines = [f"log-superposition  seq={cfg.seq}  order={order}", "n\tng(n)\tg(n)\th(n)"]
    for n in range(1, order + 1):
        lines.append(f"{n}\t{ls.ng_at(n)}\t{ls.g.coeff(n)}\t{ls.h_at(n)}")
    return EXIT_OK, "\n".join(lines)


def cmd_theorem(cfg: RunConfig) -> tuple[int, str]:
    if cfg.n is None:
        raise UsageError("--n is required for theorem")
    order = _resolve_order(cfg, at_least=cfg.n)
    f = _build_series(cfg, order)
    value = theorem_sum(f, cfg.n)
    if cfg.fmt == "json":
        return EXIT_OK, render_json(
            "theorem",
            {"seq": cfg.seq, "order": order, "n": cfg.n},
            theorem_to_payload(cfg.n, value),
        )
    verdict = "integral" if value.denominator == 1 else "NOT integral"
    return EXIT_OK, f"theorem sum  seq={cfg.seq}  n={cfg.n}: {value} ({verdict})"


def _run_witness(cfg: RunConfig) -> WitnessReport:
    if cfg.test is None:
        raise UsageError("--test is required for witness")
    if cfg.n is None:
        raise UsageError("--n is required for witness")
    n = cfg.n
    if cfg.test == "fermat2":
        return witness_fermat2(n)
    if cfg.test == "lucas":
        return witness_lucas(n)
    if cfg.test == CENTRAL_BINOMIAL:
        return witness_central_binomial(n)
    if cfg.test == "generic":
        f = _build_series(cfg, max(n, cfg.order or n))
        return witness_generic(f, n, series_id=cfg.seq or "series")
    raise UsageError(f"unknown test {cfg.test!r}")


def cmd_witness(cfg: RunConfig) -> tuple[int, str]:
    report = _run_witness(cfg)
    code = EXIT_OK if report.passes else EXIT_WITNESSED
    if cfg.fmt == "json":
        inputs = {"test": cfg.test, "n": cfg.n}
        if cfg.test == "generic":
            inputs["seq"] = cfg.seq
        return code, render_json("witness", inputs, witness_to_payload(report))
    flags = []
    if report.is_pseudoprime:
        flags.append("PSEUDOPRIME")
    if report.note:
        flags.append(report.note)
    suffix = ("  [" + "; ".join(flags) + "]") if flags else ""
    text = (
        f"witness {report.test}  n={report.n}: {report.verdict} "
        f"(residue {report.residue}, prime={report.is_prime_actual}){suffix}"
    )
    return code, text


def cmd_scan(cfg: RunConfig) -> tuple[int, str]:
    if cfg.test is None:
        raise UsageError("--test is required for scan")
    if cfg.hi is None:
        raise UsageError("--hi is required for scan")
    series = None
    if cfg.test == "generic":
        series = _build_series(cfg, cfg.hi)
    result = scan_pseudoprimes(cfg.test, cfg.lo, cfg.hi, threads=cfg.threads, series=series)
    if cfg.fmt == "json":
        inputs = {"test": cfg.test, "lo": cfg.lo, "hi": cfg.hi, "threads": cfg.threads}
        if cfg.test == "generic":
            inputs["seq"] = cfg.seq
        return EXIT_OK, render_json("scan", inputs, scan_to_payload(result))
    lines = [
        f"scan {result.test}  range=[{result.lo}, {result.hi}]  "
        f"primes={result.primes_checked}  composites={result.composites_checked}",
        f"pseudoprimes ({len(result.pseudoprimes)}): "
        + (" ".join(str(n) for n in result.pseudoprimes) or "(none)"),
    ]
    return EXIT_OK, "\n".join(lines)


_COMMANDS = {
    "compositae": cmd_compositae,
    "loggf": cmd_loggf,
    "theorem": cmd_theorem,
    "witness": cmd_witness,
    "scan": cmd_scan,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logseries",
        description="Exact compositae, log-superposition sums, and compositeness witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, seq: bool = False) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")
        if seq:
            p.add_argument(
                "--seq",
                help="sequence kind: ones | primes1 | fib-gf | catalan-shifted | "
                "file:<path> | inline:<ints>",
            )
            p.add_argument("--order", type=int, default=None, help="truncation order (default 64)")

    p = sub.add_parser("compositae", help="print the compositae triangle of a series")
    common(p, seq=True)

    p = sub.add_parser("loggf", help="print ng, exact g, and h for ln(1/(1-F))")
    common(p, seq=True)

    p = sub.add_parser("theorem", help="exact sum of (n/k)*F_delta(n,k) with integrality verdict")
    common(p, seq=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("witness", help="run one compositeness witness at one n")
    common(p, seq=True)
    p.add_argument("--test", choices=NAMED_TESTS + ("generic",), required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("scan", help="exhaustively hunt pseudoprimes in [lo, hi]")
    common(p, seq=True)
    p.add_argument("--test", choices=NAMED_TESTS + ("generic",), required=True)
    p.add_argument("--lo", type=int, default=2)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        fmt=getattr(args, "format", "text"),
        seq=getattr(args, "seq", None),
        order=getattr(args, "order", None),
        n=getattr(args, "n", None),
        test=getattr(args, "test", None),
        lo=getattr(args, "lo", 2),
        hi=getattr(args, "hi", None),
        threads=getattr(args, "threads", 1),
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        code, output = _COMMANDS[cfg.command](cfg)
    except (UsageError, CoefficientFileError, ValueError) as exc:
        print(f"logseries {cfg.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
