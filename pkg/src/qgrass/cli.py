"""Command line driver: ``qgrass verify <suite>`` and ``qgrass dump-presentation <id>``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .checks import SUITES, residual_terms, suite_checks
from .freealg import FuelExhausted, fuel_limit, default_fuel
from .presentations import PRESENTATION_IDS, presentation_by_id

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
SUITE_NAMES = tuple(SUITES) + ("all",)


@dataclass
class CheckResult:
    check_id: str
    status: str
    residual_summary: list
    elapsed_ms: int
    description: str = ""
    detail: str | None = None


@dataclass
class Report:
    engine_version: str
    q_mode: str
    results: list = field(default_factory=list)
    engine_error: bool = False

    @property
    def overall(self) -> str:
        ok = all(r.status == "pass" for r in self.results if r.status != "skipped")
        return "pass" if ok else "fail"

    def to_json(self, timings: bool = True) -> str:
        results = []
        for r in self.results:
            d = asdict(r)
            if d["detail"] is None:
                del d["detail"]
            if not timings:
                d["elapsed_ms"] = 0
            results.append(d)
        body = {"engine_version": self.engine_version, "q_mode": self.q_mode,
                "overall": self.overall, "results": results}
        return json.dumps(body, indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"qgrass {self.engine_version}  q_mode={self.q_mode}", ""]
        width = max((len(r.check_id) for r in self.results), default=0)
        for r in self.results:
            lines.append(f"{r.status.upper():5} {r.check_id:<{width}}  {r.elapsed_ms:>6} ms  {r.description}")
            if r.detail:
                lines.append(f"      note: {r.detail}")
            for t in r.residual_summary[:10]:
                lines.append(f"      residual: {t}")
            if len(r.residual_summary) > 10:
                lines.append(f"      ... {len(r.residual_summary) - 10} more terms")
        n_pass = sum(r.status == "pass" for r in self.results)
        lines += ["", f"{n_pass}/{len(self.results)} checks passed; overall {self.overall}"]
        return "\n".join(lines)


def parse_q(text: str) -> Fraction:
    try:
        q0 = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if q0 in (0, 1, -1):
        raise argparse.ArgumentTypeError(f"q0 = {q0} is not allowed (need q0 != 0 and q^2 != 1)")
    return q0


def run_suite(name: str, q0: Fraction | None = None, max_fuel: int | None = None) -> Report:
    """Run a suite and collect a report sorted by check id."""
    q_mode = "symbolic" if q0 is None else f"numeric({q0})"
    report = Report(__version__, q_mode)
    fuel = max_fuel if max_fuel is not None else default_fuel()
    with fuel_limit(fuel):
        for check in suite_checks(name):
            t0 = time.perf_counter()
            detail = None
            try:
                terms = residual_terms(check.compute(), q0)
                if check.detail is not None:
                    detail = check.detail()
            except FuelExhausted as exc:
                terms = [f"engine error: rewriting fuel exhausted ({exc})"]
                report.engine_error = True
            except (ValueError, ArithmeticError, KeyError) as exc:
                terms = [f"engine error: {type(exc).__name__}: {exc}"]
                report.engine_error = True
            ms = int(round((time.perf_counter() - t0) * 1000))
            report.results.append(CheckResult(check.check_id, "fail" if terms else "pass",
                                              terms, ms, check.description, detail))
    report.results.sort(key=lambda r: r.check_id)
    return report


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgrass", description=__doc__)
    parser.add_argument("--version", action="version", version=f"qgrass {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITE_NAMES)
    v.add_argument("--q", type=parse_q, default=None, metavar="RATIONAL",
                   help="evaluate residuals at q = RATIONAL instead of symbolically")
    v.add_argument("--max-fuel", type=int, default=None, metavar="N",
                   help="rewrite step budget per normalization")
    v.add_argument("--report", metavar="PATH", help="also write the JSON report to PATH")
    v.add_argument("--json", action="store_true", help="print the JSON report instead of text")

    d = sub.add_parser("dump-presentation", help="print the rewrite rules of a presentation")
    d.add_argument("id", choices=PRESENTATION_IDS)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_PASS

    if args.command == "dump-presentation":
        print(presentation_by_id(args.id).dump())
        return EXIT_PASS

    if args.max_fuel is not None and args.max_fuel <= 0:
        print("qgrass: --max-fuel must be positive", file=sys.stderr)
        return EXIT_ERROR
    report = run_suite(args.suite, args.q, args.max_fuel)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    print(report.to_json() if args.json else report.to_text())
    if report.engine_error:
        return EXIT_ERROR
    return EXIT_PASS if report.overall == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
