"""Command line front end: ``jmh {compute,charts,check,scan}``.

Exit status: 0 success, 1 usage error, 2 non-polynomial result,
3 internal invariant violation.  Documents go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import engine
from .charts import atlas_report
from .checks import run_checks
from .errors import InvariantViolation, MethodDisagreement, NonPolynomialResult
from .homology import CONVENTIONS, METHODS, JMVector, jm_to_exponents, positivity_scan, superpolynomial
from .symbolic import LaurentPoly, specialize_qt
from .symbolic.laurent import var_name

EXIT_OK, EXIT_USAGE, EXIT_NONPOLY, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    jm: tuple[int, ...] = ()
    method: str = "residue"
    grading: str = "QT"
    format: str = "text"
    audit: bool = False
    threads: int = 1
    convention: str = "padleft"
    k_max: int = 4
    m_max: int = 4

    def validate(self):
        if self.n < 1:
            raise UsageError("--n must be at least 1")
        if self.command in ("compute", "scan") and len(self.jm) != self.n - 1:
            raise UsageError(f"--jm needs n-1 = {self.n - 1} comma-separated integers, got {len(self.jm)}")
        if self.threads < 0:
            raise UsageError("--threads must be >= 0")


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _grading_vars(grading: str) -> tuple[str, ...]:
    return ("a", "Q", "T") if grading == "QT" else ("a", "q", "t")


def _graded(p: LaurentPoly, grading: str) -> LaurentPoly:
    return specialize_qt(p) if grading == "qt" else p


def poly_terms(p: LaurentPoly, grading: str = "QT") -> list[dict]:
    names = _grading_vars(grading)
    out = []
    for m, c in p.sorted_terms():
        term = {"coeff": str(c)}
        used = {var_name(i): e for i, e in enumerate(m) if e}
        for name in names:
            term[name] = used.pop(name, 0)
        if used:
            raise InvariantViolation(f"unexpected variables {sorted(used)} in output")
        out.append(term)
    return out


def poly_latex(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        mono = " ".join(
            var_name(i) if e == 1 else f"{var_name(i)}^{{{e}}}" for i, e in enumerate(m) if e
        )
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag} {mono}".strip() if mono else str(mag))
        sign = "-" if c < 0 else "+"
        pieces.append(("-" if c < 0 else "") + body if k == 0 else f" {sign} {body}")
    return "".join(pieces)


def _render_poly(p: LaurentPoly, fmt: str) -> str:
    return poly_latex(p) if fmt == "latex" else str(p)


def cmd_compute(cfg: RunConfig) -> tuple[int, str]:
    a = JMVector(cfg.n, cfg.jm)
    e = jm_to_exponents(a, cfg.convention)
    audit: list | None = [] if cfg.audit else None
    values = {}
    if cfg.method in ("syt", "both"):
        values["syt"] = superpolynomial(a, "syt", cfg.convention).value
    if cfg.method in ("residue", "both"):
        values["residue"] = engine.evaluate_full(e, audit=audit)
    agree = None
    if cfg.method == "both":
        agree = values["syt"] == values["residue"]
    if audit:
        for item in audit:
            print(f"audit: nonzero residue at {item['variable']}={item['pole']}: {item['residue']}", file=sys.stderr)
    graded = {k: _graded(v, cfg.grading) for k, v in values.items()}
    value = next(iter(graded.values()))

    if cfg.format == "json":
        doc = {
            "n": cfg.n,
            "jm": list(cfg.jm),
            "exponents": list(e),
            "method": cfg.method,
            "convention": cfg.convention,
            "grading": cfg.grading,
            "terms": poly_terms(value, cfg.grading),
        }
        if cfg.method == "both":
            doc["results"] = {k: poly_terms(v, cfg.grading) for k, v in graded.items()}
            doc["agree"] = agree
        if audit is not None:
            doc["audit"] = audit
        text = dumps(doc)
    elif cfg.method == "both":
        lines = [f"{k}: {_render_poly(v, cfg.format)}" for k, v in graded.items()]
        lines.append(f"agree: {'yes' if agree else 'NO'}")
        text = "\n".join(lines)
    else:
        text = _render_poly(value, cfg.format)
    if agree is False:
        print("error: the two evaluators disagree", file=sys.stderr)
        return EXIT_INTERNAL, text
    return EXIT_OK, text


def cmd_charts(cfg: RunConfig) -> tuple[int, str]:
    report = atlas_report(cfg.n)
    if cfg.format == "json":
        return EXIT_OK, dumps(report)
    lines = [f"NS_{cfg.n}: {report['count']} charts"]
    for c in report["charts"]:
        lines.append(f"sx={c['sx']} sy={c['sy']} free={c['free_count']}")
    return EXIT_OK, "\n".join(lines)


def cmd_check(cfg: RunConfig) -> tuple[int, str]:
    results = run_checks(cfg.n, cfg.threads)
    ok = all(r["pass"] for r in results)
    if cfg.format == "json":
        text = dumps({"n": cfg.n, "results": results, "pass": ok})
    else:
        lines = [f"{'PASS' if r['pass'] else 'FAIL'} {r['property']} n={r['n']} {r['detail']}" for r in results]
        lines.append("all properties pass" if ok else "FAILURES")
        text = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_INTERNAL), text


def cmd_scan(cfg: RunConfig) -> tuple[int, str]:
    report = positivity_scan(
        JMVector(cfg.n, cfg.jm),
        range(cfg.k_max + 1),
        range(cfg.m_max + 1),
        method="residue" if cfg.method == "residue" else cfg.method,
        convention=cfg.convention,
        threads=cfg.threads,
    )
    if cfg.format == "json":
        return EXIT_OK, dumps(report)
    lines = []
    for p in report["points"]:
        flag = "positive" if p.get("positive") else ("non-positive" if p["status"] == "ok" else p["status"])
        lines.append(f"k={p['k']} m={p['m']} jm={p['jm']} {flag}")
    lines.append(f"frontier: {report['frontier']}")
    lines.append(f"monotone: {report['monotone']}")
    lines.append(f"thresholds: {report['thresholds']}")
    return EXIT_OK, "\n".join(lines)


COMMANDS = {"compute": cmd_compute, "charts": cmd_charts, "check": cmd_check, "scan": cmd_scan}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_jm(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--jm must be comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of strands")
    common.add_argument("--jm", default="", help="JM exponents a_1..a_{n-1}, comma-separated")
    common.add_argument("--method", choices=METHODS, default="residue")
    common.add_argument("--grading", choices=("QT", "qt"), default="QT")
    common.add_argument("--format", choices=("text", "json", "latex"), default=None,
                        help="default: json for charts, text otherwise")
    common.add_argument("--audit", action="store_true", help="report residues at non-enclosed poles")
    common.add_argument("--threads", type=int, default=None, help="worker processes, 0 = all cores")
    common.add_argument("--convention", choices=CONVENTIONS, default="padleft")

    parser = _Parser(prog="jmh", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("compute", parents=[common], help="superpolynomial of a JM braid closure")
    sub.add_parser("charts", parents=[common], help="nested-set chart atlas")
    sub.add_parser("check", parents=[common], help="run the invariant suites up to n")
    scan = sub.add_parser("scan", parents=[common], help="coefficient positivity over b + k*1 + m*rho")
    scan.add_argument("--k-max", type=int, default=4)
    scan.add_argument("--m-max", type=int, default=4)
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    threads = ns.threads
    if threads is None:
        env = os.environ.get("JMH_THREADS", "1")
        try:
            threads = int(env)
        except ValueError:
            raise UsageError(f"JMH_THREADS must be an integer, got {env!r}") from None
    cfg = RunConfig(
        command=ns.command,
        n=ns.n,
        jm=_parse_jm(ns.jm),
        method=ns.method,
        grading=ns.grading,
        format=ns.format or ("json" if ns.command == "charts" else "text"),
        audit=ns.audit,
        threads=threads,
        convention=ns.convention,
        k_max=getattr(ns, "k_max", 4),
        m_max=getattr(ns, "m_max", 4),
    )
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        status, text = COMMANDS[cfg.command](cfg)
    except NonPolynomialResult as exc:
        print(f"error: non-polynomial result: {exc}", file=sys.stderr)
        return EXIT_NONPOLY
    except (InvariantViolation, MethodDisagreement) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
