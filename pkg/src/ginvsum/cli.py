"""Command-line front end.

Exit codes: 0 success or PASS, 1 FAIL or NONEXISTENT, 2 usage, parse or
input-shape error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .core import DEFAULT_RANK_REL_TOL, DEFAULT_RESIDUAL_REL_TOL, TolerancePolicy
from .errors import (
    CertificationError,
    ConstraintError,
    GinvError,
    MatrixParseError,
    NonexistenceError,
    PreconditionError,
    ShapeError,
)
from .generators import random_certified_pair
from .groupinv import certify_group, group_inverse, verify_group_characterization
from .identities import (
    check_sharp_conditions,
    check_star_conditions,
    verify_mitra,
    verify_prelim_properties,
    verify_prelimgrp_properties,
    verify_sum_identity_group,
    verify_sum_identity_mp,
)
from .matfile import format_entry, format_matrix, read_matrix, write_matrix
from .pinv import certify_penrose, min_norm_least_squares, pseudo_inverse
from .reports import ConditionReport

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

VERIFY_KINDS = ("mp-sum", "group-sum", "mitra-star", "mitra-sharp", "prelim", "prelimgrp", "grp-char")


@dataclass
class CommandOutcome:
    exit_code: int
    report: str
    machine_report: dict = field(default_factory=dict)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _fmt(x):
    return f"{x:.6g}"


def _num(x):
    return x if math.isfinite(x) else None


def _matrix_doc(A):
    return {"rows": A.shape[0], "cols": A.shape[1], "entries": [format_entry(z) for z in A.ravel()]}


def _render_report(report: ConditionReport):
    lines = [f"{report.title}:"]
    width = max((len(item.name) for item in report.items), default=0)
    for item in report.items:
        flag = "ok" if item.passed else "VIOLATED"
        info = "" if item.required else "  (informational)"
        lines.append(f"  {item.name:<{width}}  residual {_fmt(item.residual):>12}  {flag}{info}")
    lines.extend(f"  note: {note}" for note in report.notes)
    return lines


def _report_doc(report: ConditionReport):
    doc = report.as_dict()
    for item in doc["items"]:
        item["residual"] = _num(item["residual"])
        item["relative"] = _num(item["relative"])
    return doc


def _verdict(passed):
    return ("PASS", EXIT_OK) if passed else ("FAIL", EXIT_FAIL)


def _report_outcome(command, report):
    word, code = _verdict(report.overall_pass)
    text = "\n".join(_render_report(report) + [word])
    return CommandOutcome(code, text, {"command": command, "verdict": word, "report": _report_doc(report)})


# -- subcommands ----------------------------------------------------------------


def _cmd_pinv(args, tol):
    A = read_matrix(args.file)
    X = pseudo_inverse(A, tol)
    cert = certify_penrose(A, X, tol)
    lines = ["pseudoinverse:", format_matrix(X).rstrip("\n")]
    lines += [f"penrose residuals: r1 {_fmt(cert.r1)}  r2 {_fmt(cert.r2)}  r3 {_fmt(cert.r3)}  r4 {_fmt(cert.r4)}", "PASS"]
    doc = {"command": "pinv", "verdict": "PASS", "matrix": _matrix_doc(X), "certificate": cert.as_dict()}
    return CommandOutcome(EXIT_OK, "\n".join(lines), doc)


def _cmd_ginv(args, tol):
    A = read_matrix(args.file)
    X = group_inverse(A, tol)
    cert = certify_group(A, X, tol)
    lines = ["group inverse:", format_matrix(X).rstrip("\n")]
    lines += [f"group residuals: g1 {_fmt(cert.g1)}  g2 {_fmt(cert.g2)}  g3 {_fmt(cert.g3)}", "PASS"]
    doc = {"command": "ginv", "verdict": "PASS", "matrix": _matrix_doc(X), "certificate": cert.as_dict()}
    return CommandOutcome(EXIT_OK, "\n".join(lines), doc)


def _cmd_check(args, tol):
    A, B = read_matrix(args.A), read_matrix(args.B)
    check = check_star_conditions if args.kind == "star" else check_sharp_conditions
    return _report_outcome(f"check {args.kind}", check(A, B, tol))


def _cmd_verify(args, tol):
    files = args.files
    if args.kind == "grp-char":
        if len(files) not in (1, 2):
            raise UsageError("verify grp-char takes C and optionally X")
        C = read_matrix(files[0])
        X = read_matrix(files[1]) if len(files) == 2 else group_inverse(C, tol, name="C")
        return _report_outcome("verify grp-char", verify_group_characterization(C, X, tol))
    if len(files) != 2:
        raise UsageError(f"verify {args.kind} takes exactly two matrix files")
    A, B = (read_matrix(f) for f in files)
    verifier = {
        "mp-sum": verify_sum_identity_mp,
        "group-sum": verify_sum_identity_group,
        "mitra-star": lambda A, B, tol: verify_mitra(A, B, "star", tol),
        "mitra-sharp": lambda A, B, tol: verify_mitra(A, B, "sharp", tol),
        "prelim": verify_prelim_properties,
        "prelimgrp": verify_prelimgrp_properties,
    }[args.kind]
    try:
        report = verifier(A, B, tol)
    except PreconditionError as exc:
        lines = [f"precondition failed: {exc}"]
        doc = {"command": f"verify {args.kind}", "verdict": "FAIL", "error": str(exc)}
        if exc.report is not None:
            lines = _render_report(exc.report) + lines
            doc["report"] = _report_doc(exc.report)
        return CommandOutcome(EXIT_FAIL, "\n".join(lines + ["FAIL"]), doc)
    return _report_outcome(f"verify {args.kind}", report)


def _cmd_generate(args, tol):
    if args.order < 2:
        raise UsageError("--order must be at least 2")
    pair = random_certified_pair(args.kind, args.order, args.seed, tol)
    prefix = args.out
    paths = {
        "A": Path(f"{prefix}.A.mat"),
        "B": Path(f"{prefix}.B.mat"),
        "cert": Path(f"{prefix}.cert.json"),
    }
    note = f"{args.kind} pair, order {args.order}, seed {args.seed}"
    write_matrix(paths["A"], pair.A, note)
    write_matrix(paths["B"], pair.B, note)
    cert = {
        "kind": args.kind,
        "order": args.order,
        "seed": args.seed,
        "tolerance": {"rank_rel_tol": tol.rank_rel_tol, "residual_rel_tol": tol.residual_rel_tol},
        **pair.as_dict(),
    }
    cert["certificate"] = _report_doc(pair.certificate)
    paths["cert"].write_text(json.dumps(cert, indent=2) + "\n", encoding="utf-8")
    lines = _render_report(pair.certificate) + [f"wrote {p}" for p in paths.values()] + ["PASS"]
    doc = {
        "command": f"generate {args.kind}",
        "verdict": "PASS",
        "files": {k: str(p) for k, p in paths.items()},
        "report": cert["certificate"],
    }
    return CommandOutcome(EXIT_OK, "\n".join(lines), doc)


def _cmd_solve(args, tol):
    A, b = read_matrix(args.A), read_matrix(args.b)
    result = min_norm_least_squares(A, b, tol)
    lines = [
        "x0:",
        format_matrix(result.x0).rstrip("\n"),
        f"case: {result.case.value}",
        f"residual: {_fmt(result.residual_norm)}",
    ]
    doc = {
        "command": "solve",
        "verdict": "PASS",
        "x0": _matrix_doc(result.x0),
        "case": result.case.value,
        "residual_norm": result.residual_norm,
    }
    return CommandOutcome(EXIT_OK, "\n".join(lines), doc)


# -- parser ----------------------------------------------------------------------


def _add_global_flags(parser, suppress):
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument("--rank-tol", type=float, default=default(DEFAULT_RANK_REL_TOL), metavar="F",
                        help="relative pivot threshold for rank decisions")
    parser.add_argument("--res-tol", type=float, default=default(DEFAULT_RESIDUAL_REL_TOL), metavar="F",
                        help="relative residual threshold for accepting identities")
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="print a machine-readable report")


def build_parser():
    parser = _Parser(prog="ginvsum", description="Moore-Penrose and group inverse sum identities.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, help):
        p = sub.add_parser(name, help=help)
        _add_global_flags(p, suppress=True)
        p.set_defaults(handler=handler)
        return p

    p = add("pinv", _cmd_pinv, "Moore-Penrose inverse of a matrix file")
    p.add_argument("file")
    p = add("ginv", _cmd_ginv, "group inverse of a square matrix file")
    p.add_argument("file")
    p = add("check", _cmd_check, "check the star or sharp hypothesis for (A, B)")
    p.add_argument("kind", choices=("star", "sharp"))
    p.add_argument("A")
    p.add_argument("B")
    p = add("verify", _cmd_verify, "verify an identity or a property list")
    p.add_argument("kind", choices=VERIFY_KINDS)
    p.add_argument("files", nargs="+", metavar="FILE")
    p = add("generate", _cmd_generate, "write a random certified pair")
    p.add_argument("kind", choices=("star", "sharp"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, metavar="PREFIX")
    p = add("solve", _cmd_solve, "minimum-norm least-squares solution of A x = b")
    p.add_argument("A")
    p.add_argument("b")
    return parser


def run_command(argv) -> CommandOutcome:
    try:
        args = build_parser().parse_args(argv)
        tol = TolerancePolicy(args.rank_tol, args.res_tol)
    except UsageError as exc:
        return CommandOutcome(EXIT_USAGE, str(exc), {"verdict": "ERROR", "error": str(exc)})
    except ValueError as exc:
        return CommandOutcome(EXIT_USAGE, f"error: {exc}", {"verdict": "ERROR", "error": str(exc)})

    try:
        return args.handler(args, tol)
    except (UsageError, MatrixParseError, ShapeError, ConstraintError) as exc:
        return CommandOutcome(EXIT_USAGE, f"error: {exc}", {"command": args.command, "verdict": "ERROR", "error": str(exc)})
    except NonexistenceError as exc:
        doc = {"command": args.command, "verdict": "NONEXISTENT", "error": str(exc), "operand": exc.operand}
        return CommandOutcome(EXIT_FAIL, f"{exc}\nNONEXISTENT", doc)
    except (CertificationError, GinvError) as exc:
        return CommandOutcome(EXIT_FAIL, f"{exc}\nFAIL", {"command": args.command, "verdict": "FAIL", "error": str(exc)})


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    outcome = run_command(argv)
    as_json = "--json" in argv
    if as_json:
        print(json.dumps({"exit_code": outcome.exit_code, **outcome.machine_report}, indent=2))
    else:
        stream = sys.stderr if outcome.exit_code == EXIT_USAGE else sys.stdout
        print(outcome.report, file=stream)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
