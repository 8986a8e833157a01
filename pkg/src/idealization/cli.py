"""Command-line front end.

Exit status: 0 success (including "inconclusive" and structural "fails"),
1 internal-consistency alarm, 2 unmet hypothesis or bad usage,
3 workspace errors (parse, reference, validation, truncation).
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import Verdict, ci_fraction_diagnostic, classify
from .config import DEFAULT
from .conjectures import beh_check, jl_check, total_rank_check, zl_check
from .errors import ConsistencyError, HypothesisUnmetError, IdealizationError
from .idealize import ROUTES, betti_over_idealization
from .workspace import parse_workspace

EXIT_OK, EXIT_CONSISTENCY, EXIT_HYPOTHESIS, EXIT_INPUT = 0, 1, 2, 3


def _dump(payload: dict) -> str:
    return json.dumps({"schema_version": DEFAULT.schema_version, **payload}, indent=2, ensure_ascii=False) + "\n"


def _row_table(rows: list[tuple[str, list[int]]], D: int) -> str:
    label_w = max(len(label) for label, _ in rows) + 1
    cells = [str(i) for i in range(D + 1)] + [str(x) for _, r in rows for x in r]
    w = max(len(c) for c in cells)
    lines = [" " * label_w + " " + " ".join(str(i).rjust(w) for i in range(D + 1))]
    for label, r in rows:
        lines.append((label + ":").ljust(label_w) + " " + " ".join(str(x).rjust(w) for x in r))
    return "\n".join(lines) + "\n"


def cmd_betti(ws, args) -> tuple[str, int]:
    ideal = ws.idealization(args.idealization)
    n = ws.module(args.module)
    D = args.degree if args.degree is not None else min(ideal.degree, n.degree)
    over = betti_over_idealization(ideal, n, D, route=args.route)
    base_row = list(n.betti.truncate(D))
    label = f"{ideal.base.name}⋉{ideal.zipped.name}"
    if args.format == "json":
        return _dump({
            "command": "betti",
            "idealization": args.idealization,
            "module": n.name,
            "degree": D,
            "route": args.route,
            "over_base": {"ring": ideal.base.name, "betti": base_row},
            "over_idealization": {"ring": label, "betti": list(over)},
        }), EXIT_OK
    return _row_table([(ideal.base.name, base_row), (label, list(over))], D), EXIT_OK


def cmd_classify(ws, args) -> tuple[str, int]:
    ideal = ws.idealization(args.idealization)
    verdicts = classify(ideal)
    diag = None
    if ideal.base.degree >= 2 and ideal.zipped.degree >= 1:
        diag = ci_fraction_diagnostic(ideal.base, ideal.zipped)
    if args.format == "json":
        return _dump({
            "command": "classify",
            "idealization": args.idealization,
            "verdicts": [v.to_dict() for v in verdicts],
            "ci_fraction_diagnostic": None if diag is None else diag.to_dict(),
        }), EXIT_OK
    lines = [f"{v.property}: {v.verdict.value}  [{v.certificate}]" for v in verdicts]
    if diag is not None:
        lines.append(f"ci fraction diagnostic: {diag.note}")
    return "\n".join(lines) + "\n", EXIT_OK


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise HypothesisUnmetError(f"--conjecture {args.conjecture} needs {', '.join(missing)}")


def cmd_check(ws, args) -> tuple[str, int]:
    c = args.conjecture
    if c == "jl":
        _need(args, "idealization", "omega")
        ideal = ws.idealization(args.idealization)
        report = jl_check(ws.module(args.omega), ideal.zipped, ideal)
    elif c in ("beh", "total-rank"):
        _need(args, "idealization", "module")
        ideal = ws.idealization(args.idealization)
        n = ws.module(args.module)
        assumed = ws.satisfies.get(ideal.base.name, frozenset())
        if c == "beh":
            report = beh_check(ideal, n, "beh" in assumed)
        else:
            D = args.degree if args.degree is not None else min(ideal.degree, n.degree)
            report = total_rank_check(ideal, n, "total_rank" in assumed, D)
    else:
        _need(args, "ring", "module")
        base = ws.ring(args.ring)
        t = ws.module(args.module)
        D = args.degree if args.degree is not None else min(base.degree, t.degree)
        report = zl_check(t, base, D)
    status = EXIT_CONSISTENCY if report.verdict is Verdict.FAILS else EXIT_OK
    if args.format == "json":
        return _dump({"command": "check", "report": report.to_dict()}), status
    lines = [f"{report.conjecture}: {report.verdict.value}", f"  {report.narrative}"]
    for w in report.witnesses:
        lines.append(f"  index {w.index}: {w.left} vs {w.right}")
    for k, v in report.derived.items():
        lines.append(f"  derived {k} = {v}")
    return "\n".join(lines) + "\n", status


def cmd_idealize(ws, args) -> tuple[str, int]:
    ideal = ws.idealization(args.idealization)
    if args.format == "json":
        return _dump({
            "command": "idealize",
            "idealization": args.idealization,
            "base": ideal.base.name,
            "module": ideal.zipped.name,
            "ring": ideal.ring.to_dict(),
        }), EXIT_OK
    r = ideal.ring
    flags = ", ".join(f"{k}={'unknown' if v is None else str(v).lower()}" for k, v in r.structure.as_dict().items())
    text = (
        f"{args.idealization} = {ideal.base.name}⋉{ideal.zipped.name}\n"
        f"  dim = {r.dim}\n  depth = {r.depth}\n  edim = {r.edim}\n"
        f"  betti_k = {' '.join(map(str, r.betti_k))}\n  {flags}\n"
    )
    return text, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workspace", "-w", default=argparse.SUPPRESS, help="workspace JSON file")
    common.add_argument("--degree", "-d", type=int, default=argparse.SUPPRESS, help="truncation degree")
    common.add_argument("--format", "-f", choices=("table", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="idealization", parents=[common],
        description="Betti numbers and invariants of idealization rings from numerical data.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("betti", parents=[common], help="Betti numbers over R and over R⋉M")
    p.add_argument("idealization")
    p.add_argument("module")
    p.add_argument("--route", choices=ROUTES, default="convolution")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("classify", parents=[common], help="structure verdicts for R⋉M")
    p.add_argument("idealization")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", parents=[common], help="run a conjecture checker")
    p.add_argument("--conjecture", "-c", required=True, choices=("jl", "beh", "total-rank", "zl"))
    p.add_argument("--idealization", "-i")
    p.add_argument("--module", "-m")
    p.add_argument("--omega")
    p.add_argument("--ring", "-r")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("idealize", parents=[common], help="derived invariants of R⋉M")
    p.add_argument("idealization")
    p.set_defaults(func=cmd_idealize)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.workspace = getattr(args, "workspace", None)
    args.degree = getattr(args, "degree", None)
    args.format = getattr(args, "format", "table")
    if args.workspace is None:
        print("error: --workspace is required", file=sys.stderr)
        return EXIT_HYPOTHESIS
    try:
        ws = parse_workspace(args.workspace, args.degree)
        out, status = args.func(ws, args)
    except ConsistencyError as exc:
        print(f"internal-consistency alarm: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except HypothesisUnmetError as exc:
        print(f"hypothesis unmet: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (IdealizationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
