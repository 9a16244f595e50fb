"""
OrientLab command line

Subcommands:
- gen          Print a graph of a family in the text, DOT or JSON format
- spectrum     Dependency spectrum of a family member or a graph file
- construct    D0, the reversal sequence, or the d_max orientation of C_n^2
- verify       Check the C_n^2 claims for one n
- survey       Spectrum summary over a range of family members
- probe-alpha  Full orientability of C_n^k over a range of n

Exit codes: 0 success, 2 budget exceeded, 3 invalid input, 4 verification failure.

Usage:
    python -m app.cli spectrum --family cycle-power --n 6 --k 2
    python -m app.cli verify --n 9 --format text
    python -m app.cli probe-alpha --k 2 --n 6..10
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from app.config import settings
from app.services.reports import (
    Family,
    build_graph,
    entry_document,
    graph_document,
    parse_range,
    probe_alpha,
    probe_text,
    report_text,
    sequence_document,
    sequence_text,
    spectrum_csv,
    spectrum_document,
    spectrum_text,
    survey,
    survey_csv,
)
from core.constructions import (
    SequenceEntry,
    construct_d0,
    construct_dmax_orientation,
    construct_reversal_sequence,
    expected_d0_dependents,
    sequence_to_dot,
    verify_theorems,
)
from core.errors import BudgetExceeded, ConstructionError, OrientationLabError, VerificationFailure
from core.graph_core import format_graph, graph_to_dot
from core.orientation import orientation_to_dot
from core.spectrum import Strategy

logger = logging.getLogger("orientlab")

EXIT_OK = 0
EXIT_BUDGET = 2
EXIT_INVALID = 3
EXIT_VERIFICATION = 4


class UsageError(Exception):
    """Bad command-line arguments."""


class OrientLabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit 3 instead of argparse's 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = OrientLabArgumentParser(
        prog="orientlab",
        description="Acyclic orientations, dependent arcs and dependency spectra.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable DEBUG logging on stderr")

    common = OrientLabArgumentParser(add_help=False)
    common.add_argument("--out", default="-", help="Output path ('-' for stdout)")
    common.add_argument("--budget", type=_positive_int, default=None,
                        help=f"Enumeration budget (default {settings.default_budget}, env ORIENTLAB_DEFAULT_BUDGET)")
    common.add_argument("--workers", type=_positive_int, default=None, help="Worker processes for enumeration")
    common.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.AUTO.value)

    family = OrientLabArgumentParser(add_help=False)
    family.add_argument("--family", choices=[f.value for f in Family])
    family.add_argument("--n", help="Vertex count (part size for multipartite); A..B where a range is allowed")
    family.add_argument("--k", type=int, help="Power for cycle-power")
    family.add_argument("--r", type=int, help="Number of parts for multipartite")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=OrientLabArgumentParser)

    gen = sub.add_parser("gen", parents=[common, family], help="Print a graph")
    gen.add_argument("--format", choices=["text", "dot", "json"], default="text")

    spectrum = sub.add_parser("spectrum", parents=[common, family], help="Dependency spectrum of a graph")
    spectrum.add_argument("--graph", help="Read the graph from a text-format file instead of a family")
    spectrum.add_argument("--format", choices=["json", "csv", "text"], default="json")

    construct = sub.add_parser("construct", parents=[common], help="Constructions on C_n^2")
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--which", choices=["d0", "sequence", "dmax"], default="sequence")
    construct.add_argument("--format", choices=["json", "text", "dot"], default="json")

    verify = sub.add_parser("verify", parents=[common], help="Verify the C_n^2 claims for one n")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--dot-dir", help="Also write one DOT file per sequence entry here")
    verify.add_argument("--format", choices=["json", "text"], default="json")

    survey_cmd = sub.add_parser("survey", parents=[common, family], help="Spectra over a range of n")
    survey_cmd.add_argument("--format", choices=["json", "csv"], default="json")

    probe = sub.add_parser("probe-alpha", parents=[common], help="Full orientability of C_n^k over a range of n")
    probe.add_argument("--k", type=int, required=True)
    probe.add_argument("--n", required=True, help="N or A..B")
    probe.add_argument("--format", choices=["json", "text"], default="json")

    return parser


def _emit(text: str, out: str) -> None:
    if out in ("-", ""):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")


def _write_dot_files(files: Sequence, directory: str) -> None:
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    for stem, dot in files:
        (target / f"{stem}.dot").write_text(dot, encoding="utf-8")
    logger.info(f"Wrote {len(files)} DOT file(s) to {target}")


def _single_n(args: argparse.Namespace) -> Optional[int]:
    if args.n is None:
        return None
    ns = parse_range(args.n)
    if len(ns) != 1:
        raise UsageError(f"{args.command} takes a single n, got {args.n!r}")
    return ns[0]


def cmd_gen(args: argparse.Namespace) -> int:
    g = build_graph(args.family, _single_n(args), args.k, args.r)
    if args.format == "dot":
        _emit(graph_to_dot(g), args.out)
    elif args.format == "json":
        _emit(graph_document(g).model_dump_json(indent=2) + "\n", args.out)
    else:
        _emit(format_graph(g), args.out)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    if args.graph is None and args.family is None:
        raise UsageError("spectrum needs --family or --graph")
    g = build_graph(
        args.family, _single_n(args), args.k, args.r, graph_path=args.graph, strategy=args.strategy, budget=args.budget,
    )
    doc = spectrum_document(g, strategy=args.strategy, budget=args.budget, workers=args.workers)
    if args.format == "csv":
        _emit(spectrum_csv(doc), args.out)
    elif args.format == "text":
        _emit(spectrum_text(doc), args.out)
    else:
        _emit(doc.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    n = args.n
    if args.which == "sequence":
        sequence = construct_reversal_sequence(n)
        if args.format == "dot":
            files = sequence_to_dot(sequence)
            if args.out in ("-", ""):
                _emit("".join(dot for _, dot in files), "-")
            else:
                _write_dot_files(files, args.out)
        elif args.format == "text":
            _emit(sequence_text(sequence_document(sequence)), args.out)
        else:
            _emit(sequence_document(sequence).model_dump_json(indent=2) + "\n", args.out)
        return EXIT_OK

    if args.which == "d0":
        entry = SequenceEntry(
            target_d=len(expected_d0_dependents(n)),
            orientation=construct_d0(n),
            expected_R=expected_d0_dependents(n),
            label="D0",
        )
    else:
        entry = SequenceEntry(target_d=n + 1, orientation=construct_dmax_orientation(n), label="dmax")

    doc = entry_document(0, entry)
    if doc.d != entry.target_d:
        raise VerificationFailure(entry.label, f"oracle d = {doc.d}, target {entry.target_d}", doc.dependent_arcs)
    if args.format == "dot":
        _emit(orientation_to_dot(entry.orientation, name=entry.label), args.out)
    elif args.format == "text":
        _emit(f"{entry.label} of C_{n}^2: d = {doc.d}\n  dependent {doc.dependent_arcs}\n", args.out)
    else:
        _emit(doc.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = verify_theorems(args.n, budget=args.budget, workers=args.workers)
    except VerificationFailure as exc:
        if exc.report is not None:
            rendered = report_text(exc.report) if args.format == "text" else exc.report.model_dump_json(indent=2) + "\n"
            _emit(rendered, args.out)
        raise
    if args.dot_dir:
        _write_dot_files(sequence_to_dot(construct_reversal_sequence(args.n)), args.dot_dir)
    if args.format == "text":
        _emit(report_text(report), args.out)
    else:
        _emit(report.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    if args.family is None or args.n is None:
        raise UsageError("survey needs --family and --n")
    rows = survey(
        args.family, parse_range(args.n), k=args.k, r=args.r,
        strategy=args.strategy, budget=args.budget, workers=args.workers,
    )
    if args.format == "csv":
        _emit(survey_csv(rows), args.out)
    else:
        _emit("[\n" + ",\n".join(row.model_dump_json(indent=2) for row in rows) + "\n]\n", args.out)
    return EXIT_OK


def cmd_probe_alpha(args: argparse.Namespace) -> int:
    table = probe_alpha(
        args.k, parse_range(args.n), strategy=args.strategy, budget=args.budget, workers=args.workers,
    )
    if args.format == "text":
        _emit(probe_text(table), args.out)
    else:
        _emit(table.model_dump_json(indent=2) + "\n", args.out)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "spectrum": cmd_spectrum,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "survey": cmd_survey,
    "probe-alpha": cmd_probe_alpha,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level.upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        logger.error(f"Budget exceeded: {exc}")
        return EXIT_BUDGET
    except (VerificationFailure, ConstructionError) as exc:
        logger.error(f"Verification failed: {exc}")
        return EXIT_VERIFICATION
    except (OrientationLabError, UsageError) as exc:
        logger.error(f"Invalid input: {exc}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
