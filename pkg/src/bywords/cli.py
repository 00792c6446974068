"""Command-line front end: clean, build, analyze, join, recur, and the
one-shot pipeline command.

Exit codes: 0 on success, 1 on operational errors (missing or malformed
files, join mismatches), 2 on usage errors. A failing run removes every
output file it created, so no partial outputs are left behind.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from importlib.resources import files
from pathlib import Path

from . import __version__, ingest, integrate, lexicon, matrix, recurrence
from .errors import BywordsError, BywordsWarning

DEFAULT_RULES_FILE = "beowulf.rules"
DEFAULT_DICT_FILE = "base.dict"


class UsageError(Exception):
    """A bad flag combination caught after argument parsing."""


def bundled(name: str) -> Path:
    """Path of a data file shipped with the package."""
    return Path(str(files("bywords").joinpath("data", name)))


def _check_paths(inputs: list[Path], outputs: list[Path]) -> None:
    """Inputs and outputs must not collide, and outputs must be distinct."""
    taken = {p.resolve() for p in inputs}
    seen: set[Path] = set()
    for path in outputs:
        resolved = path.resolve()
        if resolved in taken:
            raise UsageError(f"output path {path} is also an input path")
        if resolved in seen:
            raise UsageError(f"output path {path} is given twice")
        seen.add(resolved)


def _rules_path(args) -> Path:
    return args.rules if args.rules is not None else bundled(DEFAULT_RULES_FILE)


def _dict_path(args) -> Path:
    return args.dict if args.dict is not None else bundled(DEFAULT_DICT_FILE)


def cmd_clean(args, written: list[Path]) -> None:
    _check_paths([args.input], [args.output])
    rules = ingest.load_rules(_rules_path(args))
    text = args.input.read_text(encoding="utf-8")
    ingest.write_cleaned(ingest.mark_structure(text, rules), args.output)
    written.append(args.output)


def cmd_build(args, written: list[Path]) -> None:
    _check_paths([args.input], [args.matrix, args.wordlist])
    rules = ingest.load_rules(_rules_path(args))
    stream = ingest.read_cleaned(args.input)
    records = matrix.build_matrix(stream, terminal=rules.keep_terminal)
    matrix.export_matrix(records, args.matrix)
    written.append(args.matrix)
    matrix.export_wordlist(records, args.wordlist)
    written.append(args.wordlist)


def cmd_analyze(args, written: list[Path]) -> None:
    _check_paths([args.matrix], [args.output])
    rules = ingest.load_rules(_rules_path(args))
    records = matrix.import_matrix(args.matrix)
    lex = lexicon.load_dictionary(_dict_path(args))
    rows = lexicon.analyze(records, lex, terminal=rules.keep_terminal)
    lexicon.write_analysis(records, rows, lex, args.output)
    written.append(args.output)


def cmd_join(args, written: list[Path]) -> None:
    _check_paths([args.matrix, args.table], [args.output])
    records = matrix.import_matrix(args.matrix)
    table = integrate.import_external(args.table, delimiter=args.delimiter)
    integrate.join_rows(records, table, args.output, verify=args.verify)
    written.append(args.output)


def cmd_recur(args, written: list[Path]) -> None:
    outputs = [p for p in (args.metrics_out, args.plot_out) if p is not None]
    _check_paths([args.input], outputs)
    sep = "\t" if args.delimiter == "tab" else ","
    values = recurrence.column_values(args.input, args.column, delimiter=sep)
    plot = recurrence.recurrence_matrix(values, key=args.column)
    metrics = recurrence.rqa(plot, lmin=args.lmin)
    for name in ("rr", "det", "maxline", "meanline"):
        print(f"{name}={getattr(metrics, name)}")
    if args.metrics_out is not None:
        recurrence.write_metrics(plot, metrics, args.lmin, args.metrics_out)
        written.append(args.metrics_out)
    if args.plot_out is not None:
        recurrence.export_plot(plot, args.plot_out)
        written.append(args.plot_out)


def _pipeline_one(
    input_path: Path, out_dir: Path, rules_path: Path, dict_path: Path
) -> list[Path]:
    """Run all stages for one input file; on failure remove this input's
    outputs and re-raise."""
    written: list[Path] = []
    try:
        rules = ingest.load_rules(rules_path)
        lex = lexicon.load_dictionary(dict_path)
        stem = input_path.stem
        cleaned = out_dir / f"{stem}.cleaned.csv"
        matrix_path = out_dir / f"{stem}.matrix.csv"
        wordlist = out_dir / f"{stem}.words.txt"
        analysis = out_dir / f"{stem}.analysis.txt"
        integrated = out_dir / f"{stem}.integrated.csv"

        text = input_path.read_text(encoding="utf-8")
        ingest.write_cleaned(ingest.mark_structure(text, rules), cleaned)
        written.append(cleaned)
        records = matrix.build_matrix(
            ingest.read_cleaned(cleaned), terminal=rules.keep_terminal
        )
        matrix.export_matrix(records, matrix_path)
        written.append(matrix_path)
        matrix.export_wordlist(records, wordlist)
        written.append(wordlist)
        rows = lexicon.analyze(records, lex, terminal=rules.keep_terminal)
        lexicon.write_analysis(records, rows, lex, analysis)
        written.append(analysis)
        table = integrate.import_external(analysis, delimiter="tab")
        integrate.join_rows(records, table, integrated, verify=True)
        written.append(integrated)
    except BaseException:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return written


def cmd_pipeline(args, written: list[Path]) -> None:
    inputs: list[Path] = args.input
    stems = [p.stem for p in inputs]
    if len(set(stems)) != len(stems):
        raise UsageError("pipeline input files must have distinct names")
    args.out.mkdir(parents=True, exist_ok=True)
    rules_path = _rules_path(args)
    dict_path = _dict_path(args)
    if args.jobs > 1 and len(inputs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [
                pool.submit(_pipeline_one, path, args.out, rules_path, dict_path)
                for path in inputs
            ]
            failures = []
            for future in futures:
                try:
                    written.extend(future.result())
                except BaseException as exc:  # collected so every worker finishes
                    failures.append(exc)
            if failures:
                raise failures[0]
    else:
        for path in inputs:
            written.extend(_pipeline_one(path, args.out, rules_path, dict_path))


def _add_rules_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--rules", type=Path, default=None,
        help="cleanup rules file (default: the bundled Beowulf rules)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bywords",
        description="Build word-level long-form matrices from raw text and"
        " run categorical recurrence analysis over their columns.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    clean = sub.add_parser("clean", help="clean raw text into a marked token file")
    clean.add_argument("--input", required=True, type=Path, help="raw text file")
    _add_rules_flag(clean)
    clean.add_argument("--output", required=True, type=Path, help="cleaned token file")
    clean.set_defaults(func=cmd_clean)

    build = sub.add_parser("build", help="build the word matrix from cleaned tokens")
    build.add_argument("--input", required=True, type=Path, help="cleaned token file")
    _add_rules_flag(build)
    build.add_argument("--matrix", required=True, type=Path, help="matrix csv to write")
    build.add_argument("--wordlist", required=True, type=Path, help="wordlist to write")
    build.set_defaults(func=cmd_build)

    analyze = sub.add_parser("analyze", help="score matrix words against a dictionary")
    analyze.add_argument("--matrix", required=True, type=Path, help="matrix csv")
    analyze.add_argument(
        "--dict", type=Path, default=None,
        help="category dictionary (default: the bundled example dictionary)",
    )
    _add_rules_flag(analyze)
    analyze.add_argument("--output", required=True, type=Path, help="analysis table to write")
    analyze.set_defaults(func=cmd_analyze)

    join = sub.add_parser("join", help="join an external analysis table onto the matrix")
    join.add_argument("--matrix", required=True, type=Path, help="matrix csv")
    join.add_argument("--table", required=True, type=Path, help="external analysis table")
    join.add_argument(
        "--delimiter", choices=("tab", "comma"), default="tab",
        help="table delimiter (default: tab)",
    )
    join.add_argument(
        "--verify", action="store_true",
        help="warn when table identifiers disagree with the word column",
    )
    join.add_argument("--output", required=True, type=Path, help="integrated csv to write")
    join.set_defaults(func=cmd_join)

    recur = sub.add_parser("recur", help="recurrence metrics over one column")
    recur.add_argument("--input", required=True, type=Path, help="matrix or integrated csv")
    recur.add_argument("--column", required=True, help="column to compare")
    recur.add_argument(
        "--lmin", type=int, default=recurrence.DEFAULT_LMIN,
        help="minimum diagonal line length (default: %(default)s)",
    )
    recur.add_argument(
        "--delimiter", choices=("tab", "comma"), default="comma",
        help="input delimiter (default: comma)",
    )
    recur.add_argument("--metrics-out", type=Path, default=None, help="metrics csv to write")
    recur.add_argument("--plot-out", type=Path, default=None, help="plot coordinate csv to write")
    recur.set_defaults(func=cmd_recur)

    pipeline = sub.add_parser("pipeline", help="clean, build, analyze, and join in one go")
    pipeline.add_argument(
        "--input", required=True, type=Path, nargs="+", help="raw text file(s)"
    )
    _add_rules_flag(pipeline)
    pipeline.add_argument(
        "--dict", type=Path, default=None,
        help="category dictionary (default: the bundled example dictionary)",
    )
    pipeline.add_argument("--out", required=True, type=Path, help="output directory")
    pipeline.add_argument(
        "--jobs", type=int, default=1, help="worker processes for multiple inputs"
    )
    pipeline.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings.simplefilter("always", BywordsWarning)
    written: list[Path] = []
    try:
        args.func(args, written)
    except UsageError as exc:
        print(f"bywords: usage error: {exc}", file=sys.stderr)
        return 2
    except (BywordsError, OSError, ValueError) as exc:
        for path in written:
            path.unlink(missing_ok=True)
        print(f"bywords: error: {exc}", file=sys.stderr)
        return 1
    except BaseException:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return 0
