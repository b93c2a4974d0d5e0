"""Command-line entry point: ``epigame <command> ...``."""
import argparse
import json
import sys
from functools import partial
from typing import (
    NoReturn,
    Optional,
    Sequence,
    TextIO,
)

from ..core import (
    EpigameException,
    ErrorCode,
    SearchLimits,
    UsageError,
    ValidationError,
    get_logger,
    set_level,
)
from .commands import CommandFactory

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

_LIMIT_FLAGS = ("strategy_cap", "profile_cap", "system_cap", "scenario_cap", "node_budget")


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors become USAGE_ERROR reports instead of exiting; help is written to ``out``."""

    def __init__(self, *args, out: Optional[TextIO] = None, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.out = out

    def add_subparsers(self, **kwargs):
        kwargs.setdefault("parser_class", partial(_ArgumentParser, out=self.out))
        return super().add_subparsers(**kwargs)

    def print_help(self, file: Optional[TextIO] = None) -> None:
        super().print_help(file if file is not None else self.out)

    def error(self, message: str) -> NoReturn:
        raise UsageError(message, details={"usage": self.format_usage().strip()})


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _add_file(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", metavar="FILE", help="Game file (JSON)")


def build_parser(out: Optional[TextIO] = None) -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="epigame",
        description="Exact analysis of finite epistemic games.",
        out=out,
    )
    parser.add_argument(
        "--format", choices=("json", "table"), default="json",
        help="Report rendering. (default: %(default)s)",
    )
    parser.add_argument(
        "--log-level", default="WARNING", choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        help="Log level for diagnostics on stderr. (default: %(default)s)",
    )
    defaults = SearchLimits()
    for name in _LIMIT_FLAGS:
        parser.add_argument(
            f"--{name.replace('_', '-')}", dest=name, type=int, default=getattr(defaults, name),
            help="Search limit. (default: %(default)s)",
        )

    commands = parser.add_subparsers(dest="group", metavar="COMMAND", required=True)

    validate = commands.add_parser("validate", help="Validate a game file")
    _add_file(validate)
    validate.set_defaults(command="validate")

    info = commands.add_parser("info", help="Strategy counts, join partition and information structure")
    _add_file(info)
    info.set_defaults(command="info")

    solve = commands.add_parser("solve", help="Solve a game under one solution concept")
    concepts = solve.add_subparsers(dest="concept", metavar="CONCEPT", required=True)

    bayes = concepts.add_parser("bayes", help="Enumerate Bayes-rational profiles")
    _add_file(bayes)
    bayes.set_defaults(command="solve bayes")

    ce = concepts.add_parser("ce", help="Optimal correlated equilibrium by exact linear programming")
    _add_file(ce)
    ce.add_argument(
        "--objective", default="sum", metavar="sum|player:NAME",
        help="Objective to maximize. (default: %(default)s)",
    )
    ce.set_defaults(command="solve ce")

    coherent = concepts.add_parser("coherent", help="Coherent systems and their rational solutions")
    _add_file(coherent)
    coherent.add_argument("--max-systems", type=_non_negative, default=None, metavar="N", help="Stop after N systems")
    coherent.add_argument(
        "--admissible-only", action="store_true",
        help="List only systems with at least one rational solution",
    )
    coherent.set_defaults(command="solve coherent")

    conjecture = concepts.add_parser("conjecture", help="Best responses and classification under conjectures")
    _add_file(conjecture)
    conjecture.add_argument("conjectures", metavar="CONJ", help="Conjecture file (JSON)")
    conjecture.add_argument(
        "--profile", nargs="+", metavar="S",
        help="Classify this profile (one strategy label per player)",
    )
    conjecture.set_defaults(command="solve conjecture")

    ce_check = commands.add_parser("ce-check", help="Check a distribution for correlated equilibrium")
    _add_file(ce_check)
    ce_check.add_argument("distribution", metavar="DIST", help="Distribution file (JSON)")
    ce_check.set_defaults(command="ce-check")

    verify = commands.add_parser("verify", help="Instance checks of the impossibility results")
    targets = verify.add_subparsers(dest="target", metavar="TARGET", required=True)
    theorems = targets.add_parser("theorems", help="Exhaustive scenario searches")
    _add_file(theorems)
    theorems.add_argument("--theorem", choices=("1", "2", "all"), default="all")
    theorems.set_defaults(command="verify theorems")

    decompose = commands.add_parser("decompose", help="Cell-by-cell optimization of a game against nature")
    _add_file(decompose)
    decompose.set_defaults(command="decompose")

    export = commands.add_parser("export", help="Write a built-in example")
    export.add_argument("name", metavar="NAME")
    export.add_argument("--output-dir", default=None, metavar="DIR", help="Write files here instead of stdout")
    export.set_defaults(command="export")

    return parser


def _limits(args: argparse.Namespace) -> SearchLimits:
    try:
        return SearchLimits(**{name: getattr(args, name) for name in _LIMIT_FLAGS})
    except ValueError as e:
        raise ValidationError(str(e), details={"field": "limits"}) from None


def execute(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Run one command and write its report to ``stdout``.

    Returns:
        0 on success, 1 on an analysis-negative result, 2 on input or limit errors
    """
    out = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser(out).parse_args(argv)
        set_level(args.log_level)
        command = CommandFactory.create(args.command, _limits(args))
        report = command.run(args)
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_ERROR
    except EpigameException as e:
        if not e.code.is_input_error:
            get_logger().error(f"Analysis failed: {e.code.value}")
        out.write(json.dumps(e.to_dict(), sort_keys=True, indent=2, ensure_ascii=False, default=str) + "\n")
        return EXIT_ERROR
    except Exception as e:
        get_logger().error(f"Unexpected failure: {e!r}")
        error = {"error": {"code": ErrorCode.INTERNAL_ERROR.value, "message": str(e), "details": {}}}
        out.write(json.dumps(error, sort_keys=True, indent=2) + "\n")
        return EXIT_ERROR

    if report.output is not None:
        out.write(report.output.decode("utf-8"))
    elif args.format == "table":
        out.write(report.render_table())
    else:
        out.write(report.to_json().decode("utf-8"))
    return EXIT_NEGATIVE if report.negative else EXIT_OK


def main() -> None:
    sys.exit(execute())
