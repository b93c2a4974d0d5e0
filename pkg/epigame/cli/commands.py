from abc import (
    ABC,
    abstractmethod,
)
from argparse import Namespace
from pathlib import Path
from typing import (
    Any,
    ClassVar,
    Dict,
    List,
    Optional,
    Tuple,
    Type,
)

from ..certainty import (
    count_coherent_systems,
    efficiency_report,
    enumerate_coherent_systems,
    rational_solutions,
)
from ..consistency import (
    check_theorem1,
    check_theorem2,
    decomposition_check,
    imperfect_pairs,
)
from ..core import (
    ParseError,
    SearchLimits,
    UsageError,
    format_error_details,
    get_logger,
)
from ..equilibrium import (
    NormalFormGame,
    Objective,
    enumerate_bayes_rational,
    find_correlated_equilibrium,
    is_correlated_equilibrium,
    player_objective,
    sum_objective,
    to_normal_form,
)
from ..game import (
    EpistemicGame,
    info_report,
    parse_profile,
)
from ..measure import join
from ..uncertainty import (
    best_responses_to_conjecture,
    classify_solution,
    conjectures_correct,
    rational_profiles,
    subjectively_rational,
)
from .codec import (
    distribution_to_dict,
    parse_conjectures,
    parse_distribution,
    parse_game,
)
from .examples import export_example
from .report import Report


def read_input(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"Cannot read input file: {path}", details=format_error_details(e), parent=e) from e


class Command(ABC):
    """One CLI subcommand; ``name`` is the command path echoed in the report."""

    name: ClassVar[str]

    def __init__(self, limits: SearchLimits) -> None:
        self.limits = limits
        self._logger = get_logger()

    @abstractmethod
    def run(self, args: Namespace) -> Report:
        """Execute the command and build its report."""

    def load_game(self, path: str) -> Tuple[EpistemicGame, bytes]:
        data = read_input(path)
        return parse_game(data), data


class ValidateCommand(Command):
    name = "validate"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        result = {
            "valid"       : True,
            "players"     : [p.name for p in g.players],
            "states"      : len(g.space),
            "utility_kind": g.utility_kind,
        }
        return Report.build(self.name, [data], result)


class InfoCommand(Command):
    name = "info"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        result = {
            "players"     : [
                {
                    "name"      : p.name,
                    "actions"   : list(p.actions),
                    "partition" : [list(block) for block in p.partition.labels()],
                    "strategies": g.strategy_count(i),
                }
                for i, p in enumerate(g.players)
            ],
            "join"        : [list(block) for block in join([p.partition for p in g.players]).labels()],
            "common_prior": g.common_prior() is not None,
            "information" : info_report(g),
        }
        return Report.build(self.name, [data], result)


class SolveBayesCommand(Command):
    name = "solve bayes"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        profiles = enumerate_bayes_rational(g, self.limits)
        return Report.build(self.name, [data], {"count": len(profiles), "profiles": profiles})


def _objective(nf: NormalFormGame, spec: str) -> Objective:
    if spec == "sum":
        return sum_objective(nf)
    if spec.startswith("player:"):
        return player_objective(nf, spec[len("player:"):])
    raise UsageError(f"Unknown objective: {spec}", details={"objective": spec, "expected": "sum|player:NAME"})


class SolveCECommand(Command):
    name = "solve ce"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        nf = to_normal_form(g, self.limits)
        found = find_correlated_equilibrium(nf, _objective(nf, args.objective), self.limits)
        result = {
            "objective_kind": args.objective,
            "objective"     : found.objective,
            "distribution"  : distribution_to_dict(found.distribution),
            "certificate"   : found.certificate,
        }
        return Report.build(self.name, [data], result)


class CECheckCommand(Command):
    name = "ce-check"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        dist_data = read_input(args.distribution)
        nf = to_normal_form(g, self.limits)
        report = is_correlated_equilibrium(nf, parse_distribution(nf, dist_data))
        result = {
            "ok"         : report.ok,
            "violated"   : report.violated,
            "constraints": report.constraints,
        }
        return Report.build(self.name, [data, dist_data], result, negative=not report.ok)


class SolveCoherentCommand(Command):
    name = "solve coherent"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        total = count_coherent_systems(g)
        systems: List[Dict[str, Any]] = []
        for index, system in enumerate(
            enumerate_coherent_systems(g, max_systems=args.max_systems, limits=self.limits)
        ):
            solutions = rational_solutions(g, system)
            if args.admissible_only and not solutions:
                continue
            systems.append({
                "index"             : index,
                "profiles"          : list(system),
                "rational_solutions": solutions,
                "efficiency"        : efficiency_report(g, system, solutions),
            })
        result = {
            "total"    : total,
            "truncated": args.max_systems is not None and args.max_systems < total,
            "systems"  : systems,
        }
        return Report.build(self.name, [data], result)


class SolveConjectureCommand(Command):
    name = "solve conjecture"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        conj_data = read_input(args.conjectures)
        conj = parse_conjectures(g, conj_data)
        result: Dict[str, Any] = {"fixed": conj.fixed}
        if args.profile:
            profile = parse_profile(g, args.profile)
            result.update({
                "profile"            : profile,
                "classification"     : classify_solution(g, conj, profile, self.limits),
                "conjectures_correct": conjectures_correct(g, conj, profile),
                "subjective"         : subjectively_rational(g, conj, profile, self.limits),
            })
        else:
            result.update({
                "best_responses": {
                    p.name: best_responses_to_conjecture(g, i, conj[i], self.limits)
                    for i, p in enumerate(g.players)
                },
                "profiles"      : [
                    {"profile": profile, "classification": label}
                    for profile, label in rational_profiles(g, conj, self.limits)
                ],
            })
        return Report.build(self.name, [data, conj_data], result)


class VerifyTheoremsCommand(Command):
    name = "verify theorems"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        reports = []
        skipped = []
        if args.theorem in ("1", "all"):
            reports.append(check_theorem1(g, self.limits))
        if args.theorem == "2" or (args.theorem == "all" and imperfect_pairs(g)):
            reports.append(check_theorem2(g, self.limits))
        elif args.theorem == "all":
            skipped.append({"theorem": 2, "reason": "no player has imperfect information"})
        holds = all(r.holds for r in reports)
        result = {"holds": holds, "reports": reports, "skipped": skipped}
        return Report.build(self.name, [data], result, negative=not holds)


class DecomposeCommand(Command):
    name = "decompose"

    def run(self, args: Namespace) -> Report:
        g, data = self.load_game(args.file)
        return Report.build(self.name, [data], decomposition_check(g, self.limits))


class ExportCommand(Command):
    name = "export"

    def run(self, args: Namespace) -> Report:
        files = export_example(args.name)
        if args.output_dir is None:
            game_file = next(iter(files.values()))
            return Report.build(self.name, [], {"files": list(files)}, output=game_file)
        directory = Path(args.output_dir)
        try:
            directory.mkdir(parents=True, exist_ok=True)
            for filename, content in files.items():
                (directory / filename).write_bytes(content)
        except OSError as e:
            raise ParseError(
                f"Cannot write to {directory}", details=format_error_details(e), parent=e
            ) from e
        self._logger.info(f"Exported {len(files)} file(s) for '{args.name}' to {directory}")
        return Report.build(self.name, [], {"example": args.name, "files": list(files)})


class CommandFactory:
    """Factory for creating CLI commands from their command path."""

    _commands: Dict[str, Type[Command]] = {
        ValidateCommand.name       : ValidateCommand,
        InfoCommand.name           : InfoCommand,
        SolveBayesCommand.name     : SolveBayesCommand,
        SolveCECommand.name        : SolveCECommand,
        CECheckCommand.name        : CECheckCommand,
        SolveCoherentCommand.name  : SolveCoherentCommand,
        SolveConjectureCommand.name: SolveConjectureCommand,
        VerifyTheoremsCommand.name : VerifyTheoremsCommand,
        DecomposeCommand.name      : DecomposeCommand,
        ExportCommand.name         : ExportCommand,
    }

    @classmethod
    def names(cls) -> List[str]:
        return list(cls._commands)

    @classmethod
    def create(cls, name: str, limits: SearchLimits) -> Command:
        """Create the command registered under ``name``."""
        command_class: Optional[Type[Command]] = cls._commands.get(name)
        if not command_class:
            raise UsageError(f"Unsupported command: {name}", details={"command": name})
        return command_class(limits)
