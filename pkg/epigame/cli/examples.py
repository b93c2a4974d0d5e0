from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import (
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
)

from ..core import UnknownExample
from ..game import (
    EpistemicGame,
    Player,
    UtilityEntry,
    UtilityKind,
    UtilityTable,
)
from ..measure import (
    FiniteSpace,
    Measure,
    Partition,
)
from ..uncertainty import ConjectureProfile
from .codec import (
    dump_conjectures,
    dump_game,
)


@dataclass(frozen=True)
class Example:
    """A shipped game plus its optional conjecture file."""
    name: str
    game: EpistemicGame
    conjectures: Optional[ConjectureProfile] = None

    def files(self) -> Dict[str, bytes]:
        files = {f"{self.name}.json": dump_game(self.game)}
        if self.conjectures is not None:
            files[f"{self.name}.conjectures.json"] = dump_conjectures(self.game, self.conjectures)
        return files


ExampleBuilder = Callable[[], Example]


def _action_table(players: Sequence[str], payoffs: Dict[Tuple[str, ...], Sequence[int]]) -> UtilityTable:
    """State-independent action utilities from ``{action profile: payoff per player}``."""
    return UtilityTable(
        UtilityKind.ACTION,
        tuple(
            UtilityEntry(i, None, profile, Fraction(values[i]))
            for profile, values in payoffs.items()
            for i in range(len(players))
        ),
    )


def prisoners_dilemma() -> Example:
    space = FiniteSpace(("omega",))
    actions = ("deny", "confess")
    players = tuple(
        Player(name, actions, Partition.trivial(space), Measure.uniform(space)) for name in ("P1", "P2")
    )
    # utilities are negated prison years
    payoffs = {
        ("deny", "deny")      : (-1, -1),
        ("deny", "confess")   : (-5, 0),
        ("confess", "deny")   : (0, -5),
        ("confess", "confess"): (-4, -4),
    }
    game = EpistemicGame(
        space, players, UtilityKind.ACTION, _action_table(("P1", "P2"), payoffs),
        comment="Prisoner's dilemma; utilities are negated years in prison.",
    )
    return Example("prisoners-dilemma", game)


def figure1() -> Example:
    space = FiniteSpace(("s0", "s1", "s2", "s3"))
    prior = Measure.uniform(space)
    players = (
        Player("P1", ("3", "4"), Partition.from_labels(space, [["s0", "s1"], ["s2", "s3"]]), prior),
        Player("P2", ("1", "2"), Partition.from_labels(space, [["s0", "s2"], ["s1", "s3"]]), prior),
    )
    payoffs = {
        (a, b): (int((a, b) in {("3", "2"), ("4", "1")}),) * 2
        for a, b in product(("3", "4"), ("1", "2"))
    }
    game = EpistemicGame(
        space, players, UtilityKind.ACTION, _action_table(("P1", "P2"), payoffs),
        comment="Four states, crossing two-cell partitions. The prior is uniform; any strictly positive prior fits.",
    )
    return Example("figure1", game)


def angels_demons() -> Example:
    space = FiniteSpace(("heads", "tails"))
    actions = ("honest", "dishonest")
    player = Player("decision-maker", actions, Partition.discrete(space), Measure.uniform(space))
    # heads pays only if the player would be honest on both sides, tails only if dishonest on both
    entries = tuple(
        UtilityEntry(
            0, state, ((on_heads, on_tails),),
            Fraction(int(on_heads == on_tails == ("honest" if state == 0 else "dishonest"))),
        )
        for state in space
        for on_heads, on_tails in product(actions, repeat=2)
    )
    game = EpistemicGame(
        space, (player,), UtilityKind.STRATEGY, UtilityTable(UtilityKind.STRATEGY, entries),
        comment="Game against nature with a fair coin; a fortune is normalized to 1.",
    )
    return Example("angels-demons", game)


def rendezvous() -> Example:
    space = FiniteSpace(("omega",))
    actions = ("luigi", "harry")
    players = tuple(
        Player(name, actions, Partition.trivial(space), Measure.uniform(space)) for name in ("Mary", "Joe")
    )
    payoffs = {(a, b): (int(a == b),) * 2 for a, b in product(actions, repeat=2)}
    game = EpistemicGame(
        space, players, UtilityKind.ACTION, _action_table(("Mary", "Joe"), payoffs),
        comment="Coordination indicator payoff; each player expects the other to follow.",
    )
    matching = {name: [(a, [a]) for a in actions] for name in ("Mary", "Joe")}
    return Example("rendezvous", game, ConjectureProfile.from_maps(game, matching))


EXAMPLES: Dict[str, ExampleBuilder] = {
    "prisoners-dilemma": prisoners_dilemma,
    "figure1"          : figure1,
    "angels-demons"    : angels_demons,
    "rendezvous"       : rendezvous,
}


def example_names() -> List[str]:
    return sorted(EXAMPLES)


def build_example(name: str) -> Example:
    """
    Build a built-in example.

    Raises:
        UnknownExample: If no example has that name
    """
    builder = EXAMPLES.get(name)
    if builder is None:
        raise UnknownExample(name, example_names())
    return builder()


def export_example(name: str) -> Dict[str, bytes]:
    """Canonical file contents of a built-in example, keyed by file name (game file first)."""
    return build_example(name).files()
