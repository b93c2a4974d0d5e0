from dataclasses import fields
from fractions import Fraction
from itertools import product
from typing import (
    Dict,
    Optional,
    Sequence,
    Tuple,
)

from epigame.game import (
    EpistemicGame,
    Player,
    UtilityEntry,
    UtilityKind,
    UtilityTable,
)
from epigame.measure import (
    FiniteSpace,
    Measure,
    Partition,
)

Payoffs = Dict[Tuple[str, ...], Sequence[object]]


class ConfigUtils:
    """
    Utilities for handling frozen dataclass updates.
    """

    @staticmethod
    def update_config(config, **updates):
        """
        Safely update a frozen dataclass without triggering __post_init__.

        Args:
            config: Frozen dataclass instance to update.
            **updates: Field-value pairs to update.

        Returns:
            A new dataclass instance with updated fields.
        """
        cls = config.__class__
        current_values = {field.name: getattr(config, field.name) for field in fields(config)}
        current_values.update(updates)
        obj = object.__new__(cls)
        for key, value in current_values.items():
            object.__setattr__(obj, key, value)
        return obj


class GameBuilder:
    """
    Small games used across the suites.
    """

    @staticmethod
    def action_table(n: int, payoffs: Payoffs) -> UtilityTable:
        """State-independent action utilities from ``{action profile: one payoff per player}``."""
        return UtilityTable(
            UtilityKind.ACTION,
            tuple(
                UtilityEntry(i, None, tuple(profile), Fraction(values[i]))
                for profile, values in payoffs.items()
                for i in range(n)
            ),
        )

    @staticmethod
    def matrix(
        actions: Sequence[Sequence[str]],
        payoffs: Payoffs,
        names: Optional[Sequence[str]] = None,
    ) -> EpistemicGame:
        """One-state game with trivial partitions: a plain strategic form."""
        space = FiniteSpace(("omega",))
        names = names or [f"P{i + 1}" for i in range(len(actions))]
        players = tuple(
            Player(name, tuple(acts), Partition.trivial(space), Measure.uniform(space))
            for name, acts in zip(names, actions)
        )
        return EpistemicGame(space, players, UtilityKind.ACTION, GameBuilder.action_table(len(players), payoffs))

    @staticmethod
    def prisoners_dilemma() -> EpistemicGame:
        return GameBuilder.matrix(
            [("deny", "confess")] * 2,
            {
                ("deny", "deny")      : (-1, -1),
                ("deny", "confess")   : (-5, 0),
                ("confess", "deny")   : (0, -5),
                ("confess", "confess"): (-4, -4),
            },
        )

    @staticmethod
    def chicken() -> EpistemicGame:
        return GameBuilder.matrix(
            [("D", "C")] * 2,
            {
                ("D", "D"): (0, 0),
                ("D", "C"): (7, 2),
                ("C", "D"): (2, 7),
                ("C", "C"): (6, 6),
            },
        )

    @staticmethod
    def coordination() -> EpistemicGame:
        actions = ("left", "right")
        return GameBuilder.matrix(
            [actions] * 2,
            {(a, b): (int(a == b), int(a == b)) for a, b in product(actions, repeat=2)},
        )

    @staticmethod
    def constant(value: int = 3, players: int = 2) -> EpistemicGame:
        actions = ("x", "y")
        return GameBuilder.matrix(
            [actions] * players,
            {profile: (value,) * players for profile in product(actions, repeat=players)},
        )

    @staticmethod
    def zero_sum_distinct() -> EpistemicGame:
        """Zero-sum 2x2 game with four distinct payoffs for the first player."""
        values = {("H", "H"): 1, ("H", "T"): 2, ("T", "H"): 3, ("T", "T"): 4}
        return GameBuilder.matrix([("H", "T")] * 2, {k: (v, -v) for k, v in values.items()})

    @staticmethod
    def unequal_strategy_counts() -> EpistemicGame:
        payoffs = {(a, b): (0, 0) for a, b in product(("a", "b"), ("x", "y", "z"))}
        return GameBuilder.matrix([("a", "b"), ("x", "y", "z")], payoffs)

    @staticmethod
    def three_action_pair() -> EpistemicGame:
        """Two one-cell players with three actions each."""
        actions = ("r", "p", "s")
        beats = {("r", "s"), ("p", "r"), ("s", "p")}
        payoffs = {
            (a, b): (int((a, b) in beats) - int((b, a) in beats),) * 2
            for a, b in product(actions, repeat=2)
        }
        return GameBuilder.matrix([actions] * 2, payoffs)

    @staticmethod
    def crossing(
        actions1: Sequence[str] = ("3", "4"),
        actions2: Sequence[str] = ("1", "2"),
        prior: Optional[Sequence[object]] = None,
    ) -> EpistemicGame:
        """Four states with crossing two-cell partitions; pays 1 at (3,2) and (4,1)."""
        space = FiniteSpace(("s0", "s1", "s2", "s3"))
        measure = Measure.from_sequence(space, prior) if prior else Measure.uniform(space)
        players = (
            Player("P1", tuple(actions1), Partition.from_labels(space, [["s0", "s1"], ["s2", "s3"]]), measure),
            Player("P2", tuple(actions2), Partition.from_labels(space, [["s0", "s2"], ["s1", "s3"]]), measure),
        )
        payoffs = {
            (a, b): (int((a, b) in {("3", "2"), ("4", "1")}),) * 2
            for a, b in product(actions1, actions2)
        }
        return EpistemicGame(space, players, UtilityKind.ACTION, GameBuilder.action_table(2, payoffs))

    @staticmethod
    def crossing_three_actions() -> EpistemicGame:
        return GameBuilder.crossing(("3", "4", "5"), ("1", "2", "0"))

    @staticmethod
    def shared_cells(
        actions1: Sequence[str] = ("a", "b"),
        actions2: Sequence[str] = ("x", "y"),
    ) -> EpistemicGame:
        """Two states, both players on the discrete partition: perfect information with two cells each."""
        space = FiniteSpace(("s0", "s1"))
        players = (
            Player("P1", tuple(actions1), Partition.discrete(space), Measure.uniform(space)),
            Player("P2", tuple(actions2), Partition.discrete(space), Measure.uniform(space)),
        )
        payoffs = {profile: (1, 1) for profile in product(actions1, actions2)}
        return EpistemicGame(space, players, UtilityKind.ACTION, GameBuilder.action_table(2, payoffs))

    @staticmethod
    def nature(payoffs: Dict[Tuple[str, str], int]) -> EpistemicGame:
        """Single player against a fair coin, one cell per side, state-dependent action utilities."""
        space = FiniteSpace(("heads", "tails"))
        player = Player("dm", ("honest", "dishonest"), Partition.discrete(space), Measure.uniform(space))
        entries = tuple(
            UtilityEntry(0, space.index(state), (action,), Fraction(value))
            for (state, action), value in payoffs.items()
        )
        return EpistemicGame(space, (player,), UtilityKind.ACTION, UtilityTable(UtilityKind.ACTION, entries))

    @staticmethod
    def angels_demons() -> EpistemicGame:
        space = FiniteSpace(("heads", "tails"))
        actions = ("honest", "dishonest")
        player = Player("dm", actions, Partition.discrete(space), Measure.uniform(space))
        entries = tuple(
            UtilityEntry(
                0, state, ((h, t),),
                Fraction(int(h == t == ("honest" if state == 0 else "dishonest"))),
            )
            for state in space
            for h, t in product(actions, repeat=2)
        )
        return EpistemicGame(space, (player,), UtilityKind.STRATEGY, UtilityTable(UtilityKind.STRATEGY, entries))

    @staticmethod
    def additive_nature() -> EpistemicGame:
        """Strategy-kind utilities that only read the action chosen on the realized cell."""
        space = FiniteSpace(("heads", "tails"))
        actions = ("honest", "dishonest")
        player = Player("dm", actions, Partition.discrete(space), Measure.uniform(space))
        good = {0: "honest", 1: "dishonest"}
        entries = tuple(
            UtilityEntry(0, state, ((h, t),), Fraction(int((h, t)[state] == good[state])))
            for state in space
            for h, t in product(actions, repeat=2)
        )
        return EpistemicGame(space, (player,), UtilityKind.STRATEGY, UtilityTable(UtilityKind.STRATEGY, entries))

    @staticmethod
    def distinct_priors() -> EpistemicGame:
        space = FiniteSpace(("s0", "s1"))
        partition = Partition.trivial(space)
        players = (
            Player("P1", ("a", "b"), partition, Measure.from_sequence(space, ["1/2", "1/2"])),
            Player("P2", ("a", "b"), partition, Measure.from_sequence(space, ["1/3", "2/3"])),
        )
        payoffs = {profile: (1, 1) for profile in product(("a", "b"), repeat=2)}
        return EpistemicGame(space, players, UtilityKind.ACTION, GameBuilder.action_table(2, payoffs))
