from __future__ import annotations

from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction
from itertools import product
from typing import (
    Dict,
    Iterator,
    List,
    Mapping,
    Tuple,
)

from ..core import (
    DimensionMismatch,
    ValidationError,
)
from ..measure import format_rational
from .types import ChoiceProfile


@dataclass(frozen=True)
class NormalFormGame:
    """Strategic form: per-player choice labels and a total payoff table."""
    players: Tuple[str, ...]
    choices: Tuple[Tuple[str, ...], ...]
    payoffs: Mapping[Tuple[int, ChoiceProfile], Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "players", tuple(self.players))
        object.__setattr__(self, "choices", tuple(tuple(c) for c in self.choices))
        if len(self.players) != len(self.choices):
            raise ValidationError("One choice list per player is required")
        for name, choices in zip(self.players, self.choices):
            if len(choices) < 2 or len(set(choices)) != len(choices):
                raise ValidationError(
                    f"Player {name} needs at least 2 distinct choices",
                    details={"player": name},
                )
        for player in range(len(self.players)):
            for profile in self.profiles():
                if (player, profile) not in self.payoffs:
                    raise ValidationError(
                        "Normal form payoff table is not total",
                        details={"player": self.players[player], "profile": list(profile)},
                    )

    @property
    def n(self) -> int:
        return len(self.players)

    def profiles(self) -> Iterator[ChoiceProfile]:
        """Every choice profile, lexicographic in player order."""
        return product(*self.choices)

    def profile_count(self) -> int:
        count = 1
        for choices in self.choices:
            count *= len(choices)
        return count

    def payoff(self, player: int, profile: ChoiceProfile) -> Fraction:
        return self.payoffs[(player, profile)]

    def player_index(self, name: str) -> int:
        try:
            return self.players.index(name)
        except ValueError:
            raise ValidationError(f"Unknown player: {name}", details={"player": name}) from None

    @staticmethod
    def deviate(profile: ChoiceProfile, player: int, choice: str) -> ChoiceProfile:
        return profile[:player] + (choice,) + profile[player + 1:]


@dataclass(frozen=True)
class ActionDistribution:
    """Exact distribution over choice profiles; absent profiles weigh 0."""
    weights: Dict[ChoiceProfile, Fraction]

    def __post_init__(self) -> None:
        weights = {tuple(k): Fraction(v) for k, v in dict(self.weights).items()}
        negative = [list(k) for k, v in weights.items() if v < 0]
        if negative:
            raise ValidationError("Distribution weights must be nonnegative", details={"profiles": negative})
        total = sum(weights.values(), Fraction(0))
        if total != 1:
            raise ValidationError(
                f"Distribution weights sum to {total}, not 1",
                details={"sum": format_rational(total)},
            )
        object.__setattr__(self, "weights", weights)

    @classmethod
    def point(cls, profile: ChoiceProfile) -> ActionDistribution:
        return cls({tuple(profile): Fraction(1)})

    def __getitem__(self, profile: ChoiceProfile) -> Fraction:
        return self.weights.get(tuple(profile), Fraction(0))

    def support(self) -> List[ChoiceProfile]:
        return sorted(k for k, v in self.weights.items() if v)

    def check_dimensions(self, nf: NormalFormGame) -> None:
        """Raise DimensionMismatch unless every key is a profile of ``nf``."""
        for profile in self.weights:
            if len(profile) != nf.n or any(c not in choices for c, choices in zip(profile, nf.choices)):
                raise DimensionMismatch(
                    "Distribution key is not a profile of the game",
                    details={"profile": list(profile), "players": list(nf.players)},
                )


@dataclass(frozen=True)
class ConstraintId:
    """Incentive constraint: ``player`` told ``told`` must not prefer ``deviation``."""
    player: str
    told: str
    deviation: str


@dataclass(frozen=True)
class CEConstraint:
    id: ConstraintId
    slack: Fraction

    @property
    def violated(self) -> bool:
        return self.slack < 0


@dataclass(frozen=True)
class CECheckReport:
    ok: bool
    constraints: Tuple[CEConstraint, ...]

    @property
    def violated(self) -> Tuple[CEConstraint, ...]:
        return tuple(c for c in self.constraints if c.violated)


@dataclass(frozen=True)
class CEResult:
    distribution: ActionDistribution
    objective: Fraction
    certificate: Tuple[CEConstraint, ...]


@dataclass(frozen=True)
class BayesViolation:
    player: str
    cell: str
    action: str
    better_action: str
    gain: Fraction


@dataclass(frozen=True)
class BayesReport:
    violations: Tuple[BayesViolation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations
