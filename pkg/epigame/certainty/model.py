from __future__ import annotations

from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction
from typing import (
    Dict,
    Iterator,
    Optional,
    Tuple,
)

from ..core import ValidationError
from ..game import (
    Strategy,
    StrategyProfile,
)


@dataclass(frozen=True)
class ResponseMap:
    """Conjecture of player ``source`` about player ``target``: one strategy of target per strategy of source."""
    source: int
    target: int
    pairs: Tuple[Tuple[Strategy, Strategy], ...]
    _mapping: Dict[Strategy, Strategy] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        pairs = tuple(tuple(pair) for pair in self.pairs)
        mapping: Dict[Strategy, Strategy] = {}
        for src, dst in pairs:
            if src.player != self.source or dst.player != self.target:
                raise ValidationError(
                    "Response map pairs must go from source to target strategies",
                    details={"source": self.source, "target": self.target},
                )
            if src in mapping:
                raise ValidationError("Response map assigns a strategy twice", details={"strategy": src.label})
            mapping[src] = dst
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_mapping", mapping)

    def __call__(self, strategy: Strategy) -> Strategy:
        return self._mapping[strategy]

    def __contains__(self, strategy: Strategy) -> bool:
        return strategy in self._mapping

    def domain(self) -> Tuple[Strategy, ...]:
        return tuple(src for src, _ in self.pairs)

    def is_constant(self) -> bool:
        return len({dst for _, dst in self.pairs}) <= 1


@dataclass(frozen=True)
class CongruenceReport:
    ok: bool
    counterexample: Optional[Strategy] = None


@dataclass(frozen=True)
class CoherentSystem:
    """Profiles whose projection on every player is one-to-one."""
    profiles: Tuple[StrategyProfile, ...]

    def __post_init__(self) -> None:
        profiles = tuple(self.profiles)
        if profiles:
            for i in range(len(profiles[0])):
                projection = [profile[i] for profile in profiles]
                if len(set(projection)) != len(projection):
                    raise ValidationError(
                        "Coherent system repeats a strategy",
                        details={"player": i},
                    )
        object.__setattr__(self, "profiles", profiles)

    def __iter__(self) -> Iterator[StrategyProfile]:
        return iter(self.profiles)

    def __len__(self) -> int:
        return len(self.profiles)

    def __contains__(self, profile: StrategyProfile) -> bool:
        return profile in self.profiles

    def response_map(self, source: int, target: int) -> ResponseMap:
        """The pairing map source → target read off the system."""
        return ResponseMap(source, target, tuple((p[source], p[target]) for p in self.profiles))

    def labels(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(profile.labels() for profile in self.profiles)


@dataclass(frozen=True)
class ProfileEfficiency:
    profile: StrategyProfile
    utilities: Tuple[Fraction, ...]
    pareto: bool


@dataclass(frozen=True)
class EfficiencyReport:
    profiles: Tuple[ProfileEfficiency, ...]
    essentially_unique: bool

    @property
    def pareto(self) -> Tuple[bool, ...]:
        return tuple(entry.pareto for entry in self.profiles)


@dataclass(frozen=True)
class AdmissibleSystem:
    index: int
    system: CoherentSystem
    solutions: Tuple[StrategyProfile, ...]
