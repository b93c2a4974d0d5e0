from __future__ import annotations

from dataclasses import (
    dataclass,
    field,
)
from fractions import Fraction
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    Mapping,
    Sequence,
    Tuple,
)

from ..core import (
    MixedSpaces,
    ValidationError,
)
from .types import (
    RationalLike,
    format_rational,
    parse_rational,
)


@dataclass(frozen=True)
class FiniteSpace:
    """Finite state space; the label order is the canonical order of every output."""
    states: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        if not self.states:
            raise ValidationError("State space must be nonempty", details={"field": "states"})
        index: Dict[str, int] = {}
        for position, label in enumerate(self.states):
            if not isinstance(label, str) or not label:
                raise ValidationError(
                    "State labels must be nonempty strings",
                    details={"field": f"states[{position}]"},
                )
            if label in index:
                raise ValidationError(
                    f"Duplicate state label: {label}",
                    details={"field": f"states[{position}]", "state": label},
                )
            index[label] = position
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.states)))

    def index(self, label: str) -> int:
        """Index of a state label."""
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"Unknown state: {label}", details={"state": label}) from None

    def label(self, index: int) -> str:
        return self.states[index]

    def event(self, *labels: str) -> Event:
        """Event made of the given state labels."""
        return Event(self, frozenset(self.index(label) for label in labels))

    def full(self) -> Event:
        return Event(self, frozenset(range(len(self.states))))

    def empty(self) -> Event:
        return Event(self, frozenset())


@dataclass(frozen=True)
class Event:
    """Subset of a finite space, held as state indices."""
    space: FiniteSpace
    members: FrozenSet[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        size = len(self.space)
        for member in self.members:
            if not 0 <= member < size:
                raise ValidationError(
                    f"State index {member} outside the space",
                    details={"index": member, "size": size},
                )

    def _check(self, other: Event) -> None:
        if other.space != self.space:
            raise MixedSpaces()

    def __and__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.space, self.members & other.members)

    def __or__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.space, self.members | other.members)

    def complement(self) -> Event:
        return Event(self.space, frozenset(range(len(self.space))) - self.members)

    def __contains__(self, state: int) -> bool:
        return state in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def is_empty(self) -> bool:
        return not self.members

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))

    def labels(self) -> Tuple[str, ...]:
        """State labels in canonical order."""
        return tuple(self.space.label(i) for i in self.sorted())

    def label(self) -> str:
        """Compact label, e.g. ``{s0,s1}``."""
        return "{" + ",".join(self.labels()) + "}"


@dataclass(frozen=True)
class Partition:
    """Partition of a finite space into nonempty disjoint blocks."""
    space: FiniteSpace
    blocks: Tuple[Event, ...]
    _owner: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        blocks = tuple(self.blocks)
        owner = [-1] * len(self.space)
        for position, block in enumerate(blocks):
            if block.space != self.space:
                raise MixedSpaces()
            if block.is_empty():
                raise ValidationError("Partition blocks must be nonempty", details={"block": position})
        # blocks ordered by their first state
        blocks = tuple(sorted(blocks, key=lambda b: min(b.members)))
        for position, block in enumerate(blocks):
            for state in block.members:
                if owner[state] != -1:
                    raise ValidationError(
                        f"State {self.space.label(state)} appears in two blocks",
                        details={
                            "state" : self.space.label(state),
                            "blocks": [blocks[owner[state]].label(), block.label()],
                        },
                    )
                owner[state] = position
        missing = [self.space.label(s) for s, b in enumerate(owner) if b == -1]
        if missing:
            raise ValidationError("Partition does not cover the space", details={"missing": missing})
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_owner", tuple(owner))

    @classmethod
    def from_labels(cls, space: FiniteSpace, blocks: Iterable[Iterable[str]]) -> Partition:
        return cls(space, tuple(space.event(*block) for block in blocks))

    @classmethod
    def trivial(cls, space: FiniteSpace) -> Partition:
        return cls(space, (space.full(),))

    @classmethod
    def discrete(cls, space: FiniteSpace) -> Partition:
        return cls(space, tuple(Event(space, frozenset({s})) for s in space))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Event]:
        return iter(self.blocks)

    def block_of(self, state: int) -> int:
        """Index of the block containing a state."""
        return self._owner[state]

    def index(self, block: Event) -> int:
        for position, candidate in enumerate(self.blocks):
            if candidate == block:
                return position
        raise ValidationError(f"{block.label()} is not a block of the partition", details={"block": block.label()})

    def refines(self, other: Partition) -> bool:
        """True iff every block of ``self`` lies inside one block of ``other``."""
        if other.space != self.space:
            raise MixedSpaces()
        return all(len({other.block_of(s) for s in block.members}) == 1 for block in self.blocks)

    def labels(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(block.labels() for block in self.blocks)


@dataclass(frozen=True)
class Measure:
    """Probability measure on a finite space, one exact weight per state."""
    space: FiniteSpace
    weights: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        weights = tuple(Fraction(w) for w in self.weights)
        if len(weights) != len(self.space):
            raise ValidationError(
                "Measure needs one weight per state",
                details={"weights": len(weights), "states": len(self.space)},
            )
        negative = [self.space.label(s) for s, w in enumerate(weights) if w < 0]
        if negative:
            raise ValidationError("Measure weights must be nonnegative", details={"states": negative})
        total = sum(weights, Fraction(0))
        if total != 1:
            raise ValidationError(
                f"Measure weights sum to {total}, not 1",
                details={"sum": format_rational(total)},
            )
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, space: FiniteSpace) -> Measure:
        return cls(space, tuple(Fraction(1, len(space)) for _ in space))

    @classmethod
    def point(cls, space: FiniteSpace, state: int) -> Measure:
        return cls(space, tuple(Fraction(int(s == state)) for s in space))

    @classmethod
    def from_mapping(cls, space: FiniteSpace, weights: Mapping[str, RationalLike]) -> Measure:
        """Build from ``{state label: weight}``; absent states weigh 0."""
        for label in weights:
            space.index(label)
        return cls(space, tuple(parse_rational(weights.get(label, 0)) for label in space.states))

    @classmethod
    def from_sequence(cls, space: FiniteSpace, weights: Sequence[RationalLike]) -> Measure:
        return cls(space, tuple(parse_rational(w) for w in weights))

    def __getitem__(self, state: int) -> Fraction:
        return self.weights[state]

    def of(self, event: Event) -> Fraction:
        """Probability of an event."""
        if event.space != self.space:
            raise MixedSpaces()
        return sum((self.weights[s] for s in event.members), Fraction(0))

    def null_states(self) -> FrozenSet[int]:
        return frozenset(s for s, w in enumerate(self.weights) if w == 0)

    def support(self) -> Event:
        return Event(self.space, frozenset(s for s, w in enumerate(self.weights) if w > 0))

    def is_strictly_positive(self) -> bool:
        return not self.null_states()
