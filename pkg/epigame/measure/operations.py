from dataclasses import dataclass
from fractions import Fraction
from typing import (
    Any,
    Callable,
    Mapping,
    Sequence,
    Tuple,
    Union,
)

from ..core import (
    MixedSpaces,
    NullConditioningEvent,
    ValidationError,
)
from .space import (
    Event,
    FiniteSpace,
    Measure,
    Partition,
)

StateFunction = Union[Sequence[Any], Mapping[int, Any], Callable[[int], Any]]


def _values(f: StateFunction, space: FiniteSpace) -> Tuple[Any, ...]:
    """Materialize a state function as one value per state index."""
    if callable(f) and not isinstance(f, (Sequence, Mapping)):
        return tuple(f(state) for state in space)
    if isinstance(f, Mapping):
        missing = [space.label(s) for s in space if s not in f]
        if missing:
            raise ValidationError("State function is not total", details={"missing": missing})
        return tuple(f[state] for state in space)
    if len(f) != len(space):
        raise ValidationError(
            "State function is not total",
            details={"values": len(f), "states": len(space)},
        )
    return tuple(f)


def posterior(m: Measure, e: Event) -> Measure:
    """Condition ``m`` on ``e``: weight m(ω)/m(e) inside ``e``, zero outside."""
    mass = m.of(e)
    if mass == 0:
        raise NullConditioningEvent(list(e.labels()))
    return Measure(m.space, tuple(w / mass if s in e else Fraction(0) for s, w in enumerate(m.weights)))


def join(parts: Sequence[Partition]) -> Partition:
    """Coarsest common refinement: nonempty intersections of one block from each input."""
    if not parts:
        raise ValueError("join needs at least one partition")
    space = parts[0].space
    if any(part.space != space for part in parts):
        raise MixedSpaces()
    # states sharing the tuple of block indices across all inputs form one block
    groups: dict = {}
    for state in space:
        key = tuple(part.block_of(state) for part in parts)
        groups.setdefault(key, set()).add(state)
    return Partition(space, tuple(Event(space, frozenset(members)) for members in groups.values()))


def is_measurable(f: StateFunction, part: Partition) -> bool:
    """True iff ``f`` is constant on every block of ``part``."""
    values = _values(f, part.space)
    return all(len({values[s] for s in block.members}) == 1 for block in part.blocks)


def equivalent(m1: Measure, m2: Measure) -> bool:
    """Whether two measures share the same null states."""
    if m1.space != m2.space:
        raise MixedSpaces()
    return m1.null_states() == m2.null_states()


def expectation(f: StateFunction, m: Measure) -> Fraction:
    values = _values(f, m.space)
    return sum((w * Fraction(values[s]) for s, w in enumerate(m.weights) if w), Fraction(0))


def conditional_expectation(f: StateFunction, m: Measure, e: Event) -> Fraction:
    return expectation(f, posterior(m, e))


@dataclass(frozen=True)
class TotalExpectationReport:
    """Both sides of E(f) = Σ_B m(B)·E(f | B)."""
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def total_expectation_check(f: StateFunction, m: Measure, part: Partition) -> TotalExpectationReport:
    """
    Evaluate the law of total expectation exactly.

    Blocks of weight zero contribute nothing to the right-hand side and are
    skipped, so the check is defined for every measure.
    """
    if m.space != part.space:
        raise MixedSpaces()
    lhs = expectation(f, m)
    rhs = Fraction(0)
    for block in part.blocks:
        mass = m.of(block)
        if mass:
            rhs += mass * conditional_expectation(f, m, block)
    return TotalExpectationReport(lhs=lhs, rhs=rhs)
