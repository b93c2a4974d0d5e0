from fractions import Fraction
from typing import (
    Mapping,
    Tuple,
    TypeAlias,
)

ChoiceProfile: TypeAlias = Tuple[str, ...]
Objective: TypeAlias = Mapping[ChoiceProfile, Fraction]
