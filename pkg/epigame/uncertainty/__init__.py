from .model import (
    Conjecture,
    ConjectureProfile,
    SubjectiveReport,
    SubjectiveViolation,
)
from .operations import (
    best_responses_to_conjecture,
    classify_solution,
    conjectures_correct,
    rational_profiles,
    subjectively_rational,
)
from .types import SolutionClass

__all__ = [
    "Conjecture",
    "ConjectureProfile",
    "SolutionClass",
    "SubjectiveReport",
    "SubjectiveViolation",
    "best_responses_to_conjecture",
    "classify_solution",
    "conjectures_correct",
    "rational_profiles",
    "subjectively_rational",
]
