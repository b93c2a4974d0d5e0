from enum import Enum


class SolutionClass(str, Enum):
    """Where a profile stands under the players' conjectures."""
    SUBJECTIVE_CORRELATED_EQUILIBRIUM = "subjective_correlated_equilibrium"
    RATIONAL_INCORRECT_CONJECTURES = "rational_incorrect_conjectures"
    IRRATIONAL = "irrational"
