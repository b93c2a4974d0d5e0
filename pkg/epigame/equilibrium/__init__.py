from .bayes import (
    enumerate_bayes_rational,
    induced_distribution,
    is_bayes_rational,
)
from .correlated import (
    action_normal_form,
    find_correlated_equilibrium,
    is_correlated_equilibrium,
    player_objective,
    sum_objective,
    to_normal_form,
)
from .lp import (
    ExactSimplex,
    LPSolution,
    maximize,
)
from .model import (
    ActionDistribution,
    BayesReport,
    BayesViolation,
    CECheckReport,
    CEConstraint,
    CEResult,
    ConstraintId,
    NormalFormGame,
)
from .types import (
    ChoiceProfile,
    Objective,
)

__all__ = [
    "ActionDistribution",
    "BayesReport",
    "BayesViolation",
    "CECheckReport",
    "CEConstraint",
    "CEResult",
    "ChoiceProfile",
    "ConstraintId",
    "ExactSimplex",
    "LPSolution",
    "NormalFormGame",
    "Objective",
    "action_normal_form",
    "enumerate_bayes_rational",
    "find_correlated_equilibrium",
    "induced_distribution",
    "is_bayes_rational",
    "is_correlated_equilibrium",
    "maximize",
    "player_objective",
    "sum_objective",
    "to_normal_form",
]
