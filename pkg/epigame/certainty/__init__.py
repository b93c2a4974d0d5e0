from .model import (
    AdmissibleSystem,
    CoherentSystem,
    CongruenceReport,
    EfficiencyReport,
    ProfileEfficiency,
    ResponseMap,
)
from .operations import (
    admissible_systems,
    check_congruence,
    count_coherent_systems,
    efficiency_report,
    enumerate_coherent_systems,
    rational_solutions,
    utility_vector,
)

__all__ = [
    "AdmissibleSystem",
    "CoherentSystem",
    "CongruenceReport",
    "EfficiencyReport",
    "ProfileEfficiency",
    "ResponseMap",
    "admissible_systems",
    "check_congruence",
    "count_coherent_systems",
    "efficiency_report",
    "enumerate_coherent_systems",
    "rational_solutions",
    "utility_vector",
]
