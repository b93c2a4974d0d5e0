from .config import ConsistencyConstraints
from .model import (
    CellChoice,
    DecompositionReport,
    PartialStrategy,
    ResponseScenario,
    ScenarioSearch,
    TheoremReport,
)
from .search import (
    relevant_cells,
    scenario_space_size,
    search_bay_scenarios,
)
from .theorems import (
    check_theorem1,
    check_theorem2,
    decomposition_check,
    imperfect_pairs,
)

__all__ = [
    "CellChoice",
    "ConsistencyConstraints",
    "DecompositionReport",
    "PartialStrategy",
    "ResponseScenario",
    "ScenarioSearch",
    "TheoremReport",
    "check_theorem1",
    "check_theorem2",
    "decomposition_check",
    "imperfect_pairs",
    "relevant_cells",
    "scenario_space_size",
    "search_bay_scenarios",
]
