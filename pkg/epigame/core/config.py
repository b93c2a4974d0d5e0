from dataclasses import (
    dataclass,
    field,
)


@dataclass(frozen=True)
class SearchLimits:
    """Caps that keep exhaustive enumerations from hanging."""
    strategy_cap: int = field(default=1_000_000)
    profile_cap: int = field(default=1_000_000)
    system_cap: int = field(default=1_000_000)
    scenario_cap: int = field(default=10 ** 12)
    node_budget: int = field(default=2_000_000)

    def __post_init__(self) -> None:
        """Validate limits after initialization."""
        for name in ("strategy_cap", "profile_cap", "system_cap", "scenario_cap", "node_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")

    @property
    def settings(self) -> dict:
        """Get limits as a plain mapping (echoed in reports)."""
        return {
            "strategy_cap": self.strategy_cap,
            "profile_cap" : self.profile_cap,
            "system_cap"  : self.system_cap,
            "scenario_cap": self.scenario_cap,
            "node_budget" : self.node_budget,
        }


DEFAULT_LIMITS = SearchLimits()
