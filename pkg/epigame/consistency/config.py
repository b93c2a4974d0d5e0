from dataclasses import (
    dataclass,
    field,
)


@dataclass(frozen=True)
class ConsistencyConstraints:
    """Conditions imposed on response scenarios on top of BAY-consistency."""
    require_inv: bool = field(default=False)

    @property
    def settings(self) -> dict:
        return {
            "require_inv": self.require_inv,
        }
