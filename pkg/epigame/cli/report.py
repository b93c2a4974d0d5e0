import hashlib
from dataclasses import (
    dataclass,
    field,
    fields,
    is_dataclass,
)
from enum import Enum
from fractions import Fraction
from functools import singledispatch
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
)

from ..consistency import PartialStrategy
from ..equilibrium import ActionDistribution
from ..game import (
    Strategy,
    StrategyProfile,
)
from ..measure import format_rational
from .codec import (
    canonical_json,
    distribution_to_dict,
)


@singledispatch
def jsonable(value: Any) -> Any:
    """Convert result objects into plain JSON values; rationals become "p/q" strings."""
    if is_dataclass(value) and not isinstance(value, type):
        return {f.name: jsonable(getattr(value, f.name)) for f in fields(value) if not f.name.startswith("_")}
    if isinstance(value, dict):
        return {str(jsonable(k)): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in value]
    return value


@jsonable.register
def _(value: Fraction) -> str:
    return format_rational(value)


@jsonable.register
def _(value: ActionDistribution) -> Dict[str, str]:
    return distribution_to_dict(value)


@jsonable.register
def _(value: Enum) -> Any:
    return value.value


@jsonable.register
def _(value: Strategy) -> str:
    return value.label


@jsonable.register
def _(value: PartialStrategy) -> str:
    return value.label


@jsonable.register
def _(value: StrategyProfile) -> List[str]:
    return list(value.labels())


def inputs_digest(inputs: Sequence[bytes]) -> str:
    """SHA-256 over the raw bytes of every input, in argument order."""
    digest = hashlib.sha256()
    for data in inputs:
        digest.update(data)
    return f"sha256:{digest.hexdigest()}"


@dataclass(frozen=True)
class Report:
    """
    Outcome of one command.

    ``negative`` marks an analysis-negative result (exit code 1); ``output``
    replaces the rendering when a command emits a file instead of a report.
    """
    command: str
    inputs: str
    result: Dict[str, Any]
    negative: bool = field(default=False)
    output: Optional[bytes] = field(default=None, repr=False)

    @classmethod
    def build(
        cls,
        command: str,
        inputs: Sequence[bytes],
        result: Any,
        *,
        negative: bool = False,
        output: Optional[bytes] = None
    ) -> "Report":
        return cls(command, inputs_digest(inputs), jsonable(result), negative, output)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "inputs" : self.inputs,
            "result" : self.result,
        }

    def to_json(self) -> bytes:
        return canonical_json(self.to_dict())

    def render_table(self) -> str:
        lines = [f"command: {self.command}", f"inputs:  {self.inputs}", ""]
        _render(self.result, 0, lines)
        return "\n".join(lines) + "\n"


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    return str(value)


def _render(value: Any, depth: int, lines: List[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        width = max((len(k) for k in value), default=0)
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{pad}{key}:")
                _render(item, depth + 1, lines)
            else:
                lines.append(f"{pad}{key.ljust(width)}  {_inline(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{pad}-")
                _render(item, depth + 1, lines)
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")


def _flat(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _inline(value: Any) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_scalar(v) for v in value) + ")" if value else "(none)"
    if isinstance(value, dict):
        return "(none)"
    return _scalar(value)
