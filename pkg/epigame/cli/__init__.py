from .codec import (
    canonical_json,
    dump_conjectures,
    dump_distribution,
    dump_game,
    parse_conjectures,
    parse_distribution,
    parse_game,
)
from .commands import (
    Command,
    CommandFactory,
)
from .examples import (
    EXAMPLES,
    Example,
    build_example,
    example_names,
    export_example,
)
from .main import (
    build_parser,
    execute,
    main,
)
from .report import (
    Report,
    inputs_digest,
    jsonable,
)

__all__ = [
    "EXAMPLES",
    "Command",
    "CommandFactory",
    "Example",
    "Report",
    "build_example",
    "build_parser",
    "canonical_json",
    "dump_conjectures",
    "dump_distribution",
    "dump_game",
    "example_names",
    "execute",
    "export_example",
    "inputs_digest",
    "jsonable",
    "main",
    "parse_conjectures",
    "parse_distribution",
    "parse_game",
]
