"""
JSON wire formats: game files, conjecture files and distribution files.

Rationals travel as "k" or "p/q" strings. Output is canonical (UTF-8,
sorted keys, two-space indent, LF, trailing newline), so the same object
always serializes to the same bytes.
"""
import json
from contextlib import contextmanager
from typing import (
    Any,
    Dict,
    Iterator,
    List,
    Mapping,
)

from ..core import (
    EpigameException,
    ParseError,
    ValidationError,
    format_error_details,
)
from ..equilibrium import (
    ActionDistribution,
    NormalFormGame,
)
from ..game import (
    PROFILE_SEPARATOR,
    WILDCARD_STATE,
    EpistemicGame,
    Player,
    UtilityEntry,
    UtilityKind,
    UtilityTable,
    enumerate_strategies,
)
from ..measure import (
    FiniteSpace,
    Measure,
    Partition,
    format_rational,
    parse_rational,
)
from ..uncertainty import ConjectureProfile

_GAME_KEYS = ("states", "utility_kind", "players", "utilities")


def canonical_json(document: Any) -> bytes:
    return (json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _load(data: bytes, what: str) -> Any:
    try:
        return json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ParseError(f"Malformed {what} file", details=format_error_details(e), parent=e) from e


@contextmanager
def _field(where: str, **extra: Any) -> Iterator[None]:
    """Attach the offending field to errors raised inside the block."""
    try:
        yield
    except EpigameException as e:
        e.details.setdefault("field", where)
        for key, value in extra.items():
            e.details.setdefault(key, value)
        raise


def _require(document: Mapping, key: str, where: str, kind: type) -> Any:
    if key not in document:
        raise ValidationError(f"Missing field '{key}'", details={"field": f"{where}{key}"})
    value = document[key]
    if not isinstance(value, kind):
        raise ValidationError(
            f"Field '{key}' must be a {kind.__name__}",
            details={"field": f"{where}{key}"},
        )
    return value


def _string_list(value: Any, where: str) -> List[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ValidationError("Expected a list of strings", details={"field": where})
    return value


### Game files ###

def parse_game(data: bytes) -> EpistemicGame:
    """
    Parse and validate a game file.

    Raises:
        ParseError: malformed JSON or a malformed rational
        ValidationError: any model invariant broken; ``details["field"]`` names the place
    """
    document = _load(data, "game")
    if not isinstance(document, dict):
        raise ValidationError("A game file must be a JSON object", details={"field": "$"})
    unknown = sorted(set(document) - set(_GAME_KEYS) - {"comment"})
    if unknown:
        raise ValidationError("Unknown top-level fields", details={"field": unknown[0], "fields": unknown})

    states = _string_list(_require(document, "states", "", list), "states")
    with _field("states"):
        space = FiniteSpace(tuple(states))
    if WILDCARD_STATE in states:
        raise ValidationError(
            f"'{WILDCARD_STATE}' is reserved for state-independent utilities",
            details={"field": f"states[{states.index(WILDCARD_STATE)}]"},
        )
    try:
        kind = UtilityKind.validate(_require(document, "utility_kind", "", str))
    except ValueError as e:
        raise ValidationError(str(e), details={"field": "utility_kind"}) from None
    comment = document.get("comment", "")
    if not isinstance(comment, str):
        raise ValidationError("Field 'comment' must be a str", details={"field": "comment"})

    players = [
        _parse_player(space, record, position)
        for position, record in enumerate(_require(document, "players", "", list))
    ]
    entries = [
        _parse_utility(space, players, kind, record, position)
        for position, record in enumerate(_require(document, "utilities", "", list))
    ]
    with _field("utilities"):
        table = UtilityTable(kind, tuple(entries))
    return EpistemicGame(space, tuple(players), kind, table, comment)


def _parse_player(space: FiniteSpace, record: Any, position: int) -> Player:
    where = f"players[{position}]"
    if not isinstance(record, dict):
        raise ValidationError("A player must be a JSON object", details={"field": where})
    name = _require(record, "name", f"{where}.", str)
    actions = _string_list(_require(record, "actions", f"{where}.", list), f"{where}.actions")
    blocks = _require(record, "partition", f"{where}.", list)
    with _field(f"{where}.partition", player=name):
        partition = Partition.from_labels(
            space, [_string_list(block, f"{where}.partition") for block in blocks]
        )
    prior = _require(record, "prior", f"{where}.", dict)
    with _field(f"{where}.prior", player=name):
        measure = Measure.from_mapping(space, prior)
    return Player(name, tuple(actions), partition, measure)


def _parse_utility(
    space: FiniteSpace,
    players: List[Player],
    kind: UtilityKind,
    record: Any,
    position: int
) -> UtilityEntry:
    where = f"utilities[{position}]"
    if not isinstance(record, dict):
        raise ValidationError("A utility entry must be a JSON object", details={"field": where})
    name = _require(record, "player", f"{where}.", str)
    index = next((i for i, p in enumerate(players) if p.name == name), None)
    if index is None:
        raise ValidationError(f"Unknown player: {name}", details={"field": f"{where}.player"})
    label = _require(record, "state", f"{where}.", str)
    state = None
    if label != WILDCARD_STATE:
        with _field(f"{where}.state"):
            state = space.index(label)
    with _field(f"{where}.value"):
        value = parse_rational(_require(record, "value", f"{where}.", str))

    key: Any
    if kind is UtilityKind.ACTION:
        if "strategies" in record:
            raise ValidationError("Action-kind entries take 'profile'", details={"field": f"{where}.strategies"})
        key = tuple(_string_list(_require(record, "profile", f"{where}.", list), f"{where}.profile"))
    else:
        if "profile" in record:
            raise ValidationError("Strategy-kind entries take 'strategies'", details={"field": f"{where}.profile"})
        strategies = _require(record, "strategies", f"{where}.", list)
        key = tuple(tuple(_string_list(s, f"{where}.strategies")) for s in strategies)
    return UtilityEntry(index, state, key, value)


def _entry_order(g: EpistemicGame, entry: UtilityEntry) -> tuple:
    if g.utility_kind is UtilityKind.ACTION:
        ranks = tuple(p.actions.index(a) for p, a in zip(g.players, entry.key))
    else:
        ranks = tuple(
            tuple(p.actions.index(a) for a in assignment) for p, assignment in zip(g.players, entry.key)
        )
    return (entry.player, -1 if entry.state is None else entry.state, ranks)


def game_to_dict(g: EpistemicGame) -> Dict[str, Any]:
    utilities = []
    for entry in sorted(g.utilities.entries, key=lambda e: _entry_order(g, e)):
        record: Dict[str, Any] = {
            "player": g.players[entry.player].name,
            "state" : WILDCARD_STATE if entry.state is None else g.space.label(entry.state),
            "value" : format_rational(entry.value),
        }
        if g.utility_kind is UtilityKind.ACTION:
            record["profile"] = list(entry.key)
        else:
            record["strategies"] = [list(s) for s in entry.key]
        utilities.append(record)

    document: Dict[str, Any] = {
        "states"      : list(g.space.states),
        "utility_kind": g.utility_kind.value,
        "players"     : [
            {
                "name"     : p.name,
                "actions"  : list(p.actions),
                "partition": [list(block) for block in p.partition.labels()],
                "prior"    : {g.space.label(s): format_rational(p.prior[s]) for s in g.space},
            }
            for p in g.players
        ],
        "utilities"   : utilities,
    }
    if g.comment:
        document["comment"] = g.comment
    return document


def dump_game(g: EpistemicGame) -> bytes:
    return canonical_json(game_to_dict(g))


### Conjecture files ###

def parse_conjectures(g: EpistemicGame, data: bytes) -> ConjectureProfile:
    """
    Parse a conjecture file against a game.

    Each player maps to ``{"fixed": [others...]}`` or
    ``{"map": [{"from": own, "to": [others...]}, ...]}``; strategies are
    labels ("a|b") or action lists, others are listed in player order.
    """
    document = _load(data, "conjecture")
    if not isinstance(document, dict):
        raise ValidationError("A conjecture file must be a JSON object", details={"field": "$"})
    unknown = sorted(set(document) - {p.name for p in g.players})
    if unknown:
        raise ValidationError("Conjecture for an unknown player", details={"field": unknown[0]})

    fixed: Dict[str, Any] = {}
    maps: Dict[str, Any] = {}
    for player in g.players:
        record = _require(document, player.name, "", dict)
        if set(record) == {"fixed"}:
            fixed[player.name] = _require(record, "fixed", f"{player.name}.", list)
        elif set(record) == {"map"}:
            pairs = []
            for position, item in enumerate(_require(record, "map", f"{player.name}.", list)):
                where = f"{player.name}.map[{position}]."
                if not isinstance(item, dict):
                    raise ValidationError("A map entry must be a JSON object", details={"field": where[:-1]})
                own = item.get("from")
                if not isinstance(own, (str, list)):
                    raise ValidationError("Map entry needs a 'from' strategy", details={"field": f"{where}from"})
                pairs.append((own, _require(item, "to", where, list)))
            maps[player.name] = pairs
        else:
            raise ValidationError(
                "A conjecture is either 'fixed' or 'map'",
                details={"field": player.name},
            )

    # mixed files: fixed players expand to explicit maps
    for i, player in enumerate(g.players):
        if player.name in fixed and maps:
            maps[player.name] = [(s, fixed.pop(player.name)) for s in enumerate_strategies(g, i)]
    with _field("$"):
        if maps:
            return ConjectureProfile.from_maps(g, maps)
        return ConjectureProfile.fixed_profile(g, fixed)


def conjectures_to_dict(g: EpistemicGame, conj: ConjectureProfile) -> Dict[str, Any]:
    document: Dict[str, Any] = {}
    for conjecture in conj:
        name = g.players[conjecture.player].name
        if conjecture.fixed and conjecture.pairs:
            document[name] = {"fixed": [s.label for s in conjecture.pairs[0][1]]}
        else:
            document[name] = {
                "map": [{"from": own.label, "to": [s.label for s in others]} for own, others in conjecture.pairs]
            }
    return document


def dump_conjectures(g: EpistemicGame, conj: ConjectureProfile) -> bytes:
    return canonical_json(conjectures_to_dict(g, conj))


### Distribution files ###

def parse_distribution(nf: NormalFormGame, data: bytes) -> ActionDistribution:
    """Parse ``{"c1,c2,...": "p/q"}`` over the choice profiles of ``nf``."""
    document = _load(data, "distribution")
    if not isinstance(document, dict):
        raise ValidationError("A distribution file must be a JSON object", details={"field": "$"})
    weights = {}
    for label, value in document.items():
        with _field(label):
            weights[tuple(label.split(PROFILE_SEPARATOR))] = parse_rational(value)
    distribution = ActionDistribution(weights)
    distribution.check_dimensions(nf)
    return distribution


def distribution_to_dict(d: ActionDistribution) -> Dict[str, str]:
    return {PROFILE_SEPARATOR.join(profile): format_rational(d[profile]) for profile in d.support()}


def dump_distribution(d: ActionDistribution) -> bytes:
    return canonical_json(distribution_to_dict(d))
