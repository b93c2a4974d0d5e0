import io
import json
import logging
from pathlib import Path
from typing import (
    Any,
    Callable,
    Dict,
    Tuple,
)

import pytest

from epigame.cli import (
    dump_game,
    execute,
)
from tests.utils import GameBuilder

Run = Callable[..., Tuple[int, str]]


@pytest.fixture(autouse=True)
def restore_log_level():
    """``execute`` applies --log-level to the package logger; put the suite level back."""
    logger = logging.getLogger("epigame")
    level = logger.level
    yield
    logger.setLevel(level)


### Runner Fixtures ###
@pytest.fixture
def run() -> Run:
    """Run the CLI in-process and return (exit code, stdout)."""
    def _run(*argv: str) -> Tuple[int, str]:
        out = io.StringIO()
        code = execute([str(a) for a in argv], stdout=out)
        return code, out.getvalue()
    return _run


@pytest.fixture
def run_json(run) -> Callable[..., Tuple[int, Dict[str, Any]]]:
    def _run_json(*argv: str) -> Tuple[int, Dict[str, Any]]:
        code, text = run(*argv)
        return code, json.loads(text)
    return _run_json


### File Fixtures ###
@pytest.fixture
def workspace(tmp_path, run) -> Path:
    """Every built-in example exported next to a Chicken game file."""
    for name in ("prisoners-dilemma", "figure1", "angels-demons", "rendezvous"):
        code, _ = run("export", name, "--output-dir", tmp_path)
        assert code == 0
    (tmp_path / "chicken.json").write_bytes(dump_game(GameBuilder.chicken()))
    return tmp_path


@pytest.fixture
def write_json(tmp_path) -> Callable[[str, Any], Path]:
    def _write(name: str, document: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path
    return _write
