# -*- coding: utf-8 -*-

import logging
import os
from dataclasses import (
    dataclass,
    field,
)
from enum import Enum
from pathlib import Path
from typing import Sequence

import nox
from nox.sessions import Session

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
logger = logging.getLogger(__name__)


class PythonVersion(str, Enum):
    PY310 = "3.10"
    PY311 = "3.11"
    PY312 = "3.12"


@dataclass(frozen=True)
class Config:
    """Session settings; NOX_REUSE_VENV=0 forces fresh environments."""
    PYTHON_VERSIONS: tuple[str, ...] = field(default_factory=lambda: tuple(v.value for v in PythonVersion))
    DEFAULT_VERSION: str = PythonVersion.PY312.value
    REUSE_VENV: bool = field(default_factory=lambda: bool(int(os.getenv("NOX_REUSE_VENV", "1"))))
    PROJECT_DIRS: tuple[str, ...] = ("epigame", "tests")
    EXAMPLES: tuple[str, ...] = ("prisoners-dilemma", "figure1", "angels-demons", "rendezvous")


CONFIG = Config()


def poetry_install(session: Session, groups: Sequence[str] = ()) -> None:
    """Install the project and the given dependency groups into the session's virtualenv."""
    venv = Path(session.virtualenv.location)
    if not venv.exists():
        raise RuntimeError(f"Virtualenv not found at {venv}")
    bin_dir = venv / ("Scripts" if os.name == "nt" else "bin")
    session.env.update({
        "VIRTUAL_ENV": str(venv),
        "PATH"       : os.pathsep.join([str(bin_dir), os.environ.get("PATH", "")]),
    })

    try:
        session.run("poetry", "--version", external=True, silent=True)
    except Exception:
        session.run("python", "-m", "pip", "install", "poetry>=1.7.0", external=True)

    cmd = ["poetry", "install", "--sync"]
    for group in groups:
        cmd.extend(["--with", group])
    try:
        session.run(*cmd, external=True)
    except Exception as e:
        logger.error(f"Command failed: {cmd}")
        session.error(f"Failed to install dependencies with Poetry. Error: {e}")


nox.options.sessions = ["tests", "lint", "typecheck"]


@nox.session(python=CONFIG.PYTHON_VERSIONS, reuse_venv=CONFIG.REUSE_VENV)
def tests(session: Session) -> None:
    """Run the test suite with coverage; ``-m EXPR`` overrides the default marker filter."""
    markers = [arg for arg in session.posargs if arg.startswith("-m")] or ["-m", "not slow"]
    poetry_install(session, groups=["test"])
    session.run(
        "pytest",
        "--cov=epigame",
        "--cov-report=term-missing",
        "--cov-report=xml:coverage.xml",
        *markers,
        *[arg for arg in session.posargs if not arg.startswith("-m")],
    )


@nox.session(python=[CONFIG.DEFAULT_VERSION], reuse_venv=CONFIG.REUSE_VENV)
def properties(session: Session) -> None:
    """Hypothesis suites only, under the thorough profile."""
    poetry_install(session, groups=["test"])
    session.run("pytest", "-m", "property", "--hypothesis-profile=thorough", *session.posargs)


@nox.session(python=[CONFIG.DEFAULT_VERSION], reuse_venv=CONFIG.REUSE_VENV)
def examples(session: Session) -> None:
    """Export every built-in example and run the main analyses on it through the console script."""
    poetry_install(session)
    out = Path(session.create_tmp()) / "examples"
    for name in CONFIG.EXAMPLES:
        session.run("epigame", "export", name, "--output-dir", str(out))
    session.run("epigame", "solve", "coherent", str(out / "prisoners-dilemma.json"))
    session.run("epigame", "solve", "bayes", str(out / "prisoners-dilemma.json"))
    session.run("epigame", "verify", "theorems", str(out / "figure1.json"))
    session.run("epigame", "decompose", str(out / "angels-demons.json"))
    session.run(
        "epigame", "solve", "conjecture",
        str(out / "rendezvous.json"), str(out / "rendezvous.conjectures.json"),
    )


@nox.session(python=[CONFIG.DEFAULT_VERSION], reuse_venv=CONFIG.REUSE_VENV)
def lint(session: Session) -> None:
    poetry_install(session, groups=["dev"])
    session.run("black", "--check", *CONFIG.PROJECT_DIRS)
    session.run("ruff", "check", *CONFIG.PROJECT_DIRS)


@nox.session(python=[CONFIG.DEFAULT_VERSION], reuse_venv=CONFIG.REUSE_VENV)
def typecheck(session: Session) -> None:
    poetry_install(session, groups=["dev"])
    session.run("mypy", *CONFIG.PROJECT_DIRS)
