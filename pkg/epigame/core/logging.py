import logging
import sys
from contextlib import contextmanager
from typing import (
    Iterator,
    Optional,
    Protocol,
)

LOGGER_NAME = "epigame"
DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Logger(Protocol):
    """What analyses need from a logger; any stdlib-compatible object fits."""

    def info(self, msg: str, *args, **kwargs) -> None: ...

    def error(self, msg: str, *args, **kwargs) -> None: ...

    def debug(self, msg: str, *args, **kwargs) -> None: ...

    def warning(self, msg: str, *args, **kwargs) -> None: ...


class EpigameLogger:
    """
    Process-wide holder of the logger used by every epigame module.

    Without an injected logger the stdlib ``epigame`` logger is used, with
    one stderr handler attached on first use.
    """
    _instance = None
    _logger: Optional[Logger] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @classmethod
    def get_logger(cls) -> Logger:
        if cls._logger is None:
            cls._logger = cls._stderr_logger()
        return cls._logger

    @classmethod
    def set_logger(cls, logger: Optional[Logger]) -> None:
        """Inject a logger; ``None`` falls back to the stdlib default."""
        cls._logger = logger

    @classmethod
    def set_level(cls, level: str) -> None:
        cls._stderr_logger().setLevel(level.upper())

    @staticmethod
    def _stderr_logger() -> logging.Logger:
        logger = logging.getLogger(LOGGER_NAME)
        if not logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))
            logger.addHandler(handler)
            logger.setLevel(logging.WARNING)
        return logger

    @classmethod
    @contextmanager
    def use_logger(cls, logger: Optional[Logger]) -> Iterator[None]:
        previous = cls._logger
        cls._logger = logger
        try:
            yield
        finally:
            cls._logger = previous


class _LoggerProxy:
    """Resolves the active logger on every call, so module-level bindings follow ``set_logger``."""

    @staticmethod
    def _active() -> Logger:
        return EpigameLogger.get_logger()

    def info(self, msg: str, *args, **kwargs) -> None:
        self._active().info(msg, *args, **kwargs)

    def error(self, msg: str, *args, **kwargs) -> None:
        self._active().error(msg, *args, **kwargs)

    def debug(self, msg: str, *args, **kwargs) -> None:
        self._active().debug(msg, *args, **kwargs)

    def warning(self, msg: str, *args, **kwargs) -> None:
        self._active().warning(msg, *args, **kwargs)


def get_logger() -> Logger:
    return _LoggerProxy()


def set_logger(logger: Optional[Logger]) -> None:
    EpigameLogger.set_logger(logger)


def use_logger(logger: Optional[Logger]):
    """Temporarily route epigame logging to ``logger``."""
    return EpigameLogger.use_logger(logger)


def set_level(level: str) -> None:
    """Level of the stdlib ``epigame`` logger (CLI ``--log-level``)."""
    EpigameLogger.set_level(level)
