"""Logging for the toolkit: one handler on the ``src`` package logger, on stderr."""

import logging
import sys
from typing import Optional

PACKAGE = "src"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class _StderrHandler(logging.StreamHandler):
    """Writes to the current ``sys.stderr``, so captured or replaced streams are honoured."""

    def __init__(self):
        logging.Handler.__init__(self)

    @property
    def stream(self):
        return sys.stderr


def _parse_level(level: str) -> int:
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError(f"Invalid log level: {level}")
    return value


def setup_logger(
    name: str = PACKAGE,
    level: str = "INFO",
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Configure the package logger and return the logger called ``name``.

    Handlers live on the ``src`` logger so every engine module
    (``src.magnus.invariants`` and so on) reaches them. Calling this again
    only updates the level; reports own stdout, logs never go there.

    Raises:
        ValueError: ``level`` is not a logging level name.
    """
    numeric = _parse_level(level)
    package = logging.getLogger(PACKAGE)
    package.setLevel(numeric)

    if not package.handlers:
        formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)
        console = _StderrHandler()
        console.setFormatter(formatter)
        package.addHandler(console)
        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            package.addHandler(file_handler)

    for handler in package.handlers:
        handler.setLevel(numeric)

    return logging.getLogger(name)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
