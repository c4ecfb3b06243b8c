"""Logging configuration for dynauto runs.

Diagnostics go to stderr (and optionally a log file); stdout is reserved for
artifacts so that repeated runs stay byte-identical.
"""

import logging
import sys
from pathlib import Path

CHILD_LOGGERS = ("afw", "automata", "mso", "xcheck", "cli")


def setup_logging(level: str = "INFO", log_file: str | Path | None = None) -> logging.Logger:
    """Configure the `dynauto` logger tree for one CLI invocation."""
    logger = logging.getLogger("dynauto")
    logger.setLevel(logging.DEBUG)
    logger.handlers.clear()
    logger.propagate = False

    # Console handler (stderr)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, level.upper(), logging.INFO))
    console_handler.setFormatter(logging.Formatter('[%(name)s] %(message)s'))
    logger.addHandler(console_handler)

    if log_file is not None:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path, mode='w', encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s [%(name)s] %(levelname)s: %(message)s',
            datefmt='%H:%M:%S'
        ))
        logger.addHandler(file_handler)

    for child in CHILD_LOGGERS:
        logging.getLogger(f"dynauto.{child}").setLevel(logging.DEBUG)

    return logger


def get_logger(name: str = "dynauto") -> logging.Logger:
    """Get a logger instance."""
    return logging.getLogger(name)


def log_event(event: str, logger: str = "dynauto", **kwargs):
    """
    Log a structured event as `event=NAME | key=value | ...`.

    Event names in use: AFW, NFA, DFA, MINIMIZE, CHECK, XCHECK, DISAGREE, MSO.
    """
    msg_parts = [f"event={event}"]
    for key, value in kwargs.items():
        if isinstance(value, str) and len(value) > 60:
            value = value[:60] + "..."
        msg_parts.append(f"{key}={value}")

    logging.getLogger(logger).info(" | ".join(msg_parts))
