"""
Central logging configuration: JSON lines, one object per record.
Fields: timestamp, level, logger, function, message, exception (if any),
plus any structured fields passed through ``extra={"context": {...}}``.
Level: default INFO, override via LOG_LEVEL env var or the CLI --log-level flag.
The CLI sends logs to stderr so that --json output on stdout stays parseable.
"""

import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Optional, TextIO


class JsonFormatter(logging.Formatter):
    """Formatter that renders log records as single-line JSON objects.

    Structured search context (sequents, budgets, model names) is attached
    by callers as ``extra={"context": {...}}`` and emitted under "context".
    """

    def format(self, record):
        log_record = {
            "timestamp": datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "function": record.funcName,
            "message": record.getMessage(),
        }
        context = getattr(record, "context", None)
        if context:
            log_record["context"] = context
        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_record, default=str)


def _resolve_level(level_name: Optional[str]) -> int:
    name = (level_name or os.getenv("LOG_LEVEL", "INFO")).upper()
    level = getattr(logging, name, None)
    if not isinstance(level, int):
        level = logging.INFO
    return level


def configure_logging(level_name: Optional[str] = None, stream: Optional[TextIO] = None, force: bool = False):
    """Configure the root logger to emit JSON records.

    Args:
        level_name (Optional[str]): Level name; falls back to LOG_LEVEL, then INFO.
        stream (Optional[TextIO]): Destination stream (default stdout).
        force (bool): Replace handlers installed by an earlier call.

    Returns:
        None
    """
    level = _resolve_level(level_name)
    root = logging.getLogger()
    if root.handlers and not force:
        return
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(level)
    handler = logging.StreamHandler(stream or sys.stdout)
    handler.setLevel(level)
    handler.setFormatter(JsonFormatter())
    root.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    """Get a logger wired to the JSON handler.

    Args:
        name (str): Name of the logger.

    Returns:
        logging.Logger: Configured logger instance.
    """
    configure_logging()
    return logging.getLogger(name)
