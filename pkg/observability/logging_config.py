"""
Logging configuration for tkkforge.

JSON lines for machine consumption or coloured lines for a terminal. All
handlers write to standard error: standard output carries only reports,
so `tkkforge ... > report.txt` stays clean.
"""
import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Optional

from config import config

# Extra record attributes surfaced by both formatters
CONTEXT_FIELDS = ("structure", "command", "check", "dimension", "latency_ms")

# Libraries that log heavily below WARNING
QUIET_LOGGERS = ("sympy", "opentelemetry")


def _context(record: logging.LogRecord) -> dict:
    return {name: getattr(record, name) for name in CONTEXT_FIELDS if hasattr(record, name)}


class StructuredFormatter(logging.Formatter):
    """One JSON object per record, context fields at top level."""

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            **_context(record),
        }
        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_data, default=str)


class DevelopmentFormatter(logging.Formatter):
    """Single-line human format; colour only when stderr is a terminal."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def __init__(self, color: Optional[bool] = None):
        super().__init__()
        self.color = sys.stderr.isatty() if color is None else color

    def format(self, record: logging.LogRecord) -> str:
        level = f"{record.levelname:8}"
        if self.color:
            level = f"{self.COLORS.get(record.levelname, '')}{level}{self.RESET}"
        line = f"{level} {record.name}: {record.getMessage()}"
        extras = _context(record)
        if extras:
            line += " [" + ", ".join(f"{k}={v}" for k, v in extras.items()) + "]"
        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        return line


def setup_logging(
    level: Optional[str] = None,
    log_file: Optional[str] = None,
    json_format: Optional[bool] = None,
) -> None:
    """
    Configure the root logger.

    Args:
        level: DEBUG shows every check, INFO every construction,
            WARNING (default) only violations
        log_file: Optional path; the file always receives JSON lines
        json_format: JSON on stderr instead of the human format
    """
    numeric_level = getattr(logging, (level or config.LOG_LEVEL).upper(), logging.WARNING)
    if json_format is None:
        json_format = config.LOG_JSON

    root = logging.getLogger()
    root.setLevel(numeric_level)
    root.handlers.clear()

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(StructuredFormatter() if json_format else DevelopmentFormatter())
    root.addHandler(console)

    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(StructuredFormatter())
        root.addHandler(file_handler)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(numeric_level, logging.WARNING))


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


class LoggerAdapter(logging.LoggerAdapter):
    """Merges the adapter's context into each call's ``extra``."""

    def process(self, msg, kwargs):
        kwargs["extra"] = {**self.extra, **kwargs.get("extra", {})}
        return msg, kwargs


def get_context_logger(
    name: str,
    structure: Optional[str] = None,
    command: Optional[str] = None,
) -> LoggerAdapter:
    """
    Logger that tags every record with the structure and subcommand.

    Args:
        name: Logger name
        structure: Catalog name or input file being processed
        command: CLI subcommand being executed
    """
    extra = {}
    if structure:
        extra["structure"] = structure
    if command:
        extra["command"] = command
    return LoggerAdapter(get_logger(name), extra)


# Initialize logging on module import
setup_logging()
