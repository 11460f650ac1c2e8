"""
Logging module for the metric dimension toolkit.
Provides a centralized approach to logging with different log levels and formats.
"""
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional, Dict, Any, Union
import datetime
from .config import LOG_DIR, LOG_FILE, LOG_CONFIG

# Create log directory if it doesn't exist
LOG_DIR.mkdir(exist_ok=True, parents=True)

# Configure logging levels
LOG_LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL,
}

# Default log format
DEFAULT_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Package logger name; module loggers (src.graph, src.solver, ...) propagate to it
PACKAGE_LOGGER = __name__.rpartition('.')[0] or 'src'

# Track loggers to avoid duplicate configuration
_loggers: Dict[str, logging.Logger] = {}


class _ConsoleFilter(logging.Filter):
    """Hold back records marked ``file_only`` unless the console is at DEBUG."""

    def __init__(self, handler: logging.Handler):
        super().__init__()
        self.handler = handler

    def filter(self, record: logging.LogRecord) -> bool:
        return not getattr(record, "file_only", False) or self.handler.level <= logging.DEBUG


def _resolve_level(level: Union[str, int]) -> int:
    if isinstance(level, str):
        return LOG_LEVELS.get(level.upper(), logging.INFO)
    return level


def get_logger(
    name: str,
    level: Union[str, int] = LOG_CONFIG["level"],
    log_file: Optional[Path] = LOG_FILE,
    log_format: str = DEFAULT_LOG_FORMAT,
    console_output: bool = True,
    console_level: Union[str, int] = LOG_CONFIG["console_level"],
    max_bytes: int = 5242880,  # 5MB
    backup_count: int = 5,
) -> logging.Logger:
    """
    Get a logger with the specified name and configuration.

    Args:
        name: Name of the logger.
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL, or corresponding int values)
        log_file: Log file path. If None, no file logging will be configured.
        log_format: Format string for log messages.
        console_output: Whether to output logs to stderr.
        console_level: Level for the stderr handler; stdout is reserved for results.
        max_bytes: Maximum size in bytes before rotating log file.
        backup_count: Number of backup log files to keep.

    Returns:
        Configured logger instance.
    """
    # Return existing logger if already configured
    if name in _loggers:
        return _loggers[name]

    logger = logging.getLogger(name)
    logger.setLevel(_resolve_level(level))

    formatter = logging.Formatter(log_format)

    if log_file:
        try:
            log_file.parent.mkdir(exist_ok=True, parents=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_file,
                maxBytes=max_bytes,
                backupCount=backup_count,
                encoding='utf-8',
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except Exception as e:
            print(f"Error configuring file logger: {e}", file=sys.stderr)

    if console_output:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        console_handler.setLevel(_resolve_level(console_level))
        console_handler.set_name("console")
        console_handler.addFilter(_ConsoleFilter(console_handler))
        logger.addHandler(console_handler)

    _loggers[name] = logger

    return logger


def set_console_level(level: Union[str, int], name: str = PACKAGE_LOGGER) -> None:
    """Change the stderr verbosity of an already configured logger."""
    logger = get_logger(name)
    resolved = _resolve_level(level)
    for handler in logger.handlers:
        if handler.get_name() == "console":
            handler.setLevel(resolved)
    if resolved < logger.level:
        logger.setLevel(resolved)


def log_system_info(logger: logging.Logger) -> None:
    """Log system information."""
    logger.info("=" * 40)
    logger.info(f"Run start: {datetime.datetime.now().isoformat()}")
    logger.info(f"Python version: {sys.version}")
    logger.info(f"Platform: {sys.platform}")
    logger.info(f"Log directory: {LOG_DIR}")
    try:
        from .__version__ import __version__
        logger.info(f"metricdim version: {__version__}")
    except ImportError:
        logger.info("metricdim version: unknown")
    logger.info("=" * 40)


def log_exception(
    logger: logging.Logger,
    exception: Exception,
    context: Optional[Dict[str, Any]] = None,
    console: bool = True,
) -> None:
    """
    Log an exception with additional context.

    Args:
        logger: Logger to use.
        exception: Exception to log.
        context: Additional context information.
        console: If False the record (with its traceback) only reaches the log
            file, or the console when it is at DEBUG.
    """
    context_str = ""
    if context:
        context_str = " ".join([f"{k}={v}" for k, v in context.items()])

    message = f"Exception: {str(exception)} {context_str}"
    if console:
        logger.exception(message)
    else:
        logger.error(message, exc_info=exception, extra={"file_only": True})


# Create default package logger
app_logger = get_logger(PACKAGE_LOGGER)


def initialize_logging() -> None:
    """Initialize logging for a command-line run."""
    log_system_info(app_logger)
