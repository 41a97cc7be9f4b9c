"""Logging configuration utilities."""

import logging
import sys
from typing import Optional

CONSOLE_FORMAT = '%(levelname)s | %(asctime)s | %(message)s'
PLAIN_FORMAT = '%(levelname)-8s | %(asctime)s | %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def _console_formatter(colorize: bool) -> logging.Formatter:
    if not colorize:
        return logging.Formatter(PLAIN_FORMAT, datefmt=DATE_FORMAT)
    try:
        import loguru  # noqa: F401
    except ImportError:
        return logging.Formatter(PLAIN_FORMAT, datefmt=DATE_FORMAT)

    class ColoredFormatter(logging.Formatter):
        colors = {
            'DEBUG': '\033[36m',
            'INFO': '\033[32m',
            'WARNING': '\033[33m',
            'ERROR': '\033[31m',
            'CRITICAL': '\033[35m',
        }
        reset = '\033[0m'

        def format(self, record):
            original = record.levelname
            if original in self.colors:
                record.levelname = f"{self.colors[original]}{original}{self.reset}"
            try:
                return super().format(record)
            finally:
                record.levelname = original

    return ColoredFormatter(CONSOLE_FORMAT, datefmt=DATE_FORMAT)


def setup_logger(
    name: str = "bihom_lie",
    level: str = "INFO",
    log_file: Optional[str] = None,
    colorize: bool = True
) -> logging.Logger:
    """
    Setup the package logger.

    Console output goes to stderr so reports on stdout stay byte-stable.

    Parameters
    ----------
    name : str
        Logger name
    level : str
        Logging level (DEBUG, INFO, WARNING, ERROR)
    log_file : str, optional
        Path to log file
    colorize : bool
        Whether to colorize console output

    Returns
    -------
    logger : logging.Logger
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper()))
    logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(_console_formatter(colorize and sys.stderr.isatty()))
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s | %(name)s | %(levelname)s | %(message)s'
        ))
        logger.addHandler(file_handler)

    def success(self, message, *args, **kwargs):
        if self.isEnabledFor(logging.INFO):
            self._log(logging.INFO, f"✓ {message}", args, **kwargs)

    logger.success = success.__get__(logger, logger.__class__)

    return logger
