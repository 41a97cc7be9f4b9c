"""Utility modules."""

from .logging import setup_logger
from .report import Report, Verdict

__all__ = ["setup_logger", "Report", "Verdict"]
