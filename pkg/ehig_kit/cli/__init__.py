"""Command-line interface for the EHIG toolkit"""

from .main import create_parser, main, setup_logging

__all__ = ["create_parser", "main", "setup_logging"]
