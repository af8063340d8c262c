"""Command-line interface; ``python3 -m dellcurves.cli --help``."""

from .main import JobSpec, build_parser, main, parse_job, run_job

__all__ = ["JobSpec", "build_parser", "main", "parse_job", "run_job"]
