"""Shared exception classes.

The CLI maps these to distinct exit codes, so keep the split between
"your configuration is wrong" and "your input file is malformed" intact.
"""


class PDNetSimError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(PDNetSimError):
    """Invalid configuration: bad parameter values, unknown keys, missing nodes."""


class ParseError(PDNetSimError):
    """Malformed input file (edge list, ratings CSV, series CSV)."""
