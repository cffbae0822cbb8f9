"""Shared exception base so callers (CLI, service) can catch everything at once."""


class OntoSeerError(Exception):
    """Base class for all errors raised by this package."""
