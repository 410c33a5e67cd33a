class HyperBettiError(Exception):
    """Base class for errors raised by this package."""


class InputError(HyperBettiError, ValueError):
    """Malformed or inconsistent input (bad face, overlapping universes, ...)."""


class ResourceLimitError(HyperBettiError):
    """A subset sweep would exceed the configured enumeration limit."""
