"""Exception types raised by the library."""


class MehrError(Exception):
    """Base class for all library errors."""


class ContractViolation(MehrError, ValueError):
    """An operation was called with arguments that break its preconditions."""


class ConfigurationError(MehrError, ValueError):
    """A search or dataset cannot be configured as requested."""


class OracleSizeError(MehrError, ValueError):
    """The exhaustive enumerator refused an instance above its size guard."""


class DataError(MehrError, OSError):
    """Input data could not be read or parsed."""
