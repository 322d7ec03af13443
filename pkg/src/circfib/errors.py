"""Exception types shared across the package."""


class CircfibError(Exception):
    """Base class for all errors raised by this package."""


class InvalidWordError(CircfibError, ValueError):
    """Malformed word or argument outside an operation's domain."""


class CapacityError(CircfibError, ValueError):
    """Value does not fit in the requested number of digits."""


class InapplicableMoveError(CircfibError, ValueError):
    """A rewriting move's digit preconditions fail at the given position."""


class ZeroWordError(CircfibError, ValueError):
    """The all-zero word was passed where a group element is required."""


class NormalizationError(CircfibError, RuntimeError):
    """Normalization failed to produce an admissible word within bounds.

    Should never fire on sums of admissible words; if it does, it signals a
    violated structural assumption and must not be swallowed.
    """


class ResourceBoundError(CircfibError, RuntimeError):
    """A configured enumeration or size bound was exceeded."""


class StructureMismatchError(CircfibError, RuntimeError):
    """Empirical group structure disagrees with the predicted decomposition."""


class PartitionError(CircfibError, RuntimeError):
    """A claimed partition property failed on concrete data."""
