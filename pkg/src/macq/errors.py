"""Exception types raised across the package."""


class MacqError(Exception):
    pass


class ConfigurationError(MacqError):
    """Unsupported root system or a size guard was exceeded."""


class OrbitError(MacqError, ValueError):
    """A weight is not in the Weyl orbit it was claimed to lie in."""


class ArgumentError(MacqError, ValueError):
    pass


class DomainError(MacqError, ValueError):
    pass


class InconclusiveError(MacqError):
    """A bounded search hit its bound before deciding."""


class InternalConsistencyError(MacqError, AssertionError):
    """An identity that must hold by construction failed."""


class VerificationError(MacqError):
    """Two independent computations disagree.

    ``left`` and ``right`` carry the two results.
    """

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right
