"""Exception types shared across the package."""


class FormatError(ValueError):
    """Serialized text that cannot be parsed."""


class DomainError(ValueError):
    """A structurally valid value that violates an operation's contract."""


class InternalInvariantError(RuntimeError):
    """A structural guarantee of the construction failed to hold.

    These conditions are believed impossible; exhaustive verification
    records them as failures instead of silently producing a wrong answer.
    """


class VerificationLimitError(RuntimeError):
    """An exhaustive verification would exceed the configured size ceiling."""
