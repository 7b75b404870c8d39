"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is well-formed but outside an operation's mathematical domain.

    Examples: mismatched acting groups, a singular curve equation, a prime
    dividing the field characteristic, a non-idempotent morphism passed to an
    idempotents-only routine.  The CLI maps this to exit code 2.
    """


class BoundExceededError(DomainError):
    """A configured enumeration bound (group order, field size, ...) was hit."""
