"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside an operation's domain."""


class IdentityViolation(ArithmeticError):
    """Two routes that must agree produced different values.

    ``values`` maps a label for each route to the value it produced, so
    callers can report every side of the disagreement.
    """

    def __init__(self, message, values=None):
        super().__init__(message)
        self.values = dict(values or {})
