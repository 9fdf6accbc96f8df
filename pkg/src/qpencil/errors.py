"""Exception types shared across the package."""


class QPencilError(Exception):
    """Base class for domain errors."""


class InputError(QPencilError):
    """Malformed document or wire-format violation."""


class PreconditionError(QPencilError):
    """An operation was invoked outside its stated domain."""

    def __init__(self, message: str, **info):
        super().__init__(message)
        self.info = info


class NotRegularError(PreconditionError):
    """The pencil is not regular; the classification machinery refuses it."""
