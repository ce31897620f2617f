"""Shared exception types."""


class ConstraintViolation(ValueError):
    """Raised when an operation is invoked outside its domain.

    Examples: padding a diagram into a row that is too short, asking for a
    Verma label whose length exceeds the rank bound, restricting a zero label.
    """
