"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A parameter is outside its documented domain."""


class EmptyLiteralClassError(ValueError):
    """Raised when a quantity is requested for the irrelevant-literal class
    but the target conjunction uses every variable, so the class is empty."""


class EnumerationLimitError(ValueError):
    """Raised when an exhaustive enumeration would exceed the supported
    feature-count bound."""
