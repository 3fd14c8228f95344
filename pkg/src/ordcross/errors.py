class DomainError(ValueError):
    """An argument is outside the domain of the operation."""


class ConfigurationError(ValueError):
    """A size guard or other configured limit was violated."""


class NotDecreasingError(DomainError):
    pass


class NotCrossSectionError(DomainError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class FormatError(DomainError):
    """Malformed input document."""
