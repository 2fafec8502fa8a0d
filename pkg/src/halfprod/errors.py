"""Exception hierarchy shared across the package."""


class HalfprodError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HalfprodError, ValueError):
    """Input violates an operation's precondition."""


class NotInvertibleError(DomainError):
    """Modular inverse requested for a non-coprime pair."""


class ResourceLimitError(HalfprodError):
    """Requested computation exceeds a configured scan or index guard."""


class FormulaHypothesisError(HalfprodError):
    """A closed-form evaluation hit a non-integral intermediate."""


class InternalConsistencyError(HalfprodError):
    """Two routes that must agree disagreed; indicates a bug or an erratum."""


class SpecSyntaxError(HalfprodError, ValueError):
    """A sequence spec string does not match the grammar."""
