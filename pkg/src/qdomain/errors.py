"""Exception types shared across the library."""


class QDomainError(Exception):
    """Base class for all library errors."""


class MalformedParams(QDomainError):
    """Builder or constructor parameters do not describe a valid structure."""


class TypeMismatch(QDomainError):
    """Arrows or matrices were combined with incompatible source/target types."""


class InvariantViolation(QDomainError):
    """An entity failed validation where a valid one was required."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = tuple(report or ())


class EnumerationCapExceeded(QDomainError):
    """An enumeration would produce more items than the configured cap."""

    def __init__(self, cap, context=""):
        msg = f"enumeration exceeded cap of {cap}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)
        self.cap = cap


class NotCocomplete(QDomainError):
    """An operation that requires all suprema met a presheaf without one."""


class NotIdempotent(QDomainError):
    """A hom matrix expected to be idempotent is not."""


class WeightNotPresheaf(QDomainError):
    """A colimit weight has a column violating the presheaf action law."""


class InternalInconsistency(QDomainError):
    """Two computations that must agree disagreed; indicates a bug."""


class ParseError(QDomainError):
    """A workspace document could not be parsed."""


class ValidationError(QDomainError):
    """A parsed workspace contains entities that fail validation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = tuple(report or ())
