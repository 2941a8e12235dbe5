"""Exception hierarchy.

Everything raised on purpose by the library derives from :class:`MVError`.
The CLI maps :class:`FormatError` to exit code 2 and every other
:class:`MVError` to exit code 1.
"""


class MVError(Exception):
    """Base class for domain errors."""


class FormatError(MVError):
    """Malformed input: a bad document, a partial table, an unknown key."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class OrderMismatch(MVError):
    pass


class AxiomViolation(MVError):
    pass


class SizeLimit(MVError):
    pass


class InvariantViolation(MVError):
    pass


class UnknownLabel(MVError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotMaximal(MVError):
    pass


class CompositionMismatch(MVError):
    pass


class InvalidMorphism(MVError):
    pass


class TrivialAlgebra(MVError):
    pass


class EmptyMultiset(MVError):
    pass


class MorphismCondition(MVError):
    """A homomorphism fails to reflect principal maximal ideals."""


class SystemInvalid(MVError):
    pass


class NoMediator(MVError):
    pass


class MultipleMediators(MVError):
    pass
