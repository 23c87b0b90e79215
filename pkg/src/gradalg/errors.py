"""Exception hierarchy.

``GradAlgError`` subclasses are domain errors (CLI exit code 1);
``InputError`` subclasses are usage/parse problems (CLI exit code 2).
"""


class GradAlgError(Exception):
    pass


class InputError(Exception):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ValidationError(InputError):
    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class Unsupported(InputError):
    pass


# exactla
class FieldMismatch(GradAlgError):
    pass


class ShapeError(GradAlgError):
    pass


# algcore
class NotSplit(GradAlgError):
    pass


class NotFiniteDimensional(GradAlgError):
    pass


class InvalidRelation(GradAlgError):
    pass


class NotAdmissible(GradAlgError):
    pass


class RadicalMethodUnavailable(GradAlgError):
    pass


class InvalidAlgebra(GradAlgError):
    pass


# grading
class InvalidGrading(GradAlgError):
    pass


class MissingIdempotents(GradAlgError):
    pass


# homo
class NotSelfInjective(GradAlgError):
    pass


class NotIndecomposable(GradAlgError):
    pass


class NegativeDegrees(GradAlgError):
    pass


class NonUniformShift(GradAlgError):
    pass


class GlobalDimensionInfinite(GradAlgError):
    pass


# regrade
class NegativeCycle(GradAlgError):
    """Raised when a positive regrading is impossible; carries the cycle."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"negative cycle {' -> '.join(map(str, witness.nodes))} "
                         f"(total weight {witness.weight})")


class HypothesisViolated(GradAlgError):
    pass


class SimplesNotDegreeZero(GradAlgError):
    pass


# constructions
class DegreesOutOfRange(GradAlgError):
    pass


class FormShiftMismatch(GradAlgError):
    pass


class NotTrivialExtension(GradAlgError):
    pass


class OrderNotInvertible(GradAlgError):
    pass


class DimensionMismatch(GradAlgError):
    pass


class GroupTooLarge(GradAlgError):
    pass


class CharMismatch(GradAlgError):
    pass


class ActionNotHomocyclic(GradAlgError):
    pass


class OrderNotCoprime(GradAlgError):
    pass
