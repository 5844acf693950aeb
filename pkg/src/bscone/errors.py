"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can report
it in structured mode without string matching.
"""


class BSError(ValueError):
    code = "error"


class NotIncreasing(BSError):
    code = "NotIncreasing"


class FiniteAfterInfinity(BSError):
    code = "FiniteAfterInfinity"


class InvalidSequence(BSError):
    code = "InvalidSequence"


class NotComparable(BSError):
    code = "NotComparable"


class NoTouchingIndex(BSError):
    code = "NoTouchingIndex"


class NotInCone(BSError):
    code = "NotInCone"


class EmptyDiagram(BSError):
    code = "EmptyDiagram"


class DeltaSizeMismatch(BSError):
    code = "DeltaSizeMismatch"


class BasisTooLarge(BSError):
    code = "BasisTooLarge"


class InvalidIntermediate(BSError):
    code = "InvalidIntermediate"


class PieriFailure(AssertionError):
    """A Pieri projection that should be surjective was not.

    Raised only if the shape bookkeeping is wrong; valid input never
    triggers it.
    """

    code = "PieriFailure"


# refusals that the CLI reports with exit code 2 rather than 1
MATHEMATICAL_REFUSALS = (NotComparable, NoTouchingIndex, NotInCone, EmptyDiagram)
