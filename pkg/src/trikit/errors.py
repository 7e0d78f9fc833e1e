"""Exception hierarchy.

Every domain error carries a stable ``name`` used verbatim in CLI reports.
"""


class TrikitError(Exception):
    """Base class for all domain errors raised by trikit."""

    @property
    def name(self):
        return type(self).__name__


# quiver_core
class DegreeViolation(TrikitError):
    pass


class IncompatiblePermutation(TrikitError):
    pass


class MalformedPermutation(TrikitError):
    pass


class FixedPointInvolution(TrikitError):
    pass


class CapExceeded(TrikitError):
    pass


# surface
class InvalidIncidence(TrikitError):
    pass


class NotClosed(TrikitError):
    pass


class UnflippableArc(TrikitError):
    pass


# mutation
class LoopAtVertex(TrikitError):
    pass


class NotTriangulationQuiver(TrikitError):
    pass


class NotGInvariant(TrikitError):
    pass


class TwoCycleAtVertex(TrikitError):
    pass


# path_algebra
class NotAdmissible(TrikitError):
    pass


class ExceptionalScalarViolation(TrikitError):
    pass


class CharacteristicDividesMultiplicity(TrikitError):
    pass


class FCycleShape(TrikitError):
    pass


# repr
class ZeroModule(TrikitError):
    pass


class NoComplement(TrikitError):
    pass


# cli / formats
class UsageError(TrikitError):
    pass


class ParseError(TrikitError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
