"""Exception hierarchy.

Input problems derive from :class:`InputError` (CLI exit code 2), numerical
breakdowns from :class:`NumericalError` (exit code 3).
"""


class SubmajError(Exception):
    """Base class for all package errors."""


class InputError(SubmajError, ValueError):
    pass


class NumericalError(SubmajError, ArithmeticError):
    pass


class NoConvergence(NumericalError):
    pass


class NonSquare(InputError):
    pass


class AsymmetryExceedsTolerance(InputError):
    pass


class NonFiniteEntry(InputError):
    pass


class ZeroRank(InputError):
    pass


class NotPSD(InputError):
    pass


class LengthMismatch(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class DimMismatch(InputError):
    pass


class FullSpace(InputError):
    pass


class ZeroSpread(InputError):
    pass


class SpectrumOutOfUnitInterval(InputError):
    pass


class TooSmall(InputError):
    pass


class NoEdges(InputError):
    pass


class InvalidEdge(InputError):
    pass


class VertexCountMismatch(InputError):
    pass


class EdgeCountMismatch(InputError):
    pass


class BadDims(InputError):
    pass


class BadRange(InputError):
    pass


class UnknownTheorem(InputError):
    pass


class ParseError(InputError):
    pass
