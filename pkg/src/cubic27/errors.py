"""Exception types shared across the toolkit."""


class Cubic27Error(Exception):
    """Base class for all toolkit errors."""


class NonPrime(Cubic27Error):
    pass


class DegreeOutOfRange(Cubic27Error):
    pass


class DivisionByZero(Cubic27Error):
    pass


class FieldMismatch(Cubic27Error):
    pass


class NotASubfield(Cubic27Error):
    pass


class CharacteristicDivides(Cubic27Error):
    pass


class ZeroPolynomial(Cubic27Error):
    pass


class DegenerateFrame(Cubic27Error):
    pass


class WrongOrder(Cubic27Error):
    pass


class UnknownName(Cubic27Error):
    pass


class SearchTooLarge(Cubic27Error):
    pass


class NotDiagonal(Cubic27Error):
    pass


class PlaneInsideSurface(Cubic27Error):
    pass


class SurfaceSingular(Cubic27Error):
    pass


class SplittingDegreeExceeded(Cubic27Error):
    pass


class ConfigIncomplete(Cubic27Error):
    pass


class NotAnAutomorphismOfGraph(Cubic27Error):
    pass


class MarkingInconsistent(Cubic27Error):
    pass


class UnmarkedConfig(Cubic27Error):
    pass


class NoFrameFound(Cubic27Error):
    pass


class NotClosed(Cubic27Error):
    pass


class UnknownCase(Cubic27Error):
    pass
