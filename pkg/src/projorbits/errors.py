"""Exception types raised across the package."""


class ProjOrbitsError(Exception):
    """Base class for all errors raised by projorbits."""


class BadField(ProjOrbitsError, ValueError):
    pass


class FieldMismatch(ProjOrbitsError, ValueError):
    pass


class BadIndex(ProjOrbitsError, IndexError):
    pass


class ZeroPoint(ProjOrbitsError, ValueError):
    pass


class SizeMismatch(ProjOrbitsError, ValueError):
    pass


class BadDimension(ProjOrbitsError, ValueError):
    pass


class NotInImage(ProjOrbitsError, ValueError):
    pass


class NotSingleOrbit(ProjOrbitsError, ValueError):
    pass


class BadParameter(ProjOrbitsError, ValueError):
    pass


class WrongStratum(ProjOrbitsError, ValueError):
    pass


class NotAnOrbit(ProjOrbitsError, ValueError):
    pass


class UnsupportedShape(ProjOrbitsError, ValueError):
    pass


class NoOpenOrbit(ProjOrbitsError, ValueError):
    pass


class NotInfiniteRange(ProjOrbitsError, ValueError):
    pass


class TooLarge(ProjOrbitsError, ValueError):
    pass


class ParseError(ProjOrbitsError, ValueError):
    pass


class BadLabel(ProjOrbitsError, ValueError):
    pass
