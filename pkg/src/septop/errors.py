"""Exception types raised across the package."""


class SeptopError(Exception):
    """Base class for every error raised by this package."""


class InvalidBase(SeptopError):
    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class TooLarge(SeptopError):
    pass


class EmptySubspace(SeptopError):
    pass


class SamePoint(SeptopError):
    pass


class ChainViolation(SeptopError):
    pass


class AxiomOutOfRange(SeptopError):
    pass


class NonDistinctMinimalSets(SeptopError):
    pass


class InvalidPoset(SeptopError):
    pass


class InvalidGraph(SeptopError):
    pass


class InvalidCover(SeptopError):
    pass


class NotMaximalClique(SeptopError):
    pass


class Disconnected(SeptopError):
    pass


class OverlappingParts(SeptopError):
    pass


class InvalidUniverseCover(SeptopError):
    def __init__(self, message: str, condition: str):
        super().__init__(message)
        self.condition = condition


class ParseError(SeptopError):
    pass


class UnknownSuite(SeptopError):
    pass
