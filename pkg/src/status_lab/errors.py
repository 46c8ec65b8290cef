"""Exception hierarchy shared by every module."""


class StatusLabError(ValueError):
    """Base class for all input/parameter errors raised by status_lab."""


class SelfLoop(StatusLabError):
    pass


class DuplicateEdge(StatusLabError):
    pass


class Disconnected(StatusLabError):
    pass


class VertexOutOfRange(StatusLabError):
    pass


class NotATree(StatusLabError):
    pass


class TooLarge(StatusLabError):
    """The request exceeds an enumeration or brute-force budget."""


class InvalidParams(StatusLabError):
    pass


class NotACutEdge(StatusLabError):
    pass


class PendantEdge(StatusLabError):
    pass


class DegreeTooSmall(StatusLabError):
    pass


class InvalidBranchSelection(StatusLabError):
    pass
