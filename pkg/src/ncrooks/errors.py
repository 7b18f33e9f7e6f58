"""Exception types raised by the combinatorial core."""


class NCRooksError(ValueError):
    pass


class ParseError(NCRooksError):
    """Malformed text input; ``position`` is a 0-based character offset when known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class OverlapError(NCRooksError):
    pass


class GapError(NCRooksError):
    pass


class InvalidRGF(NCRooksError):
    pass


class TrivialInput(NCRooksError):
    pass


class SizeMismatch(NCRooksError):
    pass


class InvalidRook(NCRooksError):
    pass


class UnitRook(NCRooksError):
    pass


class NotExtendable(NCRooksError):
    """The rook has no permutation-matrix extension.

    ``certificate`` is the first ``(k, i_k, j_k)`` with ``i_k <= j_k``.
    """

    def __init__(self, message: str, certificate: tuple[int, int, int]):
        super().__init__(message)
        self.certificate = certificate


class BoardTooLarge(NCRooksError):
    pass


class VariableCountMismatch(NCRooksError):
    pass


class BasisMismatch(NCRooksError):
    pass
