"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for all errors raised by strongclique."""


class IndexOutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotStable(GraphError):
    pass


class NotAClique(GraphError):
    pass


class BadPartition(GraphError):
    pass


class BadParams(GraphError):
    pass


class CapExceeded(GraphError):
    """A brute-force routine was asked to work beyond its configured size cap."""

    def __init__(self, size: int, cap: int, what: str = "vertices"):
        super().__init__(f"{size} {what} exceeds the brute-force cap of {cap}")
        self.size = size
        self.cap = cap


class NotDiamondFree(GraphError):
    """Raised with the four vertices of an induced diamond."""

    def __init__(self, witness=None, message: str | None = None):
        super().__init__(message or f"graph contains an induced diamond: {witness}")
        self.witness = witness


class NotFFree(GraphError):
    def __init__(self, pattern: str, witness=None):
        super().__init__(f"graph contains an induced {pattern}: {witness}")
        self.pattern = pattern
        self.witness = witness


class NotInClassG(GraphError):
    def __init__(self, verdict):
        cert = verdict.certificate
        reason = "fewer than five vertices" if cert is None else str(cert)
        super().__init__(f"source must be triangle-free with n >= 5 and minimum degree >= 3: {reason}")
        self.verdict = verdict


class EquivalenceViolation(AssertionError):
    """The seven gadget statements disagreed. Never expected."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
