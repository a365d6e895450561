from __future__ import annotations


class DualisError(Exception):
    """Base class for errors raised by the package."""


class CarrierTooLarge(DualisError):
    def __init__(self, size: int, cap: int, what: str = "carrier"):
        super().__init__(f"{what} has {size} elements, above the cap of {cap}")
        self.size = size
        self.cap = cap


class NotAPartialOrder(DualisError):
    pass


class NotASemilattice(DualisError):
    pass


class NotAHomomorphism(DualisError):
    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class NotCongruential(DualisError):
    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class CharacterizationMismatch(DualisError):
    """Two routes that must agree produced different answers."""

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = detail or {}


class HypothesisFailure(DualisError):
    """A precondition of a construction does not hold for the given input."""

    def __init__(self, message: str, failed: list[str] | None = None):
        super().__init__(message)
        self.failed = failed or []


class GateError(DualisError):
    """A gated operation was requested on a logic lacking the required property."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotVerified(DualisError):
    pass


class RepresentationError(DualisError):
    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}
