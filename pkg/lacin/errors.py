"""Exception hierarchy shared by every lacin module."""

from __future__ import annotations


class LacinError(ValueError):
    """Base class; the CLI maps any LacinError to exit status 1."""


class InvalidSizeError(LacinError):
    pass


class UnsupportedSizeError(LacinError):
    """The instance kind cannot be built for the requested switch count."""


class PairingViolation(LacinError):
    """A port-pairing matrix breaks one of its invariants."""

    def __init__(self, check: str, detail: str) -> None:
        super().__init__(f"{check} violation: {detail}")
        self.check = check
        self.detail = detail


class NotIsoportError(LacinError):
    pass


class SameSwitchError(LacinError):
    """Source and destination share a switch; the caller must eject instead."""


class AddressError(LacinError):
    pass


class TopologyFileError(LacinError):
    pass


class RoutingError(LacinError):
    """A forwarding decision did not reach its destination."""
