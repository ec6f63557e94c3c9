"""Exception hierarchy shared by the library and the command line front end."""

from __future__ import annotations


class HitchinError(ValueError):
    """Base class for rejected input (bad group, bad signature, bad request)."""


class InvalidGroupError(HitchinError):
    pass


class InvalidSignatureError(HitchinError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class NotHyperbolicError(HitchinError):
    pass


class UnsupportedInputError(HitchinError):
    """Input is valid but outside the domain of the requested operation."""


class RouteDisagreement(RuntimeError):
    """Two independent dimension formulas gave different answers.

    This signals a bug, never a user error.
    """
