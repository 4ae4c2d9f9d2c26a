"""
cyclohodge Custom Exception Types

Created on 14 Oct 2026

:author: semuadmin
:copyright: SEMU Consulting © 2026
:license: BSD 3-Clause
"""


class ParameterError(Exception):
    """Parameter Error Class."""


class NotPrimePower(ParameterError):
    """
    Modulus is not a prime power (or is 1).
    """


class InvalidParams(ParameterError):
    """
    Degree n is out of range or divisible by p.
    """


class QBoundError(ParameterError):
    """
    Modulus exceeds the configured safety cap.
    """


class PreconditionViolated(Exception):
    """
    Operation called outside its documented precondition
    e.g. step classification of a unit which is not its own b_max.
    """


class BadPair(Exception):
    """
    Pair of units is not admissible (a = b, or a = q - b where
    a good pair is required).
    """


class DomainTooLarge(Exception):
    """
    Enumeration would exceed the configured bound.
    The full (unmaterialised) count is available as ``count``.
    """

    def __init__(self, message: str, count: int):
        """
        Constructor.

        :param str message: error message
        :param int count: number of items which would have been enumerated
        """

        super().__init__(message)
        self.count = count

    def __reduce__(self):
        return (DomainTooLarge, (str(self), self.count))


class HodgeInvariantError(Exception):
    """
    A multiplicity or Hodge table failed its self-check at construction.
    """


class ReportError(Exception):
    """
    Verification report could not be written, read or parsed.
    """
