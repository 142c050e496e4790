# -*- coding: utf-8 -*-
"""Exceptions raised by the sequence toolkit."""
from aiida.common.exceptions import AiidaException

__all__ = (
    'SequenceToolkitError',
    'ParameterError',
    'ValidationError',
    'AdmissibilityError',
    'NotRepresentableError',
    'UnsupportedAlphabetError',
    'InapplicableError',
    'SpecStringError',
    'ConventionError',
    'ExactnessError',
    'PartitionError',
)


class SequenceToolkitError(AiidaException):
    """Base class for all exceptions raised by this package."""


class ParameterError(SequenceToolkitError, ValueError):
    """Raised when an argument has the wrong shape or value for the requested operation."""


class ValidationError(SequenceToolkitError, ValueError):
    """Raised when a number-theoretic precondition is violated, e.g. a non-prime modulus."""


class AdmissibilityError(ParameterError):
    """Raised when a construction is requested for parameters it is not defined for.

    The message always names the condition that failed.
    """


class NotRepresentableError(ParameterError):
    """Raised when a prime admits no representation by the requested quadratic form."""


class UnsupportedAlphabetError(ParameterError):
    """Raised when an operation is applied to a sequence over an alphabet it does not support."""


class InapplicableError(ParameterError):
    """Raised when a prediction is requested outside of the cases it covers."""


class SpecStringError(ParameterError):
    """Raised when a construction spec string cannot be parsed."""

    GRAMMAR = (
        'family:key=value[:key=value...] with family in {order8, tl, dhm, shen, chung}; '
        'keys p, g, ijl (three digits), variant (so|sc) and src=<spec> (chung only, last)'
    )

    def __init__(self, message: str):
        super().__init__(f'{message}; expected {self.GRAMMAR}')


class ConventionError(SequenceToolkitError):
    """Raised when a closed formula disagrees with brute force for every sign choice.

    This signals a bug in a convention and should never be raised.
    """


class ExactnessError(SequenceToolkitError):
    """Raised when a quantity that must be an exact integer is not."""


class PartitionError(SequenceToolkitError):
    """Raised when sets that must partition a residue ring do not."""
