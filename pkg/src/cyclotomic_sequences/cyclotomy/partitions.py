# -*- coding: utf-8 -*-
"""Representations of primes by the binary quadratic forms used by the constructions."""
from __future__ import annotations

import dataclasses
import enum
import math
from typing import Optional, Tuple

from cyclotomic_sequences.exceptions import NotRepresentableError, ValidationError
from cyclotomic_sequences.utils.validation import validate_prime

__all__ = ('QuadraticForm', 'QuadraticPartition', 'Order8Admissibility', 'solve_partition', 'order8_admissibility')


class QuadraticForm(enum.Enum):
    """The quadratic forms ``p = first^2 + coefficient * second^2``."""

    A4B = 'a2+4b2'
    A2B = 'a2+2b2'
    X16 = 'x2+16'
    X4Y = 'x2+4y2'

    @property
    def coefficient(self) -> int:
        """Return the coefficient of ``second^2``.

        ``X16`` is the special case of ``X4Y`` with ``|y| = 2``, so both use four.
        """
        return 2 if self is QuadraticForm.A2B else 4


@dataclasses.dataclass(frozen=True)
class QuadraticPartition:
    """A normalized solution of ``p = first^2 + coefficient * second^2``.

    ``first`` is odd and normalized to ``first = 1 (mod 4)``. ``second`` is stored non-negative; its sign is not
    determined by ``p`` alone but by the primitive root that defines the cyclotomic classes, so both signs are available
    through :attr:`seconds`.
    """

    p: int
    form: QuadraticForm
    first: int
    second: int

    @property
    def seconds(self) -> Tuple[int, int]:
        """Return both signs of the second component, positive first."""
        return (self.second, -self.second)

    def value(self) -> int:
        """Return ``first^2 + coefficient * second^2``, which equals ``p``."""
        return self.first**2 + self.form.coefficient * self.second**2


def solve_partition(p: int, form: QuadraticForm) -> QuadraticPartition:
    """Solve ``p = first^2 + coefficient * second^2`` by exhaustive search over ``|first| <= sqrt(p)``.

    :param p: an odd prime.
    :param form: the requested quadratic form.
    :return: the normalized partition with ``first = 1 (mod 4)``.
    :raises ValidationError: if ``p`` is not an odd prime.
    :raises NotRepresentableError: if ``p`` admits no representation by ``form``.
    """
    validate_prime(p)
    coefficient = form.coefficient

    for first in range(1, math.isqrt(p) + 1, 2):
        remainder = p - first * first

        if remainder <= 0 or remainder % coefficient:
            continue

        second = math.isqrt(remainder // coefficient)

        if second * second * coefficient != remainder:
            continue

        if form is QuadraticForm.X16 and second != 2:
            continue

        signed = first if first % 4 == 1 else -first
        return QuadraticPartition(p=p, form=form, first=signed, second=second)

    raise NotRepresentableError(f'{p} has no representation of the form {form.value}')


@dataclasses.dataclass(frozen=True)
class Order8Admissibility:
    """Decision whether a prime supports the balanced order-eight construction.

    On success ``x`` and ``a`` hold the normalized components of ``p = x^2 + 16 = a^2 + 2b^2``.
    """

    p: int
    admissible: bool
    reason: str
    x: Optional[int] = None
    a: Optional[int] = None

    def __bool__(self) -> bool:
        return self.admissible


def order8_admissibility(p: int) -> Order8Admissibility:
    """Decide whether ``p`` is admissible for the order-eight construction.

    The prime must satisfy ``p = 1 (mod 16)`` and ``p = x^2 + 16 = a^2 + 2b^2`` with ``x = a = 1 (mod 4)`` and
    ``x - a = 4``. The first admissible primes are 17, 97, 641, 2417, 6577 and 14657.

    :param p: the candidate prime; non-primes are reported as not admissible rather than raising.
    """
    try:
        validate_prime(p)
    except ValidationError as exception:
        return Order8Admissibility(p=p, admissible=False, reason=str(exception))

    if p % 16 != 1:
        return Order8Admissibility(p=p, admissible=False, reason=f'{p} is not congruent to 1 modulo 16')

    try:
        x = solve_partition(p, QuadraticForm.X16).first
        a = solve_partition(p, QuadraticForm.A2B).first
    except NotRepresentableError as exception:
        return Order8Admissibility(p=p, admissible=False, reason=str(exception))

    if x - a != 4:
        reason = f'x - a = {x} - {a} = {x - a} differs from 4'
        return Order8Admissibility(p=p, admissible=False, reason=reason, x=x, a=a)

    return Order8Admissibility(p=p, admissible=True, reason='admissible', x=x, a=a)
