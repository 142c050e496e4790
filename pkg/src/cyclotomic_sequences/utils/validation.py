# -*- coding: utf-8 -*-
"""Utilities for validating the number-theoretic inputs of the constructions."""
from __future__ import annotations

from typing import Sequence, Tuple

from cyclotomic_sequences.exceptions import ParameterError, ValidationError

#: Largest modulus accepted anywhere; keeps every intermediate product inside machine integers.
MAX_MODULUS = 2**31


def validate_prime(p: int) -> int:
    """Validate that ``p`` is an odd prime within the supported range.

    :param p: the candidate prime.
    :return: the prime as a plain integer.
    :raises ValidationError: if ``p`` is not an integer, is not prime, is two, or exceeds the supported range.
    """
    from sympy import isprime

    if isinstance(p, bool) or not isinstance(p, int):
        raise ValidationError(f'the modulus should be an integer, got {p!r}')

    if p >= MAX_MODULUS:
        raise ValidationError(f'the modulus {p} exceeds the supported bound {MAX_MODULUS}')

    if p < 3 or not isprime(p):
        raise ValidationError(f'{p} is not an odd prime')

    return p


def validate_primitive_root(generator: int, p: int) -> int:
    """Validate that ``generator`` is a primitive root modulo the prime ``p``.

    :param generator: the candidate primitive root, reduced modulo ``p`` before the check.
    :param p: an odd prime.
    :return: the reduced generator.
    :raises ValidationError: if ``generator`` is not a primitive root of ``p``.
    """
    from sympy.ntheory import is_primitive_root

    reduced = generator % p

    if reduced == 0 or not is_primitive_root(reduced, p):
        raise ValidationError(f'{generator} is not a primitive root modulo {p}')

    return reduced


def validate_order(p: int, e: int) -> int:
    """Validate that ``e`` is a positive divisor of ``p - 1``.

    :return: the cofactor ``f = (p - 1) / e``.
    :raises ParameterError: if ``e`` does not divide ``p - 1``.
    """
    if e < 1 or (p - 1) % e != 0:
        raise ParameterError(f'the order {e} does not divide p - 1 = {p - 1}')

    return (p - 1) // e


def validate_triple(indices: Sequence[int], e: int = 4) -> Tuple[int, int, int]:
    """Validate an ``(i, j, l)`` triple of distinct class indices of order ``e``.

    :raises ParameterError: if the triple does not have three entries, contains repeated indices or indices that are
        out of range.
    """
    triple = tuple(int(index) for index in indices)

    if len(triple) != 3:
        raise ParameterError(f'expected three class indices, got {indices!r}')

    if len(set(triple)) != 3:
        raise ParameterError(f'the class indices {triple} should be distinct')

    if any(index < 0 or index >= e for index in triple):
        raise ParameterError(f'the class indices {triple} should lie in the range [0, {e})')

    return triple
