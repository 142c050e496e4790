# -*- coding: utf-8 -*-
"""Minimal polynomial of the complement of a binary sequence."""
from __future__ import annotations

import galois

from cyclotomic_sequences.exceptions import ParameterError

from .polynomials import GF2

__all__ = ('X_PLUS_ONE', 'divides_by_x_minus_one', 'complement_minpoly')

#: ``x - 1``, which is ``x + 1`` over GF(2).
X_PLUS_ONE = galois.Poly([1, 1], field=GF2)


def divides_by_x_minus_one(poly: galois.Poly, power: int = 1) -> bool:
    """Return whether ``(x - 1)^power`` divides ``poly``, for ``power`` one or two.

    ``x - 1`` divides ``P`` iff ``P(1) = 0``, and ``(x - 1)^2`` divides ``P`` iff in addition ``P'(1) = 0``.
    """
    if power not in (1, 2):
        raise ParameterError(f'only the powers one and two are supported, got {power}')

    one = poly.field(1)

    if poly(one) != 0:
        return False

    if power == 1:
        return True

    if poly.degree == 0:
        return True

    return bool(poly.derivative()(one) == 0)


def complement_minpoly(minpoly: galois.Poly) -> galois.Poly:
    """Return the minimal polynomial of the complement of a binary sequence with minimal polynomial ``minpoly``.

    * ``(x - 1)`` does not divide ``P``: the result is ``P (x - 1)``.
    * ``(x - 1)`` divides ``P`` exactly once: the result is ``P / (x - 1)``.
    * ``(x - 1)^2`` divides ``P``: the result is ``P``.
    """
    if not divides_by_x_minus_one(minpoly):
        return minpoly * X_PLUS_ONE

    if not divides_by_x_minus_one(minpoly, 2):
        return minpoly // X_PLUS_ONE

    return minpoly
