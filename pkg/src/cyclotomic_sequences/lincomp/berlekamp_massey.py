# -*- coding: utf-8 -*-
"""Berlekamp-Massey synthesis of the shortest linear feedback shift register of a periodic sequence."""
from __future__ import annotations

import galois
import numpy

from cyclotomic_sequences.seqcore import PeriodicSeq

from .minimal import ComplexityMethod, ComplexityResult
from .polynomials import SYMBOL_TO_GF4, field_for

__all__ = ('berlekamp_massey', 'connection_polynomial')


def connection_polynomial(terms):
    """Return ``(c, L)`` with ``c`` the ascending coefficients of the connection polynomial ``C(x)`` of ``terms``.

    ``C(x) = 1 + c_1 x + ... + c_L x^L`` is the shortest register with ``sum_k c_k s(n - k) = 0`` for all ``n >= L``.

    :param terms: a one-dimensional array of a :func:`galois.GF` field.
    """
    field = type(terms)
    size = len(terms)

    connection = field.Zeros(size + 1)
    connection[0] = 1
    backup = connection.copy()
    length = 0
    gap = 1
    last = field(1)

    for index in range(size):
        discrepancy = terms[index]

        if length:
            discrepancy = discrepancy + numpy.sum(connection[1:length + 1] * terms[index - length:index][::-1])

        if discrepancy == 0:
            gap += 1
            continue

        previous = connection.copy()
        connection[gap:] -= (discrepancy / last) * backup[:size + 1 - gap]

        if 2 * length <= index:
            length = index + 1 - length
            backup = previous
            last = discrepancy
            gap = 1
        else:
            gap += 1

    return connection[:length + 1], length


def berlekamp_massey(sequence: PeriodicSeq) -> ComplexityResult:
    """Return the linear complexity found by Berlekamp-Massey on two periods of ``sequence``.

    The generating function of a periodic sequence is ``s(x) / (1 - x^N) = P(x) / C(x)``, so the gcd formula of
    :func:`~cyclotomic_sequences.lincomp.minimal.minimal_polynomial` yields the connection polynomial itself, up to
    the scalar that makes it monic.
    """
    field = field_for(sequence.modulus)
    values = sequence.array

    if sequence.modulus == 4:
        values = SYMBOL_TO_GF4[values]

    coefficients, length = connection_polynomial(field(numpy.tile(values, 2)))
    connection = galois.Poly(coefficients, order='asc')
    minpoly = galois.Poly(connection.coeffs / connection.coeffs[0])

    return ComplexityResult(linear_complexity=length, minpoly=minpoly, method=ComplexityMethod.BERLEKAMP_MASSEY)
