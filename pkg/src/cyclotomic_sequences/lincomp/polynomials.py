# -*- coding: utf-8 -*-
"""Sequence polynomials over GF(2) and GF(4), and their text form.

GF(4) is represented by :mod:`galois` with the integers ``0, 1, 2, 3`` standing for ``0, 1, m, m + 1`` where
``m^2 = m + 1``. The quaternary symbols ``0, 1, 2, 3`` are sent to ``0, 1, m + 1, m``, which is the map
``gray_inverse(b1, b2) -> b1 m + b2``.
"""
from __future__ import annotations

import re

import galois
import numpy

from cyclotomic_sequences.exceptions import ParameterError, UnsupportedAlphabetError
from cyclotomic_sequences.seqcore import PeriodicSeq

__all__ = (
    'GF2',
    'GF4',
    'field_for',
    'lift',
    'seq_polynomial',
    'gray_pair_polynomial',
    'x_n_minus_one',
    'format_poly',
    'parse_poly',
    'is_zero',
    'field_name',
)

GF2 = galois.GF(2)
GF4 = galois.GF(4)

#: Image in GF(4) of the quaternary symbols.
SYMBOL_TO_GF4 = numpy.array([0, 1, 3, 2], dtype=numpy.int64)

_LETTERS = {1: '1', 2: 'm', 3: 'M'}
_VALUES = {'1': 1, 'm': 2, 'M': 3}
_TERM = re.compile(r'^(?P<coefficient>[01mM]?)(?P<x>x(\^(?P<degree>\d+))?)?$')


def field_for(modulus: int):
    """Return the field matching a sequence alphabet: GF(2) for binary, GF(4) for quaternary."""
    try:
        return {2: GF2, 4: GF4}[modulus]
    except KeyError as exception:
        raise UnsupportedAlphabetError(f'no field matches the alphabet Z_{modulus}') from exception


def lift(poly: galois.Poly, field=GF4) -> galois.Poly:
    """Return a GF(2) polynomial as a polynomial over the extension ``field``."""
    return galois.Poly(field(poly.coeffs.view(numpy.ndarray)))


def _encoded(sequence: PeriodicSeq) -> numpy.ndarray:
    values = sequence.array
    return SYMBOL_TO_GF4[values] if sequence.modulus == 4 else values


def seq_polynomial(sequence: PeriodicSeq) -> galois.Poly:
    """Return ``s(0) + s(1) x + ... + s(N - 1) x^(N - 1)`` over the field matching the alphabet."""
    field = field_for(sequence.modulus)
    return galois.Poly(field(_encoded(sequence)), order='asc')


def gray_pair_polynomial(s1: PeriodicSeq, s2: PeriodicSeq) -> galois.Poly:
    """Return ``s1(x) m + s2(x)`` over GF(4) for two binary sequences of equal period."""
    if s1.modulus != 2 or s2.modulus != 2:
        raise UnsupportedAlphabetError('the Gray pair polynomial takes two binary sequences')

    if s1.period != s2.period:
        raise ParameterError(f'the periods {s1.period} and {s2.period} differ')

    mu = galois.Poly([2], field=GF4)
    return lift(seq_polynomial(s1)) * mu + lift(seq_polynomial(s2))


def x_n_minus_one(period: int, field) -> galois.Poly:
    """Return ``x^N - 1``, which equals ``x^N + 1`` in characteristic two."""
    return galois.Poly.Degrees([period, 0], coeffs=[1, 1], field=field)


def format_poly(poly: galois.Poly) -> str:
    """Return the text form, low to high degree, e.g. ``1+x^2+Mx^5``; ``m`` and ``M`` stand for ``m`` and ``m + 1``."""
    terms = []

    for degree, coefficient in enumerate(int(value) for value in poly.coeffs[::-1]):
        if coefficient == 0:
            continue

        letter = _LETTERS[coefficient]

        if degree == 0:
            terms.append(letter)
            continue

        power = 'x' if degree == 1 else f'x^{degree}'
        terms.append(power if letter == '1' else f'{letter}{power}')

    return '+'.join(terms) or '0'


def parse_poly(text: str, field=None) -> galois.Poly:
    """Parse the text form of :func:`format_poly`.

    :param field: the coefficient field, GF(4) if the text contains ``m`` or ``M`` and GF(2) otherwise.
    :raises ParameterError: if a term cannot be parsed or a coefficient does not belong to the field.
    """
    stripped = text.replace(' ', '')

    if field is None:
        field = GF4 if ('m' in stripped or 'M' in stripped) else GF2

    result = galois.Poly.Zero(field)

    for term in stripped.split('+'):
        match = _TERM.match(term)

        if not term or match is None or (not match.group('coefficient') and not match.group('x')):
            raise ParameterError(f'cannot parse the term `{term}` of `{text}`')

        letter = match.group('coefficient') or '1'

        if letter == '0':
            continue

        value = _VALUES[letter]

        if value >= field.order:
            raise ParameterError(f'the coefficient `{letter}` does not belong to GF({field.order})')

        if match.group('x') is None:
            degree = 0
        else:
            degree = int(match.group('degree') or 1)

        result += galois.Poly.Degrees([degree], coeffs=[value], field=field)

    return result


def is_zero(poly: galois.Poly) -> bool:
    """Return whether ``poly`` is the zero polynomial."""
    return poly == galois.Poly.Zero(poly.field)


def field_name(field) -> str:
    """Return ``'GF(2)'`` or ``'GF(4)'``."""
    return f'GF({field.order})'
