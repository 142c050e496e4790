# -*- coding: utf-8 -*-
"""Minimal polynomial and linear complexity of a periodic sequence by polynomial gcd."""
from __future__ import annotations

import dataclasses
import enum

import galois

from cyclotomic_sequences.seqcore import PeriodicSeq

from .polynomials import field_for, field_name, format_poly, seq_polynomial, x_n_minus_one

__all__ = ('ComplexityMethod', 'ComplexityResult', 'minimal_polynomial')


class ComplexityMethod(enum.Enum):
    """How a minimal polynomial was obtained."""

    GCD = 'gcd'
    BERLEKAMP_MASSEY = 'berlekamp_massey'


@dataclasses.dataclass(frozen=True)
class ComplexityResult:
    """The minimal polynomial of a sequence; its degree is the linear complexity."""

    linear_complexity: int
    minpoly: galois.Poly
    method: ComplexityMethod

    def as_dict(self) -> dict:
        return {
            'linear_complexity': self.linear_complexity,
            'minpoly': format_poly(self.minpoly),
            'field': field_name(self.minpoly.field),
            'method': self.method.value,
        }


def minimal_polynomial(sequence: PeriodicSeq) -> ComplexityResult:
    """Return ``(x^N - 1) / gcd(x^N - 1, s(x))`` over the field matching the alphabet of ``sequence``."""
    field = field_for(sequence.modulus)
    modulus = x_n_minus_one(sequence.period, field)
    divisor = galois.gcd(modulus, seq_polynomial(sequence))
    minpoly = modulus // divisor

    return ComplexityResult(linear_complexity=minpoly.degree, minpoly=minpoly, method=ComplexityMethod.GCD)
