# -*- coding: utf-8 -*-
"""Linear complexity over GF(2) and GF(4): minimal polynomials by gcd and by Berlekamp-Massey."""
from .berlekamp_massey import berlekamp_massey, connection_polynomial
from .complement import X_PLUS_ONE, complement_minpoly, divides_by_x_minus_one
from .minimal import ComplexityMethod, ComplexityResult, minimal_polynomial
from .polynomials import (
    GF2,
    GF4,
    field_for,
    field_name,
    format_poly,
    gray_pair_polynomial,
    is_zero,
    lift,
    parse_poly,
    seq_polynomial,
    x_n_minus_one,
)
from .predictions import (
    PairingMinpolyCheck,
    PairingMinpolyReport,
    check_pairing_minpoly,
    predicted_order8_complexity,
    predicted_tang_lindner_complexity,
)

__all__ = (
    'GF2',
    'GF4',
    'X_PLUS_ONE',
    'ComplexityMethod',
    'ComplexityResult',
    'PairingMinpolyCheck',
    'PairingMinpolyReport',
    'berlekamp_massey',
    'check_pairing_minpoly',
    'complement_minpoly',
    'connection_polynomial',
    'divides_by_x_minus_one',
    'field_for',
    'field_name',
    'format_poly',
    'gray_pair_polynomial',
    'is_zero',
    'lift',
    'minimal_polynomial',
    'parse_poly',
    'predicted_order8_complexity',
    'predicted_tang_lindner_complexity',
    'seq_polynomial',
    'x_n_minus_one',
)
