# -*- coding: utf-8 -*-
"""Constructions of binary and quaternary sequences with low autocorrelation from cyclotomic classes."""
from .chung import PairingVariant, chung_quaternary, pairing_partner, pairing_symbol_counts, predict_pairing_balance
from .dhm import (
    A_TRIPLES,
    B_TRIPLES,
    Orientation,
    build_dhm,
    dhm_pairs,
    dhm_support,
    dhm_triple_lists,
    mirror_triple,
)
from .order8 import ORDER8_LEVELS, build_order8, expected_order8_counts, expected_order8_profile
from .shen import (
    ShenCheck,
    ShenEquivalenceReport,
    ShenShape,
    build_shen,
    has_two_level_autocorrelation,
    pairing_level_sets,
    resolve_orientation,
    shen_shape,
    verify_shen_equivalence,
)
from .spec import ConstructionSpec, Family, build_from_spec, format_spec, parse_spec
from .tang_lindner import (
    COVERED_TRIPLES,
    build_tang_lindner,
    expected_tang_lindner_counts,
    expected_tang_lindner_profile,
    is_covered_triple,
)

__all__ = (
    'A_TRIPLES',
    'B_TRIPLES',
    'COVERED_TRIPLES',
    'ORDER8_LEVELS',
    'ConstructionSpec',
    'Family',
    'Orientation',
    'PairingVariant',
    'ShenCheck',
    'ShenEquivalenceReport',
    'ShenShape',
    'build_dhm',
    'build_from_spec',
    'build_order8',
    'build_shen',
    'build_tang_lindner',
    'chung_quaternary',
    'dhm_pairs',
    'dhm_support',
    'dhm_triple_lists',
    'expected_order8_counts',
    'expected_order8_profile',
    'expected_tang_lindner_counts',
    'expected_tang_lindner_profile',
    'format_spec',
    'has_two_level_autocorrelation',
    'is_covered_triple',
    'mirror_triple',
    'pairing_level_sets',
    'pairing_partner',
    'pairing_symbol_counts',
    'parse_spec',
    'predict_pairing_balance',
    'resolve_orientation',
    'shen_shape',
    'verify_shen_equivalence',
)
