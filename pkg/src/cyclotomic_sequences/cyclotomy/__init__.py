# -*- coding: utf-8 -*-
"""Cyclotomic classes and numbers modulo an odd prime, and the quadratic partitions the constructions rely on."""
from .classes import (
    CycNumTable,
    CyclotomicSystem,
    build_system,
    cyclotomic_number,
    cyclotomic_numbers,
    find_primitive_root,
    primitive_roots,
)
from .partitions import Order8Admissibility, QuadraticForm, QuadraticPartition, order8_admissibility, solve_partition
from .tables import (
    ResolvedTable,
    order4_formula_table,
    order4_formula_values,
    order8_formula_table,
    order8_formula_values,
)

__all__ = (
    'CycNumTable',
    'CyclotomicSystem',
    'Order8Admissibility',
    'QuadraticForm',
    'QuadraticPartition',
    'ResolvedTable',
    'build_system',
    'cyclotomic_number',
    'cyclotomic_numbers',
    'find_primitive_root',
    'order4_formula_table',
    'order4_formula_values',
    'order8_admissibility',
    'order8_formula_table',
    'order8_formula_values',
    'primitive_roots',
    'solve_partition',
)
