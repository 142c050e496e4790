# -*- coding: utf-8 -*-
"""Primitive roots, cyclotomic classes and cyclotomic numbers modulo an odd prime."""
from __future__ import annotations

import dataclasses
import functools
from typing import FrozenSet, List, Optional, Tuple

import numpy

from cyclotomic_sequences.exceptions import ParameterError
from cyclotomic_sequences.utils.validation import validate_order, validate_prime, validate_primitive_root

__all__ = (
    'CyclotomicSystem',
    'CycNumTable',
    'build_system',
    'cyclotomic_number',
    'cyclotomic_numbers',
    'find_primitive_root',
    'primitive_roots',
)

#: Name of the counting rule used for every cyclotomic number in this package.
COUNTING_CONVENTION = 'successor'


def find_primitive_root(p: int) -> int:
    """Return the smallest positive primitive root modulo the odd prime ``p``.

    :raises ValidationError: if ``p`` is not an odd prime.
    """
    from sympy.ntheory import primitive_root

    validate_prime(p)
    return int(primitive_root(p))


@functools.lru_cache(maxsize=256)
def primitive_roots(p: int) -> Tuple[int, ...]:
    """Return all primitive roots modulo the odd prime ``p`` in increasing order.

    The roots are the powers ``g^k`` of the smallest root with ``gcd(k, p - 1) = 1``.
    """
    from math import gcd

    generator = find_primitive_root(p)
    return tuple(sorted(pow(generator, k, p) for k in range(1, p) if gcd(k, p - 1) == 1))


@dataclasses.dataclass(frozen=True)
class CyclotomicSystem:
    """The cyclotomic classes ``D_0, ..., D_{e-1}`` of order ``e`` modulo ``p`` for a fixed primitive root.

    ``D_i = generator^i * <generator^e>``. The ``index`` array maps every residue ``t`` to the index of its class, with
    ``index[0] = -1`` since zero belongs to no class.
    """

    p: int
    e: int
    generator: int
    classes: Tuple[FrozenSet[int], ...]
    index: numpy.ndarray = dataclasses.field(repr=False, compare=False)

    @property
    def f(self) -> int:
        """Return the common size ``(p - 1) / e`` of the classes."""
        return (self.p - 1) // self.e

    def class_index(self, t: int) -> int:
        """Return the index ``i`` of the class ``D_i`` containing ``t``.

        :raises ParameterError: if ``t`` is divisible by ``p``.
        """
        residue = t % self.p

        if residue == 0:
            raise ParameterError('zero does not belong to any cyclotomic class')

        return int(self.index[residue])

    def members(self, i: int) -> List[int]:
        """Return the elements of ``D_i`` in increasing order, with the index taken modulo ``e``."""
        return sorted(self.classes[i % self.e])

    def union(self, *indices: int) -> FrozenSet[int]:
        """Return the union of the classes with the given indices."""
        return frozenset().union(*(self.classes[i % self.e] for i in indices))


def build_system(p: int, e: int, generator: Optional[int] = None) -> CyclotomicSystem:
    """Build the cyclotomic classes of order ``e`` modulo ``p``.

    :param p: odd prime.
    :param e: order, a divisor of ``p - 1``.
    :param generator: optional primitive root, the smallest one is used if not specified.
    :return: the system with all classes and the residue-to-class index.
    :raises ValidationError: if ``p`` is not an odd prime or ``generator`` is not a primitive root.
    :raises ParameterError: if ``e`` does not divide ``p - 1``.
    """
    validate_prime(p)
    validate_order(p, e)

    if generator is None:
        generator = find_primitive_root(p)
    else:
        generator = validate_primitive_root(generator, p)

    return _build_system(p, e, generator)


@functools.lru_cache(maxsize=1024)
def _build_system(p: int, e: int, generator: int) -> CyclotomicSystem:
    """Build the system for validated arguments; cached because the constructions rebuild it often."""
    index = numpy.full(p, -1, dtype=numpy.int64)
    members: List[List[int]] = [[] for _ in range(e)]
    power = 1

    for exponent in range(p - 1):
        class_index = exponent % e
        index[power] = class_index
        members[class_index].append(power)
        power = power * generator % p

    index.setflags(write=False)
    classes = tuple(frozenset(elements) for elements in members)

    return CyclotomicSystem(p=p, e=e, generator=generator, classes=classes, index=index)


@dataclasses.dataclass(frozen=True)
class CycNumTable:
    """The ``e x e`` table of cyclotomic numbers ``(i, j)`` of a prime ``p``.

    Entries follow the successor counting rule ``(i, j) = #{x in D_i : x + 1 in D_j}``.
    """

    p: int
    e: int
    entries: Tuple[Tuple[int, ...], ...]
    convention: str = COUNTING_CONVENTION

    @property
    def f(self) -> int:
        """Return the class size ``(p - 1) / e``."""
        return (self.p - 1) // self.e

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self.entries[i % self.e][j % self.e]

    def as_array(self) -> numpy.ndarray:
        """Return the entries as an integer array."""
        return numpy.array(self.entries, dtype=numpy.int64)

    def row_sums(self) -> List[int]:
        """Return ``sum_j (i, j)`` for every row ``i``."""
        return [int(value) for value in self.as_array().sum(axis=1)]

    def expected_row_sums(self, system: CyclotomicSystem) -> List[int]:
        """Return ``f - [p - 1 in D_i]`` for every row, the value each row sum must take."""
        minus_one = system.class_index(self.p - 1)
        return [self.f - (1 if i == minus_one else 0) for i in range(self.e)]

    def satisfies_negation_symmetry(self) -> bool:
        """Return whether ``(h, k) = (e - h, k - h)`` holds for all ``h, k``."""
        e = self.e
        return all(self[h, k] == self[(e - h) % e, (k - h) % e] for h in range(e) for k in range(e))

    def satisfies_parity_symmetry(self) -> bool:
        """Return whether ``(h, k) = (k, h)`` for even ``f``, or ``(h, k) = (k + e/2, h + e/2)`` for odd ``f``.

        For odd ``f`` the order ``e`` is necessarily even, so the half shift is well defined.
        """
        e = self.e

        if self.f % 2 == 0:
            return all(self[h, k] == self[k, h] for h in range(e) for k in range(e))

        half = e // 2
        return all(self[h, k] == self[k + half, h + half] for h in range(e) for k in range(e))

    def distinct_values(self) -> List[int]:
        """Return the sorted distinct values occurring in the table."""
        return sorted({value for row in self.entries for value in row})


def cyclotomic_number(system: CyclotomicSystem, i: int, j: int) -> int:
    """Return the cyclotomic number ``(i, j)``: the number of ``x`` in ``D_i`` with ``x + 1`` in ``D_j``.

    The count is obtained by enumerating ``D_i``.

    :raises ParameterError: if ``i`` or ``j`` is not in ``range(e)``.
    """
    if not (0 <= i < system.e and 0 <= j < system.e):
        raise ParameterError(f'the indices ({i}, {j}) should lie in the range [0, {system.e})')

    elements = numpy.fromiter(system.classes[i], dtype=numpy.int64)
    successors = (elements + 1) % system.p
    successors = successors[successors != 0]

    return int(numpy.count_nonzero(system.index[successors] == j))


def cyclotomic_numbers(system: CyclotomicSystem) -> CycNumTable:
    """Return the full table of cyclotomic numbers of ``system`` by exhaustive counting."""
    x = numpy.arange(1, system.p - 1, dtype=numpy.int64)
    table = numpy.zeros((system.e, system.e), dtype=numpy.int64)
    numpy.add.at(table, (system.index[x], system.index[x + 1]), 1)

    entries = tuple(tuple(int(value) for value in row) for row in table)
    return CycNumTable(p=system.p, e=system.e, entries=entries)
