# -*- coding: utf-8 -*-
"""Periodic sequences over the integers modulo two and four."""
from __future__ import annotations

import dataclasses
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy

from cyclotomic_sequences.exceptions import ParameterError, UnsupportedAlphabetError

__all__ = ('ALPHABETS', 'PeriodicSeq', 'complement', 'shift')

#: The supported alphabet sizes.
ALPHABETS = (2, 4)


@dataclasses.dataclass(frozen=True)
class PeriodicSeq:
    """A finite vector of symbols in ``Z_m`` that is read cyclically.

    The text form writes one symbol per character starting at ``t = 0``, e.g. ``PeriodicSeq.from_string('2031002312')``.
    """

    symbols: Tuple[int, ...]
    modulus: int = 2

    def __post_init__(self):
        if self.modulus not in ALPHABETS:
            raise UnsupportedAlphabetError(f'the alphabet size should be one of {ALPHABETS}, got {self.modulus}')

        symbols = tuple(int(symbol) for symbol in self.symbols)

        if not symbols:
            raise ParameterError('a periodic sequence needs at least one symbol')

        invalid = sorted({symbol for symbol in symbols if not 0 <= symbol < self.modulus})

        if invalid:
            raise ParameterError(f'the symbols {invalid} do not belong to Z_{self.modulus}')

        object.__setattr__(self, 'symbols', symbols)

    @property
    def period(self) -> int:
        """Return the period ``N``, i.e. the number of stored symbols."""
        return len(self.symbols)

    def __len__(self) -> int:
        return self.period

    def __getitem__(self, t: int) -> int:
        return self.symbols[t % self.period]

    def __str__(self) -> str:
        return self.to_string()

    @property
    def array(self) -> numpy.ndarray:
        """Return one period as an integer array."""
        return numpy.array(self.symbols, dtype=numpy.int64)

    @classmethod
    def from_array(cls, values: Iterable[int], modulus: int) -> PeriodicSeq:
        """Return the sequence with one period given by ``values``."""
        return cls(symbols=tuple(int(value) for value in values), modulus=modulus)

    @classmethod
    def from_string(cls, text: str, modulus: Optional[int] = None) -> PeriodicSeq:
        """Parse the one-character-per-symbol text form.

        :param text: the digits of one period; surrounding whitespace is ignored.
        :param modulus: the alphabet size, inferred as the smallest supported alphabet containing all digits if omitted.
        :raises ParameterError: if the text is empty or contains characters outside the alphabet.
        """
        stripped = text.strip()
        invalid = sorted({character for character in stripped if character not in '0123'})

        if invalid:
            raise ParameterError(f'invalid characters {invalid} in the sequence `{stripped}`')

        symbols = tuple(int(character) for character in stripped)

        if modulus is None:
            modulus = 4 if any(symbol > 1 for symbol in symbols) else 2

        return cls(symbols=symbols, modulus=modulus)

    def to_string(self) -> str:
        """Return the one-character-per-symbol text form."""
        return ''.join(str(symbol) for symbol in self.symbols)

    @classmethod
    def characteristic(cls, support: Iterable[int], period: int) -> PeriodicSeq:
        """Return the binary sequence of the given period whose ones are at ``support`` modulo the period."""
        if period < 1:
            raise ParameterError(f'the period should be positive, got {period}')

        values = numpy.zeros(period, dtype=numpy.int64)
        positions = numpy.fromiter((t % period for t in support), dtype=numpy.int64)
        values[positions] = 1

        return cls.from_array(values, modulus=2)

    def level_set(self, symbol: int) -> FrozenSet[int]:
        """Return the positions ``t`` in one period with ``s(t) = symbol``."""
        return frozenset(int(t) for t in numpy.flatnonzero(self.array == symbol))

    def support(self) -> FrozenSet[int]:
        """Return the support ``{t : s(t) = 1}`` of a binary sequence.

        :raises UnsupportedAlphabetError: for quaternary sequences.
        """
        if self.modulus != 2:
            raise UnsupportedAlphabetError('the support is only defined for binary sequences')

        return self.level_set(1)


def shift(sequence: PeriodicSeq, tau: int) -> PeriodicSeq:
    """Return the left cyclic shift ``t -> s(t + tau)``, with ``tau`` taken modulo the period."""
    return PeriodicSeq.from_array(numpy.roll(sequence.array, -(tau % sequence.period)), sequence.modulus)


def complement(sequence: PeriodicSeq) -> PeriodicSeq:
    """Return the binary complement ``t -> 1 - s(t)``.

    :raises UnsupportedAlphabetError: for quaternary sequences.
    """
    if sequence.modulus != 2:
        raise UnsupportedAlphabetError('the complement is only defined for binary sequences')

    return PeriodicSeq.from_array(1 - sequence.array, modulus=2)
