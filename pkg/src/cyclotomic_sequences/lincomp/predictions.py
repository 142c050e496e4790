# -*- coding: utf-8 -*-
"""Known linear complexities, as predicates that can be checked against computed values."""
from __future__ import annotations

import dataclasses
from typing import Tuple

import galois

from cyclotomic_sequences.constructions import PairingVariant, chung_quaternary
from cyclotomic_sequences.exceptions import InapplicableError, ParameterError
from cyclotomic_sequences.seqcore import PeriodicSeq

from .complement import divides_by_x_minus_one
from .minimal import minimal_polynomial
from .polynomials import format_poly, lift

__all__ = (
    'PairingMinpolyCheck',
    'PairingMinpolyReport',
    'check_pairing_minpoly',
    'predicted_tang_lindner_complexity',
    'predicted_order8_complexity',
)


def predicted_tang_lindner_complexity(p: int) -> int:
    """Return the linear complexity over GF(4) of the order-four Gray sequences of period ``p``.

    It is ``(p - 1) / 2`` for ``p = 1 (mod 8)`` and ``p - 1`` for ``p = 5 (mod 8)``.

    :raises InapplicableError: if ``p`` is not congruent to 1 modulo 4.
    """
    if p % 4 != 1:
        raise InapplicableError(f'the complexity prediction needs p = 1 (mod 4), got {p}')

    return (p - 1) // 2 if p % 8 == 1 else p - 1


def predicted_order8_complexity(p: int) -> int:
    """Return ``(p - 1) / 2``, the complexity observed for the order-eight sequences of every prime tabulated so far."""
    return (p - 1) // 2


@dataclasses.dataclass(frozen=True)
class PairingMinpolyCheck:
    """Comparison of the minimal polynomial of a paired sequence with that of its binary source."""

    variant: PairingVariant
    condition_met: bool
    source_minpoly: galois.Poly
    paired_minpoly: galois.Poly

    @property
    def equal(self) -> bool:
        return self.paired_minpoly == lift(self.source_minpoly)

    @property
    def passed(self) -> bool:
        """Equality is only asserted when the condition of the variant holds."""
        return self.equal or not self.condition_met

    def as_dict(self) -> dict:
        return {
            'variant': self.variant.value,
            'condition_met': self.condition_met,
            'source_minpoly': format_poly(self.source_minpoly),
            'paired_minpoly': format_poly(self.paired_minpoly),
            'equal': self.equal,
            'passed': self.passed,
        }


@dataclasses.dataclass(frozen=True)
class PairingMinpolyReport:
    """The checks of both pairing variants for one binary sequence."""

    sequence: str
    checks: Tuple[PairingMinpolyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def as_dict(self) -> dict:
        return {'sequence': self.sequence, 'checks': [check.as_dict() for check in self.checks], 'passed': self.passed}


def check_pairing_minpoly(source: PeriodicSeq) -> PairingMinpolyReport:
    """Compare the minimal polynomial over GF(4) of both pairings of ``source`` with that of ``source`` over GF(2).

    Equality holds unconditionally for the shift-only pairing. For the shift-and-complement pairing it holds whenever
    ``(x - 1)^2`` divides the minimal polynomial of ``source``; otherwise the check is recorded with
    ``condition_met = False``.

    :raises ParameterError: if ``source`` is not binary or has an odd period.
    """
    if source.modulus != 2 or source.period % 2:
        raise ParameterError('the pairing check needs a binary sequence of even period')

    source_minpoly = minimal_polynomial(source).minpoly
    squared = divides_by_x_minus_one(source_minpoly, 2)
    checks = []

    for variant in PairingVariant:
        paired = minimal_polynomial(chung_quaternary(source, variant)).minpoly
        condition = variant is PairingVariant.SHIFT_ONLY or squared
        checks.append(PairingMinpolyCheck(variant, condition, source_minpoly, paired))

    return PairingMinpolyReport(sequence=source.to_string(), checks=tuple(checks))
