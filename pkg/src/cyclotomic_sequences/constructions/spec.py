# -*- coding: utf-8 -*-
"""Canonical spec strings addressing a construction, e.g. ``order8:p=17:g=3`` or ``chung:variant=sc:src=<spec>``."""
from __future__ import annotations

import dataclasses
import enum
from typing import Optional, Tuple

from cyclotomic_sequences.cyclotomy import find_primitive_root
from cyclotomic_sequences.exceptions import SpecStringError
from cyclotomic_sequences.seqcore import PeriodicSeq

from .chung import PairingVariant, chung_quaternary
from .dhm import build_dhm
from .order8 import build_order8
from .shen import build_shen
from .tang_lindner import build_tang_lindner

__all__ = ('Family', 'ConstructionSpec', 'parse_spec', 'format_spec', 'build_from_spec')


class Family(enum.Enum):
    """The construction families and their spec string prefix."""

    ORDER8 = 'order8'
    TANG_LINDNER = 'tl'
    DHM = 'dhm'
    SHEN = 'shen'
    CHUNG = 'chung'


_TRIPLE_FAMILIES = (Family.TANG_LINDNER, Family.DHM, Family.SHEN)


@dataclasses.dataclass(frozen=True)
class ConstructionSpec:
    """A construction together with all of its parameters.

    Prime families use ``p``, ``generator`` and, except for ``order8``, the triple ``indices``. The pairing family uses
    ``variant`` and either a nested ``source`` spec or a literal binary ``sequence``.
    """

    family: Family
    p: Optional[int] = None
    generator: Optional[int] = None
    indices: Optional[Tuple[int, int, int]] = None
    variant: Optional[PairingVariant] = None
    source: Optional['ConstructionSpec'] = None
    sequence: Optional[str] = None

    def normalize(self) -> ConstructionSpec:
        """Return the spec with the default primitive root filled in, recursively."""
        if self.family is Family.CHUNG:
            if self.source is None:
                return self
            return dataclasses.replace(self, source=self.source.normalize())

        if self.generator is None:
            return dataclasses.replace(self, generator=find_primitive_root(self.p))

        return self


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError as exception:
        raise SpecStringError(f'the value `{value}` of `{key}` is not an integer') from exception


def _parse_triple(value: str) -> Tuple[int, int, int]:
    if len(value) != 3 or not value.isdigit():
        raise SpecStringError(f'the triple `{value}` should consist of three digits')

    return tuple(int(character) for character in value)


def parse_spec(text: str) -> ConstructionSpec:
    """Parse a spec string ``family:key=value[:key=value...]``.

    The generator ``g`` is optional. For ``chung`` the source ``src`` must come last, as it may contain colons; it is
    either a nested spec or a literal binary sequence.

    :raises SpecStringError: if the string does not follow the grammar; the message includes the grammar.
    """
    family_name, _, remainder = text.strip().partition(':')

    try:
        family = Family(family_name)
    except ValueError as exception:
        raise SpecStringError(f'unknown family `{family_name}`') from exception

    values = {}

    while remainder:
        field, _, rest = remainder.partition(':')
        key, separator, value = field.partition('=')

        if not separator:
            raise SpecStringError(f'the field `{field}` is not of the form key=value')

        if key in values:
            raise SpecStringError(f'the key `{key}` is repeated')

        if key == 'src':
            values[key] = remainder.partition('=')[2]
            break

        values[key] = value
        remainder = rest

    if family is Family.CHUNG:
        return _parse_chung(values)

    allowed = {'p', 'g', 'ijl'} if family in _TRIPLE_FAMILIES else {'p', 'g'}
    unknown = sorted(set(values) - allowed)

    if unknown:
        raise SpecStringError(f'the keys {unknown} are not valid for `{family.value}`')

    if 'p' not in values:
        raise SpecStringError(f'the family `{family.value}` needs the key `p`')

    if family in _TRIPLE_FAMILIES and 'ijl' not in values:
        raise SpecStringError(f'the family `{family.value}` needs the key `ijl`')

    return ConstructionSpec(
        family=family,
        p=_parse_int('p', values['p']),
        generator=_parse_int('g', values['g']) if 'g' in values else None,
        indices=_parse_triple(values['ijl']) if 'ijl' in values else None,
    )


def _parse_chung(values: dict) -> ConstructionSpec:
    unknown = sorted(set(values) - {'variant', 'src'})

    if unknown:
        raise SpecStringError(f'the keys {unknown} are not valid for `chung`')

    if 'variant' not in values or 'src' not in values:
        raise SpecStringError('the family `chung` needs the keys `variant` and `src`')

    try:
        variant = PairingVariant(values['variant'])
    except ValueError as exception:
        raise SpecStringError(f'unknown pairing variant `{values["variant"]}`') from exception

    source = values['src']

    if source and set(source) <= {'0', '1'}:
        return ConstructionSpec(family=Family.CHUNG, variant=variant, sequence=source)

    return ConstructionSpec(family=Family.CHUNG, variant=variant, source=parse_spec(source))


def format_spec(spec: ConstructionSpec) -> str:
    """Return the normalized spec string, which always includes the generator of prime families."""
    spec = spec.normalize()

    if spec.family is Family.CHUNG:
        source = spec.sequence if spec.source is None else format_spec(spec.source)
        return f'chung:variant={spec.variant.value}:src={source}'

    fields = [spec.family.value, f'p={spec.p}', f'g={spec.generator}']

    if spec.indices is not None:
        fields.append('ijl=' + ''.join(str(index) for index in spec.indices))

    return ':'.join(fields)


def build_from_spec(spec: ConstructionSpec) -> PeriodicSeq:
    """Build the sequence addressed by ``spec``.

    :raises ParameterError: or one of its subclasses if the parameters are not admissible for the family.
    :raises ValidationError: if ``p`` is not prime or ``g`` is not a primitive root.
    """
    family = spec.family

    if family is Family.ORDER8:
        return build_order8(spec.p, spec.generator)

    if family is Family.TANG_LINDNER:
        return build_tang_lindner(spec.p, spec.indices, spec.generator)

    if family is Family.DHM:
        return build_dhm(spec.p, spec.indices, spec.generator)

    if family is Family.SHEN:
        return build_shen(spec.p, spec.indices, spec.generator)

    if spec.source is None:
        source = PeriodicSeq.from_string(spec.sequence, modulus=2)
    else:
        source = build_from_spec(spec.source)

    return chung_quaternary(source, spec.variant)
