# -*- coding: utf-8 -*-
"""Command to construct a sequence from its spec string."""
import dataclasses
from typing import Tuple

from aiida.cmdline.utils import echo
import click

from cyclotomic_sequences.analysis import analyze_sequence
from cyclotomic_sequences.constructions import ConstructionSpec, Family, build_from_spec, format_spec, is_covered_triple

from . import cmd_root
from .utils import GENERATOR, JSON, SpecStringParamType, parameter_errors

UNVERIFIED_DISTRIBUTION = 'unverified distribution'


def construction_flags(spec: ConstructionSpec) -> Tuple[str, ...]:
    """Return the warnings attached to a construction, e.g. for a triple whose distribution is not known."""
    if spec.family is Family.TANG_LINDNER and not is_covered_triple(spec.p, spec.indices):
        return (UNVERIFIED_DISTRIBUTION,)

    if spec.family is Family.CHUNG and spec.source is not None:
        return construction_flags(spec.source)

    return ()


@cmd_root.command('gen')
@click.argument('spec', type=SpecStringParamType())
@GENERATOR(help='Primitive root overriding the `g` field of the spec string.')
@JSON()
def cmd_gen(spec, generator, as_json):
    """Construct the sequence described by SPEC and print its analysis.

    SPEC is a construction spec string such as `order8:p=17:g=3`, `tl:p=13:ijl=123`, `dhm:p=5:ijl=012`,
    `shen:p=5:ijl=012` or `chung:variant=sc:src=dhm:p=5:ijl=012`.
    """
    if generator is not None:
        if spec.family is Family.CHUNG:
            raise click.BadParameter('the pairing family takes the generator from its source', param_hint='--generator')
        spec = dataclasses.replace(spec, generator=generator)

    with parameter_errors('SPEC'):
        spec = spec.normalize()
        sequence = build_from_spec(spec)

    flags = construction_flags(spec)
    analysis = analyze_sequence(sequence, spec=format_spec(spec), flags=flags)

    if as_json:
        echo.echo_dictionary(analysis.as_dict(), fmt='json+date', sort_keys=True)
        return

    for line in analysis.summary_lines():
        echo.echo(line)

    for flag in flags:
        echo.echo_warning(f'the construction carries the flag `{flag}`')
