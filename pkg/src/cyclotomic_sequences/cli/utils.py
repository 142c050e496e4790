# -*- coding: utf-8 -*-
"""Options, parameter types and error handling shared by the commands."""
import contextlib
import json
import pathlib
from typing import Optional

from aiida.cmdline.params.options.overridable import OverridableOption
from aiida.cmdline.utils import echo
import click

from cyclotomic_sequences.constructions import ConstructionSpec, parse_spec
from cyclotomic_sequences.exceptions import ParameterError, ValidationError


class SpecStringParamType(click.ParamType):
    """Parameter type for the canonical construction spec strings, e.g. ``order8:p=17:g=3``."""

    name = 'spec'

    def convert(self, value, param, ctx) -> ConstructionSpec:
        if isinstance(value, ConstructionSpec):
            return value

        try:
            return parse_spec(value)
        except (ParameterError, ValidationError) as exception:
            self.fail(str(exception), param, ctx)


@contextlib.contextmanager
def parameter_errors(param_hint: Optional[str] = None):
    """Turn the parameter and validation errors raised inside the context into a :class:`click.BadParameter`."""
    try:
        yield
    except (ParameterError, ValidationError) as exception:
        raise click.BadParameter(str(exception), param_hint=param_hint) from exception


def echo_json(dictionary: dict, path: Optional[pathlib.Path] = None):
    """Write ``dictionary`` as JSON with sorted keys to ``path``, or echo it if no path is specified."""
    if path is None or str(path) == '-':
        echo.echo_dictionary(dictionary, fmt='json+date', sort_keys=True)
        return

    path.write_text(json.dumps(dictionary, indent=2, sort_keys=True) + '\n', encoding='utf-8')
    echo.echo_report(f'wrote `{path}`')


JSON = OverridableOption(
    '--json', 'as_json', is_flag=True, default=False, help='Print the result as JSON instead of a human readable table.'
)

JSON_PATH = OverridableOption(
    '--json',
    'json_path',
    type=click.Path(dir_okay=False, writable=True, path_type=pathlib.Path),
    default=None,
    help='Write the JSON report to this file; use `-` to print it.'
)

CSV_PATH = OverridableOption(
    '--csv',
    'csv_path',
    type=click.Path(dir_okay=False, writable=True, path_type=pathlib.Path),
    default=None,
    help='Write the table to this CSV file instead of printing it.'
)

MAX_P = OverridableOption(
    '--max-p', type=click.IntRange(min=2), default=None, help='Largest prime to consider.'
)

MIN_P = OverridableOption(
    '--min-p', type=click.IntRange(min=1), default=1, show_default=True, help='Smallest prime to consider.'
)

GENERATOR = OverridableOption(
    '-g',
    '--generator',
    type=click.IntRange(min=2),
    default=None,
    help='Primitive root defining the cyclotomic classes; the smallest one if not specified.'
)

DEEP = OverridableOption(
    '--deep', is_flag=True, default=False, help='Run the `deep` protocol, which includes the large admissible primes.'
)

PROTOCOL = OverridableOption(
    '--protocol', type=click.STRING, default=None, help='Name of the verification protocol, the default if not given.'
)

WORKERS = OverridableOption(
    '--workers', type=click.IntRange(min=1), default=None, help='Number of worker processes to run the checks on.'
)

ALL_GENERATORS = OverridableOption(
    '--all-generators', is_flag=True, default=False, help='Use every primitive root instead of the smallest one.'
)

ALPHABET = OverridableOption(
    '--alphabet',
    type=click.Choice(['2', '4']),
    default=None,
    help='Alphabet size of the sequence; inferred from the symbols if not specified.'
)
