# -*- coding: utf-8 -*-
"""Command to analyze an arbitrary sequence."""
from aiida.cmdline.utils import echo
import click

from cyclotomic_sequences.analysis import analyze_sequence
from cyclotomic_sequences.seqcore import PeriodicSeq

from . import cmd_root
from .utils import ALPHABET, JSON, parameter_errors


@cmd_root.command('analyze')
@click.argument('sequence', type=click.STRING)
@ALPHABET()
@JSON()
def cmd_analyze(sequence, alphabet, as_json):
    """Print the balance, the autocorrelation and the linear complexity of SEQUENCE.

    SEQUENCE is a string of symbols, e.g. `1010001101` or `2031002312`. It is read as quaternary if any symbol exceeds
    one, unless `--alphabet` is specified.
    """
    with parameter_errors('SEQUENCE'):
        parsed = PeriodicSeq.from_string(sequence, int(alphabet) if alphabet else None)

    analysis = analyze_sequence(parsed)

    if as_json:
        echo.echo_dictionary(analysis.as_dict(), fmt='json+date', sort_keys=True)
        return

    for line in analysis.summary_lines():
        echo.echo(line)
