# -*- coding: utf-8 -*-
"""Command to scan a construction family over a range of primes."""
import io

from aiida.cmdline.utils import echo
import click

from cyclotomic_sequences.constructions import Family
from cyclotomic_sequences.verification import resolve_family, scan_family, write_scan_csv
from cyclotomic_sequences.verification.scan import FAMILY_ALIASES

from . import cmd_root
from .utils import ALL_GENERATORS, CSV_PATH, MAX_P, MIN_P, parameter_errors

FAMILY_CHOICES = [family.value for family in Family] + list(FAMILY_ALIASES)


@cmd_root.command('scan')
@click.argument('family', type=click.Choice(FAMILY_CHOICES))
@MIN_P()
@MAX_P(required=True)
@ALL_GENERATORS()
@CSV_PATH()
def cmd_scan(family, min_p, max_p, all_generators, csv_path):
    """Construct every admissible sequence of FAMILY for the primes in the range and tabulate their properties.

    The columns are family, p, period, generator, indices, rmax_sq, balance and lincomp_f4.
    """
    with parameter_errors():
        rows = list(scan_family(resolve_family(family), min_p, max_p, all_generators))

    if csv_path is None:
        handle = io.StringIO()
        write_scan_csv(rows, handle)
        echo.echo(handle.getvalue().rstrip('\n'))
        return

    with csv_path.open('w', encoding='utf-8', newline='') as handle:
        count = write_scan_csv(rows, handle)

    echo.echo_success(f'wrote {count} rows to `{csv_path}`')
