# -*- coding: utf-8 -*-
# pylint: disable=wrong-import-position,wildcard-import
"""Module for the command line interface."""
from aiida.cmdline.groups import VerdiCommandGroup
import click


@click.group(
    'cyclotomic-sequences', cls=VerdiCommandGroup, context_settings={'help_option_names': ['-h', '--help']}
)
def cmd_root():
    """Construct, analyze and verify cyclotomic binary and quaternary sequences."""


from .analyze import cmd_analyze
from .gen import cmd_gen
from .scan import cmd_scan
from .verify import cmd_verify
