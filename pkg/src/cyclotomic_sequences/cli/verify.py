# -*- coding: utf-8 -*-
"""Command to run the verification suites."""
from aiida.cmdline.utils import echo
import click

from cyclotomic_sequences.verification import (
    ALL_SUITES,
    SUITE_NAMES,
    VerificationProtocol,
    get_verification_inputs,
    run_verification,
)

from . import cmd_root
from .utils import DEEP, JSON_PATH, MAX_P, PROTOCOL, WORKERS, echo_json, parameter_errors


@cmd_root.command('verify')
@click.argument('suite', type=click.Choice(SUITE_NAMES + (ALL_SUITES,)))
@MAX_P(help='Largest prime checked by every suite, overriding the bound of the protocol.')
@DEEP()
@PROTOCOL()
@WORKERS()
@JSON_PATH()
def cmd_verify(suite, max_p, deep, protocol, workers, json_path):
    """Run the checks of SUITE and report the number of failures.

    The bounds of the checks are defined by the verification protocol. The command exits with status 1 if any check
    fails.
    """
    if deep:
        if protocol is not None and protocol != 'deep':
            raise click.BadParameter(f'cannot combine `--deep` with the protocol `{protocol}`', param_hint='--protocol')
        protocol = 'deep'

    if protocol is not None and protocol not in VerificationProtocol.get_available_protocols():
        choices = ', '.join(VerificationProtocol.get_available_protocols())
        raise click.BadParameter(f'unknown protocol `{protocol}`, choose from {choices}', param_hint='--protocol')

    with parameter_errors():
        inputs = get_verification_inputs(protocol, max_p=max_p)
        report = run_verification(suite, inputs, workers)

    if json_path is not None:
        echo_json(report.to_dict(), json_path)

    summary = report.summary

    if not report.passed:
        echo.echo_critical(f'{summary["failed"]} of {summary["total"]} checks of `{suite}` failed')

    echo.echo_success(f'all {summary["total"]} checks of `{suite}` passed')
