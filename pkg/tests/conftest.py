# -*- coding: utf-8 -*-
# pylint: disable=redefined-outer-name
"""Fixtures shared by the tests."""
import logging
import os

from click.testing import CliRunner
import numpy
import pytest


@pytest.fixture(scope='session')
def filepath_tests():
    """Return the absolute filepath of the `tests` folder.

    .. warning:: if this file moves with respect to the `tests` folder, the implementation should change.

    :return: absolute filepath of `tests` folder which is the basepath for all test resources.
    """
    return os.path.dirname(os.path.abspath(__file__))


@pytest.fixture
def generate_sequence():
    """Return a factory for a ``PeriodicSeq`` from its text form."""

    def _generate_sequence(text, modulus=None):
        from cyclotomic_sequences.seqcore import PeriodicSeq
        return PeriodicSeq.from_string(text, modulus)

    return _generate_sequence


@pytest.fixture
def generate_random_binary():
    """Return a factory for reproducible random binary sequences."""

    def _generate_random_binary(period, seed=0, weight=None):
        from cyclotomic_sequences.seqcore import PeriodicSeq

        rng = numpy.random.default_rng([seed, period])

        if weight is None:
            values = rng.integers(0, 2, size=period)
        else:
            values = numpy.zeros(period, dtype=numpy.int64)
            values[rng.choice(period, size=weight, replace=False)] = 1

        return PeriodicSeq.from_array(values, modulus=2)

    return _generate_random_binary


@pytest.fixture
def generate_random_quaternary():
    """Return a factory for reproducible random quaternary sequences."""

    def _generate_random_quaternary(period, seed=0):
        from cyclotomic_sequences.seqcore import PeriodicSeq

        rng = numpy.random.default_rng([seed, period, 4])
        return PeriodicSeq.from_array(rng.integers(0, 4, size=period), modulus=4)

    return _generate_random_quaternary


@pytest.fixture
def generate_system():
    """Return a factory for a ``CyclotomicSystem``."""

    def _generate_system(p, e=4, generator=None):
        from cyclotomic_sequences.cyclotomy import build_system
        return build_system(p, e, generator)

    return _generate_system


@pytest.fixture
def run_cli_command():
    """Return a function that invokes a command of the command line interface and returns the result.

    The command is expected to exit with ``exit_code``, which defaults to zero.
    """

    def _run_cli_command(command, arguments=None, exit_code=0):
        result = CliRunner().invoke(command, arguments or [], catch_exceptions=False)
        assert result.exit_code == exit_code, result.output
        return result

    return _run_cli_command


@pytest.fixture
def aiida_caplog(caplog):
    """Return the ``caplog`` fixture with its handler attached to the ``aiida`` logger, which may not propagate."""
    from aiida.common.log import AIIDA_LOGGER

    AIIDA_LOGGER.addHandler(caplog.handler)
    caplog.set_level(logging.DEBUG, logger=AIIDA_LOGGER.name)

    try:
        yield caplog
    finally:
        AIIDA_LOGGER.removeHandler(caplog.handler)
