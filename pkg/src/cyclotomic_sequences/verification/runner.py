# -*- coding: utf-8 -*-
"""Run verification suites with the inputs of a protocol, optionally over a pool of worker processes."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
import pathlib
from typing import List, Optional, Sequence, Tuple

from aiida.common import AttributeDict
from aiida.common.lang import type_check
from aiida.common.log import AIIDA_LOGGER, LOG_LEVEL_REPORT

from cyclotomic_sequences.exceptions import ParameterError
from cyclotomic_sequences.utils.general import chunk_tasks

from .protocols.utils import ProtocolMixin
from .report import CheckRecord, VerificationReport
from .suites import SUITE_TASKS, Task, run_tasks, suite_tasks

__all__ = (
    'ALL_SUITES',
    'SUITE_NAMES',
    'VerificationProtocol',
    'get_verification_inputs',
    'run_parallel',
    'run_verification',
    'select_suites',
)

LOGGER = AIIDA_LOGGER.getChild('cyclotomic_sequences.verification')

SUITE_NAMES: Tuple[str, ...] = tuple(SUITE_TASKS)
ALL_SUITES = 'all'

#: Number of chunks handed to each worker, so that expensive tasks at the end of a suite do not idle the pool.
CHUNKS_PER_WORKER = 4


class VerificationProtocol(ProtocolMixin):
    """The protocols defining the bounds of the verification suites."""

    @classmethod
    def get_protocol_filepath(cls) -> pathlib.Path:
        """Return ``pathlib.Path`` to the ``.yaml`` file that defines the protocols."""
        from importlib_resources import files

        from . import protocols
        return files(protocols) / 'verify.yaml'


def select_suites(selector: str) -> Tuple[str, ...]:
    """Return the names of the suites selected by ``selector``, which is a suite name or ``all``.

    :raises ParameterError: if ``selector`` names no suite.
    """
    if selector == ALL_SUITES:
        return SUITE_NAMES

    if selector not in SUITE_NAMES:
        raise ParameterError(f'unknown suite `{selector}`, choose from {", ".join(SUITE_NAMES + (ALL_SUITES,))}')

    return (selector,)


def get_verification_inputs(
    protocol: Optional[str] = None,
    overrides: Optional[dict] = None,
    max_p: Optional[int] = None,
) -> AttributeDict:
    """Return the inputs of every suite for ``protocol``.

    :param protocol: name of the protocol, the default protocol if not specified.
    :param overrides: inputs that take precedence over those of the protocol.
    :param max_p: if specified, replaces the prime bound of every suite. Bounds deciding which primes are checked for
        every primitive root are left untouched.
    """
    inputs = VerificationProtocol.get_protocol_inputs(protocol, overrides)

    if max_p is not None:
        type_check(max_p, int)

        for suite in SUITE_NAMES:
            for key in inputs[suite]:
                if key.endswith('max_p') and not key.startswith('all_generators'):
                    inputs[suite][key] = max_p

    return AttributeDict(inputs)


def _run_chunk(tasks: Sequence[Task]) -> List[CheckRecord]:
    return run_tasks(tasks)


def run_parallel(tasks: Sequence[Task], workers: int = 1) -> List[CheckRecord]:
    """Run ``tasks`` and return their records in task order.

    With more than one worker the tasks are split in contiguous chunks that are run on a process pool.
    """
    type_check(workers, int)

    if workers < 1:
        raise ParameterError(f'the number of workers should be positive, got {workers}')

    if workers == 1 or len(tasks) <= 1:
        return run_tasks(tasks)

    chunks = chunk_tasks(tasks, workers * CHUNKS_PER_WORKER)

    with ProcessPoolExecutor(max_workers=workers) as executor:
        return [record for records in executor.map(_run_chunk, chunks) for record in records]


def run_verification(selector: str, inputs: AttributeDict, workers: Optional[int] = None) -> VerificationReport:
    """Run the suites selected by ``selector`` and return their report.

    :param selector: name of a suite, or ``all``.
    :param inputs: the inputs returned by :func:`get_verification_inputs`.
    :param workers: number of worker processes, taken from ``inputs`` if not specified.
    :raises ParameterError: if ``selector`` names no suite or ``workers`` is not positive.
    """
    tasks = []

    for suite in select_suites(selector):
        suite_inputs = inputs[suite]
        LOGGER.log(LOG_LEVEL_REPORT, f'running the `{suite}` suite with inputs {dict(suite_inputs)}')
        tasks.extend(suite_tasks(suite, suite_inputs))

    records = run_parallel(tasks, workers if workers is not None else inputs.get('workers', 1))
    report = VerificationReport.from_records(selector, records)

    for record in report.failures:
        LOGGER.warning(f'check `{record.name}` failed ({record.anchor}) for {record.parameters}')

    return report
