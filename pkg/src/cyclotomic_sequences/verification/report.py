# -*- coding: utf-8 -*-
"""Records of individual checks and the report that collects them."""
from __future__ import annotations

import dataclasses
import json
from typing import Any, List, Optional, Sequence, Tuple

from aiida.common import timezone

from cyclotomic_sequences import __version__

__all__ = ('SCHEMA', 'CheckRecord', 'VerificationReport', 'check')

SCHEMA = 'cyclotomic-sequences/verification-report/1'


@dataclasses.dataclass(frozen=True)
class CheckRecord:
    """The outcome of one check.

    ``anchor`` names the claim being checked, ``parameters`` the inputs that identify the instance. ``expected`` and
    ``actual`` are JSON-serializable.
    """

    name: str
    anchor: str
    parameters: dict
    expected: Any
    actual: Any
    passed: bool

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def check(name: str, anchor: str, parameters: dict, expected: Any, actual: Any, passed: Optional[bool] = None):
    """Return a :class:`CheckRecord` that passes when ``expected == actual``, unless ``passed`` is given explicitly."""
    if passed is None:
        passed = expected == actual

    return CheckRecord(
        name=name, anchor=anchor, parameters=parameters, expected=expected, actual=actual, passed=bool(passed)
    )


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """The records of a verification run of one suite, or of all of them."""

    suite: str
    records: Tuple[CheckRecord, ...]
    version: str = __version__
    timestamp: str = dataclasses.field(default_factory=lambda: timezone.now().isoformat(timespec='seconds'))
    schema: str = SCHEMA

    @classmethod
    def from_records(cls, suite: str, records: Sequence[CheckRecord]) -> VerificationReport:
        return cls(suite=suite, records=tuple(records))

    @property
    def summary(self) -> dict:
        passed = sum(1 for record in self.records if record.passed)
        return {'total': len(self.records), 'passed': passed, 'failed': len(self.records) - passed}

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def to_dict(self, include_timestamp: bool = True) -> dict:
        """Return the JSON-serializable report.

        :param include_timestamp: when ``False`` the report is fully determined by the version and the inputs.
        """
        result = {
            'schema': self.schema,
            'suite': self.suite,
            'version': self.version,
            'records': [record.as_dict() for record in self.records],
            'summary': self.summary,
        }

        if include_timestamp:
            result['timestamp'] = self.timestamp

        return result

    def to_json(self, include_timestamp: bool = True) -> str:
        """Return the report as JSON with sorted keys."""
        return json.dumps(self.to_dict(include_timestamp), indent=2, sort_keys=True)
