# -*- coding: utf-8 -*-
"""Tests for the :mod:`cyclotomic_sequences.verification.report` module."""
import json

from cyclotomic_sequences import __version__
from cyclotomic_sequences.verification.report import SCHEMA, VerificationReport, check


def test_check():
    """Test that ``check`` compares the expected and actual values unless told otherwise."""
    assert check('name', 'anchor', {'p': 5}, [1, 2], [1, 2]).passed
    assert not check('name', 'anchor', {'p': 5}, [1, 2], [2, 1]).passed
    assert check('name', 'anchor', {'p': 5}, 'match', 'mismatch', passed=True).passed


def test_report():
    """Test the summary and failures of a ``VerificationReport``."""
    records = [
        check('first', 'anchor', {'p': 5}, 0, 0),
        check('second', 'anchor', {'p': 13}, 0, 2),
        check('third', 'anchor', {'p': 17}, True, True),
    ]
    report = VerificationReport.from_records('order8', records)

    assert not report.passed
    assert report.summary == {'total': 3, 'passed': 2, 'failed': 1}
    assert [record.name for record in report.failures] == ['second']
    assert VerificationReport.from_records('order8', records[::2]).passed


def test_to_dict():
    """Test the serialized report with and without timestamp."""
    report = VerificationReport.from_records('chung', [check('first', 'anchor', {'period': 4}, 0, 0)])
    result = report.to_dict(include_timestamp=False)

    assert sorted(result) == ['records', 'schema', 'suite', 'summary', 'version']
    assert result['schema'] == SCHEMA
    assert result['version'] == __version__
    assert result['records'] == [{
        'name': 'first',
        'anchor': 'anchor',
        'parameters': {'period': 4},
        'expected': 0,
        'actual': 0,
        'passed': True,
    }]
    assert 'timestamp' in report.to_dict()


def test_to_json():
    """Test that the JSON report has sorted keys and is deterministic without timestamp."""
    records = [check('first', 'anchor', {'p': 5}, 0, 0)]
    content = VerificationReport.from_records('lincomp', records).to_json(include_timestamp=False)

    assert json.loads(content)['summary'] == {'total': 1, 'passed': 1, 'failed': 0}
    assert list(json.loads(content)) == sorted(json.loads(content))
    assert content == VerificationReport.from_records('lincomp', records).to_json(include_timestamp=False)
