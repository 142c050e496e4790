# -*- coding: utf-8 -*-
"""Verification of the properties of the constructions, organized in suites driven by protocols."""
from .report import SCHEMA, CheckRecord, VerificationReport
from .runner import (
    ALL_SUITES,
    SUITE_NAMES,
    VerificationProtocol,
    get_verification_inputs,
    run_parallel,
    run_verification,
    select_suites,
)
from .scan import SCAN_COLUMNS, ScanRow, resolve_family, scan_family, write_scan_csv
from .suites import SUITES

__all__ = (
    'ALL_SUITES',
    'SCAN_COLUMNS',
    'SCHEMA',
    'SUITES',
    'SUITE_NAMES',
    'CheckRecord',
    'ScanRow',
    'VerificationProtocol',
    'VerificationReport',
    'get_verification_inputs',
    'resolve_family',
    'run_parallel',
    'run_verification',
    'scan_family',
    'select_suites',
    'write_scan_csv',
)
