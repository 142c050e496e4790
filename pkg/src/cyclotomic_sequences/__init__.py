# -*- coding: utf-8 -*-
"""Exact construction and analysis of binary and quaternary cyclotomic sequences with low autocorrelation."""
__version__ = '0.1.0'
