"""Reporting package for plain-text classification reports."""

from src.reporting.formatter import ReportFormatter

__all__ = ['ReportFormatter']
