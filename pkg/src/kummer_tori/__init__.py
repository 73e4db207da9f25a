"""Exact verification engine for intersection numbers, Hodge structures and Weil-type
intermediate Jacobians of generalized Kummer varieties."""
from .report import SuiteReport, emit_report
from .suites import SUITES, run_suite

__all__ = ["SuiteReport", "emit_report", "run_suite", "SUITES"]
__version__ = "0.1.0"
