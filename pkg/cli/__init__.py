"""
Command-line front end: exports, automorphism reports and the verification suite.
"""

from .cli import main
from .report import aut_summary, export_lambda, lambda_report
from .schema import SCHEMA_VERSION, CheckResult, LambdaReport, VerificationReport
from .verify import CHECK_GROUPS, FAULTS, run_suite

__all__ = [
    'main', 'run_suite', 'aut_summary', 'export_lambda', 'lambda_report',
    'SCHEMA_VERSION', 'CheckResult', 'LambdaReport', 'VerificationReport',
    'CHECK_GROUPS', 'FAULTS',
]
