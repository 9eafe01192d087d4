"""
Приёмка лаборатории.

Содержит:
- acceptance.yaml: классы сценариев с численными проверками
- checks.py: функции проверок и CheckResult
- checker.py: загрузка YAML и прогон
- report_generator.py: сводка и markdown-отчёт
"""

from .checks import CheckResult, CHECKS, run_check
from .report_generator import ScenarioResult, ClassResult, ReportGenerator
from .checker import load_acceptance, run_checks, verify_all

__all__ = [
    'CheckResult',
    'CHECKS',
    'run_check',
    'ScenarioResult',
    'ClassResult',
    'ReportGenerator',
    'load_acceptance',
    'run_checks',
    'verify_all',
]
