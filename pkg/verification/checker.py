"""
Прогон приёмки по acceptance.yaml.

Использование:
    python lab.py verify-all [--fast] [--out DIR]
"""

from pathlib import Path
from typing import Optional

import yaml

from config import get_logger, ACCEPTANCE_PATH
from .checks import run_check
from .report_generator import ClassResult, ReportGenerator, ScenarioResult

logger = get_logger(__name__)


def load_acceptance(path: Path = ACCEPTANCE_PATH) -> dict:
    """Загружает требования приёмки из YAML"""
    with open(path, 'r', encoding='utf-8') as f:
        return yaml.safe_load(f)


def run_checks(requirements: dict, fast: bool = False, only: Optional[set] = None) -> list[ClassResult]:
    """Выполняет все проверки классов class_*.

    Args:
        requirements: содержимое acceptance.yaml
        fast: подставлять fast_args
        only: если задано — выполнять только проверки с этими именами
    """
    results = []
    for key, value in requirements.items():
        if not key.startswith('class_'):
            continue
        logger.info(f"📋 Класс: {value.get('name', key)}")

        scenarios = []
        for scenario in value.get('scenarios', []):
            checks = [
                run_check(check, fast)
                for check in scenario.get('checks', [])
                if only is None or check.get('name') in only
            ]
            if not checks:
                continue
            scenarios.append(ScenarioResult(
                id=str(scenario.get('id', '?')),
                name=scenario.get('name', 'Без названия'),
                priority=scenario.get('priority', 'normal'),
                checks=checks,
            ))
        if scenarios:
            results.append(ClassResult(id=key, name=value.get('name', key), scenarios=scenarios))
    return results


def verify_all(out_dir: Path, fast: bool = False, path: Path = ACCEPTANCE_PATH,
               only: Optional[set] = None) -> dict:
    """Прогон приёмки с записью report.md; возвращает сводку и список проверок"""
    requirements = load_acceptance(path)
    classes = run_checks(requirements, fast, only)
    generator = ReportGenerator(
        thresholds=requirements.get('thresholds'),
        weights=requirements.get('weights'),
    )
    generator.generate_report(classes, out_dir / 'report.md', fast=fast)
    summary = generator.summary(classes)
    checks = [check for cls in classes for s in cls.scenarios for check in s.checks]
    summary['all_passed'] = all(check.passed for check in checks)

    status = generator.EMOJI[summary['status']]
    logger.info(f"{status} Приёмка: {summary['passed']}/{summary['total']} сценариев, "
                f"покрытие {summary['coverage']:.1f}%")
    return {'summary': summary, 'checks': checks}
