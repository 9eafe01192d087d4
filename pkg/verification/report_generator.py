"""
Генератор отчётов приёмки.

Создаёт markdown-отчёт с цветовой индикацией:
- 🟢 Зелёный: основные = 100% и вспомогательные = 100%
- 🟡 Жёлтый: основные = 100% и взвешенное покрытие ≥ порога yellow
- 🔴 Красный: иначе
"""

from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Optional

from .checks import CheckResult


@dataclass
class ScenarioResult:
    """Результат сценария: пройден, если пройдены все его проверки"""
    id: str
    name: str
    priority: str
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def passed_count(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def total_count(self) -> int:
        return len(self.checks)


@dataclass
class ClassResult:
    """Результат класса сценариев"""
    id: str
    name: str
    scenarios: list[ScenarioResult]

    @property
    def passed_scenarios(self) -> int:
        return sum(1 for s in self.scenarios if s.passed)

    @property
    def total_scenarios(self) -> int:
        return len(self.scenarios)

    @property
    def coverage(self) -> float:
        if self.total_scenarios == 0:
            return 0.0
        return self.passed_scenarios / self.total_scenarios * 100

    def _count(self, priority: str, passed_only: bool) -> int:
        return sum(1 for s in self.scenarios if s.priority == priority and (s.passed or not passed_only))

    @property
    def critical_passed(self) -> int:
        return self._count('critical', True)

    @property
    def critical_total(self) -> int:
        return self._count('critical', False)

    @property
    def normal_passed(self) -> int:
        return self._count('normal', True)

    @property
    def normal_total(self) -> int:
        return self._count('normal', False)


def _percent(passed: int, total: int) -> float:
    return passed / total * 100 if total else 100.0


class ReportGenerator:
    """Сводка и markdown-отчёт по результатам проверок"""

    EMOJI = {'green': '🟢', 'yellow': '🟡', 'red': '🔴'}

    def __init__(self, thresholds: Optional[dict] = None, weights: Optional[dict] = None):
        self.thresholds = thresholds or {'green': 90, 'yellow': 70}
        self.weights = weights or {'critical': 2, 'normal': 1}

    def status(self, coverage: float, critical_coverage: float, normal_coverage: float) -> str:
        if critical_coverage == 100 and normal_coverage == 100:
            return 'green'
        if critical_coverage == 100 and coverage >= self.thresholds['yellow']:
            return 'yellow'
        return 'red'

    def weighted_coverage(self, classes: list[ClassResult]) -> float:
        """Покрытие с весами приоритетов"""
        total = weighted = 0
        for cls in classes:
            for scenario in cls.scenarios:
                weight = self.weights.get(scenario.priority, 1)
                total += weight
                if scenario.passed:
                    weighted += weight
        return weighted / total * 100 if total else 0.0

    def summary(self, classes: list[ClassResult]) -> dict:
        """Итоги для report.json"""
        critical_passed = sum(c.critical_passed for c in classes)
        critical_total = sum(c.critical_total for c in classes)
        normal_passed = sum(c.normal_passed for c in classes)
        normal_total = sum(c.normal_total for c in classes)
        coverage = self.weighted_coverage(classes)
        critical_coverage = _percent(critical_passed, critical_total)
        normal_coverage = _percent(normal_passed, normal_total)
        return {
            'status': self.status(coverage, critical_coverage, normal_coverage),
            'coverage': round(coverage, 1),
            'critical_coverage': round(critical_coverage, 1),
            'normal_coverage': round(normal_coverage, 1),
            'passed': sum(c.passed_scenarios for c in classes),
            'total': sum(c.total_scenarios for c in classes),
        }

    def generate_report(self, classes: list[ClassResult], output_path: Path, fast: bool = False) -> str:
        """Markdown-отчёт: общий статус, сводка по классам, непройденные проверки"""
        now = datetime.now()
        summary = self.summary(classes)
        main_status = self.EMOJI[summary['status']]

        lines = [
            f"# {main_status} Приёмка bchlab — {now:%Y-%m-%d}",
            "",
            f"> **Режим:** {'быстрый' if fast else 'полный'}",
            f"> **Время проверки:** {now:%H:%M:%S}",
            "",
            "## Общий статус",
            "",
            "| Метрика | Значение |",
            "|---------|----------|",
            f"| **Взвешенное покрытие** | {summary['coverage']:.1f}% |",
            f"| Сценарии | {summary['passed']}/{summary['total']} |",
            f"| **Основные** | {summary['critical_coverage']:.1f}% |",
            f"| Вспомогательные | {summary['normal_coverage']:.1f}% |",
            "",
            "---",
            "",
            "## Сводка по классам",
            "",
            "| № | Класс | Покрытие | Основные | Статус |",
            "|---|-------|----------|----------|--------|",
        ]
        for i, cls in enumerate(classes, 1):
            status = self.EMOJI[self.status(
                cls.coverage,
                _percent(cls.critical_passed, cls.critical_total),
                _percent(cls.normal_passed, cls.normal_total),
            )]
            critical = f"{cls.critical_passed}/{cls.critical_total}" if cls.critical_total else "—"
            lines.append(
                f"| {i} | {cls.name} | {cls.coverage:.0f}% ({cls.passed_scenarios}/{cls.total_scenarios}) | "
                f"{critical} | {status} |"
            )
        lines += ["", "---", "", "## Проверки", "",
                  "| ID | Проверка | Условие | Время, с | Статус |",
                  "|----|----------|---------|----------|--------|"]
        for cls in classes:
            for scenario in cls.scenarios:
                for check in scenario.checks:
                    mark = "✅" if check.passed else "❌"
                    lines.append(f"| {scenario.id} | `{check.name}` | {check.reference} | "
                                 f"{check.elapsed:.1f} | {mark} |")

        failed = [(s, c) for cls in classes for s in cls.scenarios for c in s.checks if not c.passed]
        if failed:
            lines += ["", "### Непройденные проверки", ""]
            for scenario, check in failed:
                lines.append(f"- **{scenario.id} {check.name}** ({scenario.priority}): {check.reference}")
                if check.details:
                    lines.append(f"  - Детали: {check.details}")

        lines += ["", "---", "", f"*Сгенерировано автоматически {now:%Y-%m-%d %H:%M:%S}*"]
        report = '\n'.join(lines)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(report, encoding='utf-8')
        return report
