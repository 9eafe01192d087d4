"""
JSON-записи: отдельные величины {name, value, params, grid}, вердикты и отчёты.
"""

import json
import math
from pathlib import Path
from typing import Any, Optional

import numpy as np

from config import get_logger

logger = get_logger(__name__)


def _plain(value: Any) -> Any:
    """numpy → встроенные типы; nan/inf → None (JSON их не допускает)"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def dumps(document: Any) -> str:
    return json.dumps(_plain(document), indent=2, sort_keys=True, ensure_ascii=False)


def write_json(path: Path, document: Any) -> Path:
    """Сохранить документ (каталоги создаются)"""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(document) + "\n", encoding="utf-8")
    logger.debug(f"JSON {path}")
    return path


def read_json(path: Path) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def quantity(name: str, value: Any, params: Optional[dict] = None, grid: Optional[dict] = None) -> dict:
    """Запись одной величины"""
    return {"name": name, "value": value, "params": params or {}, "grid": grid or {}}


def write_report(out_dir: Path, checks: list, extra: Optional[dict] = None) -> Path:
    """report.json: {passed, checks: [{name, passed, value, reference}], ...}"""
    document = {
        "passed": all(check["passed"] for check in checks),
        "checks": checks,
    }
    if extra:
        document.update(extra)
    return write_json(out_dir / "report.json", document)
