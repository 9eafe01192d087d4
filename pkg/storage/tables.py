"""
Запись CSV-таблиц результатов.

Формат: первая строка — имена столбцов через запятую (без '#'),
далее числа с 17 значащими цифрами. Одинаковые данные дают
побайтно одинаковые файлы.
"""

from pathlib import Path
from typing import List, Sequence

import numpy as np

from config import get_logger

logger = get_logger(__name__)

CSV_FORMAT = "%.17g"

PROFILE_COLUMNS = ("xi", "phi", "phi_xi", "mu", "mu_xi", "mu_xixi")
ORBIT_COLUMNS = ("phi", "psi")
CRITERION_COLUMNS = ("h", "Qcal", "dQcal_dh")
EIGENFUNCTION_COLUMNS = ("xi", "psi0", "psi_zero")
SNAPSHOT_COLUMNS = ("x", "m")


def write_table(path: Path, columns: Sequence[str], data: np.ndarray) -> Path:
    """Сохранить таблицу data (строки × столбцы) в CSV.

    Args:
        path: путь к файлу (каталоги создаются)
        columns: имена столбцов
        data: двумерный массив или набор столбцов одинаковой длины

    Returns:
        путь к записанному файлу
    """
    table = np.asarray(data, dtype=float)
    if table.ndim == 1:
        table = table[:, None]
    if table.shape[1] != len(columns):
        raise ValueError(f"Столбцов {table.shape[1]}, имён {len(columns)}: {path.name}")
    path.parent.mkdir(parents=True, exist_ok=True)
    np.savetxt(path, table, fmt=CSV_FORMAT, delimiter=",", header=",".join(columns), comments="")
    logger.debug(f"Таблица {path} ({table.shape[0]} строк)")
    return path


def read_table(path: Path) -> np.ndarray:
    """Прочитать таблицу, записанную write_table (заголовок пропускается)"""
    return np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)


def read_header(path: Path) -> List[str]:
    with open(path, "r", encoding="utf-8") as f:
        return f.readline().strip().split(",")


def write_profile(out_dir: Path, profile) -> Path:
    return write_table(out_dir / "profile.csv", PROFILE_COLUMNS, profile.columns())


def write_orbits(out_dir: Path, orbits) -> List[Path]:
    """orbit_<k>.csv для каждой непустой линии уровня"""
    paths = []
    for k, orbit in enumerate(orbits):
        if orbit.is_empty:
            logger.warning(f"⚠️ Уровень e={orbit.energy:.6g} пуст, файл orbit_{k}.csv не создан")
            continue
        paths.append(write_table(out_dir / f"orbit_{k}.csv", ORBIT_COLUMNS, orbit.columns()))
    return paths


def write_criterion(out_dir: Path, rows) -> Path:
    data = np.array([[row.h, row.q, row.dq_dh] for row in rows])
    return write_table(out_dir / "criterion.csv", CRITERION_COLUMNS, data)


def write_eigenfunctions(out_dir: Path, x: np.ndarray, report) -> Path:
    """Основное состояние и мода сдвига на внутренних узлах, знак — по гребню"""
    ground = report.ground_state * np.sign(report.ground_state[np.argmax(np.abs(report.ground_state))])
    zero = report.zero_mode * np.sign(report.zero_mode[np.argmax(np.abs(report.zero_mode))])
    return write_table(out_dir / "eigenfunctions.csv", EIGENFUNCTION_COLUMNS, np.column_stack([x, ground, zero]))


def write_trace(out_dir: Path, trace) -> Path:
    columns = ("t",) + tuple(trace.names) + ("orbital_distance",)
    return write_table(out_dir / "trace.csv", columns, trace.columns())


def write_snapshots(out_dir: Path, x: np.ndarray, trace) -> List[Path]:
    return [
        write_table(out_dir / f"snapshot_{k}.csv", SNAPSHOT_COLUMNS, np.column_stack([x, m]))
        for k, (_, m) in enumerate(trace.snapshots)
    ]
