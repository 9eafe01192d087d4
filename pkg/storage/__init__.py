"""
Хранение результатов: CSV-таблицы и JSON-записи.

Модули:
- tables.py: профили, орбиты, таблица критерия, собственные функции, трассы эволюции
- records.py: JSON-величины, вердикты, report.json
"""

from .tables import (
    CSV_FORMAT,
    PROFILE_COLUMNS,
    ORBIT_COLUMNS,
    CRITERION_COLUMNS,
    EIGENFUNCTION_COLUMNS,
    SNAPSHOT_COLUMNS,
    write_table,
    read_table,
    read_header,
    write_profile,
    write_orbits,
    write_criterion,
    write_eigenfunctions,
    write_trace,
    write_snapshots,
)

from .records import (
    dumps,
    write_json,
    read_json,
    quantity,
    write_report,
)

__all__ = [
    # tables
    'CSV_FORMAT',
    'PROFILE_COLUMNS',
    'ORBIT_COLUMNS',
    'CRITERION_COLUMNS',
    'EIGENFUNCTION_COLUMNS',
    'SNAPSHOT_COLUMNS',
    'write_table',
    'read_table',
    'read_header',
    'write_profile',
    'write_orbits',
    'write_criterion',
    'write_eigenfunctions',
    'write_trace',
    'write_snapshots',
    # records
    'dumps',
    'write_json',
    'read_json',
    'quantity',
    'write_report',
]
