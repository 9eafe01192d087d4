"""
Ядро лаборатории: общие типы и вспомогательные функции.

Содержит:
- params.py: WaveParams и PhasePoint
- errors.py: иерархия исключений
- helpers.py: квадратуры, разностные производные, наклоны
"""

from .errors import (
    BchLabError,
    DomainError,
    NumericalError,
    ConfigError,
)

from .params import (
    WaveParams,
    PhasePoint,
)

from .helpers import (
    gauss_panels,
    gauss_interval,
    fd_derivative,
    fd_second_derivative,
    loglog_slope,
    count_sign_changes,
    relative_error,
    central_difference,
)

__all__ = [
    # errors
    'BchLabError',
    'DomainError',
    'NumericalError',
    'ConfigError',
    # params
    'WaveParams',
    'PhasePoint',
    # helpers
    'gauss_panels',
    'gauss_interval',
    'fd_derivative',
    'fd_second_derivative',
    'loglog_slope',
    'count_sign_changes',
    'relative_error',
    'central_difference',
]
