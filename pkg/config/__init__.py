"""
Модуль конфигурации лаборатории.

Содержит:
- settings.py: все константы, пути, допуски, настройки логирования
"""

from .settings import (
    # Окружение
    OUT_DIR_ENV,
    DEFAULT_OUT_DIR,
    LOG_LEVEL,
    DEFAULT_JOBS,
    validate_env,

    # Логирование
    get_logger,

    # Пути
    BASE_DIR,
    VERIFICATION_DIR,
    ACCEPTANCE_PATH,

    # Режимы и статусы
    Closure,
    FrameSpeed,
    RhsForm,
    Subcommand,

    # Коды выхода
    EXIT_OK,
    EXIT_CHECK_FAILED,
    EXIT_INVALID_CONFIG,

    # Профиль
    DEFAULT_N_POINTS,
    MIN_N_POINTS,
    DEFAULT_TAIL_TOL,
    MAX_TAIL_TOL,
    TURNING_TOL,
    PROFILE_PANEL_WIDTH,
    PROFILE_GAUSS_NODES,
    PROFILE_NEWTON_STEPS,
    SHOOTING_DELTA,
    PORTRAIT_SAMPLES,

    # Функционалы
    SPEED_FD_STEP,
    REMAINDER_EPS,

    # Критерий
    GAMMA_NODES,
    MIN_GAMMA_NODES,
    SERIES_THRESHOLD,
    SERIES_TERMS,
    CRITERION_H_GRID,
    CRITERION_SPEEDS,
    CRITERION_RATIOS,
    ROUTE_TOL,
    CHAIN_TOL,

    # Спектр
    MIN_SPECTRAL_POINTS,
    NODE_FLOOR,
    ZERO_MODE_SEARCH,

    # Эволюция
    DEFAULT_DOMAIN_LENGTH,
    DEFAULT_EVOLUTION_N,
    MAX_EVOLUTION_N,
    CREST_POINTS,
    CFL_FACTOR,
    RK4_STABILITY_BUDGET,
    BLOWUP_LIMIT,
    ORBITAL_RATIO_BOUND,
    DEFAULT_SEED,
    BUMP_CENTER_RANGE,
    BUMP_WIDTH_RANGE,
)

__all__ = [
    'OUT_DIR_ENV',
    'DEFAULT_OUT_DIR',
    'LOG_LEVEL',
    'DEFAULT_JOBS',
    'validate_env',
    'get_logger',
    'BASE_DIR',
    'VERIFICATION_DIR',
    'ACCEPTANCE_PATH',
    'Closure',
    'FrameSpeed',
    'RhsForm',
    'Subcommand',
    'EXIT_OK',
    'EXIT_CHECK_FAILED',
    'EXIT_INVALID_CONFIG',
    'DEFAULT_N_POINTS',
    'MIN_N_POINTS',
    'DEFAULT_TAIL_TOL',
    'MAX_TAIL_TOL',
    'TURNING_TOL',
    'PROFILE_PANEL_WIDTH',
    'PROFILE_GAUSS_NODES',
    'PROFILE_NEWTON_STEPS',
    'SHOOTING_DELTA',
    'PORTRAIT_SAMPLES',
    'SPEED_FD_STEP',
    'REMAINDER_EPS',
    'GAMMA_NODES',
    'MIN_GAMMA_NODES',
    'SERIES_THRESHOLD',
    'SERIES_TERMS',
    'CRITERION_H_GRID',
    'CRITERION_SPEEDS',
    'CRITERION_RATIOS',
    'ROUTE_TOL',
    'CHAIN_TOL',
    'MIN_SPECTRAL_POINTS',
    'NODE_FLOOR',
    'ZERO_MODE_SEARCH',
    'DEFAULT_DOMAIN_LENGTH',
    'DEFAULT_EVOLUTION_N',
    'MAX_EVOLUTION_N',
    'CREST_POINTS',
    'CFL_FACTOR',
    'RK4_STABILITY_BUDGET',
    'BLOWUP_LIMIT',
    'ORBITAL_RATIO_BOUND',
    'DEFAULT_SEED',
    'BUMP_CENTER_RANGE',
    'BUMP_WIDTH_RANGE',
]
