"""
Конфигурация и настройки лаборатории.

Все константы, пути, численные допуски и переменные окружения собраны в одном месте.
"""

import os
import logging
from pathlib import Path

# ============= ПЕРЕМЕННЫЕ ОКРУЖЕНИЯ =============

OUT_DIR_ENV = "BCHLAB_OUT"
DEFAULT_OUT_DIR = Path(os.getenv(OUT_DIR_ENV, "out"))
LOG_LEVEL = os.getenv("BCHLAB_LOG_LEVEL", "INFO").upper()
DEFAULT_JOBS = os.getenv("BCHLAB_JOBS", "1")

_KNOWN_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def validate_env():
    """Проверка корректности переменных окружения"""
    if LOG_LEVEL not in _KNOWN_LEVELS:
        raise ValueError(f"BCHLAB_LOG_LEVEL={LOG_LEVEL} не распознан! Допустимо: {', '.join(_KNOWN_LEVELS)}")
    if not DEFAULT_JOBS.isdigit() or int(DEFAULT_JOBS) < 1:
        raise ValueError(f"BCHLAB_JOBS={DEFAULT_JOBS} должен быть целым числом ≥ 1!")

# ============= ЛОГИРОВАНИЕ =============

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

def get_logger(name: str) -> logging.Logger:
    """Получить логгер для модуля"""
    return logging.getLogger(name)

# ============= ПУТИ К ФАЙЛАМ =============

BASE_DIR = Path(__file__).parent.parent
VERIFICATION_DIR = BASE_DIR / "verification"
ACCEPTANCE_PATH = VERIFICATION_DIR / "acceptance.yaml"

# ============= РЕЖИМЫ =============

class Closure:
    """Замыкание дискретного оператора на краях области"""
    DIRICHLET = "dirichlet"
    PERIODIC = "periodic"

class FrameSpeed:
    """Скорость в лагранжиане Λ = −ℋ − s·𝒬"""
    RELATIVE = "relative"   # s = c − κ
    LITERAL = "literal"     # s = c

class RhsForm:
    """Форма правой части уравнения для m"""
    CONSERVATIVE = "conservative"
    ADVECTIVE = "advective"

class Subcommand:
    """Подкоманды CLI"""
    PROFILE = "profile"
    PORTRAIT = "portrait"
    CRITERION = "criterion"
    SPECTRUM = "spectrum"
    EVOLVE = "evolve"
    VERIFY_ALL = "verify-all"

# ============= КОДЫ ВЫХОДА =============

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_CONFIG = 2

# ============= ПРОФИЛЬ ВОЛНЫ =============

DEFAULT_N_POINTS = 4096
MIN_N_POINTS = 64
DEFAULT_TAIL_TOL = 1e-10
MAX_TAIL_TOL = 1e-6
TURNING_TOL = 1e-13            # допуск бисекции G по φ
PROFILE_PANEL_WIDTH = 0.02     # ширина панели по параметру τ
PROFILE_GAUSS_NODES = 10       # узлов Гаусса–Лежандра на панель
PROFILE_NEWTON_STEPS = 2       # уточнение τ(ξ) после сплайна
SHOOTING_DELTA = 1e-8
PORTRAIT_SAMPLES = 400

# ============= ФУНКЦИОНАЛЫ =============

SPEED_FD_STEP = 1e-4           # относительный шаг по c
REMAINDER_EPS = (1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2, 1e-1)

# ============= КРИТЕРИЙ =============

GAMMA_NODES = 256
MIN_GAMMA_NODES = 128
SERIES_THRESHOLD = 0.1         # ниже — степенные ряды для f, g, G, F
SERIES_TERMS = 24
CRITERION_H_GRID = tuple(round(0.1 + 0.2 * k, 1) for k in range(10))
CRITERION_SPEEDS = (1.0, 2.0, 4.0)
CRITERION_RATIOS = (0.05, 0.2, 0.45)   # κ/c
ROUTE_TOL = 1e-6                # совпадение Q и 𝒬(h)
CHAIN_TOL = 1e-4                # dQ/dc = 𝒬′(h)·dh/dc

# ============= СПЕКТР =============

MIN_SPECTRAL_POINTS = 256
NODE_FLOOR = 1e-9
ZERO_MODE_SEARCH = 6           # сколько нижних собственных векторов проверять

# ============= ЭВОЛЮЦИЯ =============

DEFAULT_DOMAIN_LENGTH = 80.0
DEFAULT_EVOLUTION_N = 4096
MAX_EVOLUTION_N = 32768
CREST_POINTS = 12              # узлов сетки на ширину гребня
CFL_FACTOR = 0.5               # dt = CFL_FACTOR·dx/max|u|
RK4_STABILITY_BUDGET = 2.8     # dt·max|u|·k_max
BLOWUP_LIMIT = 1e6
ORBITAL_RATIO_BOUND = 5.0
DEFAULT_SEED = 20240917
BUMP_CENTER_RANGE = (-10.0, -6.0)   # задний склон, позади гребня
BUMP_WIDTH_RANGE = (0.5, 1.0)
