"""
Конфигурация запуска: pydantic-модель RunConfig.

Источник значений: JSON-файл (--config), поверх него — флаги командной строки.
Недопустимые (b, c, κ) и несовместимые настройки отклоняются до запуска
с указанием нарушенного неравенства.
"""

import json
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from config import (
    get_logger,
    Closure,
    Subcommand,
    DEFAULT_OUT_DIR,
    DEFAULT_JOBS,
    DEFAULT_SEED,
    DEFAULT_TAIL_TOL,
    MAX_TAIL_TOL,
    MIN_N_POINTS,
    ORBITAL_RATIO_BOUND,
)
from core import ConfigError, WaveParams

logger = get_logger(__name__)

_SUBCOMMANDS = (
    Subcommand.PROFILE,
    Subcommand.PORTRAIT,
    Subcommand.CRITERION,
    Subcommand.SPECTRUM,
    Subcommand.EVOLVE,
    Subcommand.VERIFY_ALL,
)


class RunConfig(BaseModel):
    """Параметры одного запуска CLI.

    n и domain_length равны None, если берутся значения по умолчанию
    подкоманды (см. cli/commands.py).
    """
    model_config = ConfigDict(extra="forbid")

    subcommand: Optional[str] = None
    b: float = 1.0
    c: float = 2.0
    kappa: float = 0.4
    n: Optional[int] = None
    domain_length: Optional[float] = None
    dt: Optional[float] = None
    t_final: float = 5.0
    eps: float = 0.0
    out: Path = DEFAULT_OUT_DIR
    jobs: int = int(DEFAULT_JOBS) if DEFAULT_JOBS.isdigit() else 1
    seed: int = DEFAULT_SEED
    fast: bool = False
    sweep: bool = False
    closure: str = Closure.DIRICHLET
    energies: Optional[List[float]] = None
    snapshot_every: Optional[int] = None

    # Переопределения допусков
    tail_tol: float = DEFAULT_TAIL_TOL
    drift_tol: float = 1e-6
    distance_tol: float = 1e-4
    ratio_bound: float = ORBITAL_RATIO_BOUND

    @field_validator("subcommand")
    @classmethod
    def _known_subcommand(cls, value):
        if value is not None and value not in _SUBCOMMANDS:
            raise ValueError(f"неизвестная подкоманда {value!r}; допустимо: {', '.join(_SUBCOMMANDS)}")
        return value

    @field_validator("closure")
    @classmethod
    def _known_closure(cls, value):
        if value not in (Closure.DIRICHLET, Closure.PERIODIC):
            raise ValueError(f"замыкание {value!r} не поддерживается")
        return value

    @field_validator("n")
    @classmethod
    def _grid_size(cls, value):
        if value is not None and value < MIN_N_POINTS:
            raise ValueError(f"n ≥ {MIN_N_POINTS} нарушено: n={value}")
        return value

    @field_validator("domain_length", "dt", "t_final")
    @classmethod
    def _positive(cls, value, info):
        if value is not None and not value > 0:
            raise ValueError(f"{info.field_name} > 0 нарушено: {value}")
        return value

    @field_validator("jobs")
    @classmethod
    def _workers(cls, value):
        if value < 1:
            raise ValueError(f"jobs ≥ 1 нарушено: jobs={value}")
        return value

    @field_validator("eps")
    @classmethod
    def _perturbation(cls, value):
        if not 0.0 <= value <= 0.1:
            raise ValueError(f"0 ≤ eps ≤ 0.1 нарушено: eps={value}")
        return value

    @field_validator("tail_tol")
    @classmethod
    def _tail(cls, value):
        if not 0.0 < value <= MAX_TAIL_TOL:
            raise ValueError(f"0 < tail_tol ≤ {MAX_TAIL_TOL} нарушено: tail_tol={value}")
        return value

    @model_validator(mode="after")
    def _admissible(self):
        violation = self.params.admissibility_violation()
        if violation:
            raise ValueError(f"недопустимые (b, c, κ) = ({self.b}, {self.c}, {self.kappa}): {violation}")
        if self.subcommand == Subcommand.CRITERION and not self.params.is_log_case:
            raise ValueError(f"criterion требует b = 1, получено b={self.b}")
        return self

    @property
    def params(self) -> WaveParams:
        return WaveParams(b=self.b, c=self.c, kappa=self.kappa)


def load_run_config(overrides: dict, config_path: Optional[Path] = None) -> RunConfig:
    """Собрать RunConfig: значения из JSON-файла, поверх — непустые флаги.

    Raises:
        ConfigError: файл не читается, не JSON или значения не проходят проверку
    """
    data = {}
    if config_path is not None:
        try:
            data = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Не удалось прочитать конфигурацию {config_path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigError(f"Конфигурация {config_path} должна быть JSON-объектом")
    data.update({key: value for key, value in overrides.items() if value is not None})

    try:
        cfg = RunConfig.model_validate(data)
    except ValidationError as e:
        messages = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(messages) from e
    logger.debug(f"Конфигурация: {cfg.model_dump(mode='json')}")
    return cfg
