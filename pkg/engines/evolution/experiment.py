"""
Эксперимент орбитальной устойчивости: μ + ε·(добавка на заднем склоне) → эволюция
в системе, движущейся со скоростью волны → max_t inf_s ‖m(t) − μ(· − s)‖_{H¹}.

Число узлов по умолчанию выбирается по ширине гребня: на неё приходится
не меньше CREST_POINTS шагов сетки.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from config import (
    get_logger,
    DEFAULT_DOMAIN_LENGTH,
    CREST_POINTS,
    DEFAULT_EVOLUTION_N,
    DEFAULT_SEED,
    MAX_EVOLUTION_N,
    ORBITAL_RATIO_BOUND,
)
from core import DomainError, WaveParams
from engines.existence import WaveProfile, build_profile, wave_geometry
from engines.shared import h1_norm
from .orbital import gaussian_bump
from .solver import EvolutionConfig, EvolutionTrace, evolve

logger = get_logger(__name__)

_MAX_EPS = 1e-1
_TRAVELING_BOUND = 1e-6


def crest_width(params: WaveParams) -> float:
    """Ширина гребня √(2(c − G)/(M − G)): расстояние, на котором c − φ удваивается"""
    geometry = wave_geometry(params)
    return math.sqrt(2.0 * geometry.crest_gap / (geometry.M - geometry.G))


def resolved_grid_size(params: WaveParams, domain_length: float = DEFAULT_DOMAIN_LENGTH) -> int:
    """Наименьшая степень двойки ≥ DEFAULT_EVOLUTION_N с dx ≤ ширина гребня / CREST_POINTS.

    Raises:
        DomainError: если нужно больше MAX_EVOLUTION_N узлов
    """
    params.require_admissible()
    needed = CREST_POINTS * domain_length / crest_width(params)
    n = DEFAULT_EVOLUTION_N
    while n < needed:
        n *= 2
    if n > MAX_EVOLUTION_N:
        raise DomainError(
            f"Гребень недоразрешён: для {params} при L={domain_length:g} нужно N={n} > {MAX_EVOLUTION_N}"
        )
    return n


@dataclass
class StabilityReport:
    """Итог эксперимента"""
    params: WaveParams
    eps: float
    t_final: float
    seed: int
    max_distance: float
    config: EvolutionConfig
    trace: EvolutionTrace = field(repr=False)
    profile: WaveProfile = field(repr=False)

    @property
    def ratio(self) -> float:
        """max расстояние / ε (nan при ε = 0)"""
        return self.max_distance / self.eps if self.eps > 0 else float("nan")

    @property
    def relative_distance(self) -> float:
        """max расстояние / ‖μ − κ‖_{H¹}"""
        excess = self.profile.mu - self.params.kappa
        return self.max_distance / h1_norm(excess, self.profile.domain_length)

    @property
    def bounded(self) -> bool:
        if self.trace.failed:
            return False
        if self.eps == 0.0:
            return self.max_distance < _TRAVELING_BOUND
        return self.ratio < ORBITAL_RATIO_BOUND

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "eps": self.eps,
            "t_final": self.t_final,
            "seed": self.seed,
            "max_distance": self.max_distance,
            "relative_distance": self.relative_distance,
            "ratio": None if math.isnan(self.ratio) else self.ratio,
            "bounded": self.bounded,
            "failed": self.trace.failed,
            "reason": self.trace.reason,
            "max_drift": self.trace.max_drift,
            "dt": self.trace.dt,
            "steps": self.trace.steps,
            "config": self.config.to_dict(),
        }


def stability_experiment(
    params: WaveParams,
    eps: float,
    t_final: float,
    domain_length: float = DEFAULT_DOMAIN_LENGTH,
    n: Optional[int] = None,
    dt: Optional[float] = None,
    seed: int = DEFAULT_SEED,
    record_every: int = 10,
    snapshot_every: Optional[int] = None,
) -> StabilityReport:
    """Возмущённый прогон из волны μ.

    Args:
        params: допустимые (b, c, κ)
        eps: H¹-размер возмущения, 0 ≤ ε ≤ 0.1
        t_final: время T
        domain_length, dt: длина области и шаг
        n: число узлов; None — resolved_grid_size
        seed: зерно numpy.random.default_rng (центр и ширина добавки)

    Returns:
        StabilityReport
    """
    params.require_admissible()
    if not 0.0 <= eps <= _MAX_EPS:
        raise DomainError(f"0 ≤ ε ≤ {_MAX_EPS} нарушено: ε={eps}")

    if n is None:
        n = resolved_grid_size(params, domain_length)
    elif n * crest_width(params) < CREST_POINTS * domain_length:
        logger.warning(
            f"⚠️ N={n} недоразрешает гребень {params}: на ширину гребня меньше {CREST_POINTS} узлов"
        )

    profile = build_profile(params, n_points=n, domain_length=domain_length)
    base = profile.to_field()
    rng = np.random.default_rng(seed)
    perturbed = base.with_values(base.m + gaussian_bump(base.x, domain_length, eps, rng=rng))

    cfg = EvolutionConfig(
        b=params.b, c=params.c, kappa=params.kappa, domain_length=domain_length,
        n=n, dt=dt, t_final=t_final, record_every=record_every, snapshot_every=snapshot_every,
        frame_speed=params.c,
    )
    trace = evolve(perturbed, cfg, reference=profile)
    report = StabilityReport(
        params=params, eps=eps, t_final=t_final, seed=seed,
        max_distance=trace.max_distance, config=cfg, trace=trace, profile=profile,
    )
    status = "✅" if report.bounded else "❌"
    logger.info(
        f"{status} Устойчивость при {params}: ε={eps:g}, max расстояние {report.max_distance:.3e}, "
        f"отношение {report.ratio:.3f}"
    )
    return report
