"""
Псевдоспектральная эволюция уравнения для m:

    m_t + u·m_x + b·m·u_x = 0,   u = (1 − ∂²)⁻¹m,

на периоде длины L. Классический RK4 с постоянным шагом, правило 2/3.
Счёт ведётся в системе, движущейся со скоростью V (frame_speed): там
m_t = V·m_x − (u·m_x + b·m·u_x), и бегущая волна со скоростью c = V
стационарна. Снимки возвращаются в лабораторную систему.
При b = 1 правая часть по умолчанию берётся в консервативной форме −∂(um).
"""

import math
from dataclasses import dataclass, field, asdict
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy import fft

from config import (
    get_logger,
    BLOWUP_LIMIT,
    CFL_FACTOR,
    DEFAULT_DOMAIN_LENGTH,
    DEFAULT_EVOLUTION_N,
    RK4_STABILITY_BUDGET,
    RhsForm,
)
from core import DomainError, WaveParams
from engines.conserved import invariant_names, invariants
from engines.shared import Field, dealias_mask, fourier_shift, helmholtz_multiplier, wavenumbers
from .orbital import orbital_distance

logger = get_logger(__name__)


class FailureReason:
    """Причины досрочной остановки"""
    BLOWUP = "blow-up"
    POSITIVITY = "positivity"
    STABILITY = "cfl"


@dataclass
class EvolutionConfig:
    """Параметры прогона.

    Attributes:
        b, c, kappa: параметры уравнения и волны
        domain_length: период L
        n: число узлов (степень двойки)
        dt: шаг по времени; None — CFL_FACTOR·dx/max|u₀|
        t_final: конечное время T
        dealias: правило 2/3
        record_every: запись инвариантов каждые k шагов
        snapshot_every: снимки m каждые k шагов (None — только начало и конец)
        form: "conservative" | "advective"
        frame_speed: скорость V подвижной системы отсчёта
    """
    b: float
    c: float
    kappa: float
    domain_length: float = DEFAULT_DOMAIN_LENGTH
    n: int = DEFAULT_EVOLUTION_N
    dt: Optional[float] = None
    t_final: float = 5.0
    dealias: bool = True
    record_every: int = 10
    snapshot_every: Optional[int] = None
    form: str = RhsForm.CONSERVATIVE
    frame_speed: float = 0.0

    def __post_init__(self):
        if self.n < 16 or self.n & (self.n - 1):
            raise DomainError(f"N — степень двойки ≥ 16 нарушено: N={self.n}")
        if not self.domain_length > 0:
            raise DomainError(f"L > 0 нарушено: L={self.domain_length}")
        if not self.t_final > 0:
            raise DomainError(f"T > 0 нарушено: T={self.t_final}")
        if self.dt is not None and not self.dt > 0:
            raise DomainError(f"dt > 0 нарушено: dt={self.dt}")
        if self.record_every < 1:
            raise DomainError(f"record_every ≥ 1 нарушено: {self.record_every}")
        if self.form not in (RhsForm.CONSERVATIVE, RhsForm.ADVECTIVE):
            raise DomainError(f"Неизвестная форма правой части: {self.form}")
        if not math.isfinite(self.frame_speed):
            raise DomainError(f"Скорость системы отсчёта должна быть конечной: {self.frame_speed}")

    @property
    def params(self) -> WaveParams:
        return WaveParams(b=self.b, c=self.c, kappa=self.kappa)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class EvolutionTrace:
    """Запись прогона: времена, инварианты, орбитальные расстояния, снимки"""
    names: Tuple[str, ...]
    times: List[float] = field(default_factory=list)
    values: List[List[float]] = field(default_factory=list)
    distances: List[float] = field(default_factory=list)
    snapshots: List[Tuple[float, np.ndarray]] = field(default_factory=list, repr=False)
    dt: float = 0.0
    steps: int = 0
    failed: bool = False
    reason: str = ""

    def record(self, t: float, f: Field, b: float, distance: Optional[float]):
        quantities = invariants(f, b)
        self.times.append(t)
        self.values.append([quantities[name] for name in self.names])
        self.distances.append(float("nan") if distance is None else distance)

    @property
    def final_time(self) -> float:
        return self.times[-1] if self.times else 0.0

    @property
    def drifts(self) -> Dict[str, np.ndarray]:
        """|I(t) − I(0)|/|I(0)| (абсолютный дрейф, если I(0) = 0)"""
        values = np.array(self.values)
        initial = values[0]
        scale = np.where(initial != 0.0, np.abs(initial), 1.0)
        relative = np.abs(values - initial) / scale
        return {name: relative[:, i] for i, name in enumerate(self.names)}

    @property
    def max_drift(self) -> float:
        return float(max(np.max(d) for d in self.drifts.values()))

    @property
    def max_distance(self) -> float:
        finite = [d for d in self.distances if math.isfinite(d)]
        return max(finite) if finite else float("nan")

    def columns(self) -> np.ndarray:
        """t, инварианты, orbital_distance"""
        return np.column_stack([self.times, np.array(self.values), self.distances])


def helmholtz_inverse(v: np.ndarray, length: float) -> np.ndarray:
    """u = (1 − ∂²)⁻¹v, множитель 1/(1+k²)"""
    return helmholtz_multiplier(v, length)


def rhs(
    f: Field,
    b: float,
    dealias: bool = True,
    form: str = RhsForm.CONSERVATIVE,
    frame_speed: float = 0.0,
) -> np.ndarray:
    """V·m_x − (u·m_x + b·m·u_x); при b = 1 и form="conservative" — V·m_x − ∂(u·m)"""
    k = f.wavenumbers
    m_hat = fft.fft(f.m)
    mask = dealias_mask(f.n) if dealias else np.ones(f.n)
    m_hat = m_hat * mask
    u_hat = m_hat / (1.0 + k * k)
    m = fft.ifft(m_hat).real
    u = fft.ifft(u_hat).real

    derivative = 1j * k * mask
    transport = frame_speed * fft.ifft(derivative * m_hat).real
    if b == 1.0 and form == RhsForm.CONSERVATIVE:
        return transport - fft.ifft(derivative * fft.fft(u * m)).real
    m_x = fft.ifft(derivative * m_hat).real
    u_x = fft.ifft(derivative * u_hat).real
    return transport - fft.ifft(mask * fft.fft(u * m_x + b * m * u_x)).real


def _max_speed(f: Field, frame_speed: float = 0.0) -> float:
    """max|u − V|: скорость переноса в подвижной системе"""
    return float(np.max(np.abs(helmholtz_inverse(f.m, f.length) - frame_speed)))


def _retained_wavenumber(n: int, length: float, dealias: bool) -> float:
    k = np.abs(wavenumbers(n, length))
    if dealias:
        k = k * dealias_mask(n)
    return float(k.max())


def _failure(f: Field) -> Optional[str]:
    if not np.all(np.isfinite(f.m)) or np.max(np.abs(f.m)) > BLOWUP_LIMIT:
        return FailureReason.BLOWUP
    if np.min(f.m) <= 0.0:
        return FailureReason.POSITIVITY
    return None


def evolve(f0: Field, cfg: EvolutionConfig, reference=None) -> EvolutionTrace:
    """Интегрирует до cfg.t_final классическим RK4.

    Args:
        f0: начальные данные на сетке cfg (m > 0)
        cfg: параметры прогона
        reference: профиль (WaveProfile) для орбитального расстояния

    Returns:
        EvolutionTrace; при разрушении/потере положительности/нарушении
        бюджета устойчивости — усечённая запись с failed=True
    """
    if f0.n != cfg.n or abs(f0.length - cfg.domain_length) > 1e-12 * cfg.domain_length:
        raise DomainError(f"Сетка данных (N={f0.n}, L={f0.length}) не совпадает с конфигурацией "
                          f"(N={cfg.n}, L={cfg.domain_length})")
    f0.require_positive()

    frame_speed = cfg.frame_speed
    if cfg.dt is not None:
        dt = cfg.dt
    else:
        speed = _max_speed(f0, frame_speed)
        dt = CFL_FACTOR * f0.dx / speed if speed > 0 else cfg.t_final
    steps = max(1, math.ceil(cfg.t_final / dt - 1e-9))
    dt = cfg.t_final / steps
    k_max = _retained_wavenumber(cfg.n, cfg.domain_length, cfg.dealias)

    trace = EvolutionTrace(names=invariant_names(cfg.b), dt=dt, steps=steps)

    def distance(f: Field) -> Optional[float]:
        return None if reference is None else orbital_distance(f, reference)

    def step_rate(values: np.ndarray) -> np.ndarray:
        return rhs(f0.with_values(values), cfg.b, cfg.dealias, cfg.form, frame_speed)

    def lab_frame(values: np.ndarray, t: float) -> np.ndarray:
        return fourier_shift(values, frame_speed * t, cfg.domain_length) if frame_speed else values.copy()

    f = f0
    trace.record(0.0, f, cfg.b, distance(f))
    trace.snapshots.append((0.0, f.m.copy()))

    for i in range(1, steps + 1):
        budget = dt * _max_speed(f, frame_speed) * k_max
        if budget > RK4_STABILITY_BUDGET:
            trace.failed, trace.reason = True, FailureReason.STABILITY
            logger.warning(f"⚠️ Бюджет устойчивости RK4 превышен на шаге {i}: {budget:.3f} > {RK4_STABILITY_BUDGET}")
            break

        m = f.m
        k1 = step_rate(m)
        k2 = step_rate(m + 0.5 * dt * k1)
        k3 = step_rate(m + 0.5 * dt * k2)
        k4 = step_rate(m + dt * k3)
        f = f.with_values(m + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4))
        t = i * dt

        reason = _failure(f)
        if reason:
            trace.failed, trace.reason = True, reason
            logger.warning(f"⚠️ Прогон остановлен при t={t:.4f}: {reason}")
            break

        if i % cfg.record_every == 0 or i == steps:
            trace.record(t, f, cfg.b, distance(f))
        if (cfg.snapshot_every and i % cfg.snapshot_every == 0) or i == steps:
            trace.snapshots.append((t, lab_frame(f.m, t)))

    status = "❌" if trace.failed else "✅"
    logger.info(
        f"{status} Эволюция: T={trace.final_time:.4g}, шагов {steps}, dt={dt:.4e}, "
        f"дрейф {trace.max_drift:.2e}"
    )
    return trace
