"""
Лагранжиан Λ = −ℋ − s·𝒬 и вариационные производные вдоль волны.

Скорость s задаётся системой отсчёта: FrameSpeed.RELATIVE даёт s = γ = c − κ,
FrameSpeed.LITERAL даёт s = c. Вдоль μ (b = 1)

    δΛ/δm = (1 − s/γ)·ln((c−φ)/γ),

так что μ — критическая точка только при s = γ.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from config import get_logger, FrameSpeed, REMAINDER_EPS
from core import DomainError, WaveParams, fd_derivative, fd_second_derivative, loglog_slope

logger = get_logger(__name__)


def frame_speed_value(params: WaveParams, frame: str = FrameSpeed.RELATIVE) -> float:
    """Численное значение s"""
    if frame == FrameSpeed.RELATIVE:
        return params.gamma
    if frame == FrameSpeed.LITERAL:
        return params.c
    raise DomainError(f"Неизвестная скорость системы отсчёта: {frame}")


# ============= ψ_𝒬 =============

@dataclass
class ChargeGradient:
    """Две формы δ𝒬/δm вдоль μ и их расхождение"""
    values: np.ndarray      # замкнутая φ-форма
    mu_form: np.ndarray     # μ-форма с разностными производными
    mismatch: float         # sup-норма разности


def charge_gradient_mu_form(mu: np.ndarray, mu_xi: np.ndarray, mu_xixi: np.ndarray, kappa: float) -> np.ndarray:
    """−½κ(−μ⁻² + 3μ⁻⁴μ_ξ² − 2μ⁻³μ_ξξ) − ½κ⁻¹"""
    return -0.5 * kappa * (-mu**-2 + 3.0 * mu**-4 * mu_xi**2 - 2.0 * mu**-3 * mu_xixi) - 0.5 / kappa


def charge_gradient_forms(profile) -> ChargeGradient:
    """ψ_𝒬 в двух формах: (1/γ)ln((c−φ)/γ) и через μ, μ_ξ, μ_ξξ"""
    params = profile.params
    closed = np.log1p(-(profile.phi - params.kappa) / params.gamma) / params.gamma
    dx = profile.dxi
    mu_form = charge_gradient_mu_form(
        profile.mu, fd_derivative(profile.mu, dx), fd_second_derivative(profile.mu, dx), params.kappa
    )
    mismatch = float(np.max(np.abs(closed - mu_form)))
    logger.debug(f"ψ_𝒬: расхождение форм {mismatch:.3e} при dξ = {dx:.4g}")
    return ChargeGradient(values=closed, mu_form=mu_form, mismatch=mismatch)


def psi_Q(profile) -> np.ndarray:
    """Вариационная производная заряда вдоль волны (замкнутая форма)"""
    return charge_gradient_forms(profile).values


# ============= δΛ/δm =============

def lagrangian_gradient_field(
    m: np.ndarray,
    dx: float,
    kappa: float,
    speed: float,
    m_x: Optional[np.ndarray] = None,
    m_xx: Optional[np.ndarray] = None,
) -> np.ndarray:
    """ln κ − ln m + ½sκ⁻¹ + ½sκ(−m⁻² + 3m⁻⁴m_x² − 2m⁻³m_xx)"""
    if np.any(m <= 0):
        raise DomainError("m > 0 нарушено в градиенте лагранжиана")
    if m_x is None:
        m_x = fd_derivative(m, dx)
    if m_xx is None:
        m_xx = fd_second_derivative(m, dx)
    return (np.log(kappa) - np.log(m) + 0.5 * speed / kappa
            + 0.5 * speed * kappa * (-m**-2 + 3.0 * m**-4 * m_x**2 - 2.0 * m**-3 * m_xx))


def lagrangian_gradient(profile, frame: str = FrameSpeed.RELATIVE) -> np.ndarray:
    """δΛ/δm вдоль μ (разностные производные второго порядка)"""
    speed = frame_speed_value(profile.params, frame)
    return lagrangian_gradient_field(profile.mu, profile.dxi, profile.params.kappa, speed)


# ============= Дискретный лагранжиан и остаток разложения =============

def _density(m: np.ndarray, p: np.ndarray, kappa: float, speed: float) -> np.ndarray:
    """F(m, p) = −[m ln(m/κ) − (m−κ)] + s[½κ⁻¹(m−κ) + ½κ(m⁻¹ + m⁻³p² − κ⁻¹)]"""
    hamiltonian = m * np.log(m / kappa) - (m - kappa)
    charge = 0.5 * (m - kappa) / kappa + 0.5 * kappa * (1.0 / m + p * p / m**3 - 1.0 / kappa)
    return -hamiltonian + speed * charge


def discrete_lagrangian(m: np.ndarray, dx: float, kappa: float, speed: float) -> float:
    """Λ_d(m) = dx·Σ F(m_i, (Dm)_i)"""
    if np.any(m <= 0):
        raise DomainError("m > 0 нарушено в дискретном лагранжиане")
    return float(dx * np.sum(_density(m, fd_derivative(m, dx), kappa, speed)))


def lagrangian_directional_derivatives(
    m: np.ndarray, h: np.ndarray, dx: float, kappa: float, speed: float
) -> Tuple[float, float]:
    """Точные первая и вторая производные Λ_d(m + εh) по ε при ε = 0"""
    p = fd_derivative(m, dx)
    q = fd_derivative(h, dx)
    f_m = -np.log(m / kappa) + speed * (0.5 / kappa - 0.5 * kappa * (m**-2 + 3.0 * m**-4 * p * p))
    f_p = speed * kappa * p / m**3
    f_mm = -1.0 / m + speed * kappa * (m**-3 + 6.0 * m**-5 * p * p)
    f_mp = -3.0 * speed * kappa * p / m**4
    f_pp = speed * kappa / m**3
    first = dx * np.sum(f_m * h + f_p * q)
    second = dx * np.sum(f_mm * h * h + 2.0 * f_mp * h * q + f_pp * q * q)
    return float(first), float(second)


@dataclass
class RemainderScaling:
    """R(ε) = Λ(μ+εh) − Λ(μ) − ε⟨δΛ, h⟩ − ½ε²⟨ℒh, h⟩ и наклон log|R| по log ε"""
    eps: np.ndarray
    remainder: np.ndarray
    slope: float
    first_variation: float
    second_variation: float


def remainder_scaling(
    profile,
    h: np.ndarray,
    eps_list: Sequence[float] = REMAINDER_EPS,
    frame: str = FrameSpeed.RELATIVE,
) -> RemainderScaling:
    """Наклон остатка разложения Λ около μ; для гладкого h ожидается 3"""
    params = profile.params
    speed = frame_speed_value(params, frame)
    eps = np.asarray(eps_list, dtype=float)
    if np.any(eps <= 0):
        raise DomainError("ε > 0 нарушено")
    mu, dx, k = profile.mu, profile.dxi, params.kappa

    base = discrete_lagrangian(mu, dx, k, speed)
    first, second = lagrangian_directional_derivatives(mu, h, dx, k, speed)

    remainders = []
    for e in eps:
        shifted = mu + e * h
        if np.any(shifted <= 0):
            raise DomainError(f"μ + εh > 0 нарушено при ε={e}: уменьшите диапазон ε")
        value = discrete_lagrangian(shifted, dx, k, speed)
        remainders.append(value - base - e * first - 0.5 * e * e * second)
    remainders = np.array(remainders)

    if not np.any(remainders):
        slope = float("nan")
    else:
        slope = loglog_slope(eps, remainders)
    logger.info(f"Остаток разложения Λ: наклон {slope:.3f} на ε ∈ [{eps.min():g}, {eps.max():g}]")
    return RemainderScaling(eps=eps, remainder=remainders, slope=slope,
                            first_variation=first, second_variation=second)
