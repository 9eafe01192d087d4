"""
Сохраняющиеся функционалы уравнения для m.

b = 1:  ℋ = ∫ m(ln m − ln κ) − (m − κ),
        𝒬₁ = ∫ m − κ,  𝒬₂ = ∫ m⁻³(m² + m_x²) − κ⁻¹,
        заряд 𝒬 = −½κ⁻¹𝒬₁ − ½κ𝒬₂.
b ≠ 1:  ℰ, ℱ₁, ℱ₂.

Интегралы — правило трапеций на периодической сетке, m_x — спектрально.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from config import get_logger, SPEED_FD_STEP, DEFAULT_N_POINTS, DEFAULT_TAIL_TOL
from core import DomainError, WaveParams
from engines.shared import Field

logger = get_logger(__name__)


def hamiltonian_H(f: Field) -> float:
    """ℋ(m) ≥ 0, ноль только при m ≡ κ"""
    f.require_positive()
    w = f.m
    integrand = w * np.log(w / f.kappa) - (w - f.kappa)
    return f.integrate(integrand)


def q1(f: Field) -> float:
    """𝒬₁ = ∫ m − κ"""
    f.require_positive()
    return f.integrate(f.m - f.kappa)


def q2(f: Field) -> float:
    """𝒬₂ = ∫ m⁻³(m² + m_x²) − κ⁻¹"""
    f.require_positive()
    m = f.m
    m_x = f.derivative()
    return f.integrate((m * m + m_x * m_x) / m**3 - 1.0 / f.kappa)


def charge_Q(f: Field) -> float:
    """Заряд 𝒬 = −½κ⁻¹𝒬₁ − ½κ𝒬₂"""
    return -0.5 * q1(f) / f.kappa - 0.5 * f.kappa * q2(f)


def conserved_family_bneq1(f: Field, b: float) -> Tuple[float, float, float]:
    """(ℰ, ℱ₁, ℱ₂) для b ≠ 1"""
    if b == 1.0:
        raise DomainError("b ≠ 1 нарушено: для b = 1 используйте ℋ, 𝒬₁, 𝒬₂")
    f.require_positive()
    m, k = f.m, f.kappa
    m_x = f.derivative()
    scale = 1.0 / (b - 1.0)
    mass = scale * f.integrate(m - k)
    first = scale * f.integrate(m ** (1.0 / b) - k ** (1.0 / b))
    second = scale * f.integrate((m_x**2 / (b * b * m * m) + 1.0) * m ** (-1.0 / b) - k ** (-1.0 / b))
    return mass, first, second


def log_limit_integrand(m, b: float):
    """(b−1)⁻¹(m − m^{1/b}) → m ln m при b → 1"""
    m = np.asarray(m, dtype=float)
    if b == 1.0:
        return m * np.log(m)
    return -m * np.expm1((1.0 / b - 1.0) * np.log(m)) / (b - 1.0)


def invariant_names(b: float) -> Tuple[str, str, str]:
    """Имена отслеживаемых величин"""
    return ("H", "Q1", "Q2") if b == 1.0 else ("E", "F1", "F2")


def invariants(f: Field, b: float) -> Dict[str, float]:
    """Значения трёх сохраняющихся величин для данного b"""
    if b == 1.0:
        return {"H": hamiltonian_H(f), "Q1": q1(f), "Q2": q2(f)}
    mass, first, second = conserved_family_bneq1(f, b)
    return {"E": mass, "F1": first, "F2": second}


@dataclass
class SpeedDerivative:
    """Центральная разность по c и оценка Ричардсона (шаг 2δ)"""
    value: float
    coarse: float
    step: float

    @property
    def richardson(self) -> float:
        """(4·D(δ) − D(2δ))/3"""
        return (4.0 * self.value - self.coarse) / 3.0

    @property
    def richardson_gap(self) -> float:
        return abs(self.value - self.coarse) / max(abs(self.value), 1e-300)


def charge_speed_derivative(
    params: WaveParams,
    n_points: int = DEFAULT_N_POINTS,
    domain_length: Optional[float] = None,
    tail_tol: float = DEFAULT_TAIL_TOL,
    rel_step: float = SPEED_FD_STEP,
) -> SpeedDerivative:
    """d𝒬(μ)/dc центральной разностью по профилям на общей сетке"""
    from engines.existence import build_profile, default_domain_length

    params.require_admissible()
    if domain_length is None:
        domain_length = default_domain_length(params, tail_tol)
    step = rel_step * params.c

    def charge_at(c: float) -> float:
        profile = build_profile(params.with_speed(c), n_points, tail_tol, domain_length)
        return charge_Q(profile.to_field())

    plus, minus = charge_at(params.c + step), charge_at(params.c - step)
    plus2, minus2 = charge_at(params.c + 2 * step), charge_at(params.c - 2 * step)
    result = SpeedDerivative(value=(plus - minus) / (2 * step), coarse=(plus2 - minus2) / (4 * step), step=step)
    logger.info(f"d𝒬/dc = {result.value:.10g} (Ричардсон: {result.richardson:.10g}) для {params}")
    return result
