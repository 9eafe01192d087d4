"""
Линия уровня Γ_h и преобразованный интеграл 𝒬(h).

Γ_h = {(ϕ, ψ̄): R(ϕ) − ψ̄² = h}, h = 2κ/γ ∈ (0, 2). Верхняя ветвь идёт от
точки поворота (ϕ₀, 0) до оси (0, a), a = √(2−h). Все интегралы берутся по ψ̄
квадратурой Гаусса–Лежандра; ϕ(ψ̄) находится из 2 − R(ϕ) = a² − ψ̄².

Корни ищутся в переменной t = −ln(1−ϕ), чтобы малые h (ϕ₀ близко к 1)
не теряли точность.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize

from config import get_logger, GAMMA_NODES, MIN_GAMMA_NODES
from core import DomainError, NumericalError, gauss_interval
from .special import Reduced, charge_integrand, period_integrand, reduced, slope_integrand

logger = get_logger(__name__)


def _excess_at(t: float) -> float:
    """2 − R(ϕ(t))"""
    return float(reduced(-math.expm1(-t), -t).level_excess[0])


def _solve_log_gap(target: float, upper: float, exact: bool) -> float:
    """t с 2 − R(ϕ(t)) = target на [0, upper]"""
    if target <= 0.0:
        return 0.0

    def residual(t):
        return _excess_at(t) - target

    if exact:
        return optimize.bisect(residual, 0.0, upper, xtol=1e-300, maxiter=400)
    return optimize.brentq(residual, 0.0, upper, xtol=1e-300, maxiter=500)


def _turning_log_gap(h: float) -> float:
    """t₀ = −ln(1−ϕ₀) для R(ϕ₀) = h, бисекцией"""
    target = 2.0 - h
    upper = 1.0
    while _excess_at(upper) < target:
        upper *= 2.0
        if upper > 1e12:
            raise NumericalError(f"Не удалось ограничить ϕ₀ для h={h}")
    return _solve_log_gap(target, upper, exact=True)


@dataclass
class GammaCurve:
    """Верхняя ветвь Γ_h.

    Attributes:
        h: параметр уровня
        phi0: точка поворота, R(ϕ₀) = h
        a: √(2−h), пересечение с осью ψ̄
        psi: ψ̄: 0, узлы Гаусса–Лежандра, a
        phi: ϕ(ψ̄) в тех же точках (ϕ₀ … 0)
        log_gap: ln(1−ϕ) в тех же точках
        weights: веса квадратуры по ψ̄ (ноль в концах)
    """
    h: float
    phi0: float
    a: float
    psi: np.ndarray
    phi: np.ndarray
    log_gap: np.ndarray
    weights: np.ndarray

    @property
    def n_nodes(self) -> int:
        return self.psi.size - 2

    def terms(self) -> Reduced:
        return reduced(self.phi, self.log_gap)

    def level_residual(self) -> float:
        """max |R(ϕ) − ψ̄² − h| по всем точкам"""
        r = self.terms()
        gap = (self.a - self.psi) * (self.a + self.psi)
        return float(np.max(np.abs(r.level_excess - gap)))

    def integrate(self, values: np.ndarray) -> float:
        """∫₀^a v(ψ̄) dψ̄"""
        return float(np.sum(self.weights * values))


def _require_level(h: float):
    if not (0.0 < h < 2.0):
        raise DomainError(f"h ∈ (0, 2) нарушено: h={h}")


@lru_cache(maxsize=256)
def build_gamma(h: float, n: int = GAMMA_NODES) -> GammaCurve:
    """Строит верхнюю ветвь Γ_h.

    Args:
        h: параметр уровня, 0 < h < 2
        n: число узлов Гаусса–Лежандра (≥ 128); узлы сгущаются к обоим концам

    Returns:
        GammaCurve
    """
    _require_level(h)
    if n < MIN_GAMMA_NODES:
        raise DomainError(f"n ≥ {MIN_GAMMA_NODES} нарушено: n={n}")

    a = math.sqrt(2.0 - h)
    t0 = _turning_log_gap(h)
    nodes, weights = gauss_interval(0.0, a, n)

    t = np.empty(n)
    for i, psi in enumerate(nodes):
        t[i] = _solve_log_gap((a - psi) * (a + psi), t0, exact=False)

    psi = np.concatenate([[0.0], nodes, [a]])
    log_gap = -np.concatenate([[t0], t, [0.0]])
    curve = GammaCurve(
        h=h, phi0=-math.expm1(-t0), a=a, psi=psi,
        phi=-np.expm1(log_gap), log_gap=log_gap,
        weights=np.concatenate([[0.0], weights, [0.0]]),
    )
    logger.debug(f"Γ_h построена: h={h}, ϕ₀={curve.phi0:.12g}, узлов {n}")
    return curve


def transformed_Q(h: float, n: int = GAMMA_NODES) -> float:
    """𝒬(h) = −2∮ g dψ̄ = 4∫₀^a g(ϕ(ψ̄)) dψ̄ > 0"""
    curve = build_gamma(h, n)
    return 4.0 * curve.integrate(charge_integrand(curve.terms()))


def transformed_dQ_dh(h: float, n: int = GAMMA_NODES) -> float:
    """𝒬′(h) = −(2/h)∫₀^a G·F dψ̄ < 0"""
    curve = build_gamma(h, n)
    return -2.0 / h * curve.integrate(period_integrand(curve.terms()))


def transformed_dQ_dh_direct(h: float, n: int = GAMMA_NODES) -> float:
    """𝒬′(h) = 4∫₀^a g′(ϕ)/R′(ϕ) dψ̄ (дифференцирование под знаком интеграла)"""
    curve = build_gamma(h, n)
    return 4.0 * curve.integrate(slope_integrand(curve.terms()))
