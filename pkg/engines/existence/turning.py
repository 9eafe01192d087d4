"""
Точка поворота G, максимум μ и их чувствительности.

Поиск ведётся в переменной y = ln(γ/(c−φ)), в которой c − G = γ·e^{−y}
и M = κ·e^{b·y} вычисляются без вычитания близких чисел.
Условие E(G, 0) = E_hom принимает вид (G² − κ²)/2 = κγ·E_b(y),
E_b(y) = (e^{(b−1)y} − 1)/(b−1) (при b = 1 — просто y).
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy import optimize

from config import get_logger, TURNING_TOL
from core import NumericalError, WaveParams
from .potential import homoclinic_energy

logger = get_logger(__name__)

_Y_LIMIT = 700.0


@dataclass(frozen=True)
class WaveGeometry:
    """Характерные точки гомоклинической орбиты.

    Attributes:
        params: параметры волны
        center: центр φ_c (минимум потенциала)
        G: точка поворота (гребень φ)
        crest_gap: c − G без потери точности
        M: максимум μ
        log_ratio: y = ln(γ/(c−G))
        homoclinic_energy: E_hom
    """
    params: WaveParams
    center: float
    G: float
    crest_gap: float
    M: float
    log_ratio: float
    homoclinic_energy: float


def _expm1_ratio(y: float, b: float) -> float:
    if b == 1.0:
        return y
    return math.expm1((b - 1.0) * y) / (b - 1.0)


def _crest_balance(y: float, params: WaveParams) -> float:
    """E_hom − V(φ(y)): положительно между центром и G, отрицательно за G"""
    k, g = params.kappa, params.gamma
    phi = params.c - g * math.exp(-y)
    return 0.5 * (phi - k) * (phi + k) - k * g * _expm1_ratio(y, params.b)


def _center_log_ratio(params: WaveParams) -> float:
    """y центра: корень κe^{by} + γe^{−y} = c при y > 0"""
    k, g, b, c = params.kappa, params.gamma, params.b, params.c
    if params.is_log_case:
        return math.log(g / k)

    def balance(y: float) -> float:
        return k * math.exp(b * y) + g * math.exp(-y) - c

    lower = math.log(g / (b * k)) / (b + 1.0)
    upper = max(2.0 * lower, lower + 1.0)
    while balance(upper) <= 0.0:
        upper *= 2.0
        if upper > _Y_LIMIT:
            raise NumericalError(f"Не найден центр для {params}")
    return optimize.brentq(balance, lower, upper, xtol=1e-15, rtol=4 * np.finfo(float).eps)


@lru_cache(maxsize=256)
def wave_geometry(params: WaveParams) -> WaveGeometry:
    """Центр, точка поворота и максимум μ для допустимых параметров"""
    params.require_admissible()
    k, g, c = params.kappa, params.gamma, params.c

    y_center = _center_log_ratio(params)
    if _crest_balance(y_center, params) <= 0.0:
        raise NumericalError(f"E_hom − V(центр) ≤ 0 для {params}: нет гомоклинической орбиты")

    if params.is_log_case:
        y_upper = (c * c - k * k) / (2.0 * k * g) + 1.0
    else:
        y_upper = max(2.0 * y_center, y_center + 1.0)
        while _crest_balance(y_upper, params) >= 0.0:
            y_upper *= 2.0
            if y_upper > _Y_LIMIT:
                raise NumericalError(
                    f"Скобка для G не найдена ({params}): орбита достигает сингулярной прямой φ = c"
                )
            logger.warning(f"⚠️ Расширяем скобку точки поворота до y = {y_upper:.3g}")

    if _crest_balance(y_upper, params) >= 0.0:
        raise NumericalError(f"Скобка для G не содержит смены знака ({params})")

    center_gap = k if params.is_log_case else g * math.exp(-y_center)
    xtol = TURNING_TOL / center_gap
    y_turn = optimize.bisect(_crest_balance, y_center, y_upper, args=(params,), xtol=xtol, maxiter=200)

    crest_gap = g * math.exp(-y_turn)
    geometry = WaveGeometry(
        params=params,
        center=c - center_gap,
        G=c - crest_gap,
        crest_gap=crest_gap,
        M=k * math.exp(params.b * y_turn),
        log_ratio=y_turn,
        homoclinic_energy=homoclinic_energy(params),
    )
    logger.debug(f"G = {geometry.G:.15g}, M = {geometry.M:.6g} для {params}")
    return geometry


def center_point(params: WaveParams) -> float:
    """Центр фазового портрета (c − κ при b = 1)"""
    return wave_geometry(params).center


def turning_point(params: WaveParams) -> float:
    """Точка поворота G ∈ (c−κ, c) (для b = 1)"""
    return wave_geometry(params).G


def mu_max(params: WaveParams) -> float:
    """M = κγ^b/(c−G)^b"""
    geometry = wave_geometry(params)
    return params.kappa * (params.gamma / geometry.crest_gap) ** params.b


def mu_max_exponential(params: WaveParams) -> float:
    """Вторая форма для b = 1: M = κ·exp((G² − κ²)/(2κγ))"""
    if not params.is_log_case:
        raise NumericalError("Экспоненциальная форма M определена только для b = 1")
    G = turning_point(params)
    k, g = params.kappa, params.gamma
    return k * math.exp((G - k) * (G + k) / (2.0 * k * g))


def turning_point_sensitivities(params: WaveParams) -> Tuple[float, float]:
    """(∂G/∂c, ∂G/∂κ).

    Для b = 1 — замкнутые формулы с w = γ/(c−G):
        ∂_c G = κ(c−G)(w − ln w − 1) / ((G−κ)(G−c+κ)),
        ∂_κ G = −(c−2κ)(c−G)·ln w / ((G−c+κ)(G−κ)).
    Для b ≠ 1 — неявное дифференцирование E_hom − V(G) = 0.
    """
    geometry = wave_geometry(params)
    k, g, c, b = params.kappa, params.gamma, params.c, params.b
    G, cg = geometry.G, geometry.crest_gap

    if params.is_log_case:
        log_w = geometry.log_ratio
        w_excess = math.expm1(log_w) - log_w
        denom = (G - k) * (G - g)
        return k * cg * w_excess / denom, -(c - 2.0 * k) * cg * log_w / denom

    # D(G; c, κ) = (G² − κ²)/2 + κ[γ − γ^b (c−G)^{1−b}]/(b−1)
    ratio = g / cg
    scaled = g * ratio ** (b - 1.0)            # γ^b (c−G)^{1−b}
    d_G = G - k * ratio**b
    d_c = k * (1.0 - b * ratio ** (b - 1.0) - (1.0 - b) * ratio**b) / (b - 1.0)
    d_k = -k + (g - scaled) / (b - 1.0) + k * (-1.0 + b * ratio ** (b - 1.0)) / (b - 1.0)
    return -d_c / d_G, -d_k / d_G
