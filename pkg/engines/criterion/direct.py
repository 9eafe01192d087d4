"""
Прямой путь: функционал Q(φ, c) = ∫ w ln w − w + 1, w = γ/(c−φ), и его
производная по скорости.

В переменной x = w − 1 = (φ−κ)/(c−φ) подынтегральное выражение равно
(1+x)·ln(1+x) − x, что не теряет точность в хвостах.
"""

from dataclasses import dataclass, asdict

import numpy as np

from config import get_logger, DEFAULT_TAIL_TOL, GAMMA_NODES, SPEED_FD_STEP
from core import DomainError, WaveParams, relative_error
from engines.existence import WaveProfile, half_profile_quadrature, wave_geometry
from .gamma import transformed_Q, transformed_dQ_dh

logger = get_logger(__name__)


class QMethod:
    """Способ интегрирования Q"""
    QUADRATURE = "quadrature"
    TRAPEZOID = "trapezoid"


def _q_density(x: np.ndarray) -> np.ndarray:
    return (1.0 + x) * np.log1p(x) - x


def _require_log_case(params: WaveParams):
    if not params.is_log_case:
        raise DomainError(f"Критерий Q определён для b = 1, получено b={params.b}")


def _q_on_quadrature(params: WaveParams, tail_tol: float) -> float:
    quadrature = half_profile_quadrature(params, tail_tol)
    crest_gap = wave_geometry(params).crest_gap
    x = quadrature.offset / (crest_gap + quadrature.crest_offset)
    return float(2.0 * np.sum(_q_density(x) * quadrature.dxi))


def q_functional(profile: WaveProfile, method: str = QMethod.QUADRATURE) -> float:
    """Q(φ, c) для построенного профиля.

    Args:
        profile: профиль при b = 1
        method: "quadrature" — по панельной квадратуре полупрофиля,
                "trapezoid" — правило трапеций на сетке профиля

    Returns:
        Q > 0
    """
    params = profile.params
    _require_log_case(params)
    if method == QMethod.QUADRATURE:
        return _q_on_quadrature(params, profile.tail_tol)
    if method == QMethod.TRAPEZOID:
        x = (profile.phi - params.kappa) / (params.c - profile.phi)
        return float(profile.dxi * np.sum(_q_density(x)))
    raise DomainError(f"Неизвестный метод интегрирования Q: {method}")


def dq_dc(params: WaveParams, rel_step: float = SPEED_FD_STEP, tail_tol: float = DEFAULT_TAIL_TOL) -> float:
    """dQ/dc центральной разностью по перестроенным профилям при c ± δ, δ = rel_step·c"""
    params.require_admissible()
    _require_log_case(params)
    step = rel_step * params.c
    plus = _q_on_quadrature(params.with_speed(params.c + step), tail_tol)
    minus = _q_on_quadrature(params.with_speed(params.c - step), tail_tol)
    return (plus - minus) / (2.0 * step)


def h_of_params(params: WaveParams) -> float:
    """h = 2κ/(c−κ) ∈ (0, 2)"""
    params.require_admissible()
    _require_log_case(params)
    return params.h


def dh_dc(params: WaveParams) -> float:
    """dh/dc = −2κ/γ² < 0"""
    return -2.0 * params.kappa / params.gamma**2


@dataclass
class RouteComparison:
    """Сравнение прямого и преобразованного путей в одной точке (c, κ)"""
    c: float
    kappa: float
    h: float
    q_direct: float
    q_transformed: float
    dq_dc_direct: float
    dq_dc_chain: float

    @property
    def value_error(self) -> float:
        return relative_error(self.q_direct, self.q_transformed)

    @property
    def chain_error(self) -> float:
        return relative_error(self.dq_dc_direct, self.dq_dc_chain)

    @property
    def charge_derivative(self) -> float:
        """d𝒬(μ)/dc = −(κ/γ)·dQ/dc"""
        return -self.kappa / (self.c - self.kappa) * self.dq_dc_direct

    def to_dict(self) -> dict:
        record = asdict(self)
        record.update(value_error=self.value_error, chain_error=self.chain_error,
                      charge_derivative=self.charge_derivative)
        return record


def compare_routes(params: WaveParams, n_nodes: int = GAMMA_NODES,
                   tail_tol: float = DEFAULT_TAIL_TOL) -> RouteComparison:
    """Q и dQ/dc двумя путями"""
    params.require_admissible()
    _require_log_case(params)
    h = params.h
    result = RouteComparison(
        c=params.c,
        kappa=params.kappa,
        h=h,
        q_direct=_q_on_quadrature(params, tail_tol),
        q_transformed=transformed_Q(h, n_nodes),
        dq_dc_direct=dq_dc(params, tail_tol=tail_tol),
        dq_dc_chain=transformed_dQ_dh(h, n_nodes) * dh_dc(params),
    )
    logger.info(
        f"Пути критерия при c={params.c}, κ={params.kappa}: "
        f"ΔQ={result.value_error:.2e}, Δ(dQ/dc)={result.chain_error:.2e}"
    )
    return result
