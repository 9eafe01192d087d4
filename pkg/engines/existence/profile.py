"""
Построение профиля уединённой волны квадратурой энергии.

Полупрофиль ξ ≥ 0 параметризуется как φ = κ + (G−κ)·e^{−τ²}, τ ∈ [0, τ_max].
Около гребня это замена φ = G − t² с t² = (G−κ)(1 − e^{−τ²}), снимающая
корневую особенность, а в хвосте она разворачивает логарифмическую
расходимость ξ(φ) у седла. Интеграл

    ξ(τ) = ∫ 2τ(φ−κ)/√(2(E_hom − V(φ))) dτ

считается составной квадратурой Гаусса–Лежандра; τ(ξ) восстанавливается
эрмитовым сплайном с точными наклонами, уточняется шагами Ньютона и
переносится на равномерную сетку.
Производные φ_ξ и μ берутся из первого интеграла, а не численным
дифференцированием.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy import integrate, interpolate

from config import (
    get_logger,
    DEFAULT_N_POINTS,
    DEFAULT_TAIL_TOL,
    MAX_TAIL_TOL,
    MIN_N_POINTS,
    PROFILE_GAUSS_NODES,
    PROFILE_NEWTON_STEPS,
    PROFILE_PANEL_WIDTH,
    SHOOTING_DELTA,
)
from core import DomainError, NumericalError, WaveParams, gauss_panels
from engines.shared import Field
from .potential import gap_crest, gap_tail, mu_of_phi
from .turning import WaveGeometry, wave_geometry

logger = get_logger(__name__)


@dataclass
class ProfileQuadrature:
    """Квадратура полупрофиля ξ ≥ 0.

    Attributes:
        tau: узлы по τ (плоский массив)
        offset: φ − κ в узлах
        crest_offset: G − φ в узлах
        dxi: веса по ξ (Σ dxi = half_width)
        tau_edges: границы панелей
        xi_edges: ξ на границах панелей
        slope_edges: dξ/dτ на границах панелей
    """
    tau: np.ndarray
    offset: np.ndarray
    crest_offset: np.ndarray
    dxi: np.ndarray
    tau_edges: np.ndarray
    xi_edges: np.ndarray
    slope_edges: np.ndarray
    kappa: float

    @property
    def half_width(self) -> float:
        """ξ, на котором φ − κ = tail_tol"""
        return float(self.xi_edges[-1])

    @property
    def phi(self) -> np.ndarray:
        return self.kappa + self.offset

    def integrate(self, integrand: Callable[[np.ndarray], np.ndarray]) -> float:
        """∫_ℝ F(φ(ξ)) dξ по обеим половинам профиля (без хвоста за tail_tol)"""
        return float(2.0 * np.sum(integrand(self.phi) * self.dxi))


@dataclass
class WaveProfile:
    """Профиль уединённой волны на равномерной симметричной сетке.

    Сетка ξ_i = −L/2 + i·dξ, i = 0..N−1, гребень в узле N/2.
    """
    xi: np.ndarray
    phi: np.ndarray
    phi_xi: np.ndarray
    mu: np.ndarray
    mu_xi: np.ndarray
    mu_xixi: np.ndarray
    params: WaveParams
    G: float
    M: float
    domain_length: float
    tail_tol: float
    geometry: WaveGeometry
    quadrature: ProfileQuadrature = field(repr=False)

    @property
    def n_points(self) -> int:
        return self.xi.size

    @property
    def dxi(self) -> float:
        return self.domain_length / self.n_points

    @property
    def phi_xixi(self) -> np.ndarray:
        """φ_ξξ = φ − μ"""
        return self.phi - self.mu

    @property
    def crest_index(self) -> int:
        return self.n_points // 2

    def grid_info(self) -> dict:
        return {"n_points": self.n_points, "domain_length": self.domain_length,
                "dxi": self.dxi, "tail_tol": self.tail_tol}

    def columns(self) -> np.ndarray:
        """Столбцы xi, phi, phi_xi, mu, mu_xi, mu_xixi"""
        return np.column_stack([self.xi, self.phi, self.phi_xi, self.mu, self.mu_xi, self.mu_xixi])

    def to_field(self) -> Field:
        return Field.from_profile(self)


def _gap_from_offsets(d: np.ndarray, s: np.ndarray, geometry: WaveGeometry) -> np.ndarray:
    """E_hom − V(φ) по смещениям d = φ − κ и s = G − φ (берётся форма у ближайшего конца)"""
    params = geometry.params
    near_crest = s <= d
    gap = np.empty_like(d)
    gap[near_crest] = gap_crest(s[near_crest], geometry.G, geometry.crest_gap, geometry.M, params)
    gap[~near_crest] = gap_tail(d[~near_crest], params)
    return np.maximum(gap, 0.0)


def _panel_edges(geometry: WaveGeometry, tau_max: float) -> np.ndarray:
    """Панели по τ: геометрическое сгущение к гребню, далее равномерный шаг"""
    params = geometry.params
    amplitude = geometry.G - params.kappa
    crest_scale = math.sqrt(min(1.0, geometry.crest_gap / amplitude))
    width = PROFILE_PANEL_WIDTH
    finest = min(width, 0.25 * crest_scale)
    edges = [0.0]
    step = finest
    while edges[-1] + step < width and edges[-1] + step < tau_max:
        edges.append(edges[-1] + step)
        step *= 2.0
    uniform = np.arange(edges[-1] + width, tau_max, width)
    edges = np.concatenate([edges, uniform, [tau_max]])
    # слишком короткая последняя панель сливается с предыдущей
    if edges.size > 2 and edges[-1] - edges[-2] < 0.1 * width:
        edges = np.delete(edges, -2)
    return edges


def _xi_slope(tau: np.ndarray, geometry: WaveGeometry) -> np.ndarray:
    """dξ/dτ = 2τ(φ−κ)/√(2·gap), с пределом √(2(G−κ)/V′(G)) при τ = 0"""
    amplitude = geometry.G - geometry.params.kappa
    d = amplitude * np.exp(-tau * tau)
    s = -amplitude * np.expm1(-tau * tau)
    slope = np.empty_like(tau)
    at_crest = tau == 0.0
    regular = ~at_crest
    gap = _gap_from_offsets(d[regular], s[regular], geometry)
    slope[regular] = 2.0 * tau[regular] * d[regular] / np.sqrt(2.0 * gap)
    slope[at_crest] = math.sqrt(2.0 * amplitude / (geometry.M - geometry.G))
    return slope


def _xi_of_tau(tau: np.ndarray, quadrature: ProfileQuadrature, geometry: WaveGeometry) -> np.ndarray:
    """ξ(τ): значение на левой границе панели плюс интеграл Гаусса–Лежандра внутри панели"""
    edges = quadrature.tau_edges
    panel = np.clip(np.searchsorted(edges, tau, side="right") - 1, 0, edges.size - 2)
    left = edges[panel]
    ref_nodes, ref_weights = np.polynomial.legendre.leggauss(PROFILE_GAUSS_NODES)
    half = 0.5 * (tau - left)
    nodes = left[:, None] + half[:, None] * (ref_nodes[None, :] + 1.0)
    slopes = _xi_slope(nodes.ravel(), geometry).reshape(nodes.shape)
    return quadrature.xi_edges[panel] + half * (slopes @ ref_weights)


def _refine_tau(
    tau: np.ndarray, r: np.ndarray, quadrature: ProfileQuadrature, geometry: WaveGeometry
) -> np.ndarray:
    """Шаги Ньютона по ξ(τ) = r от начального приближения сплайна"""
    tau_max = float(quadrature.tau_edges[-1])
    for _ in range(PROFILE_NEWTON_STEPS):
        residual = _xi_of_tau(tau, quadrature, geometry) - r
        tau = np.clip(tau - residual / _xi_slope(tau, geometry), 0.0, tau_max)
    return tau


def half_profile_quadrature(params: WaveParams, tail_tol: float = DEFAULT_TAIL_TOL) -> ProfileQuadrature:
    """Составная квадратура ξ(τ) от гребня до φ − κ = tail_tol"""
    geometry = wave_geometry(params)
    amplitude = geometry.G - params.kappa
    if tail_tol >= amplitude:
        raise DomainError(f"tail_tol < G − κ нарушено: tail_tol={tail_tol}, G−κ={amplitude}")

    tau_max = math.sqrt(math.log(amplitude / tail_tol))
    edges = _panel_edges(geometry, tau_max)
    nodes, weights = gauss_panels(edges, PROFILE_GAUSS_NODES)

    slopes = _xi_slope(nodes.ravel(), geometry).reshape(nodes.shape)
    if not np.all(np.isfinite(slopes)):
        raise NumericalError(f"Квадратура профиля не сошлась для {params}: нечисловые значения dξ/dτ")
    dxi = slopes * weights
    xi_edges = np.concatenate([[0.0], np.cumsum(dxi.sum(axis=1))])

    tau = nodes.ravel()
    return ProfileQuadrature(
        tau=tau,
        offset=amplitude * np.exp(-tau * tau),
        crest_offset=-amplitude * np.expm1(-tau * tau),
        dxi=dxi.ravel(),
        tau_edges=edges,
        xi_edges=xi_edges,
        slope_edges=_xi_slope(edges, geometry),
        kappa=params.kappa,
    )


def default_domain_length(params: WaveParams, tail_tol: float = DEFAULT_TAIL_TOL) -> float:
    """L = 2·⌈ξ_tail + 2/λ⌉: на краях φ − κ < tail_tol"""
    quadrature = half_profile_quadrature(params, tail_tol)
    return 2.0 * math.ceil(quadrature.half_width + 2.0 / params.decay_rate)


def build_profile(
    params: WaveParams,
    n_points: int = DEFAULT_N_POINTS,
    tail_tol: float = DEFAULT_TAIL_TOL,
    domain_length: Optional[float] = None,
) -> WaveProfile:
    """Строит профиль φ, μ и производные на сетке из n_points узлов.

    Args:
        params: допустимые (b, c, κ)
        n_points: число узлов (≥ 64)
        tail_tol: порог φ − κ, где обрывается квадратура (0 < tail_tol ≤ 1e−6)
        domain_length: длина области L; по умолчанию — из условия φ(±L/2) − κ < tail_tol

    Returns:
        WaveProfile
    """
    params.require_admissible()
    if n_points < MIN_N_POINTS:
        raise DomainError(f"n_points ≥ {MIN_N_POINTS} нарушено: n_points={n_points}")
    if not 0.0 < tail_tol <= MAX_TAIL_TOL:
        raise DomainError(f"0 < tail_tol ≤ {MAX_TAIL_TOL} нарушено: tail_tol={tail_tol}")

    geometry = wave_geometry(params)
    quadrature = half_profile_quadrature(params, tail_tol)
    if domain_length is None:
        domain_length = 2.0 * math.ceil(quadrature.half_width + 2.0 / params.decay_rate)

    k, c, b = params.kappa, params.c, params.b
    amplitude = geometry.G - k
    rate = params.decay_rate
    xi = Field.grid(domain_length, n_points)
    r = np.abs(xi)

    inverse = interpolate.CubicHermiteSpline(
        quadrature.xi_edges, quadrature.tau_edges, 1.0 / quadrature.slope_edges
    )
    inside = r <= quadrature.half_width
    tau = np.clip(inverse(r[inside]), 0.0, None)
    tau = _refine_tau(tau, r[inside], quadrature, geometry)

    d = np.empty_like(r)
    s = np.empty_like(r)
    d[inside] = amplitude * np.exp(-tau * tau)
    s[inside] = -amplitude * np.expm1(-tau * tau)
    d[~inside] = tail_tol * np.exp(-rate * (r[~inside] - quadrature.half_width))
    s[~inside] = amplitude - d[~inside]

    phi = k + d
    phi_xi = -np.sign(xi) * np.sqrt(2.0 * _gap_from_offsets(d, s, geometry))
    distance = geometry.crest_gap + s        # c − φ
    mu = k * (params.gamma / distance) ** b
    phi_xixi = phi - mu
    mu_xi = b * mu * phi_xi / distance
    mu_xixi = b * mu * ((b + 1.0) * phi_xi**2 / distance**2 + phi_xixi / distance)

    logger.info(
        f"✅ Профиль построен: b={b}, c={c}, κ={k}, G={geometry.G:.12g}, "
        f"N={n_points}, L={domain_length:g}, ξ_tail={quadrature.half_width:.3f}"
    )
    return WaveProfile(
        xi=xi, phi=phi, phi_xi=phi_xi, mu=mu, mu_xi=mu_xi, mu_xixi=mu_xixi,
        params=params, G=geometry.G, M=geometry.M, domain_length=float(domain_length),
        tail_tol=tail_tol, geometry=geometry, quadrature=quadrature,
    )


def shoot_profile(params: WaveParams, xi: np.ndarray, delta: float = SHOOTING_DELTA) -> np.ndarray:
    """Независимый оракул: интегрирование ОДУ из (κ+δ, δλ) вдоль неустойчивого направления.

    Траектория сдвигается так, чтобы гребень (ψ = 0) оказался в ξ = 0.
    Возвращает φ(ξ) для ξ ≤ 0; точки левее старта траектории — NaN.
    """
    params.require_admissible()
    rate = params.decay_rate
    geometry = wave_geometry(params)

    def rhs(_, y):
        return [y[1], y[0] - mu_of_phi(y[0], params)]

    def crest(_, y):
        return y[1]
    crest.terminal = True
    crest.direction = -1

    span = (math.log((geometry.G - params.kappa) / delta) + 20.0) / rate
    solution = integrate.solve_ivp(
        rhs, (0.0, span), [params.kappa + delta, delta * rate],
        method="DOP853", rtol=1e-13, atol=1e-15, events=crest, dense_output=True,
    )
    if solution.status != 1:
        raise NumericalError(f"Пристрелка не достигла гребня для {params}: {solution.message}")

    xi_crest = solution.t_events[0][0]
    local = xi_crest + np.asarray(xi, dtype=float)
    result = np.full(local.shape, np.nan)
    valid = (local >= 0.0) & (local <= xi_crest)
    result[valid] = solution.sol(local[valid])[0]
    return result
