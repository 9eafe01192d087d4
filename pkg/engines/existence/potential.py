"""
Потенциал, векторное поле и энергия бегущей волны.

Для всех b используется нормировка, при которой V′(φ) = μ(φ) − φ,
μ(φ) = κγ^b/(c−φ)^b. Для b = 1 потенциал содержит логарифм:
V(φ) = −φ²/2 − κγ·ln(c−φ).

Разность E_hom − V(φ) вычисляется без потери точности вблизи седла (φ → κ)
и вблизи гребня (φ → G): см. gap_tail и gap_crest.
"""

import math

import numpy as np

from core import DomainError, PhasePoint, WaveParams

_SERIES_SWITCH = 0.05
_SERIES_TERMS = 30


def mu_of_phi(phi, params: WaveParams):
    """μ = κγ^b/(c−φ)^b"""
    return params.kappa * (params.gamma / (params.c - np.asarray(phi, dtype=float))) ** params.b


def potential(phi, params: WaveParams):
    """V(φ), векторизовано по φ < c"""
    phi = np.asarray(phi, dtype=float)
    if np.any(phi >= params.c):
        raise DomainError(f"φ < c нарушено: max φ = {float(np.max(phi))}, c = {params.c}")
    k, g, b = params.kappa, params.gamma, params.b
    if params.is_log_case:
        return -0.5 * phi**2 - k * g * np.log(params.c - phi)
    return -0.5 * phi**2 + k * g * (g / (params.c - phi)) ** (b - 1.0) / (b - 1.0)


def vector_field(p: PhasePoint, params: WaveParams) -> PhasePoint:
    """Правая часть системы φ′ = ψ, ψ′ = φ − μ(φ)"""
    p.require_regular(params)
    return PhasePoint(phi=p.psi, psi=p.phi - float(mu_of_phi(p.phi, params)))


def energy(p: PhasePoint, params: WaveParams) -> float:
    """Полная энергия ½ψ² + V(φ)"""
    p.require_regular(params)
    return 0.5 * p.psi**2 + float(potential(p.phi, params))


def homoclinic_energy(params: WaveParams) -> float:
    """Уровень гомоклинической орбиты E_hom = V(κ)"""
    return float(potential(params.kappa, params))


def _rising_factorial_coeffs(b: float) -> np.ndarray:
    """a_k = b(b+1)…(b+k−2)/k!, k = 2.._SERIES_TERMS+1"""
    coeffs = np.empty(_SERIES_TERMS)
    ratio = 1.0
    for i, k in enumerate(range(2, _SERIES_TERMS + 2)):
        # a_k = a_{k−1}·(b+k−2)/k, a_1 = 1
        ratio *= (b + k - 2.0) / k
        coeffs[i] = ratio
    return coeffs


def tail_deficit(x, b: float):
    """x − B_b(x), B_b(x) = ((1−x)^{1−b} − 1)/(b−1); при b = 1 это log(1−x) + x.

    Для малых x используется ряд −Σ_{k≥2} b(b+1)…(b+k−2)/k!·x^k.
    """
    x = np.asarray(x, dtype=float)
    result = np.empty_like(x)
    small = x < _SERIES_SWITCH
    if np.any(small):
        xs = x[small]
        coeffs = _rising_factorial_coeffs(b)
        acc = np.zeros_like(xs)
        for a in coeffs[::-1]:
            acc = (acc + a) * xs
        result[small] = -acc * xs
    large = ~small
    if np.any(large):
        xl = x[large]
        if b == 1.0:
            result[large] = np.log1p(-xl) + xl
        else:
            result[large] = xl - np.expm1((1.0 - b) * np.log1p(-xl)) / (b - 1.0)
    return result


def crest_growth(z, b: float):
    """E_b(z) = (e^{(1−b)z} − 1)/(1−b); при b = 1 это z"""
    z = np.asarray(z, dtype=float)
    if b == 1.0:
        return z
    return np.expm1((1.0 - b) * z) / (1.0 - b)


def gap_tail(d, params: WaveParams):
    """E_hom − V(κ + d) = d²/2 + κγ·(x − B_b(x)), x = d/γ"""
    d = np.asarray(d, dtype=float)
    return 0.5 * d * d + params.kappa * params.gamma * tail_deficit(d / params.gamma, params.b)


def gap_crest(s, G: float, crest_gap: float, M: float, params: WaveParams):
    """E_hom − V(G − s) при E_hom = V(G): M(c−G)·E_b(log(1 + s/(c−G))) − s(2G−s)/2"""
    s = np.asarray(s, dtype=float)
    return M * crest_gap * crest_growth(np.log1p(s / crest_gap), params.b) - 0.5 * s * (2.0 * G - s)


def level_gap(phi, level: float, params: WaveParams):
    """2(e − V(φ)) — подкоренное выражение линии уровня"""
    return 2.0 * (level - potential(phi, params))


def decay_rate(params: WaveParams) -> float:
    """Показатель убывания √(1 − bκ/γ) у седла"""
    return math.sqrt(1.0 - params.b * params.kappa / params.gamma)
