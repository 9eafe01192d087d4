"""
Специальные функции преобразованного критерия.

Для ϕ ∈ (0, 1), L = ln(1−ϕ), S = −ϕ − L:

    f = ϕ + (1−ϕ)(ϕ + 2L) = ϕ² − 2(1−ϕ)S,   f′ = 2S
    g = S^{5/2}/(ϕf),   G = S^{5/2}/f³
    F = 4(ϕL² − L² + ϕ²),   F′ = 4(2ϕ + L² + 2L),   F″ = 8(1 − (L+1)/(1−ϕ))
    R = ϕ²/S  (R → 2 при ϕ → 0)

Около нуля S ~ ϕ²/2, f ~ ϕ³/3, F ~ ϕ⁴/3, поэтому всё считается через
приведённые величины s̃ = S/ϕ², f̃ = f/ϕ³, F̃ = F/ϕ⁴. При ϕ < SERIES_THRESHOLD
они берутся из степенных рядов, иначе — делением прямых формул.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from config import SERIES_THRESHOLD, SERIES_TERMS
from core import DomainError


# ============= КОЭФФИЦИЕНТЫ РЯДОВ =============

def _series_coefficients(terms: int):
    n = np.arange(terms + 6, dtype=float)
    harmonic = np.concatenate([[0.0], np.cumsum(1.0 / n[1:])])
    # c_n: коэффициенты ln²(1−ϕ) = Σ c_n ϕⁿ, c_n = 2H_{n−1}/n
    c = np.zeros_like(n)
    c[2:] = 2.0 * harmonic[1:-1][:n.size - 2] / n[2:]

    k = np.arange(terms, dtype=float)
    s_tilde = 1.0 / (k + 2.0)                                     # ϕ^{n−2}/n, n ≥ 2
    e_tilde = 2.0 / (k + 3.0)                                     # 2s̃ − 1 = ϕ·Σ 2ϕ^{n−3}/n, n ≥ 3
    f_tilde = 2.0 / ((k + 3.0) * (k + 2.0))                       # 2ϕ^{n−3}/(n(n−1)), n ≥ 3
    idx = (k + 4.0).astype(int)
    f_big = 4.0 * (c[idx - 1] - c[idx])                           # F = Σ f_big·ϕ^{n}, n ≥ 4
    return s_tilde, e_tilde, f_tilde, f_big, idx.astype(float)


_S_TILDE, _E_TILDE, _F_TILDE, _F_BIG, _F_POWERS = _series_coefficients(SERIES_TERMS)


@dataclass
class Reduced:
    """Приведённые величины в точках ϕ"""
    phi: np.ndarray
    one_minus: np.ndarray   # 1 − ϕ
    log_gap: np.ndarray     # L = ln(1−ϕ)
    s: np.ndarray           # S/ϕ²
    excess: np.ndarray      # (2S − ϕ²)/ϕ³ = (2s̃ − 1)/ϕ
    f: np.ndarray           # f/ϕ³
    big_f: np.ndarray       # F/ϕ⁴

    @property
    def level(self) -> np.ndarray:
        """R(ϕ) = 1/s̃"""
        return 1.0 / self.s

    @property
    def level_excess(self) -> np.ndarray:
        """2 − R(ϕ) = ϕ·excess/s̃ без вычитания близких чисел"""
        return self.phi * self.excess / self.s


def reduced(phi, log_gap=None) -> Reduced:
    """Приведённые величины; log_gap = ln(1−ϕ) можно передать точнее, чем log1p(−ϕ)"""
    phi = np.atleast_1d(np.asarray(phi, dtype=float))
    L = np.log1p(-phi) if log_gap is None else np.atleast_1d(np.asarray(log_gap, dtype=float))
    one_minus = np.exp(L)

    s = np.empty_like(phi)
    excess = np.empty_like(phi)
    f = np.empty_like(phi)
    big_f = np.empty_like(phi)

    small = phi < SERIES_THRESHOLD
    x = phi[small]
    s[small] = P.polyval(x, _S_TILDE)
    excess[small] = P.polyval(x, _E_TILDE)
    f[small] = P.polyval(x, _F_TILDE)
    big_f[small] = P.polyval(x, _F_BIG)

    large = ~small
    x, Lx, om = phi[large], L[large], one_minus[large]
    S = -x - Lx
    s[large] = S / x**2
    excess[large] = (2.0 * S - x * x) / x**3
    f[large] = (x * x - 2.0 * om * S) / x**3
    big_f[large] = 4.0 * (x * x - om * Lx * Lx) / x**4

    return Reduced(phi=phi, one_minus=one_minus, log_gap=L, s=s, excess=excess, f=f, big_f=big_f)


def _unwrap(value, like):
    return float(value[0]) if np.ndim(like) == 0 else value


def _require_unit_interval(phi) -> np.ndarray:
    arr = np.asarray(phi, dtype=float)
    if np.any(~((arr > 0.0) & (arr < 1.0))):
        raise DomainError(f"ϕ ∈ (0, 1) нарушено: min={np.min(arr)}, max={np.max(arr)}")
    return arr


# ============= f, g, G, F и производные =============

def special_functions(phi) -> Tuple:
    """(f, g, G, F) в точках ϕ ∈ (0, 1).

    Args:
        phi: скаляр или массив

    Returns:
        четвёрка значений той же формы, что phi
    """
    _require_unit_interval(phi)
    r = reduced(phi)
    x = r.phi
    f = x**3 * r.f
    g = x * r.s**2.5 / r.f
    gfun = r.s**2.5 / (x**4 * r.f**3)
    big_f = x**4 * r.big_f
    return tuple(_unwrap(v, phi) for v in (f, g, gfun, big_f))


def special_derivatives(phi) -> Tuple:
    """(f′, F′, F″) в точках ϕ ∈ (0, 1)"""
    _require_unit_interval(phi)
    r = reduced(phi)
    x, L = r.phi, r.log_gap
    f_prime = 2.0 * x * x * r.s

    d1 = np.empty_like(x)
    d2 = np.empty_like(x)
    small = x < SERIES_THRESHOLD
    xs = x[small]
    d1[small] = P.polyval(xs, _F_BIG * _F_POWERS) * xs**3
    d2[small] = P.polyval(xs, _F_BIG * _F_POWERS * (_F_POWERS - 1.0)) * xs**2
    large = ~small
    xl, Ll = x[large], L[large]
    d1[large] = 4.0 * (2.0 * xl + Ll * Ll + 2.0 * Ll)
    d2[large] = 8.0 * (1.0 - (Ll + 1.0) / r.one_minus[large])
    return tuple(_unwrap(v, phi) for v in (f_prime, d1, d2))


def level_function(phi) -> np.ndarray:
    """R(ϕ) = −ϕ²/(ϕ + ln(1−ϕ)), R(0) = 2"""
    return _unwrap(reduced(phi).level, phi)


# ============= Подынтегральные выражения на Γ_h =============

def charge_integrand(r: Reduced) -> np.ndarray:
    """g = ϕ·s̃^{5/2}/f̃ (ноль при ϕ = 0)"""
    return r.phi * r.s**2.5 / r.f


def period_integrand(r: Reduced) -> np.ndarray:
    """G·F = s̃^{5/2}F̃/f̃³ (конечно при ϕ → 0)"""
    return r.s**2.5 * r.big_f / r.f**3


def slope_integrand(r: Reduced) -> np.ndarray:
    """g′/R′ = −s̃^{9/2}[5/(2s̃) − (1−ϕ)(1 + 2s̃/f̃)]/f̃²"""
    bracket = 2.5 / r.s - r.one_minus * (1.0 + 2.0 * r.s / r.f)
    return -(r.s**4.5) * bracket / r.f**2
