"""
Орбитальное расстояние inf_s ‖m − μ(· − s)‖_{H¹} на периодической сетке
и возмущения начальных данных.
"""

from typing import Optional

import numpy as np
from scipy import fft

from config import BUMP_CENTER_RANGE, BUMP_WIDTH_RANGE
from core import DomainError
from engines.shared import Field, fourier_shift, h1_norm

_NEWTON_STEPS = 3


def _reference_values(reference) -> np.ndarray:
    """μ из WaveProfile или m из Field"""
    return reference.mu if hasattr(reference, "mu") else reference.m


def best_shift(f: Field, reference) -> float:
    """Сдвиг s, максимизирующий H¹-корреляцию ⟨m, μ(· − s)⟩.

    Сначала перебор всех N циклических сдвигов через БПФ, затем
    квадратичная интерполяция и несколько шагов Ньютона.
    """
    mu = _reference_values(reference)
    if mu.size != f.n:
        raise DomainError(f"Эталон на другой сетке: {mu.size} ≠ {f.n}")
    n, length = f.n, f.length
    k = f.wavenumbers
    cross = (1.0 + k * k) * fft.fft(f.m) * np.conj(fft.fft(mu))
    correlation = n * fft.ifft(cross).real

    j = int(np.argmax(correlation))
    left, mid, right = correlation[(j - 1) % n], correlation[j], correlation[(j + 1) % n]
    curvature = left - 2.0 * mid + right
    offset = 0.5 * (left - right) / curvature if curvature < 0 else 0.0
    shift = (j + offset) * f.dx

    k_odd = k.copy()
    k_odd[n // 2] = 0.0
    for _ in range(_NEWTON_STEPS):
        phase = np.exp(1j * k * shift)
        slope = np.sum((1j * k_odd * cross * phase)).real
        bend = np.sum((-k * k * cross * phase)).real
        if bend >= 0:
            break
        shift -= slope / bend
    return float((shift + 0.5 * length) % length - 0.5 * length)


def orbital_distance(f: Field, reference) -> float:
    """min_s ‖m − μ(· − s)‖ в дискретной H¹-норме"""
    mu = _reference_values(reference)
    shift = best_shift(f, reference)
    return h1_norm(f.m - fourier_shift(mu, shift, f.length), f.length)


def gaussian_bump(
    x: np.ndarray,
    length: float,
    eps: float,
    center: Optional[float] = None,
    width: Optional[float] = None,
    rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Периодическая разность гауссиан g(x; w) − g(x; 3w)/3 с нулевым средним и H¹-нормой eps.

    По умолчанию центр берётся на заднем склоне волны (BUMP_CENTER_RANGE,
    гребень в x = 0, волна идёт вправо), ширина из BUMP_WIDTH_RANGE.

    Args:
        x: узлы сетки
        length: период
        eps: требуемая H¹-норма (≥ 0)
        center, width: положение и ширина; если не заданы — берутся из rng
        rng: генератор numpy.random.default_rng

    Returns:
        массив той же формы, что x
    """
    if eps < 0:
        raise DomainError(f"ε ≥ 0 нарушено: ε={eps}")
    if center is None or width is None:
        rng = rng if rng is not None else np.random.default_rng()
        center = float(rng.uniform(*BUMP_CENTER_RANGE)) if center is None else center
        width = float(rng.uniform(*BUMP_WIDTH_RANGE)) if width is None else width
    if not width > 0:
        raise DomainError(f"width > 0 нарушено: width={width}")

    offset = (x - center + 0.5 * length) % length - 0.5 * length
    bump = np.exp(-(offset / width) ** 2) - np.exp(-(offset / (3.0 * width)) ** 2) / 3.0
    bump -= bump.mean()
    if eps == 0.0:
        return np.zeros_like(bump)
    return eps * bump / h1_norm(bump, length)
