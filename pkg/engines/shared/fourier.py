"""
Фурье-множители на периодической сетке.

Все функции принимают равномерные выборки длины N на отрезке длины L
и работают через scipy.fft.
"""

import numpy as np
from scipy import fft


def wavenumbers(n: int, length: float) -> np.ndarray:
    """Волновые числа k = 2π·fftfreq(N, dx)"""
    return 2.0 * np.pi * fft.fftfreq(n, d=length / n)


def spectral_derivative(values: np.ndarray, length: float, order: int = 1) -> np.ndarray:
    """Спектральная производная порядка order"""
    k = wavenumbers(values.size, length)
    symbol = (1j * k) ** order
    if order % 2 == 1 and values.size % 2 == 0:
        symbol[values.size // 2] = 0.0
    return fft.ifft(symbol * fft.fft(values)).real


def helmholtz_multiplier(values: np.ndarray, length: float) -> np.ndarray:
    """(1 − ∂²)⁻¹: множитель 1/(1 + k²)"""
    k = wavenumbers(values.size, length)
    return fft.ifft(fft.fft(values) / (1.0 + k * k)).real


def antiderivative(values: np.ndarray, length: float, anchor: str = "mean") -> np.ndarray:
    """Псевдообратная к ∂_x: нулевая мода отбрасывается.

    anchor="mean" — первообразная с нулевым средним,
    anchor="edge" — та же первообразная, сдвинутая к нулю на левом краю.
    """
    n = values.size
    k = wavenumbers(n, length)
    coeffs = fft.fft(values)
    inv = np.zeros_like(coeffs)
    nonzero = k != 0.0
    inv[nonzero] = coeffs[nonzero] / (1j * k[nonzero])
    if n % 2 == 0:
        inv[n // 2] = 0.0
    result = fft.ifft(inv).real
    if anchor == "edge":
        result = result - result[0]
    elif anchor != "mean":
        raise ValueError(f"Неизвестная привязка первообразной: {anchor}")
    return result


def dealias_mask(n: int) -> np.ndarray:
    """Правило 2/3: обнуляем верхнюю треть спектра"""
    index = np.abs(fft.fftfreq(n, d=1.0 / n))
    return (index < n / 3.0).astype(float)


def fourier_shift(values: np.ndarray, shift: float, length: float) -> np.ndarray:
    """Сдвиг v(x) → v(x − s) через фазовый множитель"""
    k = wavenumbers(values.size, length)
    return fft.ifft(fft.fft(values) * np.exp(-1j * k * shift)).real


def h1_norm(values: np.ndarray, length: float) -> float:
    """Дискретная H¹-норма по Парсевалю: (L/N²)·Σ(1+k²)|v̂|²"""
    n = values.size
    k = wavenumbers(n, length)
    coeffs = fft.fft(values)
    return float(np.sqrt(length / n**2 * np.sum((1.0 + k * k) * np.abs(coeffs) ** 2)))
