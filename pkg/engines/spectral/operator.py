"""
Дискретные операторы: вторая вариация ℒ и оператор Пуассона 𝒥_m.

ℒv = −sκ(∂(μ⁻³∂v) − μ⁻³v + 6μ⁻⁵μ_ξ²v − 3μ⁻⁴μ_ξξv + (sκμ)⁻¹v)
   = −sκ·∂(a∂v) + q·v,  a = μ⁻³,  q = sκ(μ⁻³ − 6μ⁻⁵μ_ξ² + 3μ⁻⁴μ_ξξ) − μ⁻¹.

Псевдоспектральная схема на периодической сетке: −∂(a∂v) = −a·v″ − a′·v′
записывается как полусумма двух спектрально точных форм,

    ½(−A·D² − D²·A) + ½(D·A′ − A′·D),

где D — матрица первой производной (без моды Найквиста), D² — второй
(с ней), A и A′ — диагонали a и a_ξ. Обе формы аппроксимируют один и тот
же оператор, полусумма симметрична. Мода Найквиста получает a·k²_max,
поэтому ложных мод внизу спектра нет. При μ ≡ κ символ равен
(s/κ²)(k² + 1 − κ/s), край существенного спектра — (s − κ)/κ².
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import fft, linalg

from config import get_logger, Closure, FrameSpeed, MIN_SPECTRAL_POINTS
from core import DomainError
from engines.conserved import frame_speed_value
from engines.shared import Field, antiderivative, helmholtz_multiplier, spectral_derivative, wavenumbers

logger = get_logger(__name__)


@dataclass
class OperatorMatrix:
    """Плотная симметричная матрица ℒ.

    Attributes:
        x: узлы, в которых заданы неизвестные
        dx: шаг сетки
        values: матрица size × size
        closure: "dirichlet" | "periodic"
        speed: скорость s в лагранжиане
        kappa: фон κ
    """
    x: np.ndarray
    dx: float
    values: np.ndarray
    closure: str
    speed: float
    kappa: float

    @property
    def size(self) -> int:
        return self.values.shape[0]

    @property
    def essential_edge(self) -> float:
        """(s − κ)/κ²"""
        return (self.speed - self.kappa) / self.kappa**2

    def to_dense(self) -> np.ndarray:
        return self.values

    def matvec(self, v: np.ndarray) -> np.ndarray:
        return self.values @ v

    def gershgorin_bounds(self) -> Tuple[float, float]:
        """Оценка [λ_min, λ_max] по кругам Гершгорина"""
        diagonal = np.diag(self.values)
        radius = np.sum(np.abs(self.values), axis=1) - np.abs(diagonal)
        return float(np.min(diagonal - radius)), float(np.max(diagonal + radius))


def fourier_matrices(n: int, length: float) -> Tuple[np.ndarray, np.ndarray]:
    """Циркулянтные матрицы D (мода Найквиста обнулена) и D²"""
    k = wavenumbers(n, length)
    first = 1j * k
    if n % 2 == 0:
        first[n // 2] = 0.0
    d1 = linalg.circulant(fft.ifft(first).real)
    d2 = linalg.circulant(fft.ifft(-k * k).real)
    return d1, d2


def assemble_operator(
    mu: np.ndarray,
    mu_xi: np.ndarray,
    mu_xixi: np.ndarray,
    dx: float,
    kappa: float,
    speed: float,
    closure: str = Closure.DIRICHLET,
    x: Optional[np.ndarray] = None,
) -> OperatorMatrix:
    """Сборка ℒ по коэффициентам на периодической сетке из N узлов.

    Args:
        mu, mu_xi, mu_xixi: μ и производные в узлах ξ_0 … ξ_{N−1}
        dx: шаг
        kappa: фон κ
        speed: скорость s
        closure: "dirichlet" — неизвестные в ξ_1 … ξ_{N−1}, v = 0 в ξ_0
                 (главная подматрица периодической);
                 "periodic" — все N узлов

    Returns:
        OperatorMatrix
    """
    n = mu.size
    if n < MIN_SPECTRAL_POINTS:
        raise DomainError(f"N ≥ {MIN_SPECTRAL_POINTS} нарушено: N={n}")
    if np.any(mu <= 0):
        raise DomainError("μ > 0 нарушено при сборке ℒ")
    if closure not in (Closure.DIRICHLET, Closure.PERIODIC):
        raise DomainError(f"Неизвестное замыкание: {closure}")
    length = n * dx
    if x is None:
        x = Field.grid(length, n)

    d1, d2 = fourier_matrices(n, length)
    a = mu**-3.0
    a_xi = -3.0 * mu**-4 * mu_xi
    q = speed * kappa * (mu**-3 - 6.0 * mu**-5 * mu_xi**2 + 3.0 * mu**-4 * mu_xixi) - 1.0 / mu

    values = -0.5 * (a[:, None] * d2 + d2 * a[None, :])
    values += 0.5 * (d1 * a_xi[None, :] - a_xi[:, None] * d1)
    values *= speed * kappa
    values[np.diag_indices(n)] += q
    values = 0.5 * (values + values.T)

    if closure == Closure.DIRICHLET:
        return OperatorMatrix(x=x[1:], dx=dx, values=values[1:, 1:].copy(),
                              closure=closure, speed=speed, kappa=kappa)
    return OperatorMatrix(x=x, dx=dx, values=values, closure=closure, speed=speed, kappa=kappa)


def assemble_L(profile, closure: str = Closure.DIRICHLET, frame: str = FrameSpeed.RELATIVE) -> OperatorMatrix:
    """ℒ вдоль профиля волны"""
    speed = frame_speed_value(profile.params, frame)
    matrix = assemble_operator(
        profile.mu, profile.mu_xi, profile.mu_xixi, profile.dxi,
        profile.params.kappa, speed, closure, x=profile.xi,
    )
    logger.debug(f"ℒ собран: N={matrix.size}, closure={closure}, s={speed:g}, край={matrix.essential_edge:.6g}")
    return matrix


def restrict(profile_values: np.ndarray, matrix: OperatorMatrix) -> np.ndarray:
    """Значения на сетке профиля → вектор неизвестных матрицы"""
    if matrix.closure == Closure.DIRICHLET:
        return profile_values[1:]
    return profile_values


# ============= 𝒥_m =============

def apply_Jm(f: Field, psi: np.ndarray, anchor: str = "mean") -> np.ndarray:
    """𝒥_m ψ = −∂(m·K(∂⁻¹(m·∂ψ))), K = (1 − ∂²)⁻¹.

    anchor="mean" даёт точно кососимметричный дискретный оператор;
    anchor="edge" привязывает первообразную к левому краю, что нужно
    для убывающих данных (𝒥_μ ψ_𝒬 = μ_ξ).
    """
    L = f.length
    inner = antiderivative(f.m * spectral_derivative(psi, L), L, anchor)
    return -spectral_derivative(f.m * helmholtz_multiplier(inner, L), L)
