"""
Field — периодическая выборка плотности импульса m(x).
"""

from dataclasses import dataclass

import numpy as np

from core import DomainError
from .fourier import spectral_derivative, wavenumbers


@dataclass
class Field:
    """Периодическая выборка m на сетке x_i = −L/2 + i·dx.

    Attributes:
        x: узлы сетки
        m: плотность импульса
        kappa: фон κ
        length: длина периода L
    """
    x: np.ndarray
    m: np.ndarray
    kappa: float
    length: float

    @property
    def n(self) -> int:
        return self.m.size

    @property
    def dx(self) -> float:
        return self.length / self.n

    @property
    def wavenumbers(self) -> np.ndarray:
        return wavenumbers(self.n, self.length)

    def derivative(self, order: int = 1) -> np.ndarray:
        """Спектральная производная m"""
        return spectral_derivative(self.m, self.length, order)

    def integrate(self, values: np.ndarray) -> float:
        """Правило трапеций на периодической сетке"""
        return float(self.dx * np.sum(values))

    def require_positive(self) -> "Field":
        """m > 0 во всех узлах (принадлежность 𝒳_κ)"""
        if not np.all(self.m > 0):
            worst = float(np.min(self.m))
            raise DomainError(f"m > 0 нарушено: min m = {worst:.3e}")
        return self

    def with_values(self, m: np.ndarray) -> "Field":
        return Field(x=self.x, m=m, kappa=self.kappa, length=self.length)

    @staticmethod
    def grid(length: float, n: int) -> np.ndarray:
        """Узлы −L/2 + i·L/N, i = 0..N−1 (ноль в узле N/2)"""
        return -0.5 * length + np.arange(n) * (length / n)

    @classmethod
    def constant(cls, kappa: float, length: float, n: int) -> "Field":
        return cls(x=cls.grid(length, n), m=np.full(n, float(kappa)), kappa=kappa, length=length)

    @classmethod
    def from_profile(cls, profile) -> "Field":
        """m = μ на сетке профиля"""
        return cls(x=profile.xi.copy(), m=profile.mu.copy(), kappa=profile.params.kappa,
                   length=profile.domain_length)
