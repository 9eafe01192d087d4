"""
Параметры бегущей волны и точка фазовой плоскости.

WaveParams — тройка (b, c, κ), от которой зависит всё остальное.
PhasePoint — точка (φ, ψ = φ_ξ) системы первого порядка.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError


@dataclass(frozen=True)
class WaveParams:
    """Параметры семейства: b, скорость c, фон κ.

    Допустимая область: b > 0, c > κ > 0 и κ < c/(b+1).
    """
    b: float
    c: float
    kappa: float

    @property
    def gamma(self) -> float:
        """Скорость в сопутствующей фону системе: γ = c − κ"""
        return self.c - self.kappa

    @property
    def h(self) -> float:
        """Энергетический параметр h = 2κ/γ"""
        return 2.0 * self.kappa / self.gamma

    @property
    def decay_rate(self) -> float:
        """Показатель экспоненциального убывания хвоста √(1 − bκ/γ)"""
        return math.sqrt(1.0 - self.b * self.kappa / self.gamma)

    @property
    def is_log_case(self) -> bool:
        """b = 1: потенциал содержит логарифм"""
        return self.b == 1.0

    def admissibility_violation(self) -> Optional[str]:
        """Возвращает нарушенное неравенство или None"""
        if not all(math.isfinite(v) for v in (self.b, self.c, self.kappa)):
            return "параметры должны быть конечными числами"
        if self.b <= 0:
            return f"b > 0 нарушено: b={self.b}"
        if self.kappa <= 0:
            return f"κ > 0 нарушено: κ={self.kappa}"
        if self.c <= self.kappa:
            return f"c > κ нарушено: c={self.c}, κ={self.kappa}"
        if self.kappa >= self.c / (self.b + 1.0):
            return (f"κ < c/(b+1) нарушено: κ={self.kappa}, "
                    f"c/(b+1)={self.c / (self.b + 1.0):.6g}")
        return None

    @property
    def is_admissible(self) -> bool:
        return self.admissibility_violation() is None

    def require_admissible(self) -> "WaveParams":
        """Проверяет допустимость и возвращает self"""
        violation = self.admissibility_violation()
        if violation:
            raise DomainError(f"Недопустимые параметры (b={self.b}, c={self.c}, κ={self.kappa}): {violation}")
        return self

    def with_speed(self, c: float) -> "WaveParams":
        return WaveParams(b=self.b, c=c, kappa=self.kappa)

    def with_background(self, kappa: float) -> "WaveParams":
        return WaveParams(b=self.b, c=self.c, kappa=kappa)

    def to_dict(self) -> dict:
        return {"b": self.b, "c": self.c, "kappa": self.kappa}


@dataclass(frozen=True)
class PhasePoint:
    """Точка фазовой плоскости (φ, ψ)"""
    phi: float
    psi: float

    def require_regular(self, params: WaveParams) -> "PhasePoint":
        """φ < c: сингулярная прямая φ = c недопустима"""
        if not self.phi < params.c:
            raise DomainError(f"φ < c нарушено: φ={self.phi}, c={params.c}")
        return self
