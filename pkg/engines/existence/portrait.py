"""
Фазовый портрет: линии уровня энергии ½ψ² + V(φ) = e.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy import optimize

from config import get_logger, PORTRAIT_SAMPLES
from core import WaveParams
from .potential import level_gap, potential
from .turning import wave_geometry

logger = get_logger(__name__)


@dataclass
class PortraitOrbit:
    """Выборка линии уровня: верхняя ветвь слева направо, затем нижняя обратно"""
    energy: float
    phi: np.ndarray
    psi: np.ndarray
    closed: bool

    @property
    def is_empty(self) -> bool:
        return self.phi.size == 0

    def columns(self) -> np.ndarray:
        return np.column_stack([self.phi, self.psi])


def _empty(level: float) -> PortraitOrbit:
    return PortraitOrbit(energy=level, phi=np.empty(0), psi=np.empty(0), closed=False)


def _clustered(left: float, right: float, n: int) -> np.ndarray:
    """Узлы, сгущающиеся к обоим концам (косинусная сетка)"""
    theta = np.linspace(0.0, math.pi, n)
    return left + (right - left) * 0.5 * (1.0 - np.cos(theta))


def level_orbit(params: WaveParams, level: float, n_samples: int = PORTRAIT_SAMPLES,
                phi_floor: Optional[float] = None) -> PortraitOrbit:
    """Линия уровня e. Пустое множество уровня — пустая орбита.

    Для e > E_hom орбита не замкнута и обрезается снизу на phi_floor
    (по умолчанию κ − γ).
    """
    geometry = wave_geometry(params)
    k, c = params.kappa, params.c
    center = geometry.center
    v_center = float(potential(center, params))
    e_hom = geometry.homoclinic_energy

    if level < v_center - 1e-14 * max(1.0, abs(v_center)):
        return _empty(level)
    if level <= v_center + 1e-14 * max(1.0, abs(v_center)):
        return PortraitOrbit(energy=level, phi=np.array([center]), psi=np.array([0.0]), closed=True)

    def radicand(phi: float) -> float:
        return float(level_gap(phi, level, params))

    # правый корень лежит в (центр, c)
    if level <= e_hom:
        right = geometry.G if level == e_hom else optimize.brentq(radicand, center, geometry.G, xtol=1e-15)
    else:
        upper = geometry.G
        step = geometry.crest_gap
        while radicand(upper) > 0.0:
            step *= 0.5
            upper = c - step
            if step < 1e-15 * c:
                logger.warning(f"⚠️ Уровень e={level} не замыкается справа до φ = c")
                break
        right = optimize.brentq(radicand, geometry.G, upper, xtol=1e-15) if radicand(upper) < 0 else upper

    if level == e_hom:
        left = k
        closed = True
    elif level < e_hom:
        left = optimize.brentq(radicand, k, center, xtol=1e-15)
        closed = True
    else:
        left = k - params.gamma if phi_floor is None else phi_floor
        closed = False

    phi = _clustered(left, right, n_samples)
    upper_psi = np.sqrt(np.maximum(level_gap(phi, level, params), 0.0))
    if closed:
        upper_psi[0] = 0.0
        upper_psi[-1] = 0.0
    phi_loop = np.concatenate([phi, phi[::-1][1:]])
    psi_loop = np.concatenate([upper_psi, -upper_psi[::-1][1:]])
    return PortraitOrbit(energy=level, phi=phi_loop, psi=psi_loop, closed=closed)


def phase_portrait(params: WaveParams, energies: Sequence[float],
                   n_samples: int = PORTRAIT_SAMPLES) -> List[PortraitOrbit]:
    """Выборки линий уровня для каждого значения энергии"""
    params.require_admissible()
    orbits = [level_orbit(params, float(e), n_samples) for e in energies]
    logger.info(f"✅ Фазовый портрет: {len(orbits)} уровней, пустых {sum(o.is_empty for o in orbits)}")
    return orbits


def default_energies(params: WaveParams, count: int = 5) -> List[float]:
    """Уровни от центра до E_hom включительно"""
    geometry = wave_geometry(params)
    v_center = float(potential(geometry.center, params))
    return list(np.linspace(v_center, geometry.homoclinic_energy, count + 1)[1:])
