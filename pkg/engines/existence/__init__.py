"""
Движок существования уединённых волн.

Содержит:
- potential.py: векторное поле, энергия, устойчивые формы E_hom − V(φ)
- turning.py: точка поворота G, максимум μ, чувствительности по c и κ
- profile.py: построение профиля квадратурой, оракул пристрелки
- portrait.py: линии уровня энергии (фазовый портрет)
"""

from .potential import (
    mu_of_phi,
    potential,
    vector_field,
    energy,
    homoclinic_energy,
    gap_tail,
    gap_crest,
    tail_deficit,
    decay_rate,
)

from .turning import (
    WaveGeometry,
    wave_geometry,
    center_point,
    turning_point,
    turning_point_sensitivities,
    mu_max,
    mu_max_exponential,
)

from .profile import (
    ProfileQuadrature,
    WaveProfile,
    half_profile_quadrature,
    default_domain_length,
    build_profile,
    shoot_profile,
)

from .portrait import (
    PortraitOrbit,
    level_orbit,
    phase_portrait,
    default_energies,
)

__all__ = [
    # potential
    'mu_of_phi',
    'potential',
    'vector_field',
    'energy',
    'homoclinic_energy',
    'gap_tail',
    'gap_crest',
    'tail_deficit',
    'decay_rate',
    # turning
    'WaveGeometry',
    'wave_geometry',
    'center_point',
    'turning_point',
    'turning_point_sensitivities',
    'mu_max',
    'mu_max_exponential',
    # profile
    'ProfileQuadrature',
    'WaveProfile',
    'half_profile_quadrature',
    'default_domain_length',
    'build_profile',
    'shoot_profile',
    # portrait
    'PortraitOrbit',
    'level_orbit',
    'phase_portrait',
    'default_energies',
]
