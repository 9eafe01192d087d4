"""
Движок эволюции: псевдоспектральный RK4 для уравнения импульса.

Содержит:
- solver.py: EvolutionConfig, EvolutionTrace, правая часть, evolve
- orbital.py: орбитальное расстояние, возмущения начальных данных
- experiment.py: эксперимент орбитальной устойчивости, выбор сетки по гребню
"""

from .solver import (
    FailureReason,
    EvolutionConfig,
    EvolutionTrace,
    helmholtz_inverse,
    rhs,
    evolve,
)

from .orbital import (
    best_shift,
    orbital_distance,
    gaussian_bump,
)

from .experiment import (
    StabilityReport,
    crest_width,
    resolved_grid_size,
    stability_experiment,
)

__all__ = [
    # solver
    'FailureReason',
    'EvolutionConfig',
    'EvolutionTrace',
    'helmholtz_inverse',
    'rhs',
    'evolve',
    # orbital
    'best_shift',
    'orbital_distance',
    'gaussian_bump',
    # experiment
    'StabilityReport',
    'crest_width',
    'resolved_grid_size',
    'stability_experiment',
]
