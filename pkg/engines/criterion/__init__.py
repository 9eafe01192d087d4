"""
Движок критерия устойчивости (b = 1).

Содержит:
- special.py: f, g, G, F, их производные и ряды около нуля
- gamma.py: линия уровня Γ_h, 𝒬(h) и 𝒬′(h)
- direct.py: прямой функционал Q(φ, c), dQ/dc, сравнение путей
- sweep.py: прогоны по сеткам и вердикт
"""

from .special import (
    special_functions,
    special_derivatives,
    level_function,
)

from .gamma import (
    GammaCurve,
    build_gamma,
    transformed_Q,
    transformed_dQ_dh,
    transformed_dQ_dh_direct,
)

from .direct import (
    QMethod,
    q_functional,
    dq_dc,
    h_of_params,
    dh_dc,
    RouteComparison,
    compare_routes,
)

from .sweep import (
    CriterionRow,
    criterion_sweep,
    route_sweep,
    criterion_verdict,
)

__all__ = [
    # special
    'special_functions',
    'special_derivatives',
    'level_function',
    # gamma
    'GammaCurve',
    'build_gamma',
    'transformed_Q',
    'transformed_dQ_dh',
    'transformed_dQ_dh_direct',
    # direct
    'QMethod',
    'q_functional',
    'dq_dc',
    'h_of_params',
    'dh_dc',
    'RouteComparison',
    'compare_routes',
    # sweep
    'CriterionRow',
    'criterion_sweep',
    'route_sweep',
    'criterion_verdict',
]
