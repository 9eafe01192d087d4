"""
Движок сохраняющихся величин.

Содержит:
- functionals.py: ℋ, 𝒬₁, 𝒬₂, заряд 𝒬, семейство b ≠ 1, d𝒬(μ)/dc
- lagrangian.py: ψ_𝒬, градиент Λ = −ℋ − s𝒬, остаток разложения Λ
"""

from .functionals import (
    hamiltonian_H,
    q1,
    q2,
    charge_Q,
    conserved_family_bneq1,
    log_limit_integrand,
    invariant_names,
    invariants,
    SpeedDerivative,
    charge_speed_derivative,
)

from .lagrangian import (
    frame_speed_value,
    ChargeGradient,
    charge_gradient_forms,
    psi_Q,
    lagrangian_gradient,
    lagrangian_gradient_field,
    discrete_lagrangian,
    lagrangian_directional_derivatives,
    RemainderScaling,
    remainder_scaling,
)

__all__ = [
    # functionals
    'hamiltonian_H',
    'q1',
    'q2',
    'charge_Q',
    'conserved_family_bneq1',
    'log_limit_integrand',
    'invariant_names',
    'invariants',
    'SpeedDerivative',
    'charge_speed_derivative',
    # lagrangian
    'frame_speed_value',
    'ChargeGradient',
    'charge_gradient_forms',
    'psi_Q',
    'lagrangian_gradient',
    'lagrangian_gradient_field',
    'discrete_lagrangian',
    'lagrangian_directional_derivatives',
    'RemainderScaling',
    'remainder_scaling',
]
