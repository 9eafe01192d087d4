"""
Спектральный движок: вторая вариация ℒ и оператор 𝒥_m.

Содержит:
- operator.py: сборка ℒ (Дирихле / периодическое замыкание), 𝒥_m
- analysis.py: спектр, g(0) и g(α), условный минимум α₀
"""

from .operator import (
    OperatorMatrix,
    assemble_operator,
    assemble_L,
    restrict,
    apply_Jm,
)

from .analysis import (
    SpectrumReport,
    spectrum,
    CoercivityIdentity,
    coercivity_identity,
    coercivity_function,
    Constraint,
    constrained_min_eig,
)

__all__ = [
    # operator
    'OperatorMatrix',
    'assemble_operator',
    'assemble_L',
    'restrict',
    'apply_Jm',
    # analysis
    'SpectrumReport',
    'spectrum',
    'CoercivityIdentity',
    'coercivity_identity',
    'coercivity_function',
    'Constraint',
    'constrained_min_eig',
]
