"""
Общие компоненты для всех движков.

Содержит:
- field.py: Field — периодическая выборка m(x)
- fourier.py: Фурье-множители (производные, (1−∂²)⁻¹, ∂⁻¹, сдвиг, H¹-норма)
"""

from .fourier import (
    wavenumbers,
    spectral_derivative,
    helmholtz_multiplier,
    antiderivative,
    dealias_mask,
    fourier_shift,
    h1_norm,
)

from .field import Field

__all__ = [
    # fourier
    'wavenumbers',
    'spectral_derivative',
    'helmholtz_multiplier',
    'antiderivative',
    'dealias_mask',
    'fourier_shift',
    'h1_norm',
    # field
    'Field',
]
