"""
Вычислительные движки лаборатории.

Содержит:
- existence/: гомоклиническая орбита, точка поворота, профиль волны, фазовый портрет
- conserved/: сохраняющиеся функционалы, вариационные производные, лагранжиан
- criterion/: критерий устойчивости двумя способами (Q(φ,c) и 𝒬(h) на кривой Γ_h)
- spectral/: дискретный оператор ℒ, оператор 𝒥_m, коэрцитивность
- evolution/: псевдоспектральная эволюция и орбитальные эксперименты
- shared/: Field и Фурье-множители
"""

__all__ = [
    'existence',
    'conserved',
    'criterion',
    'spectral',
    'evolution',
    'shared',
]
