"""
Исключения лаборатории.

Определяет:
- DomainError: недопустимые параметры или аргументы вне области определения
- NumericalError: сбой численного метода (скобка, квадратура, собственные значения)
- ConfigError: некорректная конфигурация запуска
"""


class BchLabError(Exception):
    """Базовое исключение лаборатории"""


class DomainError(BchLabError, ValueError):
    """Аргумент вне области определения (в сообщении — нарушенное неравенство)"""


class NumericalError(BchLabError, RuntimeError):
    """Численный метод не сошёлся или нарушена внутренняя согласованность"""


class ConfigError(BchLabError, ValueError):
    """Некорректная конфигурация запуска (CLI завершается с кодом 2)"""
