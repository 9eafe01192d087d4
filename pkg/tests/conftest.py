"""
Общие фикстуры тестов.

Эталонная волна — (b, c, κ) = (1, 2, 0.4): седло 0.4, центр 1.6, G ≈ 1.888, h = 0.5.
Профили строятся один раз на сессию.
"""

import os
import sys

import pytest

# Добавляем путь к проекту
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core import WaveParams  # noqa: E402
from engines.existence import build_profile  # noqa: E402

REFERENCE = WaveParams(b=1.0, c=2.0, kappa=0.4)


@pytest.fixture(scope="session")
def reference_params() -> WaveParams:
    return REFERENCE


@pytest.fixture(scope="session")
def profile_2048():
    """Профиль на области по умолчанию, N = 2048"""
    return build_profile(REFERENCE, n_points=2048)


@pytest.fixture(scope="session")
def spectral_profile():
    """Профиль для спектральных тестов: N = 2048, L = 60"""
    return build_profile(REFERENCE, n_points=2048, domain_length=60.0)


@pytest.fixture(scope="session")
def coarse_spectral_profile():
    """Тот же профиль при N = 1024"""
    return build_profile(REFERENCE, n_points=1024, domain_length=60.0)
