"""
Тесты псевдоспектральной эволюции и орбитального расстояния.
"""

import logging

import numpy as np
import pytest

from config import BUMP_CENTER_RANGE, DEFAULT_SEED, MAX_EVOLUTION_N, RhsForm
from core import DomainError, WaveParams
from engines.existence import build_profile
from engines.evolution import (
    EvolutionConfig,
    FailureReason,
    best_shift,
    crest_width,
    evolve,
    gaussian_bump,
    helmholtz_inverse,
    orbital_distance,
    resolved_grid_size,
    rhs,
    stability_experiment,
)
from engines.shared import Field, fourier_shift, h1_norm, spectral_derivative


@pytest.fixture(scope="module")
def small_profile(reference_params):
    """Профиль N = 512, L = 60 для быстрых прогонов"""
    return build_profile(reference_params, n_points=512, domain_length=60.0)


def _config(params: WaveParams, profile, **kwargs) -> EvolutionConfig:
    return EvolutionConfig(b=params.b, c=params.c, kappa=params.kappa,
                           domain_length=profile.domain_length, n=profile.n_points, **kwargs)


# ============= Правая часть =============

def test_helmholtz_on_sine():
    length, n = 40.0, 256
    x = Field.grid(length, n)
    k = 2.0 * np.pi * 2 / length
    u = helmholtz_inverse(np.sin(k * x), length)
    assert np.max(np.abs(u - np.sin(k * x) / (1.0 + k * k))) < 1e-13
    print("✅ (1 − ∂²)⁻¹ sin")


def test_background_is_steady():
    f = Field.constant(0.4, 40.0, 256)
    for b in (1.0, 0.7):
        assert np.max(np.abs(rhs(f, b))) < 1e-14
    print("✅ Фон κ стационарен")


def test_rhs_forms_agree(profile_2048):
    """−∂(um) = −(u·m_x + m·u_x) после правила 2/3"""
    f = profile_2048.to_field()
    conservative = rhs(f, 1.0, form=RhsForm.CONSERVATIVE)
    advective = rhs(f, 1.0, form=RhsForm.ADVECTIVE)
    assert np.max(np.abs(conservative - advective)) < 1e-9 * np.max(np.abs(conservative))
    print("✅ Консервативная и адвективная формы совпадают")


def test_rhs_is_translation(profile_2048, reference_params):
    """Для волны m_t = −c·μ_ξ"""
    p = profile_2048
    rate = rhs(p.to_field(), reference_params.b)
    expected = -reference_params.c * spectral_derivative(p.mu, p.domain_length)
    error = np.max(np.abs(rate - expected))
    assert error < 1e-5 * np.max(np.abs(expected)), f"ошибка {error:.2e}"
    print(f"✅ Правая часть на волне: {error:.2e}")


def test_wave_is_steady_in_moving_frame(profile_2048, reference_params):
    """В системе со скоростью c правая часть на волне обращается в ноль"""
    p = profile_2048
    rate = rhs(p.to_field(), reference_params.b, frame_speed=reference_params.c)
    scale = reference_params.c * np.max(np.abs(p.mu_xi))
    error = np.max(np.abs(rate))
    assert error < 1e-5 * scale, f"остаток {error:.2e}"
    print(f"✅ Волна стационарна в подвижной системе: {error:.2e}")


# ============= RK4 =============

def test_short_traveling_run(reference_params):
    """Волна переносится без изменения формы; снимки в лабораторной системе"""
    profile = build_profile(reference_params, n_points=4096, domain_length=60.0)
    cfg = _config(reference_params, profile, t_final=0.5, frame_speed=reference_params.c)
    trace = evolve(profile.to_field(), cfg, reference=profile)
    assert not trace.failed
    scale = h1_norm(profile.mu - 0.4, 60.0)
    assert trace.max_distance / scale < 1e-4, f"расстояние {trace.max_distance:.2e}"
    assert trace.max_drift < 1e-6, f"дрейф {trace.max_drift:.2e}"

    t, final = trace.snapshots[-1]
    moved = fourier_shift(profile.mu, reference_params.c * t, 60.0)
    assert h1_norm(final - moved, 60.0) / scale < 1e-4
    assert trace.names == ("H", "Q1", "Q2")
    assert trace.final_time == pytest.approx(0.5)
    print(f"✅ Перенос волны: расстояние {trace.max_distance:.2e}, дрейф {trace.max_drift:.2e}")


def test_fourth_order_in_time(small_profile, reference_params):
    """Разности решений при dt, dt/2, dt/4 убывают ≈16×"""
    finals = []
    for dt in (0.05, 0.025, 0.0125):
        cfg = _config(reference_params, small_profile, dt=dt, t_final=0.5)
        trace = evolve(small_profile.to_field(), cfg)
        assert not trace.failed
        finals.append(trace.snapshots[-1][1])
    ratio = np.max(np.abs(finals[0] - finals[1])) / np.max(np.abs(finals[1] - finals[2]))
    assert 10.0 < ratio < 22.0, f"отношение {ratio:.2f}"
    print(f"✅ Четвёртый порядок: {ratio:.2f}")


def test_stability_budget_stops_run(small_profile, reference_params):
    cfg = _config(reference_params, small_profile, dt=0.5, t_final=1.0)
    trace = evolve(small_profile.to_field(), cfg)
    assert trace.failed and trace.reason == FailureReason.STABILITY == "cfl"
    assert trace.times == [0.0]
    print("✅ Нарушение бюджета RK4 останавливает прогон")


def test_nonpositive_initial_data(small_profile, reference_params):
    f = small_profile.to_field()
    bad = f.with_values(f.m - 1.0)
    with pytest.raises(DomainError, match="m > 0"):
        evolve(bad, _config(reference_params, small_profile, t_final=0.1))
    print("✅ m ≤ 0 в начальных данных отклоняется")


def test_grid_mismatch(small_profile, reference_params):
    cfg = EvolutionConfig(b=1.0, c=2.0, kappa=0.4, domain_length=60.0, n=1024, t_final=0.1)
    with pytest.raises(DomainError, match="не совпадает"):
        evolve(small_profile.to_field(), cfg)


@pytest.mark.parametrize("kwargs, message", [
    ({"n": 1000}, "степень двойки"),
    ({"t_final": 0.0}, "T > 0"),
    ({"dt": -0.1}, "dt > 0"),
    ({"record_every": 0}, "record_every"),
    ({"form": "upwind"}, "форма"),
    ({"frame_speed": float("inf")}, "конечной"),
])
def test_config_validation(kwargs, message):
    with pytest.raises(DomainError, match=message):
        EvolutionConfig(b=1.0, c=2.0, kappa=0.4, **kwargs)


# ============= Орбитальное расстояние =============

def test_best_shift_recovers_translation(small_profile):
    p = small_profile
    shifted = p.to_field().with_values(fourier_shift(p.mu, 0.37, p.domain_length))
    assert abs(best_shift(shifted, p) - 0.37) < 1e-6
    assert orbital_distance(shifted, p) < 1e-8
    print("✅ Сдвиг 0.37 восстановлен")


def test_gaussian_bump(small_profile):
    x, length = small_profile.xi, small_profile.domain_length
    bump = gaussian_bump(x, length, 1e-2, rng=np.random.default_rng(3))
    assert abs(bump.mean()) < 1e-15
    assert h1_norm(bump, length) == pytest.approx(1e-2, rel=1e-12)
    assert not np.any(gaussian_bump(x, length, 0.0, center=0.0, width=1.0))

    again = gaussian_bump(x, length, 1e-2, rng=np.random.default_rng(3))
    assert np.array_equal(bump, again)
    with pytest.raises(DomainError, match="ε ≥ 0"):
        gaussian_bump(x, length, -1e-3)
    with pytest.raises(DomainError, match="width > 0"):
        gaussian_bump(x, length, 1e-2, center=-8.0, width=0.0)
    print("✅ Добавка: среднее 0, ‖·‖_H¹ = ε")


@pytest.mark.parametrize("seed", [0, 3, DEFAULT_SEED])
def test_gaussian_bump_behind_crest(small_profile, seed):
    """Центр добавки на заднем склоне, у гребня она мала"""
    x, length = small_profile.xi, small_profile.domain_length
    bump = gaussian_bump(x, length, 1e-2, rng=np.random.default_rng(seed))
    peak = x[np.argmax(bump)]
    low, high = BUMP_CENTER_RANGE
    assert low - small_profile.dxi <= peak <= high + small_profile.dxi, f"пик в {peak:.3f}"
    near_crest = np.abs(x) < 1.0
    assert np.max(np.abs(bump[near_crest])) < 0.05 * np.max(np.abs(bump))
    print(f"✅ Пик добавки в {peak:.3f}")


def test_experiment_rejects_large_eps(reference_params):
    with pytest.raises(DomainError, match="ε"):
        stability_experiment(reference_params, eps=0.5, t_final=1.0)


# ============= Выбор сетки =============

def test_resolved_grid_reference_wave(reference_params):
    """Гребень (1, 2, 0.4) шириной ≈ 0.242 разрешается при N = 4096, L = 80"""
    assert crest_width(reference_params) == pytest.approx(0.2421, abs=1e-3)
    assert resolved_grid_size(reference_params, 80.0) == 4096
    print("✅ N = 4096 для эталонной волны")


def test_resolved_grid_near_peakon():
    """(0.7, 2, 0.5): узкий гребень требует более мелкой сетки"""
    params = WaveParams(b=0.7, c=2.0, kappa=0.5)
    width = crest_width(params)
    n = resolved_grid_size(params, 80.0)
    assert n > 4096 and n & (n - 1) == 0
    assert n * width >= 12 * 80.0, "меньше 12 узлов на ширину гребня"
    assert (n // 2) * width < 12 * 80.0, "сетка не минимальна"
    assert n <= MAX_EVOLUTION_N
    print(f"✅ Ширина гребня {width:.4f}, N = {n}")


def test_near_peakon_is_steady_on_resolved_grid():
    """(0.7, 2, 0.5) на выбранной сетке: волна стационарна в подвижной системе"""
    params = WaveParams(b=0.7, c=2.0, kappa=0.5)
    n = resolved_grid_size(params, 80.0)
    p = build_profile(params, n_points=n, domain_length=80.0)
    rate = rhs(p.to_field(), params.b, frame_speed=params.c)
    scale = params.c * np.max(np.abs(p.mu_xi))
    residual = np.max(np.abs(rate))
    assert residual < 1e-4 * scale, f"остаток {residual:.2e} при N={n}"
    print(f"✅ Остаток почти пикона при N={n}: {residual:.2e}")


def test_resolved_grid_rejects_huge_domain():
    params = WaveParams(b=0.7, c=2.0, kappa=0.5)
    with pytest.raises(DomainError, match="недоразрешён"):
        resolved_grid_size(params, 400.0)
    print("✅ Недоразрешённый гребень отклоняется")


def test_underresolved_grid_warns(reference_params, caplog):
    with caplog.at_level(logging.WARNING):
        report = stability_experiment(reference_params, eps=0.0, t_final=0.05, n=1024, domain_length=60.0)
    assert "недоразрешает" in caplog.text
    assert report.config.n == 1024
    assert report.config.frame_speed == reference_params.c
    print("✅ Явная грубая сетка даёт предупреждение")


# ============= Приёмочные прогоны =============

@pytest.mark.slow
def test_stability_experiment(reference_params):
    """ε = 1e-2, T = 2: расстояние остаётся порядка ε, сетка выбрана по гребню"""
    report = stability_experiment(reference_params, eps=1e-2, t_final=2.0, domain_length=60.0)
    assert report.bounded, f"отношение {report.ratio:.3f}"
    assert report.to_dict()["config"]["n"] == resolved_grid_size(reference_params, 60.0)
    print(f"✅ Отношение расстояния к ε: {report.ratio:.3f}")


@pytest.mark.slow
def test_traveling_wave_acceptance(reference_params):
    """T = 5, N = 4096, L = 80: расстояние < 1e-4, дрейф инвариантов < 1e-6"""
    report = stability_experiment(reference_params, eps=0.0, t_final=5.0, n=4096, domain_length=80.0)
    assert not report.trace.failed
    assert report.relative_distance < 1e-4, f"расстояние {report.relative_distance:.2e}"
    assert report.trace.max_drift < 1e-6, f"дрейф {report.trace.max_drift:.2e}"
    assert report.bounded
    print(f"✅ Бегущая волна: {report.relative_distance:.2e}, дрейф {report.trace.max_drift:.2e}")


@pytest.mark.slow
@pytest.mark.parametrize("b, c, kappa", [(1.0, 2.0, 0.4), (0.7, 2.0, 0.5), (1.4, 2.0, 0.5)])
def test_perturbed_runs_acceptance(b, c, kappa):
    """ε = 1e-2, T = 20, L = 80: орбитальное расстояние < 5ε"""
    params = WaveParams(b=b, c=c, kappa=kappa)
    report = stability_experiment(params, eps=1e-2, t_final=20.0, domain_length=80.0, seed=DEFAULT_SEED)
    assert not report.trace.failed, report.trace.reason
    assert report.ratio < 5.0, f"отношение {report.ratio:.3f}"
    print(f"✅ {params}: отношение {report.ratio:.3f}, N = {report.config.n}")
