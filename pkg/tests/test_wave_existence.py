"""
Тесты существования волны: параметры, точка поворота, профиль, портрет.

Запуск: python -m pytest tests/test_wave_existence.py -v
"""

import math

import numpy as np
import pytest

from core import DomainError, PhasePoint, WaveParams, fd_derivative, fd_second_derivative
from engines.existence import (
    build_profile,
    default_domain_length,
    default_energies,
    energy,
    homoclinic_energy,
    level_orbit,
    mu_max,
    mu_max_exponential,
    phase_portrait,
    potential,
    shoot_profile,
    turning_point,
    turning_point_sensitivities,
    vector_field,
    wave_geometry,
)


def test_admissibility():
    """Допустимая область b > 0, c > κ > 0, κ < c/(b+1)"""
    assert WaveParams(b=1.0, c=2.0, kappa=0.4).is_admissible
    violation = WaveParams(b=1.0, c=2.0, kappa=1.0).admissibility_violation()
    assert violation is not None and "κ < c/(b+1)" in violation, f"Получено: {violation}"

    with pytest.raises(DomainError, match="b > 0"):
        WaveParams(b=0.0, c=2.0, kappa=0.4).require_admissible()
    with pytest.raises(DomainError, match="c > κ"):
        WaveParams(b=1.0, c=0.3, kappa=0.4).require_admissible()
    print("✅ Допустимость параметров проверяется")


def test_derived_parameters(reference_params):
    """γ = 1.6, h = 0.5, λ = √0.75 для (2, 0.4)"""
    assert math.isclose(reference_params.gamma, 1.6)
    assert math.isclose(reference_params.h, 0.5)
    assert math.isclose(reference_params.decay_rate, math.sqrt(0.75))
    print("✅ γ, h и показатель убывания")


def test_fixed_points(reference_params):
    """Векторное поле обращается в ноль в седле (0.4, 0) и центре (1.6, 0)"""
    for phi in (0.4, 1.6):
        field = vector_field(PhasePoint(phi=phi, psi=0.0), reference_params)
        assert abs(field.phi) < 1e-14 and abs(field.psi) < 1e-12, f"φ={phi}: {field}"
    assert math.isclose(wave_geometry(reference_params).center, 1.6, rel_tol=1e-14)
    print("✅ Неподвижные точки (0.4, 0) и (1.6, 0)")


def test_singular_line_rejected(reference_params):
    """φ ≥ c недопустимо"""
    with pytest.raises(DomainError, match="φ < c"):
        vector_field(PhasePoint(phi=2.0, psi=0.0), reference_params)
    with pytest.raises(DomainError):
        potential(np.array([1.0, 2.5]), reference_params)
    print("✅ Сингулярная прямая φ = c отклоняется")


def test_turning_point(reference_params):
    """G(2, 0.4) = 1.888 ± 1e-3 и лежит на гомоклиническом уровне"""
    G = turning_point(reference_params)
    assert abs(G - 1.888) < 1e-3, f"G = {G}"
    assert 1.6 < G < 2.0
    e_hom = homoclinic_energy(reference_params)
    assert abs(energy(PhasePoint(phi=G, psi=0.0), reference_params) - e_hom) < 1e-12
    print(f"✅ G = {G:.12f}")


def test_mu_max_forms(reference_params):
    """M = κγ/(c−G) = κ·exp((G² − κ²)/(2κγ))"""
    direct = mu_max(reference_params)
    exponential = mu_max_exponential(reference_params)
    assert abs(direct - exponential) < 1e-10 * direct, f"{direct} vs {exponential}"
    print(f"✅ M = {direct:.10g}")


@pytest.mark.parametrize("params", [
    WaveParams(b=1.0, c=2.0, kappa=0.4),
    WaveParams(b=1.0, c=1.0, kappa=0.2),
    WaveParams(b=0.7, c=2.0, kappa=0.5),
    WaveParams(b=1.4, c=2.0, kappa=0.5),
])
def test_turning_sensitivities(params):
    """∂G/∂c и ∂G/∂κ против центральных разностей"""
    d_c, d_k = turning_point_sensitivities(params)
    step = 1e-6
    fd_c = (turning_point(params.with_speed(params.c + step))
            - turning_point(params.with_speed(params.c - step))) / (2 * step)
    fd_k = (turning_point(params.with_background(params.kappa + step))
            - turning_point(params.with_background(params.kappa - step))) / (2 * step)
    assert abs(d_c - fd_c) < 1e-5 * max(1.0, abs(fd_c)), f"∂G/∂c: {d_c} vs {fd_c}"
    assert abs(d_k - fd_k) < 1e-5 * max(1.0, abs(fd_k)), f"∂G/∂κ: {d_k} vs {fd_k}"
    print(f"✅ Чувствительности G для {params}")


def test_profile_shape(profile_2048, reference_params):
    """Гребень в ξ = 0, симметрия, μ > 0, хвосты у κ"""
    p = profile_2048
    i = p.crest_index
    assert abs(p.phi[i] - p.G) < 1e-12
    assert int(np.argmax(p.phi)) == i
    assert np.max(np.abs(p.phi[i + 1:] - p.phi[i - 1:0:-1][:p.n_points - i - 1])) < 1e-12
    assert np.all(p.mu > 0)
    assert abs(p.mu[i] - p.M) < 1e-10 * p.M
    assert max(p.phi[0], p.phi[-1]) - reference_params.kappa < p.tail_tol
    print(f"✅ Профиль: N={p.n_points}, L={p.domain_length}")


def test_profile_first_integral(profile_2048, reference_params):
    """½φ_ξ² + V(φ) = E_hom вдоль профиля"""
    p = profile_2048
    residual = 0.5 * p.phi_xi**2 + potential(p.phi, reference_params) - homoclinic_energy(reference_params)
    assert np.max(np.abs(residual)) < 1e-10, f"невязка {np.max(np.abs(residual)):.2e}"
    print("✅ Первый интеграл сохраняется")


def test_profile_derivatives(profile_2048):
    """φ_ξ и μ_ξ из первого интеграла против разностных производных"""
    p = profile_2048
    phi_error = np.max(np.abs(fd_derivative(p.phi, p.dxi) - p.phi_xi)[1:-1])
    mu_error = np.max(np.abs(fd_derivative(p.mu, p.dxi) - p.mu_xi)[1:-1])
    assert phi_error < 1e-2 * np.max(np.abs(p.phi_xi)), f"φ_ξ: {phi_error:.2e}"
    assert mu_error < 5e-2 * np.max(np.abs(p.mu_xi)), f"μ_ξ: {mu_error:.2e}"
    print(f"✅ Производные согласованы: {phi_error:.2e}, {mu_error:.2e}")


def test_mu_consistency_second_order(reference_params):
    """max|(1 − ∂²)φ − μ| убывает ≈4× при удвоении N"""
    length = default_domain_length(reference_params)
    errors = []
    for n in (1024, 2048, 4096):
        p = build_profile(reference_params, n_points=n, domain_length=length)
        residual = p.phi - fd_second_derivative(p.phi, p.dxi) - p.mu
        errors.append(np.max(np.abs(residual[1:-1])))
    ratios = [a / b for a, b in zip(errors, errors[1:])]
    assert all(3.5 < r < 4.5 for r in ratios), f"отношения {ratios}"
    print(f"✅ Второй порядок: {ratios}")


def test_shooting_oracle(profile_2048, reference_params):
    """Квадратура совпадает с пристрелкой на левой половине"""
    p = profile_2048
    left = p.xi <= 0
    shot = shoot_profile(reference_params, p.xi[left])
    finite = np.isfinite(shot)
    assert np.count_nonzero(finite) > 100
    diff = np.max(np.abs(shot[finite] - p.phi[left][finite]))
    assert diff < 1e-7, f"расхождение {diff:.2e}"
    print(f"✅ Оракул пристрелки: {diff:.2e}")


@pytest.mark.parametrize("b", [0.7, 1.4])
def test_profile_general_b(b):
    """b ≠ 1: профиль строится, первый интеграл выполняется"""
    params = WaveParams(b=b, c=2.0, kappa=0.5)
    p = build_profile(params, n_points=1024)
    residual = 0.5 * p.phi_xi**2 + potential(p.phi, params) - homoclinic_energy(params)
    assert np.max(np.abs(residual)) < 1e-10
    assert np.all(p.mu > 0)
    assert p.geometry.center < p.G < params.c, f"G={p.G}, центр {p.geometry.center}"
    print(f"✅ Профиль при b={b}: G={p.G:.8f}")


def test_profile_arguments(reference_params):
    with pytest.raises(DomainError, match="n_points"):
        build_profile(reference_params, n_points=32)
    with pytest.raises(DomainError, match="tail_tol"):
        build_profile(reference_params, tail_tol=1e-3)
    with pytest.raises(DomainError):
        build_profile(WaveParams(b=1.0, c=2.0, kappa=1.2))
    print("✅ Аргументы профиля проверяются")


def test_portrait_levels(reference_params):
    """Орбиты лежат на своих уровнях; ниже центра — пусто; выше E_hom — не замкнуты"""
    orbits = phase_portrait(reference_params, default_energies(reference_params))
    for orbit in orbits:
        assert not orbit.is_empty and orbit.closed
        residual = 0.5 * orbit.psi**2 + potential(orbit.phi, reference_params) - orbit.energy
        assert np.max(np.abs(residual)) < 1e-8, f"e={orbit.energy}"

    v_center = float(potential(1.6, reference_params))
    assert level_orbit(reference_params, v_center - 1.0).is_empty
    above = level_orbit(reference_params, homoclinic_energy(reference_params) + 0.1)
    assert not above.closed
    print(f"✅ Фазовый портрет: {len(orbits)} замкнутых уровней")


@pytest.mark.parametrize("b", [0.7, 1.0, 1.4])
def test_portrait_samples_close(b):
    """Гомоклинические орбиты при κ = 0.5, c = 2 существуют и замкнуты"""
    params = WaveParams(b=b, c=2.0, kappa=0.5)
    orbit = level_orbit(params, homoclinic_energy(params))
    assert orbit.closed and not orbit.is_empty
    assert abs(orbit.phi.max() - wave_geometry(params).G) < 1e-9
    print(f"✅ Гомоклиническая орбита b={b}")
