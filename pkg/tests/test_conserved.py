"""
Тесты сохраняющихся функционалов и лагранжиана.
"""

import inspect

import numpy as np
import pytest

from config import DEFAULT_N_POINTS, FrameSpeed
from core import DomainError, WaveParams
from engines.conserved import (
    charge_gradient_forms,
    charge_Q,
    charge_speed_derivative,
    conserved_family_bneq1,
    frame_speed_value,
    hamiltonian_H,
    invariant_names,
    invariants,
    lagrangian_gradient,
    log_limit_integrand,
    psi_Q,
    q1,
    q2,
    remainder_scaling,
)
from engines.existence import build_profile
from engines.shared import Field


def test_constant_state_is_neutral():
    """m ≡ κ: ℋ = 𝒬₁ = 𝒬₂ = 𝒬 = 0"""
    f = Field.constant(0.4, 40.0, 256)
    for name, value in (("H", hamiltonian_H(f)), ("Q1", q1(f)), ("Q2", q2(f)), ("Q", charge_Q(f))):
        assert abs(value) < 1e-13, f"{name} = {value}"
    print("✅ Фон κ нейтрален")


def test_hamiltonian_positive(profile_2048):
    """ℋ > 0 и 𝒬₁ > 0 для волны"""
    f = profile_2048.to_field()
    assert hamiltonian_H(f) > 0
    assert q1(f) > 0
    print(f"✅ ℋ = {hamiltonian_H(f):.10g}")


def test_nonpositive_momentum_rejected():
    f = Field.constant(0.4, 40.0, 256)
    bad = f.with_values(np.where(np.arange(f.n) == 10, -0.1, f.m))
    with pytest.raises(DomainError, match="m > 0"):
        hamiltonian_H(bad)
    print("✅ m ≤ 0 отклоняется")


def test_invariant_names():
    assert invariant_names(1.0) == ("H", "Q1", "Q2")
    assert invariant_names(1.4) == ("E", "F1", "F2")
    print("✅ Имена инвариантов")


def test_family_bneq1():
    """ℰ, ℱ₁, ℱ₂ определены при b ≠ 1 и равны нулю на фоне"""
    f = Field.constant(0.5, 40.0, 256)
    assert all(abs(v) < 1e-13 for v in conserved_family_bneq1(f, 0.7))
    with pytest.raises(DomainError, match="b ≠ 1"):
        conserved_family_bneq1(f, 1.0)

    params = WaveParams(b=1.4, c=2.0, kappa=0.5)
    values = invariants(build_profile(params, n_points=1024).to_field(), params.b)
    assert set(values) == {"E", "F1", "F2"}
    print(f"✅ Семейство b ≠ 1: {values}")


def test_log_limit_continuity():
    """(b−1)⁻¹(m − m^{1/b}) → m ln m при b → 1"""
    m = np.linspace(0.2, 5.0, 50)
    limit = log_limit_integrand(m, 1.0)
    for b in (1.0 + 1e-6, 1.0 - 1e-6):
        assert np.max(np.abs(log_limit_integrand(m, b) - limit)) < 1e-4
    print("✅ Предел b → 1 непрерывен")


def test_frame_speed(reference_params):
    assert frame_speed_value(reference_params, FrameSpeed.RELATIVE) == pytest.approx(1.6)
    assert frame_speed_value(reference_params, FrameSpeed.LITERAL) == 2.0
    with pytest.raises(DomainError):
        frame_speed_value(reference_params, "other")
    print("✅ Скорость системы отсчёта")


def test_psi_Q_properties(profile_2048):
    """ψ_𝒬 < 0, ортогонален μ_ξ, две формы согласованы"""
    p = profile_2048
    forms = charge_gradient_forms(p)
    psi = psi_Q(p)
    assert np.all(psi[np.abs(p.xi) < 10.0] < 0)
    assert abs(p.dxi * np.dot(psi, p.mu_xi)) < 1e-8
    assert forms.mismatch < 1e-2, f"расхождение форм {forms.mismatch:.2e}"
    print(f"✅ ψ_𝒬: расхождение форм {forms.mismatch:.2e}")


def _gradient_errors(profile):
    """max|δΛ/δm| при s = γ и отклонение от (1 − c/γ)·ln((c−φ)/γ) при s = c"""
    g, c = profile.params.gamma, profile.params.c
    relative = lagrangian_gradient(profile, FrameSpeed.RELATIVE)
    literal = lagrangian_gradient(profile, FrameSpeed.LITERAL)
    expected = (1.0 - c / g) * np.log((c - profile.phi) / g)
    return np.max(np.abs(relative[1:-1])), np.max(np.abs(literal - expected)[1:-1])


def test_wave_is_critical_point(profile_2048, reference_params):
    """Обе ошибки убывают со вторым порядком по dξ (разностные производные)"""
    coarse = build_profile(reference_params, n_points=1024, domain_length=profile_2048.domain_length)
    fine_errors = _gradient_errors(profile_2048)
    coarse_errors = _gradient_errors(coarse)
    for name, before, after in zip(("s = γ", "s = c"), coarse_errors, fine_errors):
        assert 3.0 < before / after < 5.0, f"{name}: {before:.3e} → {after:.3e}"
    print(f"✅ Критическая точка: max|δΛ| = {coarse_errors[0]:.2e} → {fine_errors[0]:.2e}")


def test_remainder_cubic(profile_2048):
    """Остаток разложения Λ убывает как ε³"""
    x = profile_2048.xi
    result = remainder_scaling(profile_2048, 0.5 * np.exp(-(x / 1.2) ** 2))
    assert abs(result.slope - 3.0) <= 0.2, f"наклон {result.slope:.3f}"
    assert abs(result.first_variation) < 1e-2
    print(f"✅ Наклон остатка {result.slope:.3f}")


def test_remainder_rejects_nonpositive(profile_2048):
    h = -100.0 * np.ones_like(profile_2048.mu)
    with pytest.raises(DomainError, match="μ \\+ εh > 0"):
        remainder_scaling(profile_2048, h, eps_list=[0.1])
    with pytest.raises(DomainError, match="ε > 0"):
        remainder_scaling(profile_2048, h, eps_list=[0.0])
    print("✅ Недопустимые ε отклоняются")


@pytest.mark.slow
def test_charge_speed_derivative_default_grid():
    """Сетка по умолчанию берётся из конфигурации"""
    default = inspect.signature(charge_speed_derivative).parameters["n_points"].default
    assert default == DEFAULT_N_POINTS


def test_charge_speed_derivative(reference_params):
    """d𝒬(μ)/dc < 0; Ричардсон согласован с центральной разностью"""
    result = charge_speed_derivative(reference_params, n_points=2048)
    assert result.value < 0
    assert result.richardson_gap < 1e-3
    print(f"✅ d𝒬/dc = {result.value:.10g}")
