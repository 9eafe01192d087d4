"""
Тесты спектра второй вариации ℒ и оператора 𝒥_m.

Запуск: python -m pytest tests/test_spectral.py -v
"""

import numpy as np
import pytest

from config import Closure, FrameSpeed
from core import DomainError
from engines.conserved import psi_Q
from engines.shared import Field, spectral_derivative
from engines.spectral import (
    Constraint,
    apply_Jm,
    assemble_L,
    assemble_operator,
    coercivity_function,
    coercivity_identity,
    constrained_min_eig,
    restrict,
    spectrum,
)
from verification import CHECKS


# ============= Сборка ℒ =============

def test_small_grid_rejected():
    mu = np.full(128, 0.4)
    zeros = np.zeros(128)
    with pytest.raises(DomainError, match="N ≥ 256"):
        assemble_operator(mu, zeros, zeros, 0.1, 0.4, 1.6)
    print("✅ N < 256 отклоняется")


def test_operator_symmetric(coarse_spectral_profile):
    for closure in (Closure.DIRICHLET, Closure.PERIODIC):
        dense = assemble_L(coarse_spectral_profile, closure).to_dense()
        assert np.array_equal(dense, dense.T), f"{closure}: матрица несимметрична"
    print("✅ ℒ симметричен при обоих замыканиях")


def test_essential_edge(coarse_spectral_profile):
    """(s − κ)/κ² = 7.5 при s = γ и 10 при s = c"""
    relative = assemble_L(coarse_spectral_profile, frame=FrameSpeed.RELATIVE)
    literal = assemble_L(coarse_spectral_profile, frame=FrameSpeed.LITERAL)
    assert relative.essential_edge == pytest.approx(7.5)
    assert literal.essential_edge == pytest.approx(10.0)
    print("✅ Край существенного спектра")


def test_constant_background_symbol():
    """При μ ≡ κ значения Дирихле лежат между краем и вторым значением периодического спектра"""
    n, kappa, speed = 512, 0.4, 1.6
    mu = np.full(n, kappa)
    zeros = np.zeros(n)
    matrix = assemble_operator(mu, zeros, zeros, 60.0 / n, kappa, speed)
    values = np.linalg.eigvalsh(matrix.to_dense())
    gap = values.min() - matrix.essential_edge
    # (s/κ²)(2π/L)² ≈ 0.1097
    assert 0.0 < gap < 0.11, f"зазор {gap:.6f}"
    periodic = assemble_operator(mu, zeros, zeros, 60.0 / n, kappa, speed, Closure.PERIODIC)
    assert np.linalg.eigvalsh(periodic.to_dense()).min() == pytest.approx(matrix.essential_edge, abs=1e-9)
    print(f"✅ Нижнее значение на фоне: {values.min():.6f}")


def test_restrict_drops_boundary(coarse_spectral_profile):
    p = coarse_spectral_profile
    matrix = assemble_L(p, Closure.DIRICHLET)
    assert restrict(p.mu, matrix).size == p.n_points - 1
    assert restrict(p.mu, assemble_L(p, Closure.PERIODIC)).size == p.n_points
    print("✅ Неизвестные Дирихле без ξ₀")


# ============= Спектр =============

def test_spectrum_structure(spectral_profile):
    """Одно отрицательное без узлов, нулевая мода с одним узлом, край кластера"""
    report = spectrum(spectral_profile)
    assert report.negative_count == 1, f"отрицательных: {report.negative_count}"
    assert report.lowest < 0
    assert report.ground_state_nodes == 0
    assert abs(report.zero_value) < 1e-4, f"λ_z = {report.zero_value:.3e}"
    assert report.zero_overlap > 0.999
    assert report.zero_mode_nodes == 1
    assert abs(report.cluster_edge - 7.5) < 0.02 * 7.5, f"кластер {report.cluster_edge}"
    assert all(0.0 < v < 7.5 for v in report.point_eigenvalues)
    print(f"✅ λ₀ = {report.lowest:.8f}, λ_z = {report.zero_value:.2e}")


def test_spectrum_to_dict(coarse_spectral_profile):
    record = spectrum(coarse_spectral_profile, count=8).to_dict()
    assert len(record["eigenvalues"]) == 8
    assert record["closure"] == Closure.DIRICHLET
    assert set(record["zero_candidate"]) == {"value", "overlap"}
    print("✅ Словарь спектра")


def test_closures_agree(coarse_spectral_profile):
    """Нижнее значение не зависит от замыкания"""
    dirichlet = spectrum(coarse_spectral_profile, Closure.DIRICHLET, count=4)
    periodic = spectrum(coarse_spectral_profile, Closure.PERIODIC, count=4)
    assert abs(dirichlet.lowest - periodic.lowest) < 1e-6
    assert periodic.negative_count == 1
    print(f"✅ λ₀: {dirichlet.lowest:.10f} / {periodic.lowest:.10f}")


def test_zero_value_refines(spectral_profile, coarse_spectral_profile):
    """|λ_z| убывает быстрее второго порядка при удвоении N"""
    coarse = abs(spectrum(coarse_spectral_profile, count=4).zero_value)
    fine = abs(spectrum(spectral_profile, count=4).zero_value)
    assert coarse / fine > 9.0, f"{coarse:.3e} → {fine:.3e}"
    print(f"✅ λ_z: {coarse:.3e} → {fine:.3e}")


# ============= 𝒥_m =============

def test_Jm_constant_background():
    """m ≡ κ, ψ = sin(kx): 𝒥ψ = −κ²k·cos(kx)/(1 + k²)"""
    length, n, kappa = 40.0, 256, 0.4
    f = Field.constant(kappa, length, n)
    k = 2.0 * np.pi * 3 / length
    result = apply_Jm(f, np.sin(k * f.x))
    expected = -kappa**2 * k * np.cos(k * f.x) / (1.0 + k * k)
    assert np.max(np.abs(result - expected)) < 1e-12
    print("✅ 𝒥 на постоянном фоне")


def test_Jm_skew(coarse_spectral_profile):
    """⟨𝒥u, v⟩ = −⟨u, 𝒥v⟩ при привязке к среднему"""
    f = coarse_spectral_profile.to_field()
    rng = np.random.default_rng(7)
    for _ in range(5):
        u, v = rng.standard_normal((2, f.n))
        lhs = np.dot(apply_Jm(f, u), v)
        rhs = -np.dot(u, apply_Jm(f, v))
        scale = np.linalg.norm(apply_Jm(f, u)) * np.linalg.norm(v)
        assert abs(lhs - rhs) < 1e-10 * scale
    print("✅ 𝒥_m кососимметричен")


def test_Jm_maps_charge_gradient(profile_2048):
    """𝒥_μ ψ_𝒬 = μ_ξ при привязке к краю"""
    p = profile_2048
    f = p.to_field()
    result = apply_Jm(f, psi_Q(p), anchor="edge")
    error = np.max(np.abs(result - spectral_derivative(p.mu, p.domain_length)))
    assert error < 1e-4 * np.max(np.abs(p.mu_xi)), f"ошибка {error:.2e}"
    print(f"✅ 𝒥_μψ_𝒬 = μ_ξ: {error:.2e}")


def test_Jm_unknown_anchor(coarse_spectral_profile):
    f = coarse_spectral_profile.to_field()
    with pytest.raises(ValueError):
        apply_Jm(f, f.m, anchor="middle")


# ============= Коэрцитивность =============

def test_constrained_minimum(coarse_spectral_profile):
    """α₀ > 0 > λ₀ при двух ограничениях; без ограничений α₀ = λ₀"""
    p = coarse_spectral_profile
    lowest = spectrum(p, count=4).lowest
    free = constrained_min_eig(p, constraints=())
    alpha0 = constrained_min_eig(p)
    assert abs(free - lowest) < 1e-8 * max(1.0, abs(lowest))
    assert alpha0 > 0 > lowest, f"α₀ = {alpha0}, λ₀ = {lowest}"
    assert constrained_min_eig(p, constraints=(Constraint.TRANSLATION,)) < alpha0
    with pytest.raises(ValueError):
        constrained_min_eig(p, constraints=("mass",))
    print(f"✅ α₀ = {alpha0:.8f}")


def test_coercivity_function_at_zero(coarse_spectral_profile):
    """g(0) из функции совпадает с тождеством"""
    p = coarse_spectral_profile
    identity = coercivity_identity(p, dQdc=-1.0)
    value = coercivity_function(p, 0.0)
    assert abs(value - identity.g0) < 1e-10 * abs(identity.g0)
    assert coercivity_function(p, np.array([0.0, -0.5])).shape == (2,)
    print(f"✅ g(0) = {value:.10g}")


@pytest.mark.slow
def test_coercivity_identity(spectral_profile):
    """g(0) < 0 и совпадает с d𝒬(μ)/dc с точностью 1e-3"""
    result = coercivity_identity(spectral_profile)
    assert result.g0 < 0
    assert result.mismatch < 1e-3, f"g(0)={result.g0}, d𝒬/dc={result.dQdc}"
    print(f"✅ g(0) = {result.g0:.10g}, d𝒬/dc = {result.dQdc:.10g}")


def test_unknown_closure_rejected():
    mu = np.full(256, 0.4)
    zeros = np.zeros(256)
    with pytest.raises(DomainError, match="замыкание"):
        assemble_operator(mu, zeros, zeros, 0.1, 0.4, 1.6, closure="neumann")


def test_point_eigenvalues_stable_under_refinement(spectral_profile, coarse_spectral_profile):
    """Число точечных значений и край кластера не меняются при удвоении N"""
    coarse = spectrum(coarse_spectral_profile)
    fine = spectrum(spectral_profile)
    assert len(coarse.point_eigenvalues) == len(fine.point_eigenvalues)
    for a, b in zip(coarse.point_eigenvalues, fine.point_eigenvalues):
        assert abs(a - b) < 1e-3 * fine.essential_edge, f"{a:.6f} / {b:.6f}"
    assert abs(coarse.cluster_edge - fine.cluster_edge) < 0.02 * fine.essential_edge
    print(f"✅ Точечных значений: {len(fine.point_eigenvalues)}")


@pytest.mark.slow
def test_spectrum_acceptance(reference_params):
    """N = 2048, L = 60 через проверку приёмки"""
    args = {"b": reference_params.b, "c": reference_params.c, "kappa": reference_params.kappa,
            "n": 2048, "domain_length": 60.0}
    passed, value, detail = CHECKS["spectrum_structure"](args)
    assert passed, f"{value} {detail}"
    print(f"✅ Спектр на сетке приёмки: {value}")


@pytest.mark.slow
def test_coercivity_acceptance(reference_params):
    """g(0) = d𝒬(μ)/dc с точностью 1e-3 и α₀ > 0 на сетке N = 2048, L = 60"""
    args = {"b": reference_params.b, "c": reference_params.c, "kappa": reference_params.kappa,
            "n": 2048, "domain_length": 60.0, "tolerance": 1e-3}
    passed, value, detail = CHECKS["coercivity"](args)
    assert passed, f"{value} {detail}"
    print(f"✅ Коэрцитивность на сетке приёмки: {detail}")
