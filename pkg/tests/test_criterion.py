"""
Тесты критерия устойчивости: специальные функции, кривая Γ_h, два пути.
"""

import numpy as np
import pytest

from config import CHAIN_TOL, CRITERION_H_GRID, ROUTE_TOL, SERIES_THRESHOLD
from core import DomainError, WaveParams, central_difference
from engines.existence import build_profile
from engines.criterion import (
    CriterionRow,
    QMethod,
    build_gamma,
    compare_routes,
    criterion_sweep,
    criterion_verdict,
    dh_dc,
    h_of_params,
    q_functional,
    special_derivatives,
    special_functions,
    transformed_dQ_dh,
    transformed_dQ_dh_direct,
    transformed_Q,
)


def test_special_values():
    """f(0.5) ≈ 0.056853, F(0.5) = 0.039094 ± 1e-6"""
    f, g, G, F = special_functions(0.5)
    assert abs(F - 0.039094) < 1e-6, f"F(0.5) = {F}"
    assert abs(f - 0.056853) < 1e-6, f"f(0.5) = {f}"
    assert g > 0 and G > 0
    print(f"✅ f(0.5) = {f:.8f}, F(0.5) = {F:.8f}")


def test_special_domain():
    for phi in (0.0, 1.0, -0.1):
        with pytest.raises(DomainError, match="ϕ ∈ \\(0, 1\\)"):
            special_functions(phi)
    with pytest.raises(DomainError):
        special_derivatives(np.array([0.5, 1.2]))
    print("✅ Вне (0, 1) — DomainError")


def test_F_positivity():
    """F, F′, F″ > 0 на 10⁴ точках (0, 1 − 1e-6)"""
    upper = 1.0 - 1e-6
    phi = np.linspace(upper / 10_000, upper, 10_000)
    _, _, _, F = special_functions(phi)
    _, dF, d2F = special_derivatives(phi)
    assert np.all(F > 0) and np.all(dF > 0) and np.all(d2F > 0)
    print(f"✅ min F = {F.min():.3e}")


def test_small_phi_asymptotics():
    """F ≈ ϕ⁴/3 и f ≈ ϕ³/3 при ϕ → 0"""
    phi = 1e-3
    f, _, _, F = special_functions(phi)
    assert abs(F / phi**4 - 1.0 / 3.0) < 1e-2, f"F/ϕ⁴ = {F / phi**4}"
    assert abs(f / phi**3 - 1.0 / 3.0) < 1e-2, f"f/ϕ³ = {f / phi**3}"
    print("✅ Асимптотика малых ϕ")


def test_series_switch_continuity():
    """Значения по обе стороны порога ряда совпадают"""
    below = np.array(special_functions(SERIES_THRESHOLD * (1 - 1e-12)))
    above = np.array(special_functions(SERIES_THRESHOLD * (1 + 1e-12)))
    assert np.all(np.abs(below - above) <= 1e-9 * np.abs(above)), f"{below} vs {above}"
    print("✅ Переход ряд/замкнутая форма непрерывен")


@pytest.mark.parametrize("phi", [0.05, 0.3, 0.7, 0.95])
def test_special_derivatives(phi):
    """f′ и F′ против центральных разностей"""
    df, dF, d2F = special_derivatives(phi)
    step = 1e-5
    fd_f = central_difference(lambda p: special_functions(p)[0], phi, step)
    fd_F = central_difference(lambda p: special_functions(p)[3], phi, step)
    fd_dF = central_difference(lambda p: special_derivatives(p)[1], phi, step)
    assert abs(df - fd_f) < 1e-6 * max(1.0, abs(df))
    assert abs(dF - fd_F) < 1e-6 * max(1.0, abs(dF))
    assert abs(d2F - fd_dF) < 1e-5 * max(1.0, abs(d2F))
    print(f"✅ Производные при ϕ={phi}")


def test_gamma_curve():
    """a(0.5) = √1.5, точки лежат на уровне, аргументы проверяются"""
    curve = build_gamma(0.5)
    assert abs(curve.a - 1.224745) < 1e-6
    assert 0.0 < curve.phi0 < 1.0
    assert curve.level_residual() < 1e-12
    assert curve.n_nodes == 256
    for h in (0.0, 2.0, 2.5):
        with pytest.raises(DomainError, match="h ∈ \\(0, 2\\)"):
            build_gamma(h)
    with pytest.raises(DomainError, match="n ≥ 128"):
        build_gamma(0.5, 64)
    print(f"✅ Γ_0.5: ϕ₀ = {curve.phi0:.12f}")


def test_transformed_integral_monotone():
    """𝒬(h) > 0, убывает; 𝒬′(h) < 0 обеими формулами"""
    rows = criterion_sweep(CRITERION_H_GRID)
    q = [row.q for row in rows]
    assert all(v > 0 for v in q)
    assert all(b < a for a, b in zip(q, q[1:]))
    for row in rows:
        assert row.dq_dh < 0, f"h={row.h}: 𝒬′ = {row.dq_dh}"
        assert abs(row.dq_dh - row.dq_dh_direct) < 1e-6 * abs(row.dq_dh), f"h={row.h}"
    print("✅ 𝒬′(h) < 0 на всей сетке")


@pytest.mark.parametrize("h", [0.1, 0.9, 1.7])
def test_transformed_derivative_matches_difference(h):
    step = 1e-4
    fd = central_difference(transformed_Q, h, step)
    assert abs(transformed_dQ_dh(h) - fd) < 1e-4 * abs(fd), f"{transformed_dQ_dh(h)} vs {fd}"
    assert transformed_dQ_dh_direct(h) < 0
    print(f"✅ 𝒬′({h}) = {fd:.10g}")


def test_h_of_params(reference_params):
    assert h_of_params(reference_params) == pytest.approx(0.5)
    assert dh_dc(reference_params) == pytest.approx(-2 * 0.4 / 1.6**2)
    with pytest.raises(DomainError, match="b = 1"):
        h_of_params(WaveParams(b=1.4, c=2.0, kappa=0.5))
    print("✅ h = 2κ/γ")


def test_direct_functional_methods(reference_params):
    """Q по квадратуре и по сетке профиля совпадают"""
    profile = build_profile(reference_params, n_points=4096)
    by_quadrature = q_functional(profile, QMethod.QUADRATURE)
    by_grid = q_functional(profile, QMethod.TRAPEZOID)
    assert abs(by_quadrature - by_grid) < 1e-5 * by_quadrature
    assert abs(by_quadrature - transformed_Q(0.5)) < ROUTE_TOL * by_quadrature
    print(f"✅ Q = {by_quadrature:.12g}")


def test_routes_agree(reference_params):
    """Q(φ, c) = 𝒬(h) и dQ/dc = 𝒬′(h)·dh/dc при (2, 0.4)"""
    route = compare_routes(reference_params)
    assert route.h == pytest.approx(0.5)
    assert route.value_error < ROUTE_TOL
    assert route.chain_error < CHAIN_TOL
    assert route.dq_dc_direct > 0
    assert route.charge_derivative < 0
    print(f"✅ Пути согласованы: {route.value_error:.2e}, {route.chain_error:.2e}")


@pytest.mark.slow
def test_route_grid():
    """dQ/dc > 0 во всех 9 точках сетки (c, κ/c)"""
    from engines.criterion import route_sweep
    routes = route_sweep(jobs=2)
    assert len(routes) == 9
    assert all(r.dq_dc_direct > 0 and r.chain_error < CHAIN_TOL for r in routes)
    print("✅ Сетка (c, κ/c) пройдена")


def test_verdict():
    rows = criterion_sweep([0.5, 1.0])
    verdict = criterion_verdict(rows)
    assert verdict["criterion_holds"] is True
    assert verdict["grid"]["h"] == [0.5, 1.0]
    assert verdict["tolerances"]["route"] == ROUTE_TOL

    broken = rows + [CriterionRow(h=1.5, q=0.1, dq_dh=0.2, dq_dh_direct=0.2)]
    assert criterion_verdict(broken)["criterion_holds"] is False
    print("✅ Вердикт критерия")


def test_sweep_parallel_matches_serial():
    serial = criterion_sweep([0.3, 1.3], jobs=1)
    parallel = criterion_sweep([0.3, 1.3], jobs=2)
    assert [r.as_tuple() for r in serial] == [r.as_tuple() for r in parallel]
    print("✅ Параллельная развёртка детерминирована")
