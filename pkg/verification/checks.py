"""
Численные проверки приёмки.

Каждая проверка — функция (args: dict) -> (passed, value, details),
зарегистрированная в CHECKS под именем типа из acceptance.yaml.
"""

import time
from dataclasses import dataclass, asdict
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np
from scipy import optimize

from config import get_logger, CHAIN_TOL, ORBITAL_RATIO_BOUND
from core import PhasePoint, WaveParams, fd_second_derivative
from engines.existence import (
    build_profile,
    default_domain_length,
    homoclinic_energy,
    potential,
    vector_field,
    wave_geometry,
)
from engines.conserved import remainder_scaling
from engines.criterion import (
    criterion_sweep,
    route_sweep,
    special_derivatives,
    special_functions,
)
from engines.spectral import (
    apply_Jm,
    coercivity_identity,
    constrained_min_eig,
    spectrum,
)
from engines.evolution import stability_experiment

logger = get_logger(__name__)

CheckOutcome = Tuple[bool, Any, str]


@dataclass
class CheckResult:
    """Результат одной проверки"""
    passed: bool
    check_type: str
    name: str
    description: str
    reference: str = ""
    value: Any = None
    details: Optional[str] = None
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


def _params(args: dict) -> WaveParams:
    return WaveParams(b=float(args.get("b", 1.0)), c=float(args["c"]), kappa=float(args["kappa"])).require_admissible()


# ============= СУЩЕСТВОВАНИЕ =============

def check_fixed_points(args: dict) -> CheckOutcome:
    """Векторное поле обращается в ноль в седле (κ, 0) и центре (c−κ, 0)"""
    params = _params(args)
    saddle = PhasePoint(phi=params.kappa, psi=0.0)
    center = PhasePoint(phi=params.gamma, psi=0.0)
    residual = max(
        abs(vector_field(p, params).psi) + abs(vector_field(p, params).phi) for p in (saddle, center)
    )
    expected = args.get("expected")
    located = [params.kappa, params.gamma]
    matches = expected is None or np.allclose(located, expected, rtol=0.0, atol=1e-15)
    passed = residual < 1e-12 and matches
    return passed, {"saddle": located[0], "center": located[1], "residual": residual}, ""


def check_turning_point(args: dict) -> CheckOutcome:
    """G против независимой бисекции V(φ) = E_hom на (c−κ, c)"""
    params = _params(args)
    G = wave_geometry(params).G
    level = homoclinic_energy(params)
    upper = params.c - 1e-12 * params.c
    oracle = optimize.bisect(
        lambda phi: float(potential(phi, params)) - level,
        params.gamma, upper, xtol=1e-14, maxiter=200,
    )
    reference = float(args["expected"])
    tolerance = float(args.get("tolerance", 1e-3))
    passed = abs(G - reference) < tolerance and abs(G - oracle) < 1e-9
    return passed, {"G": G, "oracle": oracle}, f"|G − {reference}| = {abs(G - reference):.2e}"


def check_mu_consistency(args: dict) -> CheckOutcome:
    """max|(1 − ∂²)φ − μ| по разностной ∂² убывает ≈4× при удвоении N"""
    params = _params(args)
    length = default_domain_length(params)
    errors = []
    for n in args["n_values"]:
        profile = build_profile(params, n_points=int(n), domain_length=length)
        residual = profile.phi - fd_second_derivative(profile.phi, profile.dxi) - profile.mu
        errors.append(float(np.max(np.abs(residual[1:-1]))))
    ratios = [a / b for a, b in zip(errors, errors[1:])]
    low, high = args.get("ratio_range", (3.5, 4.5))
    passed = all(low <= r <= high for r in ratios)
    return passed, {"errors": errors, "ratios": ratios}, f"отношения {', '.join(f'{r:.3f}' for r in ratios)}"


# ============= КРИТЕРИЙ =============

def check_criterion_routes(args: dict) -> CheckOutcome:
    """Прямой путь: dQ/dc > 0 на сетке (c, κ/c) и цепное правило через 𝒬′(h)"""
    routes = route_sweep(args["speeds"], args["ratios"], jobs=int(args.get("jobs", 1)))
    chain_tol = float(args.get("chain_tol", CHAIN_TOL))
    positive = all(r.dq_dc_direct > 0 for r in routes)
    worst_chain = max(r.chain_error for r in routes)
    passed = positive and worst_chain < chain_tol
    value = {"dq_dc": [r.dq_dc_direct for r in routes], "worst_chain_error": worst_chain}
    return passed, value, f"точек {len(routes)}, худшее расхождение {worst_chain:.2e}"


def check_criterion_transformed(args: dict) -> CheckOutcome:
    """Преобразованный путь: 𝒬′(h) < 0 на сетке h"""
    rows = criterion_sweep(args["h_values"], jobs=int(args.get("jobs", 1)))
    passed = all(row.dq_dh < 0 for row in rows)
    return passed, {"h": [r.h for r in rows], "dQcal_dh": [r.dq_dh for r in rows]}, ""


def check_special_positivity(args: dict) -> CheckOutcome:
    """F, F′, F″ > 0 на равномерной выборке (0, 1 − δ)"""
    count = int(args.get("count", 10_000))
    upper = 1.0 - float(args.get("edge", 1e-6))
    phi = np.linspace(upper / count, upper, count)
    _, _, _, F = special_functions(phi)
    _, dF, d2F = special_derivatives(phi)
    minima = {"F": float(np.min(F)), "dF": float(np.min(dF)), "d2F": float(np.min(d2F))}
    passed = all(v > 0 for v in minima.values())
    return passed, minima, ""


def check_special_value(args: dict) -> CheckOutcome:
    """Значение одной из f, g, G, F в точке"""
    names = ("f", "g", "G", "F")
    values = dict(zip(names, special_functions(float(args["phi"]))))
    value = values[args.get("function", "F")]
    error = abs(value - float(args["expected"]))
    return error < float(args["tolerance"]), value, f"ошибка {error:.2e}"


# ============= СПЕКТР =============

def check_spectrum_structure(args: dict) -> CheckOutcome:
    """Одно отрицательное значение без узлов, нулевая мода ≈ μ_ξ, край кластера у края существенного спектра"""
    params = _params(args)
    profile = build_profile(params, n_points=int(args["n"]), domain_length=float(args["domain_length"]))
    report = spectrum(profile)
    edge_error = abs(report.cluster_edge - report.essential_edge) / report.essential_edge
    failures = []
    if report.negative_count != 1:
        failures.append(f"отрицательных {report.negative_count} ≠ 1")
    if report.ground_state_nodes != 0:
        failures.append(f"узлов основного состояния {report.ground_state_nodes} ≠ 0")
    if abs(report.zero_value) >= float(args.get("zero_tol", 1e-4)):
        failures.append(f"|λ_z| = {abs(report.zero_value):.2e}")
    if report.zero_overlap <= float(args.get("overlap", 0.999)):
        failures.append(f"перекрытие {report.zero_overlap:.6f}")
    if edge_error >= float(args.get("edge_tol", 0.02)):
        failures.append(f"край кластера {report.cluster_edge:.4f} vs {report.essential_edge:.4f}")
    value = {
        "lowest": report.lowest,
        "negative_count": report.negative_count,
        "zero_value": report.zero_value,
        "zero_overlap": report.zero_overlap,
        "cluster_edge": report.cluster_edge,
        "essential_edge": report.essential_edge,
    }
    return not failures, value, "; ".join(failures)


def check_coercivity(args: dict) -> CheckOutcome:
    """g(0) < 0 и совпадает с d𝒬(μ)/dc; α₀ > 0 и λ₀ < α₀"""
    params = _params(args)
    profile = build_profile(params, n_points=int(args["n"]), domain_length=float(args["domain_length"]))
    identity = coercivity_identity(profile)
    alpha0 = constrained_min_eig(profile)
    lambda0 = spectrum(profile, count=4).lowest
    tolerance = float(args.get("tolerance", 1e-3))
    passed = identity.g0 < 0 and identity.mismatch < tolerance and alpha0 > 0 and lambda0 < alpha0
    value = {"g0": identity.g0, "dQdc": identity.dQdc, "mismatch": identity.mismatch,
             "alpha0": alpha0, "lambda0": lambda0}
    return passed, value, f"Δ = {identity.mismatch:.2e}, α₀ = {alpha0:.4g}"


def check_skew_symmetry(args: dict) -> CheckOutcome:
    """|⟨Ju, v⟩ + ⟨u, Jv⟩|/(‖u‖‖v‖) на случайных периодических парах"""
    params = _params(args)
    profile = build_profile(params, n_points=int(args.get("n", 512)))
    f = profile.to_field()
    rng = np.random.default_rng(int(args.get("seed", 0)))
    worst = 0.0
    for _ in range(int(args.get("pairs", 100))):
        u, v = rng.standard_normal(f.n), rng.standard_normal(f.n)
        defect = f.dx * (apply_Jm(f, u) @ v + u @ apply_Jm(f, v))
        worst = max(worst, abs(defect) / (f.dx * np.linalg.norm(u) * np.linalg.norm(v)))
    return worst < float(args.get("tolerance", 1e-10)), worst, ""


# ============= ЭВОЛЮЦИЯ =============

def check_traveling_wave(args: dict) -> CheckOutcome:
    """Невозмущённая волна остаётся на своей орбите, инварианты сохраняются"""
    params = _params(args)
    report = stability_experiment(
        params, eps=0.0, t_final=float(args["t_final"]),
        domain_length=float(args.get("domain_length", 80.0)), n=int(args.get("n", 4096)),
    )
    relative = report.relative_distance
    drift = report.trace.max_drift
    passed = (not report.trace.failed and relative < float(args.get("distance_tol", 1e-4))
              and drift < float(args.get("drift_tol", 1e-6)))
    return passed, {"relative_distance": relative, "max_drift": drift}, report.trace.reason


def check_perturbed_runs(args: dict) -> CheckOutcome:
    """Возмущение размера ε: орбитальное расстояние < 5ε до времени T"""
    eps = float(args["eps"])
    ratios, failures = {}, []
    for point in args["points"]:
        params = _params(point)
        report = stability_experiment(
            params, eps=eps, t_final=float(args["t_final"]),
            domain_length=float(args.get("domain_length", 80.0)),
            n=int(args["n"]) if args.get("n") else None,
            seed=int(args.get("seed", 20240917)),
        )
        ratios[str(params)] = report.ratio
        if not report.bounded:
            failures.append(f"{params}: отношение {report.ratio:.3f} ≥ {ORBITAL_RATIO_BOUND} или {report.trace.reason}")
    return not failures, ratios, "; ".join(failures)


def check_remainder_slope(args: dict) -> CheckOutcome:
    """Наклон остатка разложения Λ ≈ 3 для двух форм возмущения"""
    params = _params(args)
    profile = build_profile(params, n_points=int(args.get("n", 2048)))
    x = profile.xi
    shapes = {
        "gaussian": 0.5 * np.exp(-(x / 1.2) ** 2),
        "odd": 0.3 * (x - 0.5) * np.exp(-((x - 0.5) ** 2) / 0.8),
    }
    expected, tolerance = float(args.get("expected", 3.0)), float(args.get("tolerance", 0.2))
    slopes = {name: remainder_scaling(profile, h).slope for name, h in shapes.items()}
    passed = all(abs(s - expected) <= tolerance for s in slopes.values())
    return passed, slopes, ""


CHECKS: Dict[str, Callable[[dict], CheckOutcome]] = {
    "fixed_points": check_fixed_points,
    "turning_point": check_turning_point,
    "mu_consistency": check_mu_consistency,
    "criterion_routes": check_criterion_routes,
    "criterion_transformed": check_criterion_transformed,
    "special_positivity": check_special_positivity,
    "special_value": check_special_value,
    "spectrum_structure": check_spectrum_structure,
    "coercivity": check_coercivity,
    "skew_symmetry": check_skew_symmetry,
    "traveling_wave": check_traveling_wave,
    "perturbed_runs": check_perturbed_runs,
    "remainder_slope": check_remainder_slope,
}


def run_check(check: dict, fast: bool = False) -> CheckResult:
    """Выполняет проверку по описанию из YAML.

    В быстром режиме args дополняются fast_args. Исключение внутри
    проверки даёт непройденный результат с текстом ошибки.
    """
    check_type = check.get("type", "")
    name = check.get("name", check_type)
    description = check.get("description", "")
    reference = check.get("reference", "")
    args = dict(check.get("args", {}))
    if fast:
        args.update(check.get("fast_args", {}))

    func = CHECKS.get(check_type)
    if func is None:
        return CheckResult(passed=False, check_type=check_type, name=name, description=description,
                           reference=reference, details=f"Неизвестный тип проверки: {check_type}")

    started = time.perf_counter()
    try:
        passed, value, details = func(args)
    except Exception as e:
        logger.error(f"❌ Проверка {name} завершилась ошибкой: {e}")
        return CheckResult(passed=False, check_type=check_type, name=name, description=description,
                           reference=reference, details=f"{type(e).__name__}: {e}",
                           elapsed=time.perf_counter() - started)

    elapsed = time.perf_counter() - started
    if passed:
        logger.info(f"✅ {name} ({elapsed:.1f} с)")
    else:
        logger.error(f"❌ {name}: нарушено «{reference}» {details}")
    return CheckResult(passed=bool(passed), check_type=check_type, name=name, description=description,
                       reference=reference, value=value, details=details or None, elapsed=elapsed)
