"""
Подкоманды лаборатории.

Каждая команда получает проверенный RunConfig, пишет свои CSV/JSON в cfg.out
и report.json со списком проверок {name, passed, value, reference}.
Возвращает код выхода: 0 — все проверки пройдены, 1 — есть непройденные.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

import numpy as np

from config import (
    get_logger,
    validate_env,
    Closure,
    Subcommand,
    EXIT_OK,
    EXIT_CHECK_FAILED,
    EXIT_INVALID_CONFIG,
    DEFAULT_N_POINTS,
    DEFAULT_DOMAIN_LENGTH,
    CRITERION_H_GRID,
    CRITERION_SPEEDS,
    CRITERION_RATIOS,
    ROUTE_TOL,
    CHAIN_TOL,
)
from core import BchLabError, ConfigError, DomainError
from engines.existence import (
    build_profile,
    default_domain_length,
    default_energies,
    phase_portrait,
    potential,
    mu_max_exponential,
)
from engines.conserved import charge_Q, invariants
from engines.criterion import (
    compare_routes,
    criterion_sweep,
    criterion_verdict,
    h_of_params,
    route_sweep,
)
from engines.spectral import (
    assemble_L,
    coercivity_identity,
    constrained_min_eig,
    restrict,
    spectrum,
)
from engines.evolution import stability_experiment
from storage import (
    quantity,
    write_criterion,
    write_eigenfunctions,
    write_json,
    write_orbits,
    write_profile,
    write_report,
    write_snapshots,
    write_trace,
)
from verification import verify_all
from .config import RunConfig, load_run_config

logger = get_logger(__name__)

_SPECTRUM_N = 2048
_SPECTRUM_MIN_LENGTH = 60.0


def _check(name: str, passed, value, reference: str) -> dict:
    return {"name": name, "passed": bool(passed), "value": value, "reference": reference}


def _finish(cfg: RunConfig, checks: List[dict], extra: Optional[dict] = None) -> int:
    """Записать report.json и вернуть код выхода"""
    document = {"config": cfg.model_dump(mode="json"), "subcommand": cfg.subcommand, "seed": cfg.seed}
    if extra:
        document.update(extra)
    write_report(cfg.out, checks, document)
    failed = [c["name"] for c in checks if not c["passed"]]
    if failed:
        logger.error(f"❌ {cfg.subcommand}: не пройдены {', '.join(failed)}")
        return EXIT_CHECK_FAILED
    logger.info(f"✅ {cfg.subcommand}: все проверки пройдены ({len(checks)}), результаты в {cfg.out}")
    return EXIT_OK


# ============= ПРОФИЛЬ И ПОРТРЕТ =============

def cmd_profile(cfg: RunConfig) -> int:
    """profile.csv, functionals.json"""
    params = cfg.params
    profile = build_profile(params, cfg.n or DEFAULT_N_POINTS, cfg.tail_tol, cfg.domain_length)
    write_profile(cfg.out, profile)

    f = profile.to_field()
    grid = profile.grid_info()
    records = [quantity("G", profile.G, params.to_dict(), grid),
               quantity("M", profile.M, params.to_dict(), grid)]
    records += [quantity(name, value, params.to_dict(), grid) for name, value in invariants(f, params.b).items()]
    if params.is_log_case:
        records.append(quantity("charge", charge_Q(f), params.to_dict(), grid))
        records.append(quantity("h", params.h, params.to_dict(), grid))
    write_json(cfg.out / "functionals.json", records)

    edge_offset = float(max(profile.phi[0], profile.phi[-1]) - params.kappa)
    checks = [
        _check("mu_positive", np.min(profile.mu) > 0, float(np.min(profile.mu)), "μ > 0"),
        _check("crest_at_center", int(np.argmax(profile.phi)) == profile.crest_index,
               float(profile.phi[profile.crest_index]), "max φ в ξ = 0 и равен G"),
        _check("edge_decay", edge_offset < max(cfg.tail_tol, 1e-300) * 10.0, edge_offset,
               "φ(±L/2) − κ порядка tail_tol"),
    ]
    if params.is_log_case:
        alternative = mu_max_exponential(params)
        checks.append(_check("mu_max_forms", abs(alternative - profile.M) < 1e-10 * profile.M,
                             alternative, "M = κγ/(c−G) = κ·exp((G² − κ²)/(2κγ))"))
    return _finish(cfg, checks)


def cmd_portrait(cfg: RunConfig) -> int:
    """orbit_<k>.csv по уровням энергии"""
    params = cfg.params
    energies = cfg.energies or default_energies(params)
    orbits = phase_portrait(params, energies)
    paths = write_orbits(cfg.out, orbits)

    worst = 0.0
    for orbit in orbits:
        if orbit.is_empty:
            continue
        residual = 0.5 * orbit.psi**2 + potential(orbit.phi, params) - orbit.energy
        worst = max(worst, float(np.max(np.abs(residual))) / max(1.0, abs(orbit.energy)))
    write_json(cfg.out / "portrait.json", {
        "params": params.to_dict(),
        "levels": [{"energy": o.energy, "closed": o.closed, "empty": o.is_empty} for o in orbits],
        "files": [p.name for p in paths],
    })
    checks = [_check("level_residual", worst < 1e-8, worst, "½ψ² + V(φ) = e на каждой орбите")]
    return _finish(cfg, checks)


# ============= КРИТЕРИЙ =============

def cmd_criterion(cfg: RunConfig) -> int:
    """criterion.csv (h, Qcal, dQcal_dh) и verdict.json.

    С --sweep — вся сетка h и сетка (c, κ/c); без — одна точка cfg.
    """
    if cfg.sweep:
        rows = criterion_sweep(CRITERION_H_GRID, jobs=cfg.jobs)
        routes = route_sweep(CRITERION_SPEEDS, CRITERION_RATIOS, jobs=cfg.jobs)
    else:
        rows = criterion_sweep([h_of_params(cfg.params)])
        routes = [compare_routes(cfg.params)]
    write_criterion(cfg.out, rows)
    verdict = criterion_verdict(rows, routes)
    write_json(cfg.out / "verdict.json", verdict)

    checks = [
        _check("Qcal_positive", all(r.q > 0 for r in rows), [r.q for r in rows], "𝒬(h) > 0"),
        _check("dQcal_dh_negative", all(r.dq_dh < 0 for r in rows), [r.dq_dh for r in rows], "𝒬′(h) < 0"),
        _check("dQ_dc_positive", all(r.dq_dc_direct > 0 for r in routes),
               [r.dq_dc_direct for r in routes], "dQ/dc > 0"),
        _check("route_agreement", all(r.value_error < ROUTE_TOL for r in routes),
               max(r.value_error for r in routes), f"Q(φ, c) = 𝒬(h) с точностью {ROUTE_TOL:g}"),
        _check("chain_rule", all(r.chain_error < CHAIN_TOL for r in routes),
               max(r.chain_error for r in routes), f"dQ/dc = 𝒬′(h)·dh/dc с точностью {CHAIN_TOL:g}"),
    ]
    return _finish(cfg, checks, {"criterion_holds": verdict["criterion_holds"]})


# ============= СПЕКТР =============

def cmd_spectrum(cfg: RunConfig) -> int:
    """spectrum.json и eigenfunctions.csv (xi, psi0, psi_zero)"""
    params = cfg.params
    length = cfg.domain_length or max(_SPECTRUM_MIN_LENGTH, default_domain_length(params, cfg.tail_tol))
    profile = build_profile(params, cfg.n or _SPECTRUM_N, cfg.tail_tol, length)
    report = spectrum(profile, cfg.closure)
    identity = coercivity_identity(profile)
    alpha0 = constrained_min_eig(profile)

    document = report.to_dict()
    document["coercivity"] = {"g0": identity.g0, "dQdc": identity.dQdc,
                              "mismatch": identity.mismatch, "alpha0": alpha0}
    document["params"] = params.to_dict()
    write_json(cfg.out / "spectrum.json", document)
    write_eigenfunctions(cfg.out, restrict(profile.xi, assemble_L(profile, cfg.closure)), report)

    edge_error = abs(report.cluster_edge - report.essential_edge) / report.essential_edge
    checks = [
        _check("one_negative", report.negative_count == 1, report.negative_count, "одно отрицательное значение"),
        _check("ground_state_nodeless", report.ground_state_nodes == 0, report.ground_state_nodes,
               "основное состояние без узлов"),
        _check("zero_mode", abs(report.zero_value) < 1e-4 and report.zero_overlap > 0.999,
               {"value": report.zero_value, "overlap": report.zero_overlap},
               "|λ_z| < 1e-4, перекрытие с μ_ξ > 0.999"),
        _check("cluster_edge", edge_error < 0.02, edge_error, "край кластера в пределах 2% от (s − κ)/κ²"),
        _check("g0_negative", identity.g0 < 0, identity.g0, "g(0) < 0"),
        _check("g0_identity", identity.mismatch < 1e-3, identity.mismatch, "g(0) = d𝒬(μ)/dc с точностью 1e-3"),
        _check("alpha0_positive", alpha0 > 0 and report.lowest < alpha0, alpha0, "α₀ > 0 и λ₀ < α₀"),
    ]
    return _finish(cfg, checks)


# ============= ЭВОЛЮЦИЯ =============

def cmd_evolve(cfg: RunConfig) -> int:
    """trace.csv, snapshot_<k>.csv, evolution_config.json"""
    params = cfg.params
    length = cfg.domain_length or DEFAULT_DOMAIN_LENGTH
    report = stability_experiment(
        params, eps=cfg.eps, t_final=cfg.t_final, domain_length=length,
        n=cfg.n, dt=cfg.dt, seed=cfg.seed, snapshot_every=cfg.snapshot_every,
    )
    trace = report.trace
    profile = report.profile
    write_trace(cfg.out, trace)
    write_snapshots(cfg.out, profile.xi, trace)
    write_json(cfg.out / "evolution_config.json", report.config.to_dict())

    checks = [
        _check("no_failure", not trace.failed, trace.reason or None, "без разрушения, потери положительности и нарушения CFL"),
        _check("invariant_drift", trace.max_drift < cfg.drift_tol, trace.max_drift,
               f"относительный дрейф инвариантов < {cfg.drift_tol:g}"),
    ]
    if cfg.eps == 0.0:
        relative = report.relative_distance
        checks.append(_check("traveling", relative < cfg.distance_tol, relative,
                             f"относительное орбитальное расстояние < {cfg.distance_tol:g}"))
    else:
        checks.append(_check("orbital_bound", report.ratio < cfg.ratio_bound, report.ratio,
                             f"max расстояние < {cfg.ratio_bound:g}·ε"))
    return _finish(cfg, checks, {"stability": report.to_dict()})


# ============= ПРИЁМКА =============

def cmd_verify_all(cfg: RunConfig) -> int:
    """report.json и report.md по verification/acceptance.yaml"""
    result = verify_all(cfg.out, fast=cfg.fast)
    checks = [
        {"name": c.name, "passed": c.passed, "value": c.value, "reference": c.reference,
         "details": c.details, "elapsed": c.elapsed}
        for c in result["checks"]
    ]
    return _finish(cfg, checks, {"summary": result["summary"]})


COMMANDS: Dict[str, Callable[[RunConfig], int]] = {
    Subcommand.PROFILE: cmd_profile,
    Subcommand.PORTRAIT: cmd_portrait,
    Subcommand.CRITERION: cmd_criterion,
    Subcommand.SPECTRUM: cmd_spectrum,
    Subcommand.EVOLVE: cmd_evolve,
    Subcommand.VERIFY_ALL: cmd_verify_all,
}


# ============= РАЗБОР АРГУМЕНТОВ =============

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--b", type=float, help="параметр семейства b > 0")
    common.add_argument("--c", type=float, help="скорость волны c")
    common.add_argument("--kappa", type=float, help="фон κ")
    common.add_argument("--n", type=int, help="число узлов сетки")
    common.add_argument("--domain-length", dest="domain_length", type=float, help="длина области L")
    common.add_argument("--dt", type=float, help="шаг по времени")
    common.add_argument("--t-final", dest="t_final", type=float, help="конечное время T")
    common.add_argument("--eps", type=float, help="H¹-размер возмущения (evolve)")
    common.add_argument("--out", type=Path, help="каталог результатов (по умолчанию $BCHLAB_OUT или ./out)")
    common.add_argument("--jobs", type=int, help="число процессов для развёрток")
    common.add_argument("--seed", type=int, help="зерно генератора возмущений")
    common.add_argument("--closure", choices=[Closure.DIRICHLET, Closure.PERIODIC], help="замыкание ℒ")
    common.add_argument("--energies", type=float, nargs="+", help="уровни энергии (portrait)")
    common.add_argument("--snapshot-every", dest="snapshot_every", type=int, help="снимки m каждые k шагов")
    common.add_argument("--fast", action="store_true", default=None, help="быстрый режим приёмки")
    common.add_argument("--sweep", action="store_true", default=None, help="полная развёртка критерия")
    common.add_argument("--config", type=Path, help="JSON-файл конфигурации (флаги имеют приоритет)")

    parser = argparse.ArgumentParser(
        prog="lab.py",
        description="bchlab: уединённые волны b-семейства на ненулевом фоне",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        Subcommand.PROFILE: "профиль волны и функционалы",
        Subcommand.PORTRAIT: "фазовый портрет",
        Subcommand.CRITERION: "критерий устойчивости двумя путями",
        Subcommand.SPECTRUM: "спектр ℒ и коэрцитивность",
        Subcommand.EVOLVE: "эволюция и орбитальное расстояние",
        Subcommand.VERIFY_ALL: "полная приёмка",
    }
    for name, text in helps.items():
        subparsers.add_parser(name, parents=[common], help=text)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа CLI: 0 — успех, 1 — непройденная проверка, 2 — неверная конфигурация"""
    try:
        validate_env()
    except ValueError as e:
        logger.error(f"❌ {e}")
        return EXIT_INVALID_CONFIG

    args = vars(build_parser().parse_args(argv))
    config_path = args.pop("config", None)
    try:
        cfg = load_run_config(args, config_path)
    except ConfigError as e:
        logger.error(f"❌ Неверная конфигурация: {e}")
        return EXIT_INVALID_CONFIG

    logger.info(f"Запуск {cfg.subcommand}: b={cfg.b}, c={cfg.c}, κ={cfg.kappa}, out={cfg.out}")
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except DomainError as e:
        logger.error(f"❌ Недопустимые аргументы: {e}")
        return EXIT_INVALID_CONFIG
    except BchLabError as e:
        logger.error(f"❌ Численный сбой: {e}")
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
