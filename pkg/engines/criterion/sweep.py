"""
Прогоны критерия по сетке h и по сетке (c, κ/c), итоговый вердикт.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, asdict
from typing import List, Optional, Sequence

from config import (
    get_logger,
    CHAIN_TOL,
    CRITERION_H_GRID,
    CRITERION_RATIOS,
    CRITERION_SPEEDS,
    GAMMA_NODES,
    ROUTE_TOL,
    SERIES_THRESHOLD,
    SPEED_FD_STEP,
)
from core import WaveParams
from .direct import RouteComparison, compare_routes
from .gamma import transformed_Q, transformed_dQ_dh, transformed_dQ_dh_direct

logger = get_logger(__name__)


@dataclass
class CriterionRow:
    """Строка таблицы criterion.csv"""
    h: float
    q: float
    dq_dh: float
    dq_dh_direct: float

    def as_tuple(self):
        return (self.h, self.q, self.dq_dh)


def _sweep_row(args) -> CriterionRow:
    h, n_nodes = args
    return CriterionRow(
        h=h,
        q=transformed_Q(h, n_nodes),
        dq_dh=transformed_dQ_dh(h, n_nodes),
        dq_dh_direct=transformed_dQ_dh_direct(h, n_nodes),
    )


def _run(func, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))


def criterion_sweep(
    h_values: Sequence[float] = CRITERION_H_GRID,
    jobs: int = 1,
    n_nodes: int = GAMMA_NODES,
) -> List[CriterionRow]:
    """(h, 𝒬, 𝒬′) по сетке h; при jobs > 1 — в пуле процессов"""
    rows = _run(_sweep_row, [(float(h), n_nodes) for h in h_values], jobs)
    logger.info(f"✅ Прогон по h завершён: {len(rows)} точек, jobs={jobs}")
    return rows


def _route_row(args) -> RouteComparison:
    c, ratio, n_nodes = args
    return compare_routes(WaveParams(b=1.0, c=c, kappa=ratio * c), n_nodes)


def route_sweep(
    speeds: Sequence[float] = CRITERION_SPEEDS,
    ratios: Sequence[float] = CRITERION_RATIOS,
    jobs: int = 1,
    n_nodes: int = GAMMA_NODES,
) -> List[RouteComparison]:
    """Прямой путь и цепное правило на сетке c × κ/c"""
    items = [(float(c), float(r), n_nodes) for c in speeds for r in ratios]
    return _run(_route_row, items, jobs)


def criterion_verdict(
    rows: Sequence[CriterionRow],
    routes: Optional[Sequence[RouteComparison]] = None,
    n_nodes: int = GAMMA_NODES,
) -> dict:
    """Вердикт {criterion_holds, grid, tolerances, ...} для verdict.json.

    Критерий выполнен, если 𝒬 > 0 и 𝒬′ < 0 во всех точках сетки h, 𝒬 убывает,
    а на сетке (c, κ) dQ/dc > 0 и оба пути согласованы.
    """
    values = [row.q for row in rows]
    transformed_ok = (
        all(row.q > 0 for row in rows)
        and all(row.dq_dh < 0 for row in rows)
        and all(b < a for a, b in zip(values, values[1:]))
    )
    verdict = {
        "criterion_holds": transformed_ok,
        "grid": {"h": [row.h for row in rows]},
        "tolerances": {
            "route": ROUTE_TOL,
            "chain": CHAIN_TOL,
            "speed_step": SPEED_FD_STEP,
            "gamma_nodes": n_nodes,
            "series_threshold": SERIES_THRESHOLD,
        },
        "transformed": [asdict(row) for row in rows],
    }
    if routes is not None:
        direct_ok = all(
            r.dq_dc_direct > 0 and r.value_error < ROUTE_TOL and r.chain_error < CHAIN_TOL
            for r in routes
        )
        verdict["criterion_holds"] = transformed_ok and direct_ok
        verdict["grid"]["c_kappa"] = [[r.c, r.kappa] for r in routes]
        verdict["direct"] = [r.to_dict() for r in routes]

    status = "✅" if verdict["criterion_holds"] else "❌"
    logger.info(f"{status} Критерий устойчивости: criterion_holds={verdict['criterion_holds']}")
    return verdict
