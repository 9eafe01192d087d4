"""
Вспомогательные численные функции, общие для всех движков.
"""

from typing import Sequence, Tuple

import numpy as np


def gauss_panels(edges: np.ndarray, n_nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """Составная квадратура Гаусса–Лежандра на панелях [edges[k], edges[k+1]].

    Returns:
        (nodes, weights) формы (n_panels, n_nodes)
    """
    ref_nodes, ref_weights = np.polynomial.legendre.leggauss(n_nodes)
    left = edges[:-1, None]
    half = 0.5 * np.diff(edges)[:, None]
    nodes = left + half * (ref_nodes[None, :] + 1.0)
    weights = half * ref_weights[None, :]
    return nodes, weights


def gauss_interval(a: float, b: float, n_nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """Квадратура Гаусса–Лежандра на одном отрезке [a, b]"""
    nodes, weights = gauss_panels(np.array([a, b], dtype=float), n_nodes)
    return nodes[0], weights[0]


def fd_derivative(values: np.ndarray, dx: float) -> np.ndarray:
    """Центральная разность второго порядка с односторонними краями"""
    return np.gradient(values, dx, edge_order=2)


def loglog_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """Наклон прямой МНК в координатах (log x, log |y|)"""
    lx = np.log(np.asarray(x, dtype=float))
    ly = np.log(np.abs(np.asarray(y, dtype=float)))
    slope, _ = np.polyfit(lx, ly, 1)
    return float(slope)


def count_sign_changes(values: np.ndarray, floor: float) -> int:
    """Число строгих смен знака среди элементов выше порога floor·max|v|"""
    cutoff = floor * np.max(np.abs(values))
    significant = values[np.abs(values) > cutoff]
    if significant.size < 2:
        return 0
    signs = np.sign(significant)
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def relative_error(value: float, reference: float) -> float:
    """|value − reference| / |reference|"""
    return abs(value - reference) / abs(reference)


def central_difference(func, x: float, step: float) -> float:
    """Центральная разность (f(x+δ) − f(x−δ)) / 2δ"""
    return (func(x + step) - func(x - step)) / (2.0 * step)


def fd_second_derivative(values: np.ndarray, dx: float) -> np.ndarray:
    """Трёхточечная вторая разность; на краях — повторное np.gradient"""
    result = np.gradient(np.gradient(values, dx, edge_order=2), dx, edge_order=2)
    result[1:-1] = (values[2:] - 2.0 * values[1:-1] + values[:-2]) / (dx * dx)
    return result
