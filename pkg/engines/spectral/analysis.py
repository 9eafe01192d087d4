"""
Спектр ℒ, тождество коэрцитивности и условный минимум отношения Рэлея.

Матрица ℒ плотная, собственные пары считаются scipy.linalg.eigh.
Значения ниже края существенного спектра — точечные, значения не ниже
края — дискретный кластер, приближающий σ_ess.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from config import (
    get_logger,
    Closure,
    FrameSpeed,
    NODE_FLOOR,
    ZERO_MODE_SEARCH,
)
from core import NumericalError, count_sign_changes
from engines.conserved import charge_speed_derivative, psi_Q
from .operator import OperatorMatrix, assemble_L, restrict

logger = get_logger(__name__)


@dataclass
class SpectrumReport:
    """Результат спектрального анализа ℒ.

    Attributes:
        eigenvalues: вычисленные собственные значения по возрастанию
        negative_count: число отрицательных (без кандидата в нулевую моду)
        zero_value: собственное значение, ближайшее к моде сдвига
        zero_overlap: |⟨v, μ_ξ⟩|/(|v||μ_ξ|) для него
        essential_edge: (s − κ)/κ²
        cluster_edge: наименьшее значение не ниже края
        point_eigenvalues: положительные значения ниже края, кроме моды сдвига
        ground_state_nodes: смен знака у основного состояния
        zero_mode_nodes: смен знака у моды сдвига
    """
    eigenvalues: np.ndarray
    negative_count: int
    zero_value: float
    zero_overlap: float
    essential_edge: float
    cluster_edge: float
    point_eigenvalues: List[float]
    ground_state_nodes: int
    zero_mode_nodes: int
    closure: str
    grid: Dict[str, float]
    ground_state: np.ndarray = field(repr=False)
    zero_mode: np.ndarray = field(repr=False)

    @property
    def lowest(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def zero_candidate(self) -> Tuple[float, float]:
        return self.zero_value, self.zero_overlap

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "negative_count": self.negative_count,
            "zero_candidate": {"value": self.zero_value, "overlap": self.zero_overlap},
            "essential_edge": self.essential_edge,
            "cluster_edge": self.cluster_edge,
            "point_eigenvalues": [float(v) for v in self.point_eigenvalues],
            "ground_state_nodes": self.ground_state_nodes,
            "zero_mode_nodes": self.zero_mode_nodes,
            "closure": self.closure,
            "grid": self.grid,
        }


def _eigensystem(matrix: OperatorMatrix, count: Optional[int]):
    """Нижние count собственных пар (все при count=None)"""
    try:
        if count is None:
            return linalg.eigh(matrix.values)
        return linalg.eigh(matrix.values, subset_by_index=[0, min(count, matrix.size) - 1])
    except linalg.LinAlgError as e:
        raise NumericalError(f"Собственные значения ℒ не найдены: {e}") from e


def _normalized(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _zero_index(vectors: np.ndarray, profile, matrix: OperatorMatrix) -> Tuple[int, float]:
    """Номер собственного вектора с наибольшим перекрытием с μ_ξ среди нижних"""
    direction = _normalized(restrict(profile.mu_xi, matrix))
    search = min(ZERO_MODE_SEARCH, vectors.shape[1])
    overlaps = np.abs(direction @ vectors[:, :search])
    index = int(np.argmax(overlaps))
    return index, float(overlaps[index])


def spectrum(
    profile,
    closure: str = Closure.DIRICHLET,
    frame: str = FrameSpeed.RELATIVE,
    count: Optional[int] = None,
) -> SpectrumReport:
    """Спектральная картина ℒ вдоль профиля.

    Args:
        profile: WaveProfile (N ≥ 256)
        closure: замыкание на краях
        frame: скорость системы отсчёта
        count: сколько нижних собственных значений искать (None — все)

    Returns:
        SpectrumReport
    """
    matrix = assemble_L(profile, closure, frame)
    values, vectors = _eigensystem(matrix, count)
    zero_index, zero_overlap = _zero_index(vectors, profile, matrix)

    edge = matrix.essential_edge
    cluster = values[values >= edge]
    cluster_edge = float(cluster.min()) if cluster.size else float("nan")
    point = [
        float(v) for i, v in enumerate(values)
        if i != zero_index and 0.0 < v < edge
    ]

    report = SpectrumReport(
        eigenvalues=values,
        negative_count=int(np.count_nonzero(values < 0.0)) - int(values[zero_index] < 0.0),
        zero_value=float(values[zero_index]),
        zero_overlap=zero_overlap,
        essential_edge=edge,
        cluster_edge=cluster_edge,
        point_eigenvalues=point,
        ground_state_nodes=count_sign_changes(vectors[:, 0], NODE_FLOOR),
        zero_mode_nodes=count_sign_changes(vectors[:, zero_index], NODE_FLOOR),
        closure=closure,
        grid={"n_points": profile.n_points, "domain_length": profile.domain_length, "dxi": profile.dxi},
        ground_state=vectors[:, 0],
        zero_mode=vectors[:, zero_index],
    )
    logger.info(
        f"✅ Спектр ℒ: λ₀={report.lowest:.6g}, отрицательных {report.negative_count}, "
        f"λ_z={report.zero_value:.3e} (перекрытие {report.zero_overlap:.6f}), "
        f"край {edge:.6g}, кластер {cluster_edge:.6g}"
    )
    return report


# ============= Тождество коэрцитивности =============

@dataclass
class _ChargeResolvent:
    """ψ_𝒬 в собственном базисе ℒ без моды сдвига"""
    values: np.ndarray
    coefficients: np.ndarray
    vectors: np.ndarray
    dx: float

    def g(self, alpha: float) -> float:
        """⟨(ℒ − α)⁻¹Pψ_𝒬, Pψ_𝒬⟩"""
        return float(self.dx * np.sum(self.coefficients**2 / (self.values - alpha)))

    def solution(self) -> np.ndarray:
        """u = ℒ⁻¹Pψ_𝒬 на дополнении моды сдвига"""
        return self.vectors @ (self.coefficients / self.values)


def _charge_resolvent(profile, frame: str) -> _ChargeResolvent:
    """P — проектор на дополнение вычисленной моды сдвига (не аналитической μ_ξ)"""
    matrix = assemble_L(profile, Closure.DIRICHLET, frame)
    values, vectors = _eigensystem(matrix, None)
    zero_index, _ = _zero_index(vectors, profile, matrix)
    keep = np.arange(values.size) != zero_index
    psi = restrict(psi_Q(profile), matrix)
    return _ChargeResolvent(
        values=values[keep],
        coefficients=vectors[:, keep].T @ psi,
        vectors=vectors[:, keep],
        dx=matrix.dx,
    )


@dataclass
class CoercivityIdentity:
    """g(0) = ⟨ℒ₀⁻¹ψ_𝒬, ψ_𝒬⟩ и сравнение с d𝒬(μ)/dc"""
    g0: float
    dQdc: float
    mismatch: float
    solution: np.ndarray = field(repr=False)

    def as_tuple(self):
        return self.g0, self.dQdc, self.mismatch


def coercivity_identity(
    profile,
    dQdc: Optional[float] = None,
    frame: str = FrameSpeed.RELATIVE,
) -> CoercivityIdentity:
    """g0 = ⟨u, ψ_𝒬⟩ при ℒu = Pψ_𝒬, P — проектор на дополнение вычисленной моды сдвига.

    Args:
        profile: WaveProfile
        dQdc: d𝒬(μ)/dc для сравнения; по умолчанию — charge_speed_derivative на той же сетке
        frame: скорость системы отсчёта

    Returns:
        CoercivityIdentity; mismatch — относительное расхождение с dQdc
    """
    resolvent = _charge_resolvent(profile, frame)
    g0 = resolvent.g(0.0)
    if dQdc is None:
        dQdc = charge_speed_derivative(
            profile.params, n_points=profile.n_points,
            domain_length=profile.domain_length, tail_tol=profile.tail_tol,
        ).value
    mismatch = abs(g0 - dQdc) / abs(dQdc)
    status = "✅" if g0 < 0 else "⚠️"
    logger.info(f"{status} g(0) = {g0:.10g}, d𝒬/dc = {dQdc:.10g}, Δ = {mismatch:.2e}")
    return CoercivityIdentity(g0=g0, dQdc=dQdc, mismatch=mismatch, solution=resolvent.solution())


def coercivity_function(profile, alpha, frame: str = FrameSpeed.RELATIVE):
    """g(α) = ⟨(ℒ−α)⁻¹Pψ_𝒬, Pψ_𝒬⟩ на дополнении моды сдвига; α₀ — первый ноль g"""
    resolvent = _charge_resolvent(profile, frame)
    alphas = np.atleast_1d(np.asarray(alpha, dtype=float))
    values = np.array([resolvent.g(a) for a in alphas])
    return float(values[0]) if np.ndim(alpha) == 0 else values


class Constraint:
    """Ограничения условной задачи на минимум"""
    TRANSLATION = "translation"
    CHARGE = "charge"


def constrained_min_eig(
    profile,
    constraints: Sequence[str] = (Constraint.TRANSLATION, Constraint.CHARGE),
    frame: str = FrameSpeed.RELATIVE,
) -> float:
    """α₀ = min ⟨ℒv, v⟩/⟨v, v⟩ при v ⊥ μ_ξ (translation) и v ⊥ ψ_𝒬 (charge).

    Проектор P на дополнение ограничений: наименьшее собственное значение
    PℒP + σ·(I − P) с σ выше спектра ℒ.
    """
    matrix = assemble_L(profile, Closure.DIRICHLET, frame)
    columns = []
    for name in constraints:
        if name == Constraint.TRANSLATION:
            columns.append(restrict(profile.mu_xi, matrix))
        elif name == Constraint.CHARGE:
            columns.append(restrict(psi_Q(profile), matrix))
        else:
            raise ValueError(f"Неизвестное ограничение: {name}")

    dense = matrix.to_dense()
    if columns:
        basis, _ = np.linalg.qr(np.column_stack(columns))
        _, upper = matrix.gershgorin_bounds()
        image = dense @ basis
        inner = basis.T @ image
        dense = (dense - basis @ image.T - image @ basis.T
                 + basis @ (inner + (abs(upper) + 1.0) * np.eye(basis.shape[1])) @ basis.T)
    value = linalg.eigh(dense, eigvals_only=True, subset_by_index=[0, 0])[0]
    logger.info(f"Условный минимум отношения Рэлея при {tuple(constraints)}: α₀ = {value:.10g}")
    return float(value)
