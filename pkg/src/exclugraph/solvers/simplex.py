from dataclasses import dataclass
from typing import List, Literal, Sequence, Tuple
import logging

import numpy as np

from exclugraph.config import tolerances
from exclugraph.errors import NumericalError, ParameterError

logger = logging.getLogger(__name__)

PIVOT_TOL = 1e-12
REDUCED_COST_TOL = 1e-10

LpStatus = Literal["optimal", "infeasible", "unbounded"]


@dataclass(frozen=True, eq=False)
class LpSolution():
    point: np.ndarray
    value: float
    status: LpStatus
    dual: np.ndarray
    slackness: float
    iterations: int


def _revised_simplex(
    A: np.ndarray,
    b: np.ndarray,
    c: np.ndarray,
    basis: List[int],
    allowed: np.ndarray,
    max_iterations: int,
) -> Tuple[str, List[int], int]:
    """Maximize c x over A x = b, x >= 0 from a feasible basis; Bland's rule for both choices."""
    for iteration in range(max_iterations):
        B = A[:, basis]
        x_basic = np.linalg.solve(B, b)
        prices = np.linalg.solve(B.T, c[basis])
        reduced = c - A.T @ prices
        in_basis = np.zeros(A.shape[1], dtype=bool)
        in_basis[basis] = True
        candidates = np.flatnonzero(allowed & ~in_basis & (reduced > REDUCED_COST_TOL))
        if candidates.size == 0:
            return "optimal", basis, iteration
        entering = int(candidates[0])
        column = np.linalg.solve(B, A[:, entering])
        leaving, best_ratio = None, np.inf
        for row in np.flatnonzero(column > PIVOT_TOL):
            ratio = max(x_basic[row], 0.0) / column[row]
            if ratio < best_ratio - PIVOT_TOL or (abs(ratio - best_ratio) <= PIVOT_TOL and basis[row] < basis[leaving]):
                leaving, best_ratio = int(row), ratio
        if leaving is None:
            return "unbounded", basis, iteration
        basis[leaving] = entering
    raise NumericalError(f"Simplex exceeded {max_iterations} pivots without terminating")


def solve_lp(
    objective: Sequence[float],
    constraints: Sequence[Tuple[Sequence[float], float]],
    nonneg: bool = True,
    maximize: bool = True,
) -> LpSolution:
    """
    Optimize ``objective . x`` subject to ``a . x <= bound`` for every
    ``(a, bound)`` in ``constraints``; ``x >= 0`` unless ``nonneg`` is off,
    in which case free variables are split into positive and negative parts.
    """
    c = np.asarray(objective, dtype=float).reshape(-1)
    k = c.shape[0]
    rows = [np.asarray(a, dtype=float).reshape(-1) for a, _ in constraints]
    for i, a in enumerate(rows):
        if a.shape[0] != k:
            raise ParameterError(f"Constraint {i} has {a.shape[0]} coefficients, objective has {k}")
    A = np.array(rows).reshape(len(rows), k)
    b = np.array([float(bound) for _, bound in constraints])
    sign = 1.0 if maximize else -1.0
    if not nonneg:
        A = np.hstack([A, -A])
        c = np.concatenate([c, -c])
    costs = sign * c
    m, structural = A.shape

    # standard form: structural | slack | artificial
    flipped = b < 0
    slack = np.eye(m)
    A_std = np.hstack([A, slack])
    A_std[flipped] *= -1
    b_std = np.where(flipped, -b, b)
    artificial_rows = np.flatnonzero(flipped)
    A_full = np.hstack([A_std, np.eye(m)[:, artificial_rows]])
    total = A_full.shape[1]
    first_artificial = structural + m
    basis = [structural + i for i in range(m)]
    for offset, row in enumerate(artificial_rows):
        basis[row] = first_artificial + offset
    cap = 10 * (total + m)
    iterations = 0

    if artificial_rows.size:
        phase_one = np.zeros(total)
        phase_one[first_artificial:] = -1.0
        status, basis, used = _revised_simplex(A_full, b_std, phase_one, basis, np.ones(total, dtype=bool), cap)
        iterations += used
        x_basic = np.linalg.solve(A_full[:, basis], b_std)
        infeasibility = sum(x_basic[i] for i, j in enumerate(basis) if j >= first_artificial)
        if infeasibility > tolerances.lp_feasibility:
            logger.info(f"LP infeasible (phase one residual {infeasibility:.3e})")
            return LpSolution(np.full(k, np.nan), np.nan, "infeasible", np.full(m, np.nan), np.nan, iterations)
        basis = _drive_out_artificials(A_full, basis, first_artificial)

    allowed = np.arange(total) < first_artificial
    costs_full = np.concatenate([costs, np.zeros(total - structural)])
    status, basis, used = _revised_simplex(A_full, b_std, costs_full, basis, allowed, cap)
    iterations += used
    if status == "unbounded":
        logger.info("LP unbounded")
        return LpSolution(np.full(k, np.nan), sign * np.inf, "unbounded", np.full(m, np.nan), np.nan, iterations)

    B = A_full[:, basis]
    x = np.zeros(total)
    x[basis] = np.linalg.solve(B, b_std)
    x[np.abs(x) < PIVOT_TOL] = 0.0
    prices = np.linalg.solve(B.T, costs_full[basis])
    dual = np.where(flipped, -prices, prices)
    reduced = costs_full - A_full.T @ prices

    point = x[:structural]
    if not nonneg:
        point = point[:k] - point[k:]
    primal_slack = b - A[:, :structural] @ x[:structural]
    if np.any(primal_slack < -tolerances.lp_feasibility) or np.any(x < -tolerances.lp_feasibility):
        raise NumericalError(f"Simplex returned an infeasible point (worst slack {primal_slack.min():.3e})")
    slackness = float(max(
        np.max(np.abs(dual * primal_slack), initial=0.0),
        np.max(np.abs(x[:structural] * reduced[:structural]), initial=0.0),
    ))
    # residual is measured in units of the largest cost
    scale = max(1.0, float(np.max(np.abs(costs), initial=0.0)))
    if slackness > tolerances.lp_slackness * scale:
        logger.error(f"Complementary slackness residual {slackness:.3e} after {iterations} pivots")
        raise NumericalError(f"Simplex optimum violates complementary slackness (residual {slackness:.3e})")
    value = float(sign * (costs @ x[:structural]))
    logger.debug(f"LP optimal {value:.12g} after {iterations} pivots")
    return LpSolution(point, value, "optimal", sign * dual, slackness, iterations)


def _drive_out_artificials(A: np.ndarray, basis: List[int], first_artificial: int) -> List[int]:
    for row, j in enumerate(list(basis)):
        if j < first_artificial:
            continue
        tableau_row = np.linalg.solve(A[:, basis].T, np.eye(A.shape[0])[row]) @ A
        for candidate in range(first_artificial):
            if candidate not in basis and abs(tableau_row[candidate]) > PIVOT_TOL:
                basis[row] = candidate
                break
    return basis
