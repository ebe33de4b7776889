"""
Weighted Lovász theta by a primal-dual interior-point method.

Program (max form)::

    maximize   sum_ij sqrt(w_i w_j) B_ij
    subject to trace(B) = 1, B_ij = 0 for every edge ij, B PSD

It is solved in the standard min form ``min <-C, X>`` with constraint
operator ``A(X) = (trace X, 2 X_e for each edge e)``. Only the trace row and
one row per edge exist, so the Schur complement is ``(1 + |E|)`` square and
edge coordinates never enter the primal variable's free directions. The dual
slack is always recomputed as ``Z = -C - A^T(y)``, which keeps the dual
exactly feasible; the primal starts at ``I/n`` and stays feasible up to
roundoff. Directions use Nesterov-Todd scaling with a Mehrotra-type centring
parameter.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union
import logging

import numpy as np

from exclugraph.config import tolerances
from exclugraph.errors import CapacityError, NumericalError, ParameterError
from exclugraph.graph_core import Graph
from exclugraph.solvers.eigen import SymmetricMatrix, symmetric_eigen

logger = logging.getLogger(__name__)

STEP_FRACTION = 0.95
MIN_STEP = 1e-12
# a certified pair can only cross by eigensolver error
ROUNDOFF = 1e-12


@dataclass(frozen=True, eq=False)
class ThetaSolution():
    """
    ``dual_multipliers`` holds one y_e per edge (in ``g.edges()`` order) with
    ``dual_value = λmax(sqrt(w) sqrt(w)^T + sum_e y_e (E_uv + E_vu))``.
    """
    primal_matrix: SymmetricMatrix
    value: float
    dual_value: float
    gap: float
    iterations: int
    dual_multipliers: np.ndarray

    @property
    def min_eigenvalue(self) -> float:
        return symmetric_eigen(self.primal_matrix).min

    def edge_residual(self, g: Graph) -> float:
        edges = g.edges()
        if not edges:
            return 0.0
        return max(abs(self.primal_matrix[u, v]) for u, v in edges)


def check_weights(g: Graph, w: Union[Sequence[float], np.ndarray]) -> np.ndarray:
    weights = np.asarray(w, dtype=float).reshape(-1)
    if weights.shape[0] != g.n:
        raise ParameterError(f"Expected {g.n} weights, got {weights.shape[0]}")
    if not np.all(np.isfinite(weights)):
        raise ParameterError("Weights must be finite")
    if np.any(weights < 0):
        raise ParameterError(f"Weights must be non-negative, got min {weights.min()}")
    return weights


class _ThetaProgram():

    def __init__(self, g: Graph, weights: np.ndarray):
        self.n = g.n
        edges = np.array(g.edges(), dtype=int).reshape(-1, 2)
        self.I = edges[:, 0]
        self.J = edges[:, 1]
        self.m = 1 + len(edges)
        root = np.sqrt(weights)
        self.C = np.outer(root, root)
        self.b = np.zeros(self.m)
        self.b[0] = 1.0

    def apply(self, X: np.ndarray) -> np.ndarray:
        return np.concatenate(([np.trace(X)], 2.0 * X[self.I, self.J]))

    def adjoint(self, y: np.ndarray) -> np.ndarray:
        M = np.diag(np.full(self.n, y[0]))
        M[self.I, self.J] = y[1:]
        M[self.J, self.I] = y[1:]
        return M

    def slack(self, y: np.ndarray) -> np.ndarray:
        return -self.C - self.adjoint(y)

    def schur(self, W: np.ndarray) -> np.ndarray:
        """M_kl = trace(A_k W A_l W)."""
        M = np.empty((self.m, self.m))
        M[0, 0] = np.sum(W * W)
        if self.m > 1:
            I, J = self.I, self.J
            row = 2.0 * (W @ W)[I, J]
            M[0, 1:] = row
            M[1:, 0] = row
            M[1:, 1:] = 2.0 * (W[np.ix_(J, I)] * W[np.ix_(I, J)] + W[np.ix_(J, J)] * W[np.ix_(I, I)])
        return M

    def certify(self, X: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, float, float]:
        """
        Feasible primal projection and the tightest dual bound for the current
        multipliers. Zeroing the edge entries can push B out of the PSD cone;
        shifting by tI and renormalizing, B' = (B + tI) / (1 + nt), brings it
        back without touching the edge zeros or the unit trace.
        """
        B = (X + X.T) / 2
        B[self.I, self.J] = 0.0
        B[self.J, self.I] = 0.0
        B /= np.trace(B)
        shift = -float(np.linalg.eigvalsh(B)[0])
        if shift > 0:
            B[np.diag_indices(self.n)] += shift
            B /= 1.0 + self.n * shift
        primal = float(np.sum(self.C * B))
        edge_part = y.copy()
        edge_part[0] = 0.0
        dual = symmetric_eigen(self.C + self.adjoint(edge_part)).max
        return B, primal, dual


def _cholesky(matrix: np.ndarray, what: str, bracket: Tuple[float, float]) -> np.ndarray:
    try:
        return np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError:
        raise NumericalError(f"{what} lost positive definiteness", bracket)


def _max_step(L: np.ndarray, direction: np.ndarray) -> float:
    """Largest alpha with L L^T + alpha * direction still PSD."""
    half = np.linalg.solve(L, direction)
    scaled = np.linalg.solve(L, half.T)
    lowest = np.linalg.eigvalsh((scaled + scaled.T) / 2)[0]
    return np.inf if lowest >= 0 else -1.0 / lowest


def _nt_scaling(L: np.ndarray, Z: np.ndarray) -> np.ndarray:
    """W with W Z W = X, where X = L L^T."""
    values, vectors = np.linalg.eigh(L.T @ Z @ L)
    if values[0] <= 0:
        raise np.linalg.LinAlgError("non-positive scaled complementarity")
    core = (vectors / np.sqrt(values)) @ vectors.T
    W = L @ core @ L.T
    return (W + W.T) / 2


class _SchurSolver():

    def __init__(self, M: np.ndarray):
        try:
            self.factor = np.linalg.cholesky(M)
            self.dense = None
        except np.linalg.LinAlgError:
            logger.warning("Schur complement not numerically positive definite; using least squares")
            self.factor = None
            self.dense = M

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        if self.factor is None:
            return np.linalg.lstsq(self.dense, rhs, rcond=None)[0]
        return np.linalg.solve(self.factor.T, np.linalg.solve(self.factor, rhs))


def solve_theta_sdp(
    g: Graph,
    w: Union[Sequence[float], np.ndarray, None] = None,
    tol: Optional[float] = None,
    max_iterations: Optional[int] = None,
) -> ThetaSolution:
    """ϑ(G, w) with its optimal matrix, certified by the duality gap."""
    tol = tolerances.sdp_gap if tol is None else tol
    max_iterations = tolerances.sdp_max_iterations if max_iterations is None else max_iterations
    if tol <= 0:
        raise ParameterError(f"Gap tolerance must be positive, got {tol}")
    if g.n > tolerances.sdp_max_vertices:
        raise CapacityError(f"Theta SDP is limited to {tolerances.sdp_max_vertices} vertices, got {g.n}")
    weights = check_weights(g, np.ones(g.n) if w is None else w)
    scale = float(weights.max())
    if scale <= 0:
        raise ParameterError("At least one weight must be positive")

    program = _ThetaProgram(g, weights / scale)
    n = program.n
    target = tol / scale
    X = np.eye(n) / n
    y = np.zeros(program.m)
    y[0] = -(np.trace(program.C) + 1.0)
    Z = program.slack(y)
    bracket = (np.inf, -np.inf)

    for iteration in range(max_iterations + 1):
        B, primal, dual = program.certify(X, y)
        bracket = (dual * scale, primal * scale)
        logger.debug(f"theta iter {iteration}: primal={primal:.12g} dual={dual:.12g} gap={dual - primal:.3e}")
        if -ROUNDOFF <= dual - primal <= target:
            break
        if iteration == max_iterations:
            logger.error(f"Theta SDP hit the iteration cap of {max_iterations} on {n} vertices")
            raise NumericalError(f"Theta SDP did not close the gap within {max_iterations} iterations", bracket)

        mu = float(np.sum(X * Z)) / n
        LX = _cholesky(X, "Primal iterate", bracket)
        LZ = _cholesky(Z, "Dual slack", bracket)
        try:
            W = _nt_scaling(LX, Z)
        except np.linalg.LinAlgError:
            raise NumericalError("Nesterov-Todd scaling broke down", bracket)
        schur = _SchurSolver(program.schur(W))
        residual = program.b - program.apply(X)
        Z_inv = np.linalg.inv(Z)

        def direction(sigma: float):
            target_c = sigma * mu * Z_inv - X
            dy = schur.solve(residual - program.apply(target_c))
            dZ = -program.adjoint(dy)
            dX = target_c - W @ dZ @ W
            return (dX + dX.T) / 2, dy, dZ

        dX, dy, dZ = direction(0.0)
        alpha_p = min(1.0, _max_step(LX, dX))
        alpha_d = min(1.0, _max_step(LZ, dZ))
        mu_affine = float(np.sum((X + alpha_p * dX) * (Z + alpha_d * dZ))) / n
        sigma = min(1.0, max(0.0, mu_affine / mu) ** 3)

        dX, dy, dZ = direction(sigma)
        step_p = min(1.0, STEP_FRACTION * _max_step(LX, dX))
        step_d = min(1.0, STEP_FRACTION * _max_step(LZ, dZ))
        if step_p < MIN_STEP and step_d < MIN_STEP:
            raise NumericalError("Theta SDP stalled", bracket)
        X = X + step_p * dX
        X = (X + X.T) / 2
        y = y + step_d * dy
        Z = program.slack(y)

    lowest = symmetric_eigen(B).min
    if lowest < -tolerances.psd_slack:
        raise NumericalError(f"Optimal matrix is not PSD (min eigenvalue {lowest:.3e})", bracket)
    value, dual_value = primal * scale, dual * scale
    logger.info(f"theta on {n} vertices: {value:.10f} (gap {dual_value - value:.2e}, {iteration} iterations)")
    return ThetaSolution(
        primal_matrix=SymmetricMatrix(B),
        value=value,
        dual_value=dual_value,
        gap=dual_value - value,
        iterations=iteration,
        dual_multipliers=y[1:] * scale,
    )
