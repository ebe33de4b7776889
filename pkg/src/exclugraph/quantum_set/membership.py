from typing import Optional, Sequence, Tuple, Union
import logging

import numpy as np

from exclugraph.config import tolerances
from exclugraph.errors import NumericalError, ParameterError, PreconditionError, WitnessError
from exclugraph.graph_core import Graph, complement, is_vertex_transitive
from exclugraph.quantum_set.models import Classification, MembershipVerdict, Witness, check_distribution
from exclugraph.solvers import ThetaSolution, solve_theta_sdp

logger = logging.getLogger(__name__)

Vector = Union[Sequence[float], np.ndarray]

# Gram vectors shorter than this carry no direction
GRAM_FLOOR = 1e-15


def weighted_theta(g: Graph, weights: np.ndarray) -> float:
    """ϑ(G, w), zero for the all-zero weight vector."""
    if not np.any(weights > 0):
        return 0.0
    return solve_theta_sdp(g, weights).value


def e_product(p: Vector, q: Vector) -> Tuple[float, bool]:
    """
    Probability sum of the joint events g_i = (e_i, f_i). The joint events
    are pairwise exclusive, so the E principle caps the sum at 1; e_i and f_i
    are assumed independent.
    """
    p = np.asarray(p, dtype=float).reshape(-1)
    q = np.asarray(q, dtype=float).reshape(-1)
    if p.shape != q.shape:
        raise ParameterError(f"Distributions differ in length: {p.shape[0]} vs {q.shape[0]}")
    value = float(p @ q)
    return value, value <= 1.0 + tolerances.e_principle_slack


def classify(theta_complement: float) -> Classification:
    band = tolerances.boundary_band
    if theta_complement > 1.0 + band:
        return "outside"
    if theta_complement < 1.0 - band:
        return "inside"
    return "boundary"


def _checked_witness(g: Graph, p: np.ndarray, candidate: np.ndarray, theta_complement: float) -> Optional[Witness]:
    if not np.any(candidate > 0):
        return None
    check = solve_theta_sdp(g, candidate).value
    if check > 1.0:
        candidate = candidate / check
        check = solve_theta_sdp(g, candidate).value
    product, _ = e_product(p, candidate)
    if check > 1.0 + tolerances.boundary_band:
        return None
    if product < theta_complement - tolerances.witness_slack or product <= 1.0:
        return None
    return Witness(distribution=[float(x) for x in candidate], product=product, membership_check=check)


def _closed_form_candidate(p: np.ndarray, solution: ThetaSolution) -> np.ndarray:
    diagonal = np.diag(solution.primal_matrix.entries)
    candidate = np.zeros(p.shape[0])
    support = p > 0
    # complementary slackness gives (c.u_i)^2 = ϑ B_ii / P_i for the optimal handle c
    candidate[support] = solution.value * diagonal[support] / p[support]
    return np.clip(candidate, 0.0, None)


def _handle_candidate(p: np.ndarray, solution: ThetaSolution) -> np.ndarray:
    """
    P̄_i = (c.u_i)^2 / |u_i|^2 for the Gram vectors u_i of B and the handle
    c = s / |s|, s = sum_j sqrt(P_j) u_j. The u_i are orthogonal across every
    edge of Ḡ, so P̄ lies in Q(Ḡ) for any feasible B, and by Cauchy-Schwarz
    sum_i P_i P̄_i is at least the primal objective of B.
    """
    B = solution.primal_matrix.entries
    diagonal = np.diag(B)
    projection = B @ np.sqrt(p)
    objective = float(np.sqrt(p) @ projection)
    candidate = np.zeros(p.shape[0])
    if objective <= 0:
        return candidate
    support = diagonal > GRAM_FLOOR
    candidate[support] = projection[support] ** 2 / (objective * diagonal[support])
    return np.clip(candidate, 0.0, 1.0)


def _verified_candidate(g: Graph, p: np.ndarray, solution: ThetaSolution, theta_complement: float) -> Optional[Witness]:
    for build in (_closed_form_candidate, _handle_candidate):
        witness = _checked_witness(g, p, build(p, solution), theta_complement)
        if witness is not None:
            return witness
    return None


def _witness_from_solution(g: Graph, p: np.ndarray, solution: ThetaSolution) -> Witness:
    theta_complement = solution.value
    witness = _verified_candidate(g, p, solution, theta_complement)
    if witness is not None:
        return witness

    logger.warning(f"Witness from the optimal matrix failed verification; re-solving to a gap of {tolerances.witness_gap}")
    try:
        tight = solve_theta_sdp(complement(g), p, tol=tolerances.witness_gap)
    except NumericalError as e:
        logger.warning(f"Tight re-solve failed: {e}")
    else:
        witness = _verified_candidate(g, p, tight, theta_complement)
        if witness is not None:
            return witness

    logger.warning("Matrix-derived witness failed verification; trying the symmetrized candidate")
    if is_vertex_transitive(g):
        theta = solve_theta_sdp(g).value
        witness = _checked_witness(g, p, np.full(g.n, 1.0 / theta), theta_complement)
        if witness is not None:
            return witness
    logger.error(f"No verified witness for a point with ϑ(Ḡ,P)={theta_complement:.10f}")
    raise WitnessError(f"Could not extract a verified witness (ϑ(Ḡ,P)={theta_complement:.10f})")


def membership(g: Graph, p: Vector) -> MembershipVerdict:
    """Classify P against Q(G) = {P >= 0 : ϑ(Ḡ, P) <= 1}; attach a witness when outside."""
    p = check_distribution(g, p)
    if not np.any(p > 0):
        return MembershipVerdict(theta_complement=0.0, classification="inside")
    solution = solve_theta_sdp(complement(g), p)
    classification = classify(solution.value)
    witness = _witness_from_solution(g, p, solution) if classification == "outside" else None
    return MembershipVerdict(theta_complement=solution.value, classification=classification, witness=witness)


def extract_witness(g: Graph, p: Vector) -> Witness:
    """A member P̄ of Q(Ḡ) with sum_i P_i P̄_i > 1, verified before it is returned."""
    p = check_distribution(g, p)
    if not np.any(p > 0):
        raise PreconditionError("The zero distribution lies inside the quantum set; no witness exists")
    solution = solve_theta_sdp(complement(g), p)
    classification = classify(solution.value)
    if classification != "outside":
        raise PreconditionError(
            f"Witness requested for a point classified {classification} (ϑ(Ḡ,P)={solution.value:.10f})"
        )
    return _witness_from_solution(g, p, solution)


def sample_quantum_point(g: Graph, rng: np.random.Generator) -> np.ndarray:
    """A random boundary point of Q(G): v / ϑ(Ḡ, v) for v uniform in [0, 1]^n."""
    v = rng.uniform(0.0, 1.0, g.n)
    while not np.any(v > 0):
        v = rng.uniform(0.0, 1.0, g.n)
    return v / solve_theta_sdp(complement(g), v).value
