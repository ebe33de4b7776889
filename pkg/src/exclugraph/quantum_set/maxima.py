import logging

from exclugraph.config import tolerances
from exclugraph.errors import NumericalError, ParameterError, StructuralError
from exclugraph.graph_core import Graph, complement, is_vertex_transitive
from exclugraph.quantum_set.models import CeilingReport, QuantumMaxReport
from exclugraph.solvers import solve_theta_sdp

logger = logging.getLogger(__name__)


def quantum_max(g: Graph) -> QuantumMaxReport:
    """M_Q(G) = ϑ(G) and M_Q(Ḡ); on vertex-transitive graphs the optimum is the constant ϑ(G)/n."""
    m_q = solve_theta_sdp(g).value
    complement_m_q = solve_theta_sdp(complement(g)).value
    transitive = is_vertex_transitive(g)
    product = m_q * complement_m_q
    if transitive and abs(product - g.n) > tolerances.duality_slack:
        logger.error(f"ϑ(G)ϑ(Ḡ) = {product} on a vertex-transitive graph with n = {g.n}")
        raise NumericalError(f"Quantum maxima product {product:.10f} deviates from n = {g.n}")
    return QuantumMaxReport(
        n=g.n,
        m_q=m_q,
        p_max=m_q / g.n if transitive else None,
        complement_m_q=complement_m_q,
        product=product,
        vertex_transitive=transitive,
    )


def complement_ceiling(g: Graph, observed: float) -> CeilingReport:
    """
    Ceiling the E principle puts on S(Ḡ) once S(G) = observed has been seen
    on a vertex-transitive G: n / observed. An observation above ϑ(G) pushes
    the ceiling below ϑ(Ḡ), so the quantum maximum of the complementary
    experiment can no longer be reached anywhere.
    """
    if observed <= 0:
        raise ParameterError(f"Observed value must be positive, got {observed}")
    if not is_vertex_transitive(g):
        raise StructuralError("The complement ceiling (Result 3) requires a vertex-transitive graph")
    theta = solve_theta_sdp(g).value
    theta_complement = solve_theta_sdp(complement(g)).value
    ceiling = g.n / observed
    return CeilingReport(
        n=g.n,
        observed=observed,
        ceiling=ceiling,
        theta=theta,
        theta_complement=theta_complement,
        exceeds_quantum=observed > theta + tolerances.boundary_band,
        complement_maximum_reachable=ceiling >= theta_complement - tolerances.duality_slack,
    )
