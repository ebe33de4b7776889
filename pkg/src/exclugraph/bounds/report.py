from typing import List, Optional, Sequence
import logging

import numpy as np
from pydantic import BaseModel, Field

from exclugraph.bounds.independence import independence_number
from exclugraph.bounds.packing import fractional_packing
from exclugraph.config import tolerances
from exclugraph.errors import NumericalError
from exclugraph.graph_core import Graph, is_self_complementary, is_vertex_transitive
from exclugraph.solvers import check_weights, solve_theta_sdp

logger = logging.getLogger(__name__)


class BoundsReport(BaseModel):
    alpha: float = Field(description="classical bound α(G,w), weighted independence number")
    theta: float = Field(description="quantum bound ϑ(G,w), weighted Lovász number")
    alpha_star: float = Field(description="exclusivity-principle bound α*(G,w), fractional packing")
    s_max_classical: Optional[float] = Field(None, description="α for unit weights (maximum of S)")
    s_max_quantum: Optional[float] = Field(None, description="ϑ for unit weights")
    s_max_exclusivity: Optional[float] = Field(None, description="α* for unit weights")
    vertex_transitive: bool = Field(description="Aut(G) has a single vertex orbit")
    self_complementary: bool = Field(description="G is isomorphic to its complement")
    independent_set: List[int] = Field(description="lexicographically smallest optimal independent set")
    theta_objective: float = Field(description="primal objective of the optimal SDP matrix")
    theta_gap: float = Field(description="certified duality gap of the theta SDP")
    theta_iterations: int = Field(description="interior-point iterations")
    packing_point: List[float] = Field(description="optimal point of the fractional-packing LP")


def bounds_report(g: Graph, w: Optional[Sequence[float]] = None, tol: Optional[float] = None) -> BoundsReport:
    weights = check_weights(g, np.ones(g.n) if w is None else w)
    alpha = independence_number(g, weights)
    theta = solve_theta_sdp(g, weights, tol=tol)
    packing = fractional_packing(g, weights)

    slack = tolerances.sandwich_slack
    if alpha.value > theta.value + slack or theta.value > packing.value + slack:
        logger.error(f"Sandwich violated: α={alpha.value}, ϑ={theta.value}, α*={packing.value}")
        raise NumericalError(
            f"Sandwich α ≤ ϑ ≤ α* violated beyond {slack}: ({alpha.value}, {theta.value}, {packing.value})"
        )

    unit = bool(np.all(weights == 1.0))
    return BoundsReport(
        alpha=alpha.value,
        theta=theta.value,
        alpha_star=packing.value,
        s_max_classical=alpha.value if unit else None,
        s_max_quantum=theta.value if unit else None,
        s_max_exclusivity=packing.value if unit else None,
        vertex_transitive=is_vertex_transitive(g),
        self_complementary=is_self_complementary(g) is not None,
        independent_set=list(alpha.vertices),
        theta_objective=theta.value,
        theta_gap=theta.gap,
        theta_iterations=theta.iterations,
        packing_point=[float(x) for x in packing.point],
    )
