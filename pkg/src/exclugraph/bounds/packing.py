from typing import NamedTuple, Optional, Sequence

import numpy as np

from exclugraph.bounds.cliques import maximal_cliques
from exclugraph.errors import NumericalError
from exclugraph.graph_core import Graph
from exclugraph.solvers import LpSolution, check_weights, solve_lp


class FractionalPacking(NamedTuple):
    value: float
    point: np.ndarray


def packing_lp(g: Graph, w: Optional[Sequence[float]] = None) -> LpSolution:
    """maximize w.x subject to sum_{i in C} x_i <= 1 for each maximal clique C, x >= 0."""
    weights = check_weights(g, np.ones(g.n) if w is None else w)
    constraints = []
    for clique in maximal_cliques(g):
        row = np.zeros(g.n)
        row[list(clique)] = 1.0
        constraints.append((row, 1.0))
    return solve_lp(weights, constraints)


def fractional_packing(g: Graph, w: Optional[Sequence[float]] = None) -> FractionalPacking:
    """α*(G, w), the single-experiment bound of the exclusivity principle."""
    solution = packing_lp(g, w)
    if solution.status != "optimal":
        raise NumericalError(f"Fractional packing LP ended {solution.status}")
    return FractionalPacking(solution.value, solution.point)
