from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

from exclugraph.graph_core import Graph
from exclugraph.graph_core.graph import bits
from exclugraph.solvers import check_weights

IMPROVEMENT = 1e-12


class IndependentSet(NamedTuple):
    value: float
    vertices: Tuple[int, ...]


class _BranchAndBound():
    """
    Exact maximum-weight independent set.

    Branches on the smallest candidate vertex, include before exclude, so the
    first optimum reached is the lexicographically smallest one. The bound
    covers the candidates greedily by cliques of g: an independent set takes
    at most one vertex, hence at most the heaviest weight, from each clique.
    """

    def __init__(self, g: Graph, weights: np.ndarray):
        self.rows = g.rows
        self.weights = [float(x) for x in weights]
        self.best_value = -1.0
        self.best_set: Tuple[int, ...] = ()

    def heaviest(self, mask: int) -> int:
        return max(bits(mask), key=lambda v: (self.weights[v], -v))

    def clique_cover_bound(self, candidates: int) -> float:
        total = 0.0
        remaining = candidates
        while remaining:
            v = self.heaviest(remaining)
            clique = 1 << v
            extend = remaining & self.rows[v]
            while extend:
                u = self.heaviest(extend)
                clique |= 1 << u
                extend &= self.rows[u]
            total += self.weights[v]
            remaining &= ~clique
        return total

    def expand(self, candidates: int, value: float, chosen: Tuple[int, ...]) -> None:
        if not candidates:
            if value > self.best_value + IMPROVEMENT:
                self.best_value, self.best_set = value, chosen
            return
        if value + self.clique_cover_bound(candidates) <= self.best_value + IMPROVEMENT:
            return
        v = (candidates & -candidates).bit_length() - 1
        self.expand(candidates & ~self.rows[v] & ~(1 << v), value + self.weights[v], chosen + (v,))
        self.expand(candidates & ~(1 << v), value, chosen)


def independence_number(g: Graph, w: Optional[Sequence[float]] = None) -> IndependentSet:
    """α(G, w) and the lexicographically smallest optimal independent set."""
    weights = check_weights(g, np.ones(g.n) if w is None else w)
    # zero-weight vertices never enter an optimal set
    positive = sum(1 << v for v in range(g.n) if weights[v] > 0)
    search = _BranchAndBound(g, weights)
    search.expand(positive, 0.0, ())
    return IndependentSet(max(search.best_value, 0.0), search.best_set)
