from typing import Optional, Sequence, Union

import numpy as np

from exclugraph.graph_core import AutomorphismGroup, Graph, automorphism_group
from exclugraph.quantum_set.models import check_distribution


def symmetrize(
    g: Graph,
    p: Union[Sequence[float], np.ndarray],
    group: Optional[AutomorphismGroup] = None,
) -> np.ndarray:
    """Group average (1/A) sum_φ P_φ with P_φ(i) = P(φ(i)) over Aut(G)."""
    p = check_distribution(g, p)
    group = automorphism_group(g) if group is None else group
    images = np.array([phi.mapping for phi in group], dtype=int)
    return p[images].mean(axis=0)
