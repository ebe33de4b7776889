from exclugraph.config import tolerances
from exclugraph.errors import CapacityError
from exclugraph.graph_core.graph import Graph


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(~row & full & ~(1 << u) for u, row in enumerate(g.rows)))


def or_product(g: Graph, h: Graph) -> Graph:
    """
    OR (co-normal) product: vertex ``(u1, u2)`` is numbered ``u1 * h.n + u2``;
    distinct pairs are adjacent iff ``u1 ~ v1`` in g or ``u2 ~ v2`` in h.
    """
    size = g.n * h.n
    if size > tolerances.max_vertices:
        raise CapacityError(
            f"OR product of {g.n} and {h.n} vertices has {size} vertices, above the cap of {tolerances.max_vertices}"
        )
    block = (1 << h.n) - 1
    rows = []
    for u1 in range(g.n):
        # every vertex of a block adjacent to u1 in g
        g_part = 0
        for v1 in range(g.n):
            if g.rows[u1] >> v1 & 1:
                g_part |= block << (v1 * h.n)
        for u2 in range(h.n):
            h_part = 0
            for v1 in range(g.n):
                h_part |= h.rows[u2] << (v1 * h.n)
            rows.append(g_part | h_part)
    return Graph(size, tuple(rows))
