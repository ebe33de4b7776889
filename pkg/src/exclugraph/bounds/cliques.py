from dataclasses import dataclass
from typing import Iterator, List, Tuple

from exclugraph.graph_core import Graph
from exclugraph.graph_core.graph import bits


@dataclass(frozen=True)
class CliqueList():
    cliques: Tuple[Tuple[int, ...], ...]

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)


def maximal_cliques(g: Graph) -> CliqueList:
    """All maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted."""
    found: List[Tuple[int, ...]] = []
    rows = g.rows

    def extend(chosen: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            found.append(tuple(bits(chosen)))
            return
        pivot = max(bits(candidates | excluded), key=lambda u: (candidates & rows[u]).bit_count())
        for v in bits(candidates & ~rows[pivot]):
            extend(chosen | 1 << v, candidates & rows[v], excluded & rows[v])
            candidates &= ~(1 << v)
            excluded |= 1 << v

    extend(0, g.full_mask, 0)
    return CliqueList(tuple(sorted(found)))
