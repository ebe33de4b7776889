"""
Isomorphism and automorphism search.

Vertices are coloured by degree and refined by the multiset of neighbour
colours until stable. The search individualizes one vertex of the smallest
non-singleton cell, maps it to each same-coloured vertex of the target, and
refines both graphs jointly; a leaf is reached when every cell is a singleton.
Graphs up to ``tolerances.exhaustive_vertices`` vertices can also be searched
by plain permutation enumeration.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, List, Optional, Sequence, Set, Tuple
import logging

from exclugraph.config import tolerances
from exclugraph.errors import CapacityError, ParameterError
from exclugraph.graph_core.graph import Graph, VertexPermutation, bits
from exclugraph.graph_core.operations import complement

logger = logging.getLogger(__name__)

Colouring = List[int]


@dataclass(frozen=True)
class AutomorphismGroup():
    elements: Tuple[VertexPermutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[VertexPermutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: VertexPermutation) -> bool:
        return item in self._members

    @property
    def _members(self) -> Set[VertexPermutation]:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = set(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached


class _Search():
    """Joint refinement search for isomorphisms ``g -> h``."""

    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.n = g.n
        self.g_nbrs = [bits(row) for row in g.rows]
        self.h_nbrs = [bits(row) for row in h.rows]

    def refine(self, cg: Colouring, ch: Colouring) -> Optional[Tuple[Colouring, Colouring]]:
        cells = len(set(cg) | set(ch))
        while True:
            sig_g = [(cg[u], tuple(sorted(cg[v] for v in self.g_nbrs[u]))) for u in range(self.n)]
            sig_h = [(ch[u], tuple(sorted(ch[v] for v in self.h_nbrs[u]))) for u in range(self.n)]
            palette = {s: i for i, s in enumerate(sorted(set(sig_g) | set(sig_h)))}
            cg = [palette[s] for s in sig_g]
            ch = [palette[s] for s in sig_h]
            if Counter(cg) != Counter(ch):
                return None
            if len(palette) == cells:
                return cg, ch
            cells = len(palette)

    def start(self) -> Optional[Tuple[Colouring, Colouring]]:
        return self.refine([0] * self.n, [0] * self.n)

    def individualize(self, cg: Colouring, ch: Colouring, u: int, v: int) -> Optional[Tuple[Colouring, Colouring]]:
        fresh = max(cg) + 1
        cg, ch = list(cg), list(ch)
        cg[u] = fresh
        ch[v] = fresh
        return self.refine(cg, ch)

    @staticmethod
    def target_cell(cg: Colouring) -> Optional[int]:
        sizes = Counter(cg)
        open_cells = [c for c, k in sizes.items() if k > 1]
        if not open_cells:
            return None
        return min(open_cells, key=lambda c: (sizes[c], c))

    def leaf(self, cg: Colouring, ch: Colouring) -> Optional[VertexPermutation]:
        position = {c: v for v, c in enumerate(ch)}
        mapping = tuple(position[cg[u]] for u in range(self.n))
        return mapping_if_isomorphism(self.g, self.h, mapping)

    def walk(self, state: Optional[Tuple[Colouring, Colouring]], find_all: bool, cap: int = 0) -> Iterator[VertexPermutation]:
        """Yield isomorphisms below ``state``; with ``find_all`` off, stop after the first."""
        if state is None:
            return
        found = 0
        stack = [state]
        while stack:
            cg, ch = stack.pop()
            cell = self.target_cell(cg)
            if cell is None:
                sigma = self.leaf(cg, ch)
                if sigma is not None:
                    found += 1
                    if cap and found > cap:
                        raise CapacityError(f"Automorphism group exceeds the enumeration cap of {cap}")
                    yield sigma
                    if not find_all:
                        return
                continue
            u = min(x for x in range(self.n) if cg[x] == cell)
            candidates = [v for v in range(self.n) if ch[v] == cell]
            # reversed so the smallest candidate is explored first
            for v in reversed(candidates):
                child = self.individualize(cg, ch, u, v)
                if child is not None:
                    stack.append(child)


def mapping_if_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> Optional[VertexPermutation]:
    for u in range(g.n):
        image = 0
        for v in bits(g.rows[u]):
            image |= 1 << mapping[v]
        if image != h.rows[mapping[u]]:
            return None
    return VertexPermutation(tuple(mapping))


def _exhaustive(g: Graph, h: Graph) -> Iterator[VertexPermutation]:
    if g.n > tolerances.exhaustive_vertices:
        raise CapacityError(f"Exhaustive search is limited to {tolerances.exhaustive_vertices} vertices, got {g.n}")
    for mapping in permutations(range(g.n)):
        sigma = mapping_if_isomorphism(g, h, mapping)
        if sigma is not None:
            yield sigma


def _check_method(method: str) -> None:
    if method not in ("refine", "exhaustive"):
        raise ParameterError(f"Unknown search method {method!r}; expected 'refine' or 'exhaustive'")


def find_isomorphism(g: Graph, h: Graph, method: str = "refine") -> Optional[VertexPermutation]:
    """A permutation σ with ``u ~ v`` in g iff ``σ(u) ~ σ(v)`` in h, or None."""
    _check_method(method)
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if method == "exhaustive":
        return next(_exhaustive(g, h), None)
    search = _Search(g, h)
    return next(search.walk(search.start(), find_all=False), None)


def is_self_complementary(g: Graph, method: str = "refine") -> Optional[VertexPermutation]:
    return find_isomorphism(g, complement(g), method=method)


def group_order(g: Graph) -> int:
    """Order of Aut(g) as the product of orbit sizes along a stabilizer chain."""
    search = _Search(g, g)
    state = search.start()
    order = 1
    while True:
        cg, ch = state
        cell = search.target_cell(cg)
        if cell is None:
            return order
        u = min(x for x in range(g.n) if cg[x] == cell)
        orbit = 1
        for v in range(g.n):
            if v != u and cg[v] == cell:
                if next(search.walk(search.individualize(cg, ch, u, v), find_all=False), None) is not None:
                    orbit += 1
        order *= orbit
        state = search.individualize(cg, ch, u, u)


def automorphism_group(g: Graph, method: str = "refine") -> AutomorphismGroup:
    _check_method(method)
    cap = tolerances.automorphism_cap
    if method == "exhaustive":
        elements = tuple(_exhaustive(g, g))
    else:
        order = group_order(g)
        if order > cap:
            raise CapacityError(f"Automorphism group of order {order} exceeds the enumeration cap of {cap}")
        search = _Search(g, g)
        elements = tuple(search.walk(search.start(), find_all=True, cap=cap))
    logger.debug(f"Enumerated {len(elements)} automorphisms on {g.n} vertices")
    return AutomorphismGroup(tuple(sorted(elements, key=lambda s: s.mapping)))


def orbit(g: Graph, u: int) -> Set[int]:
    """Orbit of ``u`` under Aut(g), found one automorphism per target vertex."""
    search = _Search(g, g)
    cg, ch = search.start()
    reached = {u}
    for v in range(g.n):
        if v in reached or cg[v] != cg[u]:
            continue
        phi = next(search.walk(search.individualize(cg, ch, u, v), find_all=False), None)
        if phi is not None:
            reached |= {phi(w) for w in reached}
            reached.add(v)
    return reached


def orbits(g: Graph) -> List[List[int]]:
    remaining = set(range(g.n))
    result = []
    while remaining:
        u = min(remaining)
        found = orbit(g, u)
        result.append(sorted(found))
        remaining -= found
    return result


def is_vertex_transitive(g: Graph) -> bool:
    return len(orbit(g, 0)) == g.n
