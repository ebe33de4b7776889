from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from exclugraph.config import tolerances
from exclugraph.errors import CapacityError, ParameterError


@dataclass(frozen=True)
class VertexPermutation():
    """Bijection on {0, ..., n-1}; ``mapping[u]`` is the image of ``u``."""

    mapping: Tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(v) for v in self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ParameterError(f"Not a permutation of 0..{len(mapping) - 1}: {mapping}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, u: int) -> int:
        return self.mapping[u]

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """``self ∘ other``: apply ``other`` first."""
        return VertexPermutation(tuple(self.mapping[other.mapping[u]] for u in range(self.n)))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for u, v in enumerate(self.mapping):
            inv[v] = u
        return VertexPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(u == v for u, v in enumerate(self.mapping))


@dataclass(frozen=True)
class Graph():
    """
    Simple undirected exclusivity graph on vertices 0..n-1.

    Adjacency is stored row-wise as integer bit masks: bit ``v`` of ``rows[u]``
    is set iff u and v are exclusive. Values are immutable and hashable.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= tolerances.max_vertices:
            raise CapacityError(f"Vertex count must lie in 1..{tolerances.max_vertices}, got {self.n}")
        if len(self.rows) != self.n:
            raise ParameterError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ParameterError(f"Row {u} references vertices beyond {self.n - 1}")
            if row >> u & 1:
                raise ParameterError(f"Self-loop at vertex {u}")
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise ParameterError(f"Adjacency not symmetric on pair ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if not 1 <= n <= tolerances.max_vertices:
            raise CapacityError(f"Vertex count must lie in 1..{tolerances.max_vertices}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"Edge {u}-{v} out of range for {n} vertices")
            if u == v:
                raise ParameterError(f"Self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, matrix: Sequence[Sequence[bool]]) -> "Graph":
        n = len(matrix)
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if matrix[u][v]))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> List[int]:
        return list(_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            matrix[u, v] = matrix[v, u] = True
        return matrix

    def relabel(self, sigma: VertexPermutation) -> "Graph":
        """Graph in which ``sigma(u) ~ sigma(v)`` iff ``u ~ v`` here."""
        if sigma.n != self.n:
            raise ParameterError(f"Permutation on {sigma.n} points cannot relabel {self.n} vertices")
        return Graph.from_edges(self.n, ((sigma(u), sigma(v)) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> List[int]:
    return list(_bits(mask))
