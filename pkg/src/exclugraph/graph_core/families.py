from enum import Enum
from typing import List, Optional
import logging

from pydantic import BaseModel, Field, ValidationError, field_validator

from exclugraph.config import tolerances
from exclugraph.errors import CapacityError, ParameterError, ParseError
from exclugraph.graph_core.graph import Graph
from exclugraph.graph_core.operations import complement

logger = logging.getLogger(__name__)


def _cycle(spec: "FamilySpec") -> Graph:
    n = spec.n
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def _antihole(spec: "FamilySpec") -> Graph:
    return complement(_cycle(spec))


def _circulant(spec: "FamilySpec") -> Graph:
    n = spec.n
    return Graph.from_edges(n, ((i, (i + d) % n) for i in range(n) for d in spec.distances))


def _complete(spec: "FamilySpec") -> Graph:
    n = spec.n
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def _empty(spec: "FamilySpec") -> Graph:
    return Graph.from_edges(spec.n, ())


def _path(spec: "FamilySpec") -> Graph:
    return Graph.from_edges(spec.n, ((i, i + 1) for i in range(spec.n - 1)))


def _paley(spec: "FamilySpec") -> Graph:
    q = spec.n
    residues = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, ((u, v) for u in range(q) for v in range(u + 1, q) if (v - u) % q in residues))


def _petersen(spec: "FamilySpec") -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


class FamilyKind(Enum):
    cycle = "cycle"
    antihole = "antihole"
    circulant = "circulant"
    complete = "complete"
    empty = "empty"
    paley = "paley"
    petersen = "petersen"
    path = "path"

    @property
    def builder(self):
        mapping = {
            FamilyKind.cycle: _cycle,
            FamilyKind.antihole: _antihole,
            FamilyKind.circulant: _circulant,
            FamilyKind.complete: _complete,
            FamilyKind.empty: _empty,
            FamilyKind.paley: _paley,
            FamilyKind.petersen: _petersen,
            FamilyKind.path: _path,
        }
        return mapping[self]


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def _prime_power_base(q: int) -> Optional[int]:
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


class FamilySpec(BaseModel):
    kind: FamilyKind = Field(description="named family of exclusivity graphs")
    n: int = Field(description="vertex count (q for paley, ignored for petersen)")
    distances: List[int] = Field(default_factory=list, description="connection set of a circulant graph")

    @field_validator("distances")
    @classmethod
    def _sorted_distances(cls, value: List[int]) -> List[int]:
        return sorted(set(value))

    def check(self) -> None:
        """Raise ``ParameterError`` naming the first violated admissibility constraint."""
        kind, n = self.kind, self.n
        if kind is FamilyKind.petersen:
            if n != 10:
                raise ParameterError(f"petersen has exactly 10 vertices, got n={n}")
            return
        if n > tolerances.max_vertices:
            raise CapacityError(f"{kind.value} on {n} vertices exceeds the cap of {tolerances.max_vertices}")
        if n < 1:
            raise ParameterError(f"{kind.value} requires n >= 1, got {n}")
        if kind is FamilyKind.cycle and n < 3:
            raise ParameterError(f"cycle requires n >= 3, got {n}")
        if kind is FamilyKind.antihole and n < 5:
            raise ParameterError(f"antihole requires n >= 5, got {n}")
        if kind is FamilyKind.circulant:
            if n < 2:
                raise ParameterError(f"circulant requires n >= 2, got {n}")
            if not self.distances:
                raise ParameterError("circulant requires a non-empty connection set")
            bad = [d for d in self.distances if not 1 <= d <= n // 2]
            if bad:
                raise ParameterError(f"circulant distances must lie in 1..{n // 2}, got {bad}")
        if kind is not FamilyKind.circulant and self.distances:
            raise ParameterError(f"{kind.value} takes no connection set")
        if kind is FamilyKind.paley:
            if n % 4 != 1:
                raise ParameterError(f"paley requires q ≡ 1 (mod 4), got q={n}")
            if _prime_power_base(n) is None:
                raise ParameterError(f"paley requires a prime power q, got q={n}")
            if not _is_prime(n):
                raise ParameterError(f"paley is built over prime fields only; q={n} is a proper prime power")

    def describe(self) -> str:
        if self.kind is FamilyKind.petersen:
            return "petersen"
        if self.kind is FamilyKind.circulant:
            return f"circulant:{self.n}:{','.join(str(d) for d in self.distances)}"
        return f"{self.kind.value}:{self.n}"


def generate_family(spec: FamilySpec) -> Graph:
    spec.check()
    g = spec.kind.builder(spec)
    logger.debug(f"Generated {spec.describe()} with {g.edge_count} edges")
    return g


def parse_family(text: str) -> FamilySpec:
    """Read descriptors such as ``cycle:5``, ``circulant:8:1,4`` or ``petersen``."""
    parts = text.strip().split(":")
    offset = 0
    try:
        kind = FamilyKind(parts[0])
    except ValueError:
        raise ParseError(f"Unknown family {parts[0]!r}; expected one of {[k.value for k in FamilyKind]}", offset)
    if kind is FamilyKind.petersen:
        if len(parts) != 1:
            raise ParseError("petersen takes no parameters", len(parts[0]))
        return FamilySpec(kind=kind, n=10)

    offset += len(parts[0]) + 1
    if len(parts) < 2 or not parts[1].strip().isdigit():
        raise ParseError(f"{kind.value} needs an integer size", offset)
    n = int(parts[1])
    distances: List[int] = []
    if kind is FamilyKind.circulant:
        offset += len(parts[1]) + 1
        if len(parts) != 3:
            raise ParseError("circulant needs a connection set, e.g. circulant:8:1,4", offset)
        for token in parts[2].split(","):
            if not token.strip().isdigit():
                raise ParseError(f"Bad distance {token!r}", offset)
            distances.append(int(token))
            offset += len(token) + 1
    elif len(parts) != 2:
        raise ParseError(f"{kind.value} takes a single size parameter", offset + len(parts[1]))
    try:
        return FamilySpec(kind=kind, n=n, distances=distances)
    except ValidationError as e:
        raise ParseError(f"Invalid family descriptor {text!r}: {e}", 0)
