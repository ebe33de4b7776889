from typing import List, Literal, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field

from exclugraph.errors import ParameterError
from exclugraph.graph_core import Graph

Classification = Literal["inside", "boundary", "outside"]


def check_distribution(g: Graph, p: Union[Sequence[float], np.ndarray]) -> np.ndarray:
    """Per-vertex event probabilities: length n, every entry in [0, 1], no normalization."""
    values = np.asarray(p, dtype=float).reshape(-1)
    if values.shape[0] != g.n:
        raise ParameterError(f"Expected {g.n} probabilities, got {values.shape[0]}")
    if not np.all(np.isfinite(values)):
        raise ParameterError("Probabilities must be finite")
    if np.any(values < 0):
        raise ParameterError(f"Probabilities must be non-negative, got min {values.min()}")
    if np.any(values > 1):
        raise ParameterError(f"Probabilities must not exceed 1, got max {values.max()}")
    return values


class Witness(BaseModel):
    distribution: List[float] = Field(description="P̄, a member of the quantum set of the complement")
    product: float = Field(description="sum_i P_i P̄_i, the probability sum of the exclusive joint events")
    membership_check: float = Field(description="ϑ(G, P̄), at most 1 when P̄ is quantum for the complement")


class MembershipVerdict(BaseModel):
    theta_complement: float = Field(description="ϑ(Ḡ, P)")
    classification: Classification = Field(description="position of P relative to the quantum set")
    witness: Optional[Witness] = Field(None, description="E-principle violation certificate, present iff outside")


class QuantumMaxReport(BaseModel):
    n: int = Field(description="vertex count")
    m_q: float = Field(description="quantum maximum of S on G, ϑ(G)")
    p_max: Optional[float] = Field(None, description="per-vertex optimum ϑ(G)/n on vertex-transitive graphs")
    complement_m_q: float = Field(description="quantum maximum of S on the complement, ϑ(Ḡ)")
    product: float = Field(description="m_q * complement_m_q")
    vertex_transitive: bool = Field(description="Aut(G) has a single vertex orbit")


class TrialOutcome(BaseModel):
    index: int
    classification: Optional[Classification] = Field(None, description="unset when a solver failed before classifying")
    theta_complement: Optional[float] = None
    max_product: Optional[float] = Field(None, description="largest E-product against sampled complement members")
    violations: int = 0
    witnessed: bool = False
    witness_failed: bool = False
    error: Optional[str] = Field(None, description="solver failure that ended the trial early")


class Result1Report(BaseModel):
    trials: int
    seed: int
    inside: int
    boundary: int
    outside: int
    pairs_checked: int = Field(description="(inside point, complement member) pairs tested against the E principle")
    e_product_violations: int
    max_inside_product: Optional[float]
    witnesses_verified: int
    witness_failures: int
    solver_failures: int = Field(description="trials ended by a numerical failure outside witness extraction")
    passed: bool


class Result2Entry(BaseModel):
    epsilon: float
    theta_complement: float
    classification: Classification
    product: Optional[float] = None
    permuted_check: Optional[float] = Field(None, description="ϑ(Ḡ, σ(P̄)), at most 1 when σ(P̄) is quantum for G")


class Result2Report(BaseModel):
    n: int
    theta: float
    isomorphism: List[int] = Field(description="σ: G -> Ḡ used to carry the witness back to G")
    entries: List[Result2Entry]
    all_exceed_one: bool
    increasing: bool


class Result3Report(BaseModel):
    n: int
    theta: float
    theta_complement: float
    product: float
    upper_margin: float = Field(description="n + slack - product, E-principle direction")
    lower_margin: float = Field(description="product - (n - slack), reverse direction for vertex-transitive graphs")
    extremal_e_product: float = Field(description="n p_max p̄_max of the constant extremal distributions")


class CeilingReport(BaseModel):
    n: int
    observed: float = Field(description="observed value of S on G")
    ceiling: float = Field(description="E-principle ceiling n / observed for S on the complement")
    theta: float
    theta_complement: float
    exceeds_quantum: bool = Field(description="observed value beats ϑ(G)")
    complement_maximum_reachable: bool = Field(description="ceiling leaves room for ϑ(Ḡ)")
