"""Executable checks of the three exclusivity-principle results on a given graph."""
from concurrent.futures import ThreadPoolExecutor
from typing import List, Sequence
import logging

import numpy as np

from exclugraph.config import tolerances
from exclugraph.errors import NumericalError, ParameterError, StructuralError, WitnessError
from exclugraph.graph_core import Graph, complement, is_self_complementary, is_vertex_transitive
from exclugraph.quantum_set.membership import e_product, membership, sample_quantum_point, weighted_theta
from exclugraph.quantum_set.models import (
    Result1Report,
    Result2Entry,
    Result2Report,
    Result3Report,
    TrialOutcome,
)
from exclugraph.solvers import solve_theta_sdp

logger = logging.getLogger(__name__)

SCALE_RANGE = (0.6, 1.4)


class _Result1Trial():
    """One sampled distribution P, checked against members of Q(Ḡ) or witnessed."""

    def __init__(self, g: Graph, pool_size: int):
        self.g = g
        self.gc = complement(g)
        self.pool_size = pool_size

    def __call__(self, index: int, seed: np.random.SeedSequence) -> TrialOutcome:
        rng = np.random.default_rng(seed)
        try:
            return self.run(index, rng)
        except WitnessError as e:
            logger.error(f"Trial {index}: {e}")
            return TrialOutcome(index=index, classification="outside", witness_failed=True)
        except NumericalError as e:
            logger.error(f"Trial {index}: {e}")
            return TrialOutcome(index=index, error=str(e))

    def run(self, index: int, rng: np.random.Generator) -> TrialOutcome:
        v = rng.uniform(0.0, 1.0, self.g.n)
        radius = weighted_theta(self.gc, v)
        p = np.clip(v * rng.uniform(*SCALE_RANGE) / radius, 0.0, 1.0) if radius > 0 else v
        verdict = membership(self.g, p)

        outcome = TrialOutcome(index=index, classification=verdict.classification, theta_complement=verdict.theta_complement)
        if verdict.classification == "inside":
            products = [e_product(p, sample_quantum_point(self.gc, rng))[0] for _ in range(self.pool_size)]
            outcome.max_product = max(products)
            outcome.violations = sum(x > 1.0 + tolerances.boundary_band for x in products)
        elif verdict.classification == "outside":
            outcome.witnessed = verdict.witness is not None
            outcome.witness_failed = verdict.witness is None
        return outcome


def verify_result1(g: Graph, trials: int = 100, seed: int = 0, pool_size: int = 10, workers: int = 1) -> Result1Report:
    """
    Given Q(Ḡ), the E principle singles out Q(G): inside points never beat 1
    against complement members, outside points always have a witness.
    """
    if trials < 0:
        raise ParameterError(f"Trial count must be non-negative, got {trials}")
    seeds = np.random.SeedSequence(seed).spawn(trials)
    trial = _Result1Trial(g, pool_size)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        outcomes: List[TrialOutcome] = list(executor.map(trial, range(trials), seeds))

    inside = [o for o in outcomes if o.classification == "inside"]
    outside = [o for o in outcomes if o.classification == "outside"]
    violations = sum(o.violations for o in inside)
    failures = sum(o.witness_failed for o in outside)
    errors = sum(o.error is not None for o in outcomes)
    report = Result1Report(
        trials=trials,
        seed=seed,
        inside=len(inside),
        boundary=sum(o.classification == "boundary" for o in outcomes),
        outside=len(outside),
        pairs_checked=len(inside) * pool_size,
        e_product_violations=violations,
        max_inside_product=max((o.max_product for o in inside), default=None),
        witnesses_verified=sum(o.witnessed for o in outside),
        witness_failures=failures,
        solver_failures=errors,
        passed=violations == 0 and failures == 0 and errors == 0,
    )
    logger.info(f"Result 1 on {g.n} vertices: {report.inside} inside, {report.outside} outside, passed={report.passed}")
    return report


def verify_result2(g: Graph, epsilon_grid: Sequence[float] = (0.05, 0.1, 0.2)) -> Result2Report:
    """
    On a self-complementary G, every supra-quantum constant point (1+ε)ϑ(G)/n
    meets a witness that, relabelled by σ: G -> Ḡ, is itself quantum for G.
    """
    sigma = is_self_complementary(g)
    if sigma is None:
        raise StructuralError("Result 2 requires a self-complementary graph (G isomorphic to its complement)")
    gc = complement(g)
    theta = solve_theta_sdp(g).value
    base = theta / g.n
    entries: List[Result2Entry] = []
    for epsilon in sorted(float(e) for e in epsilon_grid):
        level = base * (1.0 + epsilon)
        if not 0.0 <= level <= 1.0:
            raise ParameterError(f"ε={epsilon} puts the constant point at {level}, outside [0, 1]")
        verdict = membership(g, np.full(g.n, level))
        entry = Result2Entry(epsilon=epsilon, theta_complement=verdict.theta_complement, classification=verdict.classification)
        if verdict.witness is not None:
            witness = np.array(verdict.witness.distribution)
            permuted = witness[list(sigma.mapping)]
            entry.permuted_check = solve_theta_sdp(gc, permuted).value
            if entry.permuted_check > 1.0 + tolerances.boundary_band:
                raise NumericalError(
                    f"Permuted witness for ε={epsilon} is not quantum for G (ϑ(Ḡ,σ(P̄))={entry.permuted_check:.10f})"
                )
            entry.product = verdict.witness.product
        entries.append(entry)

    significant = [e for e in entries if e.epsilon > tolerances.boundary_band]
    all_exceed_one = all(e.product is not None and e.product > 1.0 for e in significant)
    products = [e.product for e in significant]
    increasing = all(a is not None and b is not None and b > a for a, b in zip(products, products[1:]))
    if not all_exceed_one:
        raise NumericalError("A supra-quantum point of Result 2 produced no witness beating the E principle")
    return Result2Report(
        n=g.n,
        theta=theta,
        isomorphism=list(sigma.mapping),
        entries=entries,
        all_exceed_one=all_exceed_one,
        increasing=increasing,
    )


def verify_result3(g: Graph) -> Result3Report:
    """On a vertex-transitive G, ϑ(G)ϑ(Ḡ) = n: the E-principle bound and its reverse both hold."""
    if not is_vertex_transitive(g):
        raise StructuralError("Result 3 requires a vertex-transitive graph")
    theta = solve_theta_sdp(g).value
    theta_complement = solve_theta_sdp(complement(g)).value
    product = theta * theta_complement
    slack = tolerances.duality_slack
    report = Result3Report(
        n=g.n,
        theta=theta,
        theta_complement=theta_complement,
        product=product,
        upper_margin=g.n + slack - product,
        lower_margin=product - (g.n - slack),
        extremal_e_product=g.n * (theta / g.n) * (theta_complement / g.n),
    )
    if report.upper_margin < 0 or report.lower_margin < 0:
        logger.error(f"Result 3 check failed: ϑ(G)ϑ(Ḡ)={product} for n={g.n}")
        raise NumericalError(f"ϑ(G)ϑ(Ḡ) = {product:.10f} is not within {slack} of n = {g.n}")
    return report
