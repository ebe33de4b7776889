"""Subcommand bodies. Each takes the parsed arguments and returns an Outcome; none of them print."""
from argparse import Namespace
from typing import Callable, Dict, Optional
import logging

import numpy as np

from exclugraph.bounds import bounds_report
from exclugraph.errors import ParameterError
from exclugraph.graph_core import (
    Graph,
    complement,
    encode_graph6,
    generate_family,
    group_order,
    is_self_complementary,
    is_vertex_transitive,
    or_product,
    parse_family,
    parse_graph,
    serialize_graph,
)
from exclugraph.quantum_set import (
    complement_ceiling,
    extract_witness,
    membership,
    quantum_max,
    symmetrize,
    verify_result1,
    verify_result2,
    verify_result3,
)
from exclugraph.cli.records import Outcome
from exclugraph.utils import TextHandler

logger = logging.getLogger(__name__)


def load_graph(text: Optional[str], path: Optional[str], family: Optional[str]) -> Graph:
    given = [x is not None for x in (text, path, family)]
    if sum(given) != 1:
        raise ParameterError("Give exactly one of --graph, --graph-file, --family")
    if family is not None:
        return generate_family(parse_family(family))
    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read().strip()
        except OSError as e:
            raise ParameterError(f"Cannot read graph file {path}: {e}") from None
    return parse_graph(text)


def load_vector(text: Optional[str], path: Optional[str], what: str, required: bool) -> Optional[np.ndarray]:
    if text is not None and path is not None:
        raise ParameterError(f"Give the {what} either inline or as a file, not both")
    if text is not None:
        return TextHandler.parse_vector(text)
    if path is not None:
        try:
            return TextHandler.read_vector_file(path)
        except OSError as e:
            raise ParameterError(f"Cannot read {what} file {path}: {e}") from None
    if required:
        raise ParameterError(f"This command needs a {what}")
    return None


def structure_flags(g: Graph) -> Dict[str, bool]:
    return {
        "vertex_transitive": is_vertex_transitive(g),
        "self_complementary": is_self_complementary(g) is not None,
    }


def run_bounds(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    report = bounds_report(g, vector, tol=args.tol)
    results = report.model_dump(exclude={"vertex_transitive", "self_complementary", "theta_gap", "theta_iterations"})
    flags = {"vertex_transitive": report.vertex_transitive, "self_complementary": report.self_complementary}
    graph6 = encode_graph6(g)
    return Outcome(
        graph6=graph6,
        results=results,
        flags=flags,
        diagnostics={"theta_gap": report.theta_gap, "theta_iterations": report.theta_iterations},
        csv_row={
            "graph6": graph6,
            "n": g.n,
            "alpha": report.alpha,
            "theta": report.theta,
            "alpha_star": report.alpha_star,
            "vt": report.vertex_transitive,
            "sc": report.self_complementary,
        },
    )


def run_quantum_max(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    report = quantum_max(g)
    graph6 = encode_graph6(g)
    return Outcome(
        graph6=graph6,
        results=report.model_dump(exclude={"vertex_transitive"}),
        flags={"vertex_transitive": report.vertex_transitive, "self_complementary": is_self_complementary(g) is not None},
        csv_row={
            "graph6": graph6,
            "n": g.n,
            "theta": report.m_q,
            "vt": report.vertex_transitive,
            "theta_complement": report.complement_m_q,
            "product_vt_check": report.product if report.vertex_transitive else None,
        },
    )


def run_membership(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    verdict = membership(g, vector)
    return Outcome(graph6=encode_graph6(g), results=verdict.model_dump(), flags=structure_flags(g))


def run_witness(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    witness = extract_witness(g, vector)
    return Outcome(graph6=encode_graph6(g), results=witness.model_dump(), flags=structure_flags(g))


def run_symmetrize(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    averaged = symmetrize(g, vector)
    return Outcome(
        graph6=encode_graph6(g),
        results={"distribution": [float(x) for x in averaged], "group_order": group_order(g)},
        flags=structure_flags(g),
    )


def run_ceiling(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    report = complement_ceiling(g, args.observed)
    return Outcome(graph6=encode_graph6(g), results=report.model_dump(), flags=structure_flags(g))


def run_verify(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    graph6 = encode_graph6(g)
    if args.result == "result1":
        report = verify_result1(g, trials=args.trials, seed=args.seed, workers=args.workers)
        return Outcome(graph6=graph6, results=report.model_dump(), flags=structure_flags(g))
    if args.result == "result2":
        epsilons = TextHandler.parse_vector(args.eps)
        report = verify_result2(g, epsilons)
        return Outcome(graph6=graph6, results=report.model_dump(), flags=structure_flags(g))
    report = verify_result3(g)
    return Outcome(
        graph6=graph6,
        results=report.model_dump(),
        flags=structure_flags(g),
        csv_row={
            "graph6": graph6,
            "n": g.n,
            "theta": report.theta,
            "vt": True,
            "theta_complement": report.theta_complement,
            "product_vt_check": report.product,
        },
    )


def run_complement(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    h = complement(g)
    return Outcome(graph6=encode_graph6(g), results={"graph": serialize_graph(h, args.format), "n": h.n})


def run_product(g: Graph, args: Namespace, vector: Optional[np.ndarray]) -> Outcome:
    if not args.or_product:
        raise ParameterError("Only the OR product is available; pass --or")
    h = g if args.other is None and args.other_family is None else load_graph(args.other, None, args.other_family)
    product = or_product(g, h)
    return Outcome(
        graph6=encode_graph6(g),
        results={"graph": serialize_graph(product, args.format), "n": product.n, "factor": encode_graph6(h)},
    )


def run_family(args: Namespace) -> Outcome:
    spec = parse_family(args.descriptor)
    g = generate_family(spec)
    return Outcome(
        graph6=encode_graph6(g),
        results={"family": spec.describe(), "graph": serialize_graph(g, args.format), "n": g.n, "edges": g.edge_count},
    )


GraphCommand = Callable[[Graph, Namespace, Optional[np.ndarray]], Outcome]

GRAPH_COMMANDS: Dict[str, GraphCommand] = {
    "bounds": run_bounds,
    "membership": run_membership,
    "witness": run_witness,
    "symmetrize": run_symmetrize,
    "quantum-max": run_quantum_max,
    "verify": run_verify,
    "ceiling": run_ceiling,
    "complement": run_complement,
    "product": run_product,
}

# commands whose input vector is a distribution (--dist) rather than weights (--weights)
DISTRIBUTION_COMMANDS = {"membership", "witness", "symmetrize"}

# cheap graph transforms are never cached
UNCACHED_COMMANDS = {"complement", "product"}

# commands that hand --tol to the theta SDP; every other command runs at the default gap
TOL_COMMANDS = {"bounds"}


def command_signature(args: Namespace) -> str:
    """The part of the cache key that identifies the command and its own options."""
    if args.command == "verify":
        if args.result == "result1":
            return f"verify result1 trials={args.trials} seed={args.seed}"
        if args.result == "result2":
            return f"verify result2 eps={args.eps}"
        return "verify result3"
    if args.command == "ceiling":
        return f"ceiling observed={args.observed!r}"
    return args.command
