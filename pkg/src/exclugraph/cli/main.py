from argparse import ArgumentParser, Namespace
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence
import logging
import sys

from exclugraph import __version__
from exclugraph.config import LOG_FORMAT, LOG_LEVEL, tolerances
from exclugraph.db import ResultCache, cache_key
from exclugraph.errors import NumericalError, ParameterError
from exclugraph.graph_core import FamilyKind, FamilySpec, GraphFormat, decode_graph6, encode_graph6, generate_family
from exclugraph.cli.commands import (
    DISTRIBUTION_COMMANDS,
    GRAPH_COMMANDS,
    TOL_COMMANDS,
    UNCACHED_COMMANDS,
    command_signature,
    load_graph,
    load_vector,
    run_family,
)
from exclugraph.cli.records import Outcome, RunReport
from exclugraph.utils import TextHandler

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_NUMERICAL = 3


def _add_graph_options(parser: ArgumentParser) -> None:
    source = parser.add_argument_group("graph input")
    source.add_argument("--graph", help="graph6 text or edge list 'n; u-v ...'")
    source.add_argument("--graph-file", help="file holding one graph in either format")
    source.add_argument("--family", help="family descriptor, e.g. cycle:5, circulant:8:1,4, petersen")


def _add_weight_options(parser: ArgumentParser) -> None:
    parser.add_argument("--weights", help="comma-separated non-negative vertex weights")
    parser.add_argument("--weights-file", help="file with one weight per line")


def _add_dist_options(parser: ArgumentParser) -> None:
    parser.add_argument("--dist", help="comma-separated per-vertex probabilities")
    parser.add_argument("--dist-file", help="file with one probability per line")


def _add_format_option(parser: ArgumentParser) -> None:
    parser.add_argument("--format", choices=[f.value for f in GraphFormat], default=GraphFormat.graph6.value)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="exclugraph", description="Classical, quantum and exclusivity bounds of exclusivity graphs")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--tol", type=float, default=None, help=f"SDP duality-gap tolerance for bounds and bounds sweeps (default {tolerances.sdp_gap})")
    parser.add_argument("--csv", help="append result rows to this CSV file")
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the result cache")
    parser.add_argument("--log-file", help="write the log here instead of stderr")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    bounds = sub.add_parser("bounds", help="α, ϑ and α* of a weighted graph")
    _add_graph_options(bounds)
    _add_weight_options(bounds)

    for name, help_text in (
        ("membership", "classify a distribution against the quantum set"),
        ("witness", "E-principle witness for a supra-quantum distribution"),
        ("symmetrize", "average a distribution over the automorphism group"),
    ):
        command = sub.add_parser(name, help=help_text)
        _add_graph_options(command)
        _add_dist_options(command)

    qmax = sub.add_parser("quantum-max", help="quantum maxima of G and of its complement")
    _add_graph_options(qmax)

    verify = sub.add_parser("verify", help="check one of the three exclusivity results")
    verify.add_argument("result", choices=["result1", "result2", "result3"])
    _add_graph_options(verify)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--eps", default="0.05,0.1,0.2", help="comma-separated ε grid for result2")

    ceiling = sub.add_parser("ceiling", help="E-principle ceiling on S(Ḡ) given an observed S(G)")
    _add_graph_options(ceiling)
    ceiling.add_argument("--observed", type=float, required=True)

    family = sub.add_parser("family", help="emit a named family member")
    family.add_argument("descriptor")
    _add_format_option(family)

    comp = sub.add_parser("complement", help="complement graph")
    _add_graph_options(comp)
    _add_format_option(comp)

    product = sub.add_parser("product", help="OR (co-normal) product")
    _add_graph_options(product)
    product.add_argument("--or", dest="or_product", action="store_true", required=True)
    product.add_argument("--other", help="second factor as graph text; defaults to the first")
    product.add_argument("--other-family", help="second factor as a family descriptor")
    _add_format_option(product)

    sweep = sub.add_parser("sweep", help="run bounds or quantum-max over a range of family sizes")
    sweep.add_argument("--kind", choices=[k.value for k in FamilyKind], required=True)
    sweep.add_argument("--from", dest="start", type=int, required=True)
    sweep.add_argument("--to", dest="stop", type=int, required=True)
    sweep.add_argument("--step", type=int, default=1)
    sweep.add_argument("--distances", default=None, help="connection set for circulant sweeps, e.g. 1,4")
    sweep.add_argument("--run", choices=["bounds", "quantum-max"], default="bounds")
    sweep.add_argument("--workers", type=int, default=1)
    return parser


def configure_logging(args: Namespace) -> None:
    level = logging.DEBUG if args.verbose else LOG_LEVEL
    if args.log_file:
        logging.basicConfig(level=level, format=LOG_FORMAT, filename=args.log_file)
    else:
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def check_tol(args: Namespace) -> None:
    if args.tol is None:
        return
    command = args.run if args.command == "sweep" else args.command
    if command not in TOL_COMMANDS:
        raise ParameterError(f"--tol only applies to {', '.join(sorted(TOL_COMMANDS))}, not {command}")


def _effective_tol(args: Namespace) -> float:
    return tolerances.sdp_gap if args.tol is None else args.tol


def sweep_task(graph6: str, run: str, tol: Optional[float]) -> str:
    """Worker body of `sweep`; returns the Outcome payload so the parent owns cache and output."""
    g = decode_graph6(graph6)
    outcome = GRAPH_COMMANDS[run](g, Namespace(tol=tol), None)
    return outcome.payload()


class Dispatcher():

    def __init__(self, argv: List[str], args: Namespace):
        self.argv = argv
        self.args = args
        self.cache = None if args.no_cache else ResultCache()
        self.csv_rows: List[Dict] = []

    def emit(self, outcome: Outcome, weights: Optional[List[float]] = None) -> None:
        report = RunReport.build(self.argv, outcome, weights)
        print(report.model_dump_json(), flush=True)
        if outcome.csv_row is not None:
            self.csv_rows.append(outcome.csv_row)

    def cached(self, key: str, graph6: str) -> Optional[Outcome]:
        if self.cache is None:
            return None
        payload = self.cache.get(key)
        return None if payload is None else Outcome.from_payload(graph6, payload)

    def store(self, key: str, outcome: Outcome) -> None:
        if self.cache is not None:
            self.cache.put(key, outcome.payload())

    def run_graph_command(self) -> None:
        args = self.args
        g = load_graph(args.graph, args.graph_file, args.family)
        if args.command in DISTRIBUTION_COMMANDS:
            vector = load_vector(args.dist, args.dist_file, "distribution", required=True)
        elif args.command == "bounds":
            vector = load_vector(args.weights, args.weights_file, "weight vector", required=False)
        else:
            vector = None
        weights = None if vector is None else [float(x) for x in vector]

        graph6 = encode_graph6(g)
        key = None
        if args.command not in UNCACHED_COMMANDS:
            vector_text = "" if vector is None else TextHandler.format_vector(vector)
            key = cache_key(graph6, vector_text, command_signature(args), _effective_tol(args))
            outcome = self.cached(key, graph6)
            if outcome is not None:
                self.emit(outcome, weights)
                return

        outcome = GRAPH_COMMANDS[args.command](g, args, vector)
        if key is not None:
            self.store(key, outcome)
        self.emit(outcome, weights)

    def run_sweep(self) -> None:
        args = self.args
        if args.step <= 0:
            raise ParameterError(f"--step must be positive, got {args.step}")
        distances = [] if args.distances is None else [int(x) for x in TextHandler.parse_vector(args.distances)]
        graphs = []
        for n in range(args.start, args.stop + 1, args.step):
            spec = FamilySpec(kind=FamilyKind(args.kind), n=n, distances=distances)
            graphs.append(encode_graph6(generate_family(spec)))

        tol = _effective_tol(args)
        keys = [cache_key(graph6, "", args.run, tol) for graph6 in graphs]
        outcomes: List[Optional[Outcome]] = [self.cached(key, graph6) for key, graph6 in zip(keys, graphs)]
        pending = [i for i, outcome in enumerate(outcomes) if outcome is None]
        logger.info(f"Sweep over {len(graphs)} graphs, {len(graphs) - len(pending)} cached")

        todo = [(graphs[i], args.run, args.tol) for i in pending]
        if args.workers > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as executor:
                payloads = list(executor.map(sweep_task, *zip(*todo)))
        else:
            payloads = [sweep_task(*task) for task in todo]

        for i, payload in zip(pending, payloads):
            outcomes[i] = Outcome.from_payload(graphs[i], payload)
            self.store(keys[i], outcomes[i])
        for outcome in outcomes:
            self.emit(outcome)

    def run(self) -> None:
        check_tol(self.args)
        if self.args.command == "family":
            self.emit(run_family(self.args))
        elif self.args.command == "sweep":
            self.run_sweep()
        else:
            self.run_graph_command()
        if self.args.csv and self.csv_rows:
            TextHandler.dict2csv(self.csv_rows, self.args.csv)
            logger.info(f"Appended {len(self.csv_rows)} rows to {self.args.csv}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_PARAMETER
    configure_logging(args)

    try:
        Dispatcher(argv, args).run()
    except ParameterError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER
    except NumericalError as e:
        logger.error(str(e))
        print(f"numerical error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK
