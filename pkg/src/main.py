"""
Command-line entry point.

Human-facing vertex and edge numbers are 1-based; edge-list files are 0-based.
"""
import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .__version__ import __version__
from .catalog import catalog_graph, catalog_names
from .config import Config
from .edgelist import read_edge_list_file, write_edge_list, write_edge_list_file
from .exceptions import InvalidInputError, MetricDimError, StorageError
from .graph import Graph, SimpleGraph, as_connected
from .logger import initialize_logging, log_exception, set_console_level
from .products import (
    BoundResult,
    RootedSubset,
    bridge_cycle,
    bridge_cycle_edim,
    corona_bound,
    corona_product,
    evaluate_bounds,
    hierarchical_product,
)
from .resolvability import (
    brute_force_dim,
    brute_force_edim,
    edge_representations,
    is_edge_metric_generator,
    is_metric_generator,
    ordered_vertex_set,
    vertex_representations,
)
from .solver import (
    SolverOptions,
    build_edge_instance,
    build_vertex_instance,
    dim_via_ilp,
    edim_via_ilp,
    export_lp,
)
from .verify import CHECKS, STATUS_FAILED, run_checks

logger = logging.getLogger(__name__)

PRODUCT_KINDS = ("hier", "corona", "bridge-cycle")


def _one_based_list(value: str) -> List[int]:
    """Parse ``"1,3,5"`` into 0-based indices."""
    try:
        items = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from None
    if not items or min(items) < 1:
        raise argparse.ArgumentTypeError(f"expected 1-based indices, got {value!r}")
    return [i - 1 for i in items]


def _one_based(value: str) -> int:
    items = _one_based_list(value)
    if len(items) != 1:
        raise argparse.ArgumentTypeError(f"expected a single 1-based index, got {value!r}")
    return items[0]


def _add_graph_source(parser: argparse.ArgumentParser, prefix: str = "", required: bool = True,
                      what: str = "graph") -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument(f"--{prefix}file", metavar="PATH", type=Path,
                       help=f"{what} as an edge-list file")
    group.add_argument(f"--{prefix}catalog", metavar=("NAME", "PARAM"), nargs="+",
                       help=f"{what} from the catalog, e.g. 'path 11'")


def _add_solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", choices=("ilp", "brute"), default="ilp",
                        help="exact hitting-set solver or exhaustive search")
    parser.add_argument("--timeout", type=float, default=None, metavar="SECONDS",
                        help="solver time limit; the best cover found so far is reported")
    parser.add_argument("--max-vertices", type=int, default=None, metavar="N",
                        help="largest graph accepted by --method brute")


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None,
                        help="output format (default from configuration)")
    common.add_argument("--verbose", action="store_true", help="log debug output to stderr")
    common.add_argument("--stats", action="store_true", help="include solver statistics and timing")

    parser = argparse.ArgumentParser(
        prog="metricdim",
        description="Edge metric dimension of graphs and graph products")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    edim = commands.add_parser("edim", parents=[common], help="edge metric dimension and basis")
    _add_graph_source(edim)
    _add_solver_options(edim)
    edim.add_argument("--edges", type=_one_based_list, metavar="E1,E2,...",
                      help="only distinguish these edges (1-based positions)")

    dim = commands.add_parser("dim", parents=[common], help="metric dimension and basis")
    _add_graph_source(dim)
    _add_solver_options(dim)
    dim.add_argument("--vertices", type=_one_based_list, metavar="V1,V2,...",
                     help="only distinguish these vertices (1-based)")

    basis = commands.add_parser("basis", parents=[common],
                                help="representations of every edge and vertex for a given set")
    _add_graph_source(basis)
    basis.add_argument("--set", dest="vertex_set", type=_one_based_list, required=True,
                       metavar="V1,V2,...", help="ordered vertex set (1-based)")

    product = commands.add_parser("product", parents=[common], help="write a constructed graph")
    product.add_argument("kind", choices=PRODUCT_KINDS)
    _add_graph_source(product)
    _add_graph_source(product, "h-", required=False, what="second factor")
    _add_root_options(product)
    product.add_argument("--output", type=Path, metavar="PATH", help="write the edge list here")

    bounds = commands.add_parser("bounds", parents=[common], help="evaluate the product formulas")
    kind = bounds.add_mutually_exclusive_group()
    kind.add_argument("--hier", dest="kind", action="store_const", const="hier")
    kind.add_argument("--corona", dest="kind", action="store_const", const="corona")
    kind.add_argument("--bridge-cycle", dest="kind", action="store_const", const="bridge-cycle")
    bounds.set_defaults(kind="hier")
    _add_graph_source(bounds)
    _add_graph_source(bounds, "h-", required=False, what="second factor")
    _add_root_options(bounds)
    bounds.add_argument("--timeout", type=float, default=None, metavar="SECONDS")

    lp = commands.add_parser("export-lp", parents=[common], help="write the ILP model as an LP file")
    _add_graph_source(lp)
    lp.add_argument("--model", choices=("edim", "dim"), default="edim")
    lp.add_argument("--edges", type=_one_based_list, metavar="E1,E2,...")
    lp.add_argument("--output", type=Path, metavar="PATH", help="write the LP file here")

    verify = commands.add_parser("verify", parents=[common], help="run the invariant sweeps")
    verify.add_argument("checks", nargs="*", metavar="CHECK",
                        help=f"checks to run (default all): {', '.join(CHECKS)}")
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--quick", action="store_true", help="smaller sweeps")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--fixtures-dir", type=Path, default=None, metavar="DIR",
                        help="edge lists for the figure-only graphs")

    commands.add_parser("catalog", parents=[common], help="list the named graphs")

    args = parser.parse_args(argv)
    if args.command == "verify":
        unknown = [name for name in args.checks if name not in CHECKS]
        if unknown:
            parser.error(f"unknown check(s): {', '.join(unknown)}")
    return args


def _add_root_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--roots", type=_one_based_list, metavar="U1,U2,...",
                        help="root set U (1-based)")
    parser.add_argument("--root", type=_one_based, metavar="R", help="single root (1-based)")
    parser.add_argument("--k", type=int, default=3, help="bridge-cycle component count")


def _load_graph(args: argparse.Namespace, prefix: str = "", connected: bool = True) -> SimpleGraph:
    path = getattr(args, f"{prefix}file")
    source = getattr(args, f"{prefix}catalog")
    if path is not None:
        return read_edge_list_file(path, connected=connected)
    name, params = source[0], source[1:]
    return catalog_graph(name, params)


def _second_factor(args: argparse.Namespace, connected: bool = True) -> SimpleGraph:
    if args.h_file is None and args.h_catalog is None:
        raise InvalidInputError("a second factor (--h-file or --h-catalog) is required")
    return _load_graph(args, "h_", connected=connected)


def _root_set(args: argparse.Namespace, g: Graph) -> RootedSubset:
    if args.roots is not None and args.root is not None:
        raise InvalidInputError("give either --roots or --root, not both")
    if args.roots is not None:
        return RootedSubset(g, tuple(args.roots))
    if args.root is not None:
        return RootedSubset.single(g, args.root)
    raise InvalidInputError("a root set (--roots or --root) is required")


def _labels(g: SimpleGraph, vertices: Sequence[int]) -> List[str]:
    return [g.label(v) for v in vertices]


class _Output:
    """Collects key-value records and prints them as text or one JSON document."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.records: Dict[str, Any] = {}

    def add(self, key: str, value: Any) -> None:
        self.records[key] = value

    def emit(self, stream=None) -> None:
        stream = stream or sys.stdout
        if not self.records:
            return
        if self.fmt == "json":
            stream.write(json.dumps(self.records, indent=2) + "\n")
            return
        for key, value in self.records.items():
            stream.write(f"{key}: {_text_value(value)}\n")


def _text_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "n/a"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={_text_value(v)}" for k, v in value.items()) + "}"
    return str(value)


def _solver_options(args: argparse.Namespace, config: Config) -> SolverOptions:
    return SolverOptions.from_config(config, time_limit=args.timeout)


def _max_vertices(args: argparse.Namespace, config: Config) -> int:
    if args.max_vertices is not None:
        return args.max_vertices
    return int(config.get("brute_force", "max_vertices", 16))


def cmd_dimension(args: argparse.Namespace, config: Config, out: _Output) -> int:
    g = as_connected(_load_graph(args))
    edge_model = args.command == "edim"
    subset = args.edges if edge_model else args.vertices
    stats = None
    started = time.perf_counter()
    if args.method == "brute":
        oracle = brute_force_edim if edge_model else brute_force_dim
        dimension, basis = oracle(g, subset, max_vertices=_max_vertices(args, config))
        optimal = True
    else:
        solve = edim_via_ilp if edge_model else dim_via_ilp
        solved = solve(g, subset, _solver_options(args, config))
        dimension, basis, optimal, stats = solved.optimum, solved.witness, solved.optimal, solved.stats
    elapsed = time.perf_counter() - started

    out.add("dimension", dimension)
    out.add("basis", _labels(g, basis))
    out.add("method", args.method)
    out.add("optimal", optimal)
    if args.stats:
        out.add("n", g.n)
        out.add("m", g.m)
        out.add("elapsed", round(elapsed, 6))
        if stats is not None:
            out.add("nodes", stats.nodes)
            out.add("constraints", stats.constraints)
            out.add("reduced_constraints", stats.reduced_constraints)
    return 0


def cmd_basis(args: argparse.Namespace, config: Config, out: _Output) -> int:
    g = as_connected(_load_graph(args))
    s = ordered_vertex_set(g, args.vertex_set)
    edge_rows = edge_representations(g, s)
    vertex_rows = vertex_representations(g, s)
    out.add("set", _labels(g, s))
    out.add("edge_metric_generator", is_edge_metric_generator(g, s))
    out.add("metric_generator", is_metric_generator(g, s))
    out.add("edge_representations", {
        f"e{i + 1}={g.label(x)}{g.label(y)}": [int(d) for d in edge_rows[i]]
        for i, (x, y) in enumerate(g.edges)
    })
    out.add("vertex_representations", {
        g.label(v): [int(d) for d in vertex_rows[v]] for v in range(g.n)
    })
    return 0


def cmd_product(args: argparse.Namespace, config: Config, out: _Output) -> int:
    g = as_connected(_load_graph(args))
    if args.kind == "hier":
        built = hierarchical_product(_root_set(args, g), as_connected(_second_factor(args))).graph
    elif args.kind == "corona":
        built = corona_product(g, _second_factor(args, connected=False)).graph
    else:
        root = _root_set(args, g)
        if len(root.u_set) != 1:
            raise InvalidInputError("bridge-cycle needs a single --root")
        built = bridge_cycle([(g, root.u_set[0])] * args.k)
    if args.output is not None:
        write_edge_list_file(built, args.output)
        out.add("n", built.n)
        out.add("m", built.m)
        out.add("output", str(args.output))
        return 0
    sys.stdout.write(write_edge_list(built))
    return 0


def _bound_record(bound: BoundResult, g: Optional[SimpleGraph]) -> Dict[str, Any]:
    record: Dict[str, Any] = {
        "bound_name": bound.bound_name,
        "value": bound.value,
        "applicable": bound.applicable,
    }
    if bound.applicable_any is not None:
        record["applicable_any"] = bound.applicable_any
    if bound.witness and g is not None:
        record["witness"] = _labels(g, bound.witness)
    if bound.note:
        record["note"] = bound.note
    return record


def cmd_bounds(args: argparse.Namespace, config: Config, out: _Output) -> int:
    g = as_connected(_load_graph(args))
    options = SolverOptions.from_config(config, time_limit=args.timeout)
    if args.kind == "corona":
        results = [corona_bound(g, _second_factor(args, connected=False))]
    elif args.kind == "bridge-cycle":
        root = _root_set(args, g)
        if len(root.u_set) != 1:
            raise InvalidInputError("bridge-cycle needs a single --root")
        value = bridge_cycle_edim(g, root.u_set[0], args.k, options)
        results = [BoundResult("bridge_cycle", value, True)]
    else:
        limit = int(config.get("products", "exhaustive_witness_max_vertices", 12))
        results = evaluate_bounds(_root_set(args, g), as_connected(_second_factor(args)),
                                  options, exhaustive_max_vertices=limit)
    records = [_bound_record(bound, g) for bound in results]
    if out.fmt == "json":
        out.add("bounds", records)
    else:
        for record in records:
            name = record.pop("bound_name")
            out.add(name, record)
    return 0


def cmd_export_lp(args: argparse.Namespace, config: Config, out: _Output) -> int:
    g = as_connected(_load_graph(args))
    if args.model == "edim":
        text = export_lp(build_edge_instance(g, args.edges), "edim")
    else:
        text = export_lp(build_vertex_instance(g), "dim")
    if args.output is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise StorageError(str(e), file_path=str(args.output)) from e
    out.add("output", str(args.output))
    return 0


def cmd_verify(args: argparse.Namespace, config: Config, out: _Output) -> int:
    fixtures = args.fixtures_dir or config.fixtures_dir()
    workers = args.workers if args.workers is not None else int(config.get("verify", "workers", 1))
    seed = args.seed if args.seed is not None else int(config.get("verify", "seed", 2020))
    results = run_checks(args.checks or None, seed=seed, quick=args.quick,
                         workers=workers, fixtures_dir=fixtures)
    failed = False
    for result in results:
        failed = failed or result.status == STATUS_FAILED
        record: Dict[str, Any] = {"status": result.status, "cases": result.cases}
        if result.failures:
            record["failures"] = list(result.failures)
        out.add(result.name, record)
    return 1 if failed else 0


def cmd_catalog(args: argparse.Namespace, config: Config, out: _Output) -> int:
    for name, description in catalog_names():
        out.add(name, description)
    return 0


COMMANDS = {
    "edim": cmd_dimension,
    "dim": cmd_dimension,
    "basis": cmd_basis,
    "product": cmd_product,
    "bounds": cmd_bounds,
    "export-lp": cmd_export_lp,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the command line."""
    args = parse_arguments(argv)
    initialize_logging()
    if args.verbose:
        set_console_level("DEBUG")
    logger.info(f"Starting metricdim v{__version__}: {args.command}")

    config = Config()
    try:
        out = _Output(args.format or config.output_format())
        code = COMMANDS[args.command](args, config, out)
    except MetricDimError as e:
        log_exception(logger, e, {"command": args.command}, console=False)
        sys.stderr.write(f"error: {e}\n")
        return 1
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
