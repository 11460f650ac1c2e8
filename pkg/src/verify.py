"""
Seeded verification sweeps.

Each named check draws its instances from ``numpy.random.default_rng([seed, k])``
where k is the check's position in ``CHECKS``, so a check's cases are the same
whether it runs alone, with others, or in a worker process.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .catalog import catalog_graph
from .config import VERIFY_CONFIG
from .edgelist import read_edge_list_file
from .exceptions import InvalidInputError, RootedPathExcludedError
from .graph import Graph, SimpleGraph, build_graph, build_simple_graph
from .products import (
    RootedSubset,
    bridge_cycle,
    bridge_cycle_edim,
    corona_edim,
    corona_product,
    edim_GU,
    edim_plus_GU,
    eq1_bound,
    hierarchical_product,
    is_rooted_path,
    product_distance,
    theorem1_bound,
    theorem2_exact,
)
from .resolvability import brute_force_dim, brute_force_edim, is_edge_metric_generator
from .solver import build_edge_instance, edim_via_ilp, solve_hitting_set

logger = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_FAILED = "failed"
STATUS_PENDING = "pending"

# figure-only graphs: file name in the fixtures directory -> edge metric dimension
FIGURE_FIXTURES: Dict[str, int] = {
    "k13_hier_p2.txt": 2,
    "w_hier_p2.txt": 2,
    "bn16.txt": 3,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: Tuple[str, ...] = ()
    status: str = STATUS_OK


@dataclass
class _Tally:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    def expect(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            logger.warning(f"{self.name}: {message}")
            self.failures.append(message)

    def result(self) -> CheckResult:
        passed = not self.failures
        return CheckResult(self.name, passed, self.cases, tuple(self.failures),
                           STATUS_OK if passed else STATUS_FAILED)


def random_connected_graph(rng: np.random.Generator, n: int, density: float = 0.3) -> Graph:
    """
    Random connected graph: a random recursive tree plus every other pair with probability ``density``.

    Edges are returned sorted.
    """
    if n < 1:
        raise InvalidInputError(f"vertex count must be at least 1, got {n}")
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < density:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_simple_graph(rng: np.random.Generator, n: int, density: float = 0.4) -> SimpleGraph:
    """Random graph that may be disconnected."""
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < density]
    return build_simple_graph(n, edges)


def random_roots(rng: np.random.Generator, g: Graph, size: int) -> Tuple[int, ...]:
    """``size`` distinct vertices of ``g``, sorted."""
    if not 1 <= size <= g.n:
        raise InvalidInputError(f"root count must be in 1..{g.n}, got {size}")
    return tuple(sorted(int(v) for v in rng.choice(g.n, size=size, replace=False)))


def _alternate_roots_path() -> Tuple[RootedSubset, Graph]:
    return RootedSubset(catalog_graph("path", [11]), (0, 2, 4, 6, 8, 10)), catalog_graph("path", [2])


def check_triangle_worked_example(rng: np.random.Generator, quick: bool,
                                  fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("triangle-worked-example")
    g = catalog_graph("cycle", [3])
    inst = build_edge_instance(g)
    rows = [tuple(sorted(row)) for row in inst.constraints]
    tally.expect(rows == [(0, 2), (1, 2), (0, 1)], f"rows {rows} != [(0, 2), (1, 2), (0, 1)]")
    result = solve_hitting_set(inst)
    tally.expect(result.optimum == 2, f"optimum {result.optimum} != 2")
    tally.expect(result.witness == (1, 2), f"witness {result.witness} != (1, 2)")
    return tally.result()


def check_path_characterization(rng: np.random.Generator, quick: bool,
                                fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("path-characterization")
    for n in range(2, 13):
        g = catalog_graph("path", [n])
        brute = brute_force_edim(g).dimension
        ilp = edim_via_ilp(g).optimum
        tally.expect(brute == 1 and ilp == 1, f"P{n}: brute={brute}, ilp={ilp}")
    for _ in range(5 if quick else 20):
        g = random_connected_graph(rng, int(rng.integers(3, 9)), 0.4)
        if g.m == g.n - 1 and max(g.degrees) <= 2:
            continue
        ilp = edim_via_ilp(g).optimum
        tally.expect(ilp >= 2, f"non-path {list(g.edges)} has edim {ilp}")
    return tally.result()


def check_rooted_path_product(rng: np.random.Generator, quick: bool,
                              fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("rooted-path-product")
    h = catalog_graph("path", [2])
    for n in range(1, 13):
        g = catalog_graph("path", [n])
        dimension = edim_GU(RootedSubset.single(g, 0)).dimension
        tally.expect(dimension == 0, f"edim(P{n}(end)) = {dimension}")
        tally.expect(is_rooted_path(g, n - 1), f"P{n} end {n - 1} not a rooted path")
        try:
            theorem2_exact(g, 0, h)
            excluded = False
        except RootedPathExcludedError:
            excluded = True
        tally.expect(excluded, f"theorem2_exact accepted rooted path P{n}")
    return tally.result()


def _octagons_and_triangles(g: Graph) -> Tuple[int, int]:
    is_planar, embedding = nx.check_planarity(g.to_networkx())
    if not is_planar:
        return 0, 0
    seen = set()
    sizes: List[int] = []
    for u, v in embedding.edges():
        if (u, v) in seen:
            continue
        face = embedding.traverse_face(u, v, mark_half_edges=seen)
        sizes.append(len(face))
    return sizes.count(8), sizes.count(3)


def check_truncated_cube(rng: np.random.Generator, quick: bool,
                         fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("truncated-cube")
    g = catalog_graph("truncated_cube")
    tally.expect((g.n, g.m) == (24, 36), f"size ({g.n}, {g.m}) != (24, 36)")
    tally.expect(set(g.degrees) == {3}, "not cubic")
    octagons, triangles = _octagons_and_triangles(g)
    tally.expect((octagons, triangles) == (6, 8), f"faces: {octagons} octagons, {triangles} triangles")
    result = edim_via_ilp(g)
    tally.expect(result.optimum == 3 and result.optimal, f"edim {result.optimum}")
    tally.expect(is_edge_metric_generator(g, result.witness), f"witness {result.witness} fails")
    return tally.result()


def check_product_distance_formula(rng: np.random.Generator, quick: bool,
                                   fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("product-distance-formula")
    instances = [_alternate_roots_path()]
    for _ in range(12 if quick else 60):
        g = random_connected_graph(rng, int(rng.integers(1, 9)))
        h = random_connected_graph(rng, int(rng.integers(1, min(8, 60 // g.n) + 1)))
        roots = random_roots(rng, g, int(rng.integers(1, g.n + 1)))
        instances.append((RootedSubset(g, roots), h))
    for gu, h in instances:
        product = hierarchical_product(gu, h)
        vv = product.graph.distances.vv
        mismatches = 0
        for p, first in enumerate(product.labeling):
            for q, second in enumerate(product.labeling):
                if product_distance(gu, h, first, second) != vv[p, q]:
                    mismatches += 1
        tally.expect(mismatches == 0,
                     f"G={list(gu.g.edges)} U={gu.u_set} H={list(h.edges)}: {mismatches} mismatches")
    return tally.result()


def check_single_root_formula(rng: np.random.Generator, quick: bool,
                              fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("single-root-formula")
    target = 8 if quick else 30
    while tally.cases < target:
        g = random_connected_graph(rng, int(rng.integers(2, 8)))
        u = int(rng.integers(0, g.n))
        if is_rooted_path(g, u) or 14 // g.n < 2:
            continue
        h = random_connected_graph(rng, int(rng.integers(2, 14 // g.n + 1)))
        product = hierarchical_product(RootedSubset.single(g, u), h)
        expected = theorem2_exact(g, u, h)
        actual = brute_force_edim(product.graph).dimension
        tally.expect(actual == expected,
                     f"G={list(g.edges)} u={u} H={list(h.edges)}: edim {actual} != {expected}")
    return tally.result()


def check_multi_root_bounds(rng: np.random.Generator, quick: bool,
                            fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("multi-root-bounds")
    gu, h = _alternate_roots_path()
    plus = edim_plus_GU(gu).dimension
    eq1 = eq1_bound(gu, h)
    actual = edim_via_ilp(hierarchical_product(gu, h).graph).optimum
    tally.expect(plus == 1, f"edim+(P11(U)) = {plus}")
    tally.expect(eq1.applicable and eq1.value == 2 == actual, f"eq1 {eq1.value}, edim {actual}")

    sampled = 0
    while sampled < (8 if quick else 30):
        sampled += 1
        g = random_connected_graph(rng, int(rng.integers(2, 8)))
        h = random_connected_graph(rng, int(rng.integers(1, 14 // g.n + 1)))
        gu = RootedSubset(g, random_roots(rng, g, int(rng.integers(2, g.n + 1))))
        product = brute_force_edim(hierarchical_product(gu, h).graph).dimension
        label = f"G={list(g.edges)} U={gu.u_set} H={list(h.edges)}"
        bound = theorem1_bound(gu, h)
        tally.expect(product <= bound, f"{label}: edim {product} > theorem1 {bound}")
        eq1 = eq1_bound(gu, h)
        if eq1.applicable:
            tally.expect(product <= eq1.value, f"{label}: edim {product} > eq1 {eq1.value}")
        base = edim_GU(gu).dimension
        plus = edim_plus_GU(gu).dimension
        restricted = brute_force_dim(g, gu.u_set).dimension
        tally.expect(base <= plus <= base + restricted,
                     f"{label}: edim(G(U))={base}, edim+={plus}, dim_U={restricted}")
    return tally.result()


def _corona_pairs(rng: np.random.Generator, quick: bool) -> List[Tuple[Graph, SimpleGraph]]:
    k1 = catalog_graph("path", [1])
    pairs: List[Tuple[Graph, SimpleGraph]] = [
        (k1, catalog_graph("complete", [3])),
        (k1, catalog_graph("complete", [2])),
        (k1, catalog_graph("path", [4])),
        (k1, catalog_graph("cycle", [5])),
        (k1, build_simple_graph(2, [])),
        (k1, build_simple_graph(4, [(0, 1), (2, 3)])),
        (catalog_graph("path", [2]), catalog_graph("path", [2])),
        (catalog_graph("path", [3]), catalog_graph("complete", [2])),
        (catalog_graph("path", [2]), build_simple_graph(2, [])),
    ]
    for _ in range(10 if quick else 40):
        g = random_connected_graph(rng, int(rng.integers(1, 5)))
        largest = 14 // g.n - 1
        if largest < 2:
            continue
        pairs.append((g, random_simple_graph(rng, int(rng.integers(2, largest + 1)))))
    return pairs


def check_corona_formula(rng: np.random.Generator, quick: bool,
                         fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("corona-formula")
    for g, h in _corona_pairs(rng, quick):
        corona = corona_product(g, h)
        expected_m = g.m + g.n * (h.m + h.n)
        tally.expect(corona.graph.m == expected_m, f"corona edge count {corona.graph.m} != {expected_m}")
        actual = brute_force_edim(corona.graph).dimension
        expected = corona_edim(g, h)
        tally.expect(actual == expected,
                     f"G={list(g.edges)} (n={g.n}) H={list(h.edges)} (n={h.n}): edim {actual} != {expected}")
    return tally.result()


def check_bridge_cycle_formula(rng: np.random.Generator, quick: bool,
                               fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("bridge-cycle-formula")
    instances: List[Tuple[Graph, int, int]] = [(catalog_graph("cycle", [3]), 0, 3)]
    for _ in range(6 if quick else 20):
        g = random_connected_graph(rng, int(rng.integers(3, 5)))
        r = int(rng.integers(0, g.n))
        if is_rooted_path(g, r):
            continue
        instances.append((g, r, int(rng.integers(3, 14 // g.n + 1))))
    for g, r, k in instances:
        bc = bridge_cycle([(g, r)] * k)
        tally.expect(bc.m == k * g.m + k, f"bridge-cycle edge count {bc.m} != {k * g.m + k}")
        actual = brute_force_edim(bc).dimension
        expected = bridge_cycle_edim(g, r, k)
        tally.expect(actual == expected,
                     f"G={list(g.edges)} r={r} k={k}: edim {actual} != {expected}")
    return tally.result()


def check_solver_oracle(rng: np.random.Generator, quick: bool,
                        fixtures_dir: Optional[Path]) -> CheckResult:
    tally = _Tally("solver-oracle")
    for _ in range(40 if quick else 200):
        g = random_connected_graph(rng, int(rng.integers(1, 9)), float(rng.uniform(0.1, 0.7)))
        brute = brute_force_edim(g).dimension
        ilp = edim_via_ilp(g)
        tally.expect(ilp.optimum == brute and is_edge_metric_generator(g, ilp.witness),
                     f"{list(g.edges)} (n={g.n}): ilp {ilp.optimum} != brute {brute}")
    return tally.result()


def check_figure_encodings(rng: np.random.Generator, quick: bool,
                           fixtures_dir: Optional[Path]) -> CheckResult:
    name = "figure-encodings"
    if fixtures_dir is None or not Path(fixtures_dir).is_dir():
        return CheckResult(name, True, 0, (), STATUS_PENDING)
    present = {f: v for f, v in FIGURE_FIXTURES.items() if (Path(fixtures_dir) / f).is_file()}
    if not present:
        return CheckResult(name, True, 0, (), STATUS_PENDING)
    tally = _Tally(name)
    for file_name, expected in present.items():
        g = read_edge_list_file(Path(fixtures_dir) / file_name)
        result = edim_via_ilp(g)
        tally.expect(result.optimum == expected,
                     f"{file_name}: edim {result.optimum} != {expected}")
    return tally.result()


CheckFunction = Callable[[np.random.Generator, bool, Optional[Path]], CheckResult]

CHECKS: Dict[str, CheckFunction] = {
    "triangle-worked-example": check_triangle_worked_example,
    "path-characterization": check_path_characterization,
    "rooted-path-product": check_rooted_path_product,
    "truncated-cube": check_truncated_cube,
    "product-distance-formula": check_product_distance_formula,
    "single-root-formula": check_single_root_formula,
    "multi-root-bounds": check_multi_root_bounds,
    "corona-formula": check_corona_formula,
    "bridge-cycle-formula": check_bridge_cycle_formula,
    "solver-oracle": check_solver_oracle,
    "figure-encodings": check_figure_encodings,
}


def run_check(name: str, seed: Optional[int] = None, quick: bool = False,
              fixtures_dir: Optional[Path] = None) -> CheckResult:
    """Run one named check with its own seeded generator."""
    try:
        check = CHECKS[name]
    except KeyError:
        raise InvalidInputError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}") from None
    seed = VERIFY_CONFIG["seed"] if seed is None else seed
    rng = np.random.default_rng([seed, list(CHECKS).index(name)])
    logger.info(f"Running check {name} (seed={seed}, quick={quick})")
    result = check(rng, quick, fixtures_dir)
    logger.info(f"Check {name}: {result.status}, {result.cases} cases, {len(result.failures)} failures")
    return result


def _run_check_args(args: Tuple[str, int, bool, Optional[Path]]) -> CheckResult:
    return run_check(*args)


def run_checks(names: Optional[Sequence[str]] = None, seed: Optional[int] = None,
               quick: bool = False, workers: Optional[int] = None,
               fixtures_dir: Optional[Path] = None) -> List[CheckResult]:
    """
    Run checks (default: all) and return their results in request order.

    Args:
        names: Check names; None runs every check.
        seed: Base seed (config default 2020).
        quick: Smaller sweeps.
        workers: Process count; 1 runs in-process.
        fixtures_dir: Directory holding figure-only edge lists.
    """
    names = list(CHECKS) if names is None else list(names)
    for name in names:
        if name not in CHECKS:
            raise InvalidInputError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    seed = VERIFY_CONFIG["seed"] if seed is None else seed
    workers = VERIFY_CONFIG["workers"] if workers is None else workers
    if fixtures_dir is None and VERIFY_CONFIG["fixtures_dir"]:
        fixtures_dir = Path(VERIFY_CONFIG["fixtures_dir"])
    jobs = [(name, seed, quick, fixtures_dir) for name in names]
    if workers <= 1 or len(jobs) <= 1:
        return [_run_check_args(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_check_args, jobs))
