"""
Integer linear programming model for (edge) metric dimensions, solved exactly
as a minimum hitting set.

For binary x the model's row ``sum_t |d_it - d_jt| x_t > 0`` holds exactly when
x selects a vertex of ``{t : d_it != d_jt}``, so every pair of items becomes an
unweighted covering row ``sum_{t in C_ij} x_t >= 1``.

Search:
    upper bound   greedy cover (most uncovered rows, ties by lowest index)
    lower bound   greedy packing of pairwise-disjoint uncovered rows
    branching     smallest uncovered row; element t included with the row's
                  lower elements excluded
    witness       among optimal covers, the one with lexicographically smallest
                  indicator vector (x_1 = 0 preferred over x_1 = 1, then x_2, ...)
"""
import logging
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import SOLVER_CONFIG
from .exceptions import InfeasibleError, InvalidInputError
from .graph import Graph
from .resolvability import MIN_EDGE_DIMENSION, DimensionResult, edge_subset, vertex_subset

logger = logging.getLogger(__name__)


class ConstraintKind(str, Enum):
    EDGE_PAIR = "edge-pair"
    VERTEX_PAIR = "vertex-pair"


@dataclass(frozen=True)
class PairOrigin:
    """The pair of items (0-based) a covering row separates."""

    i: int
    j: int
    kind: ConstraintKind

    def tag(self) -> str:
        prefix = "e" if self.kind is ConstraintKind.EDGE_PAIR else "v"
        return f"{prefix}{self.i + 1}_{prefix}{self.j + 1}"


@dataclass(frozen=True)
class HittingSetInstance:
    """
    Covering rows over the vertex universe ``0..universe-1``.

    ``origins[r]`` lists every item pair whose distinguishing set is ``constraints[r]``;
    more than one entry means identical rows were merged.
    """

    universe: int
    constraints: Tuple[FrozenSet[int], ...]
    origins: Tuple[Tuple[PairOrigin, ...], ...]

    def __post_init__(self) -> None:
        if len(self.constraints) != len(self.origins):
            raise InvalidInputError("every constraint needs its origin tags")
        for row in self.constraints:
            for t in row:
                if not 0 <= t < self.universe:
                    raise InvalidInputError(f"element {t} outside universe of size {self.universe}")

    def __len__(self) -> int:
        return len(self.constraints)

    @classmethod
    def from_rows(cls, universe: int,
                  rows: Iterable[Tuple[Iterable[int], PairOrigin]],
                  deduplicate: bool = True) -> "HittingSetInstance":
        """Collect rows in order; identical rows are merged unless ``deduplicate`` is False."""
        constraints: List[FrozenSet[int]] = []
        origins: List[List[PairOrigin]] = []
        position: Dict[FrozenSet[int], int] = {}
        for members, origin in rows:
            row = frozenset(int(t) for t in members)
            if deduplicate and row in position:
                origins[position[row]].append(origin)
                continue
            position.setdefault(row, len(constraints))
            constraints.append(row)
            origins.append([origin])
        return cls(universe, tuple(constraints), tuple(tuple(o) for o in origins))

    def is_hit_by(self, chosen: Iterable[int]) -> bool:
        selected = set(chosen)
        return all(row & selected for row in self.constraints)


@dataclass(frozen=True)
class SolverOptions:
    time_limit: Optional[float] = field(default_factory=lambda: SOLVER_CONFIG["time_limit"] or None)
    canonical_witness: bool = SOLVER_CONFIG["canonical_witness"]
    reduce_dominated: bool = SOLVER_CONFIG["reduce_dominated"]
    reduction_max_constraints: int = SOLVER_CONFIG["reduction_max_constraints"]

    @classmethod
    def from_config(cls, config=None, time_limit: Optional[float] = None) -> "SolverOptions":
        if config is None:
            configured = SOLVER_CONFIG["time_limit"]
            return cls(time_limit=time_limit if time_limit is not None else (configured or None))
        return cls(
            time_limit=time_limit if time_limit is not None else config.solver_time_limit(),
            canonical_witness=bool(config.get("solver", "canonical_witness", True)),
            reduce_dominated=bool(config.get("solver", "reduce_dominated", True)),
            reduction_max_constraints=int(config.get("solver", "reduction_max_constraints", 20000)),
        )


@dataclass(frozen=True)
class SolverStats:
    nodes: int = 0
    elapsed: float = 0.0
    constraints: int = 0
    reduced_constraints: int = 0
    greedy_bound: int = 0
    lower_bound: int = 0


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: Tuple[int, ...]
    optimal: bool = True
    stats: SolverStats = field(default_factory=SolverStats)

    def as_dimension(self) -> DimensionResult:
        return DimensionResult(self.optimum, self.witness)


# Instance construction

def _pair_rows(table: np.ndarray, pairs: Iterable[Tuple[int, int]],
               kind: ConstraintKind) -> Iterator[Tuple[Tuple[int, ...], PairOrigin]]:
    for i, j in pairs:
        yield tuple(np.flatnonzero(table[i] != table[j]).tolist()), PairOrigin(i, j, kind)


def _all_pair_rows(table: np.ndarray, items: Sequence[int],
                   kind: ConstraintKind) -> Iterator[Tuple[Tuple[int, ...], PairOrigin]]:
    for a, i in enumerate(items):
        rest = list(items[a + 1:])
        if not rest:
            continue
        differs = table[rest] != table[i]
        for j, mask in zip(rest, differs):
            yield tuple(np.flatnonzero(mask).tolist()), PairOrigin(i, j, kind)


def edge_pair_rows(g: Graph, pairs: Iterable[Tuple[int, int]]):
    """Covering rows separating the given edge pairs (distinguishing sets from D_G)."""
    return _pair_rows(g.distances.ve, pairs, ConstraintKind.EDGE_PAIR)


def vertex_pair_rows(g: Graph, pairs: Iterable[Tuple[int, int]]):
    """Covering rows separating the given vertex pairs."""
    return _pair_rows(g.distances.vv, pairs, ConstraintKind.VERTEX_PAIR)


def build_edge_instance(g: Graph, f: Optional[Iterable[int]] = None,
                        deduplicate: bool = True) -> HittingSetInstance:
    """
    One covering row per unordered pair of edges of ``f`` (default E(G)),
    holding exactly the vertices at different distances from the two edges.
    """
    items = edge_subset(g, f)
    inst = HittingSetInstance.from_rows(
        g.n, _all_pair_rows(g.distances.ve, items, ConstraintKind.EDGE_PAIR), deduplicate)
    logger.debug(f"Edge instance: {len(items)} edges, {len(inst)} rows")
    return inst


def build_vertex_instance(g: Graph, x: Optional[Iterable[int]] = None,
                          deduplicate: bool = True) -> HittingSetInstance:
    """One covering row per unordered pair of vertices of ``x`` (default V(G))."""
    items = vertex_subset(g, x)
    inst = HittingSetInstance.from_rows(
        g.n, _all_pair_rows(g.distances.vv, items, ConstraintKind.VERTEX_PAIR), deduplicate)
    logger.debug(f"Vertex instance: {len(items)} vertices, {len(inst)} rows")
    return inst


# Branch and bound

class _Timeout(Exception):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_mask(row: Iterable[int]) -> int:
    mask = 0
    for t in row:
        mask |= 1 << t
    return mask


def _reduce_dominated(masks: List[int]) -> List[int]:
    """Drop rows that contain another row; the family of covers is unchanged."""
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any((k & ~mask) == 0 for k in kept):
            kept.append(mask)
    return kept


def _greedy_cover(universe: int, masks: List[int]) -> int:
    coverage = np.zeros((len(masks), universe), dtype=bool)
    for r, mask in enumerate(masks):
        coverage[r, list(_bits(mask))] = True
    alive = np.ones(len(masks), dtype=bool)
    chosen = 0
    while alive.any():
        counts = coverage[alive].sum(axis=0)
        best = int(np.argmax(counts))  # first maximum = lowest index
        chosen |= 1 << best
        alive &= ~coverage[:, best]
    return chosen


def _packing_bound(rows: List[int]) -> int:
    used = 0
    count = 0
    for mask in sorted(rows, key=int.bit_count):
        if not mask & used:
            used |= mask
            count += 1
    return count


class _BranchAndBound:
    def __init__(self, masks: List[int], deadline: Optional[float]):
        self.masks = masks
        self.deadline = deadline
        self.nodes = 0
        self.budget = 0
        self.found: Optional[int] = None
        self.current = 0
        self.stop_at_first = False

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Timeout()

    def _descend(self, chosen: int, excluded: int) -> bool:
        self._tick()
        uncovered = [m & ~excluded for m in self.masks if not m & chosen]
        size = chosen.bit_count()
        if not uncovered:
            self.found = chosen
            self.budget = size - 1
            return self.stop_at_first
        if size >= self.budget:
            return False
        branch = uncovered[0]
        for row in uncovered:
            if row == 0:
                return False
            if row.bit_count() < branch.bit_count():
                branch = row
        if size + _packing_bound(uncovered) > self.budget:
            return False
        blocked = 0
        for t in _bits(branch):
            bit = 1 << t
            if self._descend(chosen | bit, excluded | blocked):
                return True
            blocked |= bit
        return False

    def minimize(self, incumbent: int) -> int:
        """Best cover strictly smaller than ``incumbent``, or the incumbent itself."""
        self.found = incumbent
        self.budget = incumbent.bit_count() - 1
        self.stop_at_first = False
        self._descend(0, 0)
        return self.found

    def feasible(self, include: int, exclude: int, budget: int) -> Optional[int]:
        """Some cover of size <= budget containing ``include`` and avoiding ``exclude``."""
        self.found = None
        self.budget = budget
        self.stop_at_first = True
        self._descend(include, exclude)
        return self.found

    def canonical(self, universe: int, witness: int) -> int:
        """Lexicographically smallest indicator vector among covers of the witness size."""
        optimum = witness.bit_count()
        include = 0
        exclude = 0
        self.current = witness
        for t in range(universe):
            bit = 1 << t
            if not self.current & bit:
                exclude |= bit
                continue
            found = self.feasible(include, exclude | bit, optimum)
            if found is not None:
                exclude |= bit
                self.current = found
            else:
                include |= bit
        return include


def solve_hitting_set(inst: HittingSetInstance,
                      options: Optional[SolverOptions] = None) -> SolveResult:
    """
    Exact minimum hitting set by branch and bound.

    Args:
        inst: Covering rows.
        options: Time limit and witness/reduction switches.

    Returns:
        SolveResult; on timeout the best cover found so far with ``optimal=False``.

    Raises:
        InfeasibleError: if a row is empty.
    """
    options = options or SolverOptions()
    started = time.perf_counter()
    for index, row in enumerate(inst.constraints):
        if not row:
            raise InfeasibleError(index)
    if not inst.constraints:
        return SolveResult(0, (), True, SolverStats(elapsed=time.perf_counter() - started))

    masks = [_to_mask(row) for row in inst.constraints]
    if options.reduce_dominated and len(masks) <= options.reduction_max_constraints:
        reduced = _reduce_dominated(masks)
    else:
        reduced = sorted(set(masks))
    greedy = _greedy_cover(inst.universe, reduced)
    root_bound = _packing_bound(reduced)
    logger.debug(
        f"Hitting set: universe={inst.universe}, rows={len(masks)} -> {len(reduced)}, "
        f"greedy={greedy.bit_count()}, packing={root_bound}"
    )

    deadline = time.monotonic() + options.time_limit if options.time_limit else None
    search = _BranchAndBound(reduced, deadline)
    best = greedy
    optimal = True
    proved = False
    try:
        if root_bound < greedy.bit_count():
            best = search.minimize(greedy)
        proved = True
        if options.canonical_witness:
            best = search.canonical(inst.universe, best)
    except _Timeout:
        if proved:
            best = search.current
            logger.warning("Time limit reached while canonicalising; witness is optimal but not canonical")
        else:
            best = search.found if search.found is not None else best
            optimal = False
            logger.warning(
                f"Time limit of {options.time_limit}s reached; returning incumbent of size {best.bit_count()}"
            )

    witness = tuple(_bits(best))
    stats = SolverStats(
        nodes=search.nodes,
        elapsed=time.perf_counter() - started,
        constraints=len(masks),
        reduced_constraints=len(reduced),
        greedy_bound=greedy.bit_count(),
        lower_bound=root_bound,
    )
    logger.info(
        f"Solved hitting set: optimum={len(witness)} optimal={optimal} nodes={stats.nodes} "
        f"elapsed={stats.elapsed:.3f}s"
    )
    return SolveResult(len(witness), witness, optimal, stats)


def enumerate_optimal_witnesses(inst: HittingSetInstance, optimum: int,
                                limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Every cover of size ``optimum`` in lexicographic order (at most ``limit``)."""
    masks = [_to_mask(row) for row in inst.constraints]
    witnesses: List[Tuple[int, ...]] = []
    for subset in combinations(range(inst.universe), optimum):
        chosen = _to_mask(subset)
        if all(m & chosen for m in masks):
            witnesses.append(subset)
            if limit is not None and len(witnesses) >= limit:
                break
    return witnesses


def edim_via_ilp(g: Graph, f: Optional[Iterable[int]] = None,
                 options: Optional[SolverOptions] = None) -> SolveResult:
    """
    Edge metric dimension (of ``f``, default E(G)) through the hitting-set model.

    The unrestricted value is floored at 1 for graphs on two or more vertices.
    P2 has no edge pair and so no rows; its witness is the canonical (v_n,).
    """
    result = solve_hitting_set(build_edge_instance(g, f), options)
    if f is None and result.optimum < MIN_EDGE_DIMENSION and g.n >= 2:
        return replace(result, optimum=MIN_EDGE_DIMENSION, witness=(g.n - 1,), optimal=True)
    return result


def dim_via_ilp(g: Graph, x: Optional[Iterable[int]] = None,
                options: Optional[SolverOptions] = None) -> SolveResult:
    """Metric dimension (of ``x``, default V(G)) through the hitting-set model."""
    return solve_hitting_set(build_vertex_instance(g, x), options)


# LP export

def _wrap_terms(terms: List[str], per_line: int = 10) -> List[str]:
    chunks = [" + ".join(terms[i:i + per_line]) for i in range(0, len(terms), per_line)]
    return [chunks[0]] + [f"   + {chunk}" for chunk in chunks[1:]]


def export_lp(inst: HittingSetInstance, objective_name: str = "edim") -> str:
    """
    Render the instance in LP file format (Minimize / Subject To / Binary / End).

    Variables are x1..xn (1-based); row names come from the first origin pair.
    """
    for index, row in enumerate(inst.constraints):
        if not row:
            raise InfeasibleError(index)
    variables = [f"x{t + 1}" for t in range(inst.universe)]
    lines = ["\\ minimum hitting set model, one covering row per item pair", "Minimize"]
    objective = _wrap_terms(variables)
    lines.append(f" {objective_name}: {objective[0]}")
    lines.extend(f" {cont}" for cont in objective[1:])
    if inst.constraints:
        lines.append("Subject To")
        for row, origins in zip(inst.constraints, inst.origins):
            terms = _wrap_terms([f"x{t + 1}" for t in sorted(row)])
            if len(terms) == 1:
                lines.append(f" {origins[0].tag()}: {terms[0]} >= 1")
            else:
                lines.append(f" {origins[0].tag()}: {terms[0]}")
                lines.extend(f" {cont}" for cont in terms[1:-1])
                lines.append(f" {terms[-1]} >= 1")
    lines.append("Binary")
    for i in range(0, len(variables), 10):
        lines.append(" " + " ".join(variables[i:i + 10]))
    lines.append("End")
    return "\n".join(lines) + "\n"
