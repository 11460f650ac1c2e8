"""
Metric and edge metric representations, generator checks and exhaustive
dimension oracles.

The brute-force searches enumerate vertex subsets by cardinality and then in
lexicographic order of their sorted indices; the first generator found is the
returned basis.
"""
import logging
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .config import BRUTE_FORCE_CONFIG
from .exceptions import InvalidInputError, SizeCapExceededError
from .graph import Graph

logger = logging.getLogger(__name__)

# floor of edim(G) for a connected graph on two or more vertices
MIN_EDGE_DIMENSION = 1

OrderedVertexSet = Tuple[int, ...]
Representation = Tuple[int, ...]


class DimensionResult(NamedTuple):
    dimension: int
    basis: OrderedVertexSet


def ordered_vertex_set(g: Graph, s: Iterable[int]) -> OrderedVertexSet:
    """Validate an ordered vertex set: indices in range and pairwise distinct."""
    vertices = tuple(g.check_vertex(v) for v in s)
    if len(set(vertices)) != len(vertices):
        raise InvalidInputError(f"vertex set {list(vertices)} contains duplicates")
    return vertices


def edge_subset(g: Graph, f: Optional[Iterable[int]] = None) -> Tuple[int, ...]:
    """Sorted distinct edge indices; ``None`` means all of E(G)."""
    if f is None:
        return tuple(range(g.m))
    return tuple(sorted({g.check_edge(e) for e in f}))


def vertex_subset(g: Graph, x: Optional[Iterable[int]] = None) -> Tuple[int, ...]:
    """Sorted distinct vertex indices; ``None`` means all of V(G)."""
    if x is None:
        return tuple(range(g.n))
    return tuple(sorted({g.check_vertex(v) for v in x}))


def edge_representation(g: Graph, e: int, s: Sequence[int]) -> Representation:
    """r(e|S) = (d(s_1, e), ..., d(s_k, e))."""
    e = g.check_edge(e)
    s = ordered_vertex_set(g, s)
    return tuple(int(d) for d in g.distances.ve[e, list(s)])


def vertex_representation(g: Graph, u: int, s: Sequence[int]) -> Representation:
    """r(u|S) = (d(s_1, u), ..., d(s_k, u))."""
    u = g.check_vertex(u)
    s = ordered_vertex_set(g, s)
    return tuple(int(d) for d in g.distances.vv[u, list(s)])


def edge_representations(g: Graph, s: Sequence[int]) -> np.ndarray:
    """m x |S| matrix whose row i is r(e_i|S)."""
    s = ordered_vertex_set(g, s)
    return g.distances.ve[:, list(s)]


def vertex_representations(g: Graph, s: Sequence[int]) -> np.ndarray:
    """n x |S| matrix whose row u is r(u|S)."""
    s = ordered_vertex_set(g, s)
    return g.distances.vv[:, list(s)]


def _rows_distinct(rows: np.ndarray) -> bool:
    count = rows.shape[0]
    if count <= 1:
        return True
    if rows.shape[1] == 0:
        return False
    return np.unique(rows, axis=0).shape[0] == count


def is_edge_metric_generator(g: Graph, s: Sequence[int],
                             f: Optional[Iterable[int]] = None) -> bool:
    """True iff the edges of ``f`` (default E(G)) have pairwise distinct S-representations."""
    s = ordered_vertex_set(g, s)
    items = edge_subset(g, f)
    return _rows_distinct(g.distances.ve[np.ix_(list(items), list(s))])


def is_metric_generator(g: Graph, s: Sequence[int],
                        x: Optional[Iterable[int]] = None) -> bool:
    """True iff the vertices of ``x`` (default V(G)) have pairwise distinct S-representations."""
    s = ordered_vertex_set(g, s)
    items = vertex_subset(g, x)
    return _rows_distinct(g.distances.vv[np.ix_(list(items), list(s))])


def _brute_force(g: Graph, table: np.ndarray, what: str,
                 max_vertices: Optional[int]) -> DimensionResult:
    cap = BRUTE_FORCE_CONFIG["max_vertices"] if max_vertices is None else max_vertices
    if g.n > cap:
        raise SizeCapExceededError(g.n, cap)
    if _rows_distinct(table[:, :0]):
        return DimensionResult(0, ())
    checked = 0
    for k in range(1, g.n + 1):
        for subset in combinations(range(g.n), k):
            checked += 1
            if _rows_distinct(table[:, list(subset)]):
                logger.debug(f"Brute-force {what}: k={k} after {checked} subsets")
                return DimensionResult(k, subset)
    # unreachable for valid graphs: V(G) always resolves
    raise InvalidInputError(f"no {what} generator found")


def brute_force_edim(g: Graph, f: Optional[Iterable[int]] = None,
                     max_vertices: Optional[int] = None) -> DimensionResult:
    """
    Exhaustive edge metric dimension of ``f`` (default E(G)).

    Args:
        g: Graph.
        f: Edge subset to distinguish; None for all edges.
        max_vertices: Refuse graphs larger than this (config default 16).

    Returns:
        (dimension, basis) with the basis first in (cardinality, lexicographic) order.
        Without ``f`` a graph on two or more vertices has dimension at least 1
        (P2 gets basis (v1,)); a restricted ``f`` may be resolved by the empty set.

    Raises:
        SizeCapExceededError: if ``g.n`` exceeds the cap.
    """
    items = edge_subset(g, f)
    result = _brute_force(g, g.distances.ve[list(items)], "edge metric", max_vertices)
    if f is None and result.dimension < MIN_EDGE_DIMENSION and g.n >= 2:
        return DimensionResult(MIN_EDGE_DIMENSION, (0,))
    return result


def brute_force_dim(g: Graph, x: Optional[Iterable[int]] = None,
                    max_vertices: Optional[int] = None) -> DimensionResult:
    """Exhaustive metric dimension of ``x`` (default V(G)); see ``brute_force_edim``."""
    items = vertex_subset(g, x)
    return _brute_force(g, g.distances.vv[list(items)], "metric", max_vertices)


def is_family_F(g: Graph) -> bool:
    """True iff every vertex is within distance 1 of every edge."""
    return g.m == 0 or int(g.distances.ve.max()) <= 1
